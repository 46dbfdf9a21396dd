#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "hosvd3/polytope.hpp"

namespace hosvd3::cli {

// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 2;
inline constexpr int kExitNumerical = 3;
inline constexpr int kExitIo = 4;

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// {"dims": [2,2,2], "amplitudes": [[re, im], ...], "label": "..."}
/// Amplitudes are flat, last index fastest; for three qubits position
/// 4(i1−1)+2(i2−1)+(i3−1) holds ψ_{i1 i2 i3}.
struct StateFile {
  std::vector<std::size_t> dims;
  std::vector<Complex> amplitudes;
  std::string label;

  ComplexTensor tensor() const { return ComplexTensor(dims, amplitudes); }
};

StateFile parse_state_file(const std::string& text);  // throws InputError
StateFile load_state_file(const std::filesystem::path& path);
nlohmann::json to_json(const StateFile& s);

/// Tolerance precedence: explicit flag, then HOSVD3_TOL, then the default.
double resolve_tol(std::optional<double> flag);

nlohmann::json decompose_document(const StateFile& s, double tol);
nlohmann::json classify_document(const StateFile& s, const qubit3::ClassifyOptions& opts);

struct SampleOptions {
  std::size_t count = 1;
  std::uint64_t seed = 0;
  qubit3::ClassifyOptions classify;
};

struct SampleSummary {
  std::size_t count = 0;
  std::size_t violations = 0;  // states outside the polytope at classify.tol
  std::array<double, 3> min_s{1.0, 1.0, 1.0};
  std::array<double, 3> max_s{0.0, 0.0, 0.0};
  std::size_t genuine = 0;
  std::size_t noncanonical = 0;
};

inline constexpr std::size_t kSampleShardSize = 4096;

/// Writes the samples CSV: a `#` metadata line naming the generator and seed,
/// then `id,s1,s2,s3,separability,case,special` and one row per state.
/// Shards of kSampleShardSize records draw from mt19937_64 seeded with
/// seed_seq{seed_lo, seed_hi, shard}, so output does not depend on scheduling.
SampleSummary write_samples(std::ostream& out, const SampleOptions& opts);
nlohmann::json to_json(const SampleSummary& s);

struct MeshVertex {
  std::string element;
  std::size_t part = 0;    // triangle index for surfaces, 0 for lines
  std::size_t vertex = 0;  // point index along a line, corner 0..2 of a triangle
  std::array<double, 3> s{};
};

/// Plot data for the σ₁² polytope: the Case-1 diagonal, the three (½,½,s)
/// style lines, the bi-separable edges, the slice planes σ₁⁽ⁱ⁾² = σ₁⁽ʲ⁾²
/// clipped to the polytope, the three upper facets and the three lower bound
/// faces. Lines carry `resolution` points; surfaces are split into
/// (resolution−1)² triangles per input triangle.
std::vector<MeshVertex> polytope_mesh(std::size_t resolution);
void write_mesh(std::ostream& out, const std::vector<MeshVertex>& mesh);

/// Entry point behind the `hosvd3` executable; returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hosvd3::cli
