#pragma once

#include <array>
#include <optional>
#include <span>
#include <string_view>
#include <utility>

#include "hosvd3/hosvd.hpp"

namespace hosvd3::qubit3 {

inline constexpr double kDefaultSigmaTol = 1e-8;

/// Flat position of amplitude ψ_{i1 i2 i3} (1-based indices): 4(i1−1)+2(i2−1)+(i3−1).
constexpr std::size_t flat_index(std::size_t i1, std::size_t i2, std::size_t i3) {
  return 4 * (i1 - 1) + 2 * (i2 - 1) + (i3 - 1);
}

/// A unit-norm three-qubit pure state Σ ψ_{i1 i2 i3} |i1 i2 i3⟩.
class ThreeQubitState {
 public:
  using Amplitudes = std::array<Complex, 8>;

  const Amplitudes& amplitudes() const noexcept { return amps_; }
  const Complex& operator()(std::size_t i1, std::size_t i2, std::size_t i3) const {
    return amps_[flat_index(i1, i2, i3)];
  }
  /// Norm of the amplitudes this state was normalized from.
  double source_norm() const noexcept { return source_norm_; }

  ComplexTensor tensor() const;

  friend ThreeQubitState normalize(std::span<const Complex, 8> amplitudes);

 private:
  ThreeQubitState(const Amplitudes& amps, double source_norm) : amps_(amps), source_norm_(source_norm) {}

  Amplitudes amps_{};
  double source_norm_ = 1.0;
};

/// Scales to unit norm, preserving relative phases. Throws DomainError on the zero vector.
ThreeQubitState normalize(std::span<const Complex, 8> amplitudes);
ThreeQubitState normalize(const ComplexTensor& t);  // t must have dims {2, 2, 2}

/// U⁽¹⁾ ⊗ U⁽²⁾ ⊗ U⁽³⁾ |ψ⟩.
ThreeQubitState apply_local(const ThreeQubitState& s, const std::array<ComplexMatrix, 3>& unitaries);

/// Relabels qubits: new qubit k is old qubit perm[k-1].
ThreeQubitState permute_qubits(const ThreeQubitState& s, const std::array<int, 3>& perm);

enum class Subsystem { A, B, C, AB, CA, BC };

struct DensityMatrix {
  Subsystem subsystem;
  ComplexMatrix rho;
};

/// ρ^A = Ψ₍₁₎Ψ₍₁₎†, ρ^B = Ψ₍₂₎Ψ₍₂₎†, ρ^C = Ψ₍₃₎Ψ₍₃₎†.
std::array<DensityMatrix, 3> one_body_rdms(const ThreeQubitState& s);

/// ρ^{AB} = Ψ₍₃₎ᵀΨ̄₍₃₎, ρ^{CA} = Ψ₍₂₎ᵀΨ̄₍₂₎, ρ^{BC} = Ψ₍₁₎ᵀΨ̄₍₁₎ (in that order).
std::array<DensityMatrix, 3> two_body_rdms(const ThreeQubitState& s);

// --- Separability ------------------------------------------------------------

enum class Separability { fully_separable, biseparable_A_BC, biseparable_B_CA, biseparable_C_AB, genuine };

/// A bipartition with a single qubit on the left.
enum class Cut { A_BC, B_CA, C_AB };

/// Decision from the one-body spectra: qubit n factors out iff σ₁⁽ⁿ⁾² ≥ 1 − tol.
Separability separability_from_sigma(const std::array<double, 3>& sigma_sq, double tol);

/// Runs the HOSVD and decides via RDM purity.
Separability separability_class(const ThreeQubitState& s, double tol = kDefaultTol);

/// Largest |lhs − rhs| of the six product conditions for a cut, e.g. for C|AB
/// ψ₁₁₁ψ₂₂₂ = ψ₁₁₂ψ₂₂₁, …, ψ₂₁₁ψ₁₂₂ = ψ₂₁₂ψ₁₂₁. These are the 2×2 minors of
/// the unfolding along the single qubit of the cut.
double product_condition_residual(const ThreeQubitState& s, Cut cut);

/// Decision from the six-condition test. A cut holds when its residual is at
/// most sqrt(tol): the squared minors sum to σ₁²σ₂², so this threshold
/// matches the spectral test's σ₂² ≤ tol.
Separability separability_polynomial(const ThreeQubitState& s, double tol = kDefaultTol);

// --- Core-tensor identities ---------------------------------------------------

/// |lhs − rhs| of the single core condition for a cut:
/// A|BC t₁₁₂t₂₂₁ = t₂₁₂t₁₂₁, B|CA t₁₁₂t₂₂₁ = t₂₁₁t₁₂₂, C|AB t₂₁₁t₁₂₂ = t₂₁₂t₁₂₁.
/// Throws ValidationError if `core` is not all-orthogonal within tol·‖core‖².
double core_biseparability_residual(const ComplexTensor& core, Cut cut, double tol = kDefaultTol);

/// Both equivalent forms of the σ-weighted plane identity:
///   a: |t₁₁₂|²[σ₁⁽¹⁾²−σ₁⁽²⁾²] + |t₂₁₁|²[σ₁⁽²⁾²−σ₁⁽³⁾²] + |t₁₂₁|²[σ₁⁽³⁾²−σ₁⁽¹⁾²]
///   b: |t₂₂₁|²[σ₁⁽¹⁾²−σ₁⁽²⁾²] + |t₁₂₂|²[σ₁⁽²⁾²−σ₁⁽³⁾²] + |t₂₁₂|²[σ₁⁽³⁾²−σ₁⁽¹⁾²]
/// Both vanish on every HOSVD core.
struct PlaneIdentity {
  double form_a = 0.0;
  double form_b = 0.0;
};
PlaneIdentity plane_identity(const ComplexTensor& core);

/// |form a| of `plane_identity`.
double plane_identity_residual(const ComplexTensor& core);

/// Modulus of
///   t̄₁₁₂t̄₂₂₁(t₁₂₂t₂₁₁ − t₁₂₁t₂₁₂) + t̄₁₂₁t̄₂₁₂(t₁₁₂t₂₂₁ − t₁₂₂t₂₁₁) + t̄₁₂₂t̄₂₁₁(t₁₂₁t₂₁₂ − t₁₁₂t₂₂₁).
double phase_identity_residual(const ComplexTensor& core);

/// a = |t₁₁₂|²−|t₁₂₁|², b = |t₂₁₁|²−|t₁₁₂|², c = |t₁₂₁|²−|t₂₁₁|²; a+b+c = 0.
struct PlaneCoefficients {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
};
PlaneCoefficients plane_coefficients(const ComplexTensor& core);

/// Recomputes t₁₁₁ and t₂₂₂ from the other six core elements via the
/// all-orthogonality elimination formulas and returns |t₁₁₁ − f₁₁₁|, |t₂₂₂ − f₂₂₂|.
/// Absent when |t₂₁₂t̄₂₁₁ − t₁₂₂t̄₁₂₁| ≤ tol.
std::optional<std::pair<double, double>> guarded_t111_t222_check(const ComplexTensor& core,
                                                                 double tol = kDefaultTol);

// --- Classification -------------------------------------------------------------

enum class Case { case1, case2_12, case2_13, case2_23, case3 };
enum class Special { ghz, s1, s2, s3, b1, b2, none };

std::string_view to_string(Separability s);
std::string_view to_string(Case c);
std::string_view to_string(Special s);

struct ClassifyOptions {
  double tol = kDefaultTol;              // arithmetic / support threshold
  double sigma_tol = kDefaultSigmaTol;   // equality of σ₁⁽ⁿ⁾² values
};

struct ResidualReport {
  double reconstruction = 0.0;
  double all_orthogonality = 0.0;
  PlaneIdentity plane;
  double phase = 0.0;
  PlaneCoefficients coefficients;
  std::array<double, 3> core_biseparability{};  // indexed by Cut
  std::array<double, 3> product_conditions{};   // indexed by Cut
  Separability polynomial_separability = Separability::genuine;
  std::optional<std::pair<double, double>> t111_t222;
};

struct Classification {
  Separability separability = Separability::genuine;
  Case case_tag = Case::case3;
  Special special = Special::none;
  // Support match on the core before gating by case and separability.
  Special support_pattern = Special::none;
  std::array<double, 3> sigma_triple{};  // (σ₁⁽¹⁾², σ₁⁽²⁾², σ₁⁽³⁾²)
  std::array<bool, 3> degenerate{};
  // The core is not unique when a mode is degenerate, so support tags may
  // depend on the gauge the solver picked.
  bool noncanonical_gauge = false;
  ComplexTensor core;
  ResidualReport residuals;
};

/// Case from pairwise σ₁² comparisons within sigma_tol: all equal → case1,
/// exactly one equal pair → case2 of that pair, none → case3.
Case case_from_sigma(const std::array<double, 3>& sigma_sq, double sigma_tol);

/// First of ghz, s1, s2, s3, b1, b2 whose support contains the core's support
/// (entries with |t| ≤ tol·max|t| count as zero).
Special support_pattern(const ComplexTensor& core, double tol);

/// Separability first, then case, then the support-based special-state tag.
/// Special tags are only assigned to genuinely entangled states and only in
/// their own case: ghz in case1, sₖ in the matching case2, b₁/b₂ in case3.
Classification classify(const ThreeQubitState& s, const ClassifyOptions& opts = {});

}  // namespace hosvd3::qubit3
