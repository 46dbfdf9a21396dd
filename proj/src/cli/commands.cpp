#include <fstream>
#include <iostream>
#include <memory>

#include <CLI11.hpp>

#include "hosvd3/cli.hpp"

namespace hosvd3::cli {

using nlohmann::json;

namespace {

json complex_array(std::span<const Complex> values) {
  json out = json::array();
  for (const auto& v : values) out.push_back({v.real(), v.imag()});
  return out;
}

json cut_array(const std::array<double, 3>& v) {
  return {{"A_BC", v[0]}, {"B_CA", v[1]}, {"C_AB", v[2]}};
}

qubit3::ThreeQubitState three_qubit_state(const StateFile& s) {
  if (s.dims != std::vector<std::size_t>{2, 2, 2}) throw InputError("classify needs dims [2, 2, 2]");
  return qubit3::normalize(s.tensor());
}

// Writes to `path`, or to `fallback` when path is empty or "-".
class OutputTarget {
 public:
  OutputTarget(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
    if (!path.empty() && path != "-") {
      file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
      if (!*file_) throw IoError("cannot open output file " + path);
      stream_ = file_.get();
    }
  }

  std::ostream& stream() { return *stream_; }

  void finish() {
    stream_->flush();
    if (!*stream_) throw IoError("write failed");
  }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream* stream_;
};

}  // namespace

json decompose_document(const StateFile& s, double tol) {
  const auto r = hosvd(s.tensor(), tol);
  json factors = json::array();
  for (const auto& u : r.factors) factors.push_back(complex_array(u.data()));
  return {
      {"label", s.label},
      {"dims", s.dims},
      {"tol", tol},
      {"factors", factors},
      {"core", complex_array(r.core.elements())},
      {"spectra", r.spectra},
      {"degenerate_modes", r.degenerate_modes},
      {"residuals",
       {{"reconstruction", r.residuals.reconstruction},
        {"all_orthogonality", r.residuals.all_orthogonality},
        {"max_unitarity", r.residuals.max_unitarity}}},
  };
}

json classify_document(const StateFile& s, const qubit3::ClassifyOptions& opts) {
  const auto state = three_qubit_state(s);
  const auto c = qubit3::classify(state, opts);
  const auto point = qubit3::polytope_point(c);
  const auto member = qubit3::polytope_membership(point, opts.tol);
  const auto& rep = c.residuals;

  json t111_t222 = nullptr;
  if (rep.t111_t222) t111_t222 = {rep.t111_t222->first, rep.t111_t222->second};

  return {
      {"label", s.label},
      {"tol", opts.tol},
      {"sigma_tol", opts.sigma_tol},
      {"separability", qubit3::to_string(c.separability)},
      {"case", qubit3::to_string(c.case_tag)},
      {"special", qubit3::to_string(c.special)},
      {"support_pattern", qubit3::to_string(c.support_pattern)},
      {"sigma", c.sigma_triple},
      {"degenerate", c.degenerate},
      {"noncanonical_gauge", c.noncanonical_gauge},
      {"core", complex_array(c.core.elements())},
      {"polytope",
       {{"point", point.s},
        {"clamped", point.clamped()},
        {"inside", member.inside},
        {"facet_slack", member.facet_slack},
        {"lower_slack", member.lower_slack},
        {"upper_slack", member.upper_slack}}},
      {"residuals",
       {{"reconstruction", rep.reconstruction},
        {"all_orthogonality", rep.all_orthogonality},
        {"plane_identity", {rep.plane.form_a, rep.plane.form_b}},
        {"phase_identity", rep.phase},
        {"plane_coefficients", {rep.coefficients.a, rep.coefficients.b, rep.coefficients.c}},
        {"core_biseparability", cut_array(rep.core_biseparability)},
        {"product_conditions", cut_array(rep.product_conditions)},
        {"polynomial_separability", qubit3::to_string(rep.polynomial_separability)},
        {"t111_t222", t111_t222}}},
  };
}

json to_json(const SampleSummary& s) {
  return {{"count", s.count},       {"violations", s.violations}, {"min_s", s.min_s},
          {"max_s", s.max_s},       {"genuine", s.genuine},       {"noncanonical", s.noncanonical}};
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"HOSVD of dense complex tensors and three-qubit LU classification", "hosvd3"};
  app.require_subcommand(1);

  std::optional<double> tol_flag;
  double sigma_tol = qubit3::kDefaultSigmaTol;
  std::string input;
  std::string output;
  std::size_t count = 1;
  std::uint64_t seed = 0;
  std::size_t resolution = 11;

  auto add_tol = [&](CLI::App* cmd) {
    cmd->add_option("--tol", tol_flag, "arithmetic tolerance (default 1e-10, env HOSVD3_TOL)")
        ->check(CLI::PositiveNumber);
  };

  auto* decompose = app.add_subcommand("decompose", "HOSVD of a state file");
  decompose->add_option("input", input, "state file")->required();
  decompose->add_option("--output", output, "output path (default stdout)");
  add_tol(decompose);

  auto* classify = app.add_subcommand("classify", "classify a three-qubit state file");
  classify->add_option("input", input, "state file")->required();
  classify->add_option("--output", output, "output path (default stdout)");
  classify->add_option("--sigma-tol", sigma_tol, "equality tolerance for σ₁² values")->check(CLI::PositiveNumber);
  add_tol(classify);

  auto* sample = app.add_subcommand("sample", "classify Haar-random states into a CSV");
  sample->add_option("--count", count, "number of states")->check(CLI::Range(std::size_t{1}, std::size_t{1} << 40));
  sample->add_option("--seed", seed, "generator seed");
  sample->add_option("--output", output, "CSV path (default stdout)");
  sample->add_option("--sigma-tol", sigma_tol, "equality tolerance for σ₁² values")->check(CLI::PositiveNumber);
  add_tol(sample);

  auto* mesh = app.add_subcommand("mesh", "polytope plot data as CSV");
  mesh->add_option("--resolution", resolution, "points per edge")->check(CLI::Range(std::size_t{2}, std::size_t{10000}));
  mesh->add_option("--output", output, "CSV path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    const double tol = resolve_tol(tol_flag);
    const qubit3::ClassifyOptions opts{tol, sigma_tol};

    if (decompose->parsed()) {
      const auto doc = decompose_document(load_state_file(input), tol);
      OutputTarget target(output, out);
      target.stream() << doc.dump(2) << '\n';
      target.finish();
    } else if (classify->parsed()) {
      const auto doc = classify_document(load_state_file(input), opts);
      OutputTarget target(output, out);
      target.stream() << doc.dump(2) << '\n';
      target.finish();
    } else if (sample->parsed()) {
      OutputTarget target(output, out);
      const auto summary = write_samples(target.stream(), SampleOptions{count, seed, opts});
      target.finish();
      std::ostream& report = (output.empty() || output == "-") ? err : out;
      report << to_json(summary).dump() << '\n';
    } else if (mesh->parsed()) {
      OutputTarget target(output, out);
      write_mesh(target.stream(), polytope_mesh(resolution));
      target.finish();
    }
  } catch (const InputError& e) {
    err << "input error: " << e.what() << '\n';
    return kExitInput;
  } catch (const ShapeError& e) {
    err << "input error: " << e.what() << '\n';
    return kExitInput;
  } catch (const DomainError& e) {
    err << "input error: " << e.what() << '\n';
    return kExitInput;
  } catch (const IoError& e) {
    err << "i/o error: " << e.what() << '\n';
    return kExitIo;
  } catch (const NumericalError& e) {
    err << "numerical error: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const ValidationError& e) {
    err << "numerical error: " << e.what() << '\n';
    return kExitNumerical;
  }
  return kExitOk;
}

}  // namespace hosvd3::cli
