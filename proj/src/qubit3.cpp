#include "hosvd3/qubit3.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace hosvd3::qubit3 {
namespace {

// 1-based element access into a dims {2,2,2} core.
class Core3 {
 public:
  explicit Core3(const ComplexTensor& core) {
    if (core.dims() != std::vector<std::size_t>{2, 2, 2}) {
      throw ShapeError("three-qubit core must have dims {2, 2, 2}");
    }
    std::copy(core.elements().begin(), core.elements().end(), t_.begin());
  }

  Complex operator()(std::size_t i1, std::size_t i2, std::size_t i3) const {
    return t_[flat_index(i1, i2, i3)];
  }
  double sq(std::size_t i1, std::size_t i2, std::size_t i3) const { return std::norm((*this)(i1, i2, i3)); }

  // σ₁⁽ⁿ⁾² read off the core.
  std::array<double, 3> sigma1_sq() const {
    const Core3& t = *this;
    return {t.sq(1, 1, 1) + t.sq(1, 1, 2) + t.sq(1, 2, 1) + t.sq(1, 2, 2),
            t.sq(1, 1, 1) + t.sq(1, 1, 2) + t.sq(2, 1, 1) + t.sq(2, 1, 2),
            t.sq(1, 1, 1) + t.sq(1, 2, 1) + t.sq(2, 1, 1) + t.sq(2, 2, 1)};
  }

 private:
  std::array<Complex, 8> t_{};
};

int cut_mode(Cut cut) {
  switch (cut) {
    case Cut::A_BC: return 1;
    case Cut::B_CA: return 2;
    case Cut::C_AB: return 3;
  }
  return 1;
}

Separability biseparable_for_mode(int mode) {
  switch (mode) {
    case 1: return Separability::biseparable_A_BC;
    case 2: return Separability::biseparable_B_CA;
    default: return Separability::biseparable_C_AB;
  }
}

// Bit k set ⇔ flat position k belongs to the set.
constexpr unsigned mask(std::initializer_list<std::size_t> flat) {
  unsigned m = 0;
  for (auto f : flat) m |= 1u << f;
  return m;
}

struct Pattern {
  Special tag;
  unsigned support;
};

constexpr std::array<Pattern, 6> kPatterns{{
    {Special::ghz, mask({flat_index(1, 1, 1), flat_index(2, 2, 2)})},
    {Special::s1, mask({flat_index(1, 1, 1), flat_index(1, 1, 2), flat_index(2, 2, 1), flat_index(2, 2, 2)})},
    {Special::s2, mask({flat_index(1, 1, 1), flat_index(1, 2, 1), flat_index(2, 1, 2), flat_index(2, 2, 2)})},
    {Special::s3, mask({flat_index(1, 1, 1), flat_index(1, 2, 2), flat_index(2, 1, 1), flat_index(2, 2, 2)})},
    {Special::b1, mask({flat_index(1, 1, 1), flat_index(1, 2, 2), flat_index(2, 1, 2), flat_index(2, 2, 1)})},
    {Special::b2, mask({flat_index(1, 1, 2), flat_index(1, 2, 1), flat_index(2, 1, 1), flat_index(2, 2, 2)})},
}};

unsigned support_mask(const ComplexTensor& core, double tol) {
  double largest = 0.0;
  for (const auto& x : core.elements()) largest = std::max(largest, std::abs(x));
  const double cutoff = tol * largest;
  unsigned m = 0;
  for (std::size_t k = 0; k < core.size(); ++k)
    if (std::abs(core.elements()[k]) > cutoff) m |= 1u << k;
  return m;
}

bool within(unsigned support, Special tag) {
  for (const auto& p : kPatterns)
    if (p.tag == tag) return (support & ~p.support) == 0;
  return false;
}

Special gated_special(Case c, unsigned support) {
  switch (c) {
    case Case::case1: return within(support, Special::ghz) ? Special::ghz : Special::none;
    case Case::case2_12: return within(support, Special::s1) ? Special::s1 : Special::none;
    case Case::case2_13: return within(support, Special::s2) ? Special::s2 : Special::none;
    case Case::case2_23: return within(support, Special::s3) ? Special::s3 : Special::none;
    case Case::case3:
      if (within(support, Special::b1)) return Special::b1;
      if (within(support, Special::b2)) return Special::b2;
      return Special::none;
  }
  return Special::none;
}

}  // namespace

// --- State ---------------------------------------------------------------------

ComplexTensor ThreeQubitState::tensor() const {
  return ComplexTensor({2, 2, 2}, std::vector<Complex>(amps_.begin(), amps_.end()));
}

ThreeQubitState normalize(std::span<const Complex, 8> amplitudes) {
  double sum = 0.0;
  for (const auto& a : amplitudes) sum += std::norm(a);
  const double n = std::sqrt(sum);
  if (!(n > 0.0) || !std::isfinite(n)) throw DomainError("normalize: amplitudes are zero or not finite");
  ThreeQubitState::Amplitudes amps{};
  for (std::size_t k = 0; k < 8; ++k) amps[k] = amplitudes[k] / n;
  return ThreeQubitState(amps, n);
}

ThreeQubitState normalize(const ComplexTensor& t) {
  if (t.dims() != std::vector<std::size_t>{2, 2, 2}) throw ShapeError("three-qubit state must have dims {2, 2, 2}");
  return normalize(std::span<const Complex, 8>(t.elements().data(), 8));
}

ThreeQubitState apply_local(const ThreeQubitState& s, const std::array<ComplexMatrix, 3>& unitaries) {
  return normalize(multilinear_transform(s.tensor(), unitaries));
}

ThreeQubitState permute_qubits(const ThreeQubitState& s, const std::array<int, 3>& perm) {
  return normalize(permute_modes(s.tensor(), perm));
}

std::array<DensityMatrix, 3> one_body_rdms(const ThreeQubitState& s) {
  const auto t = s.tensor();
  return {DensityMatrix{Subsystem::A, gram(unfold(t, 1).entries)},
          DensityMatrix{Subsystem::B, gram(unfold(t, 2).entries)},
          DensityMatrix{Subsystem::C, gram(unfold(t, 3).entries)}};
}

std::array<DensityMatrix, 3> two_body_rdms(const ThreeQubitState& s) {
  const auto t = s.tensor();
  auto pair_rdm = [&](int mode) {
    const auto m = unfold(t, mode).entries;
    return m.transpose() * m.conj();
  };
  return {DensityMatrix{Subsystem::AB, pair_rdm(3)},
          DensityMatrix{Subsystem::CA, pair_rdm(2)},
          DensityMatrix{Subsystem::BC, pair_rdm(1)}};
}

// --- Separability ------------------------------------------------------------

namespace {

// factors[n] ⇔ qubit n+1 splits off from the other two.
Separability separability_from_factors(const std::array<bool, 3>& factors) {
  const int count = int(factors[0]) + int(factors[1]) + int(factors[2]);
  // Two pure marginals of a pure state force the third.
  if (count >= 2) return Separability::fully_separable;
  for (int n = 0; n < 3; ++n)
    if (factors[static_cast<std::size_t>(n)]) return biseparable_for_mode(n + 1);
  return Separability::genuine;
}

}  // namespace

Separability separability_from_sigma(const std::array<double, 3>& sigma_sq, double tol) {
  return separability_from_factors(
      {sigma_sq[0] >= 1.0 - tol, sigma_sq[1] >= 1.0 - tol, sigma_sq[2] >= 1.0 - tol});
}

Separability separability_class(const ThreeQubitState& s, double tol) {
  const auto r = hosvd(s.tensor(), tol);
  std::array<double, 3> sigma_sq{};
  for (std::size_t n = 0; n < 3; ++n) sigma_sq[n] = r.spectra[n][0] * r.spectra[n][0];
  return separability_from_sigma(sigma_sq, tol);
}

double product_condition_residual(const ThreeQubitState& s, Cut cut) {
  const auto m = unfold(s.tensor(), cut_mode(cut)).entries;
  double worst = 0.0;
  for (std::size_t c1 = 0; c1 < m.cols(); ++c1)
    for (std::size_t c2 = c1 + 1; c2 < m.cols(); ++c2)
      worst = std::max(worst, std::abs(m(0, c1) * m(1, c2) - m(0, c2) * m(1, c1)));
  return worst;
}

Separability separability_polynomial(const ThreeQubitState& s, double tol) {
  const double threshold = std::sqrt(tol);
  std::array<bool, 3> factors{};
  for (std::size_t k = 0; k < 3; ++k) {
    factors[k] = product_condition_residual(s, static_cast<Cut>(k)) <= threshold;
  }
  return separability_from_factors(factors);
}

// --- Core identities -------------------------------------------------------------

double core_biseparability_residual(const ComplexTensor& core, Cut cut, double tol) {
  const Core3 t(core);
  const double scale = std::max(1.0, std::pow(core.norm(), 2));
  const double ortho = verify_all_orthogonality(core);
  if (ortho > tol * scale) {
    throw ValidationError("core_biseparability_residual: input is not an HOSVD core (all-orthogonality residual " +
                          std::to_string(ortho) + ")");
  }
  switch (cut) {
    case Cut::A_BC: return std::abs(t(1, 1, 2) * t(2, 2, 1) - t(2, 1, 2) * t(1, 2, 1));
    case Cut::B_CA: return std::abs(t(1, 1, 2) * t(2, 2, 1) - t(2, 1, 1) * t(1, 2, 2));
    case Cut::C_AB: return std::abs(t(2, 1, 1) * t(1, 2, 2) - t(2, 1, 2) * t(1, 2, 1));
  }
  return 0.0;
}

PlaneIdentity plane_identity(const ComplexTensor& core) {
  const Core3 t(core);
  const auto s = t.sigma1_sq();
  const double d12 = s[0] - s[1];
  const double d23 = s[1] - s[2];
  const double d31 = s[2] - s[0];
  return {t.sq(1, 1, 2) * d12 + t.sq(2, 1, 1) * d23 + t.sq(1, 2, 1) * d31,
          t.sq(2, 2, 1) * d12 + t.sq(1, 2, 2) * d23 + t.sq(2, 1, 2) * d31};
}

double plane_identity_residual(const ComplexTensor& core) { return std::abs(plane_identity(core).form_a); }

double phase_identity_residual(const ComplexTensor& core) {
  const Core3 t(core);
  using std::conj;
  const Complex v = conj(t(1, 1, 2)) * conj(t(2, 2, 1)) * (t(1, 2, 2) * t(2, 1, 1) - t(1, 2, 1) * t(2, 1, 2)) +
                    conj(t(1, 2, 1)) * conj(t(2, 1, 2)) * (t(1, 1, 2) * t(2, 2, 1) - t(1, 2, 2) * t(2, 1, 1)) +
                    conj(t(1, 2, 2)) * conj(t(2, 1, 1)) * (t(1, 2, 1) * t(2, 1, 2) - t(1, 1, 2) * t(2, 2, 1));
  return std::abs(v);
}

PlaneCoefficients plane_coefficients(const ComplexTensor& core) {
  const Core3 t(core);
  return {t.sq(1, 1, 2) - t.sq(1, 2, 1), t.sq(2, 1, 1) - t.sq(1, 1, 2), t.sq(1, 2, 1) - t.sq(2, 1, 1)};
}

std::optional<std::pair<double, double>> guarded_t111_t222_check(const ComplexTensor& core, double tol) {
  const Core3 t(core);
  using std::conj;
  const Complex den = t(2, 1, 2) * conj(t(2, 1, 1)) - t(1, 2, 2) * conj(t(1, 2, 1));
  if (std::abs(den) <= tol) return std::nullopt;

  const Complex cross = t(1, 2, 1) * t(2, 1, 2) - t(1, 2, 2) * t(2, 1, 1);
  const Complex f111 = -(conj(t(2, 2, 1)) * cross + t(1, 1, 2) * (t.sq(2, 1, 2) - t.sq(1, 2, 2))) / den;
  const Complex f222 = (conj(t(1, 1, 2)) * cross + t(2, 2, 1) * (t.sq(1, 2, 1) - t.sq(2, 1, 1))) / conj(den);
  return std::make_pair(std::abs(t(1, 1, 1) - f111), std::abs(t(2, 2, 2) - f222));
}

// --- Classification -------------------------------------------------------------

std::string_view to_string(Separability s) {
  switch (s) {
    case Separability::fully_separable: return "fully_separable";
    case Separability::biseparable_A_BC: return "biseparable_A_BC";
    case Separability::biseparable_B_CA: return "biseparable_B_CA";
    case Separability::biseparable_C_AB: return "biseparable_C_AB";
    case Separability::genuine: return "genuine";
  }
  return "genuine";
}

std::string_view to_string(Case c) {
  switch (c) {
    case Case::case1: return "case1";
    case Case::case2_12: return "case2_12";
    case Case::case2_13: return "case2_13";
    case Case::case2_23: return "case2_23";
    case Case::case3: return "case3";
  }
  return "case3";
}

std::string_view to_string(Special s) {
  switch (s) {
    case Special::ghz: return "ghz";
    case Special::s1: return "s1";
    case Special::s2: return "s2";
    case Special::s3: return "s3";
    case Special::b1: return "b1";
    case Special::b2: return "b2";
    case Special::none: return "none";
  }
  return "none";
}

Case case_from_sigma(const std::array<double, 3>& s, double sigma_tol) {
  const bool e12 = std::abs(s[0] - s[1]) <= sigma_tol;
  const bool e13 = std::abs(s[0] - s[2]) <= sigma_tol;
  const bool e23 = std::abs(s[1] - s[2]) <= sigma_tol;
  const int pairs = int(e12) + int(e13) + int(e23);
  // Two equal pairs without the third only happens at the tolerance edge; read it as all equal.
  if (pairs >= 2) return Case::case1;
  if (e12) return Case::case2_12;
  if (e13) return Case::case2_13;
  if (e23) return Case::case2_23;
  return Case::case3;
}

Special support_pattern(const ComplexTensor& core, double tol) {
  const unsigned support = support_mask(core, tol);
  for (const auto& p : kPatterns)
    if ((support & ~p.support) == 0) return p.tag;
  return Special::none;
}

Classification classify(const ThreeQubitState& s, const ClassifyOptions& opts) {
  const auto r = hosvd(s.tensor(), opts.tol);

  Classification out;
  for (std::size_t n = 0; n < 3; ++n) out.sigma_triple[n] = r.spectra[n][0] * r.spectra[n][0];
  for (int mode : r.degenerate_modes) out.degenerate[static_cast<std::size_t>(mode - 1)] = true;
  out.noncanonical_gauge = !r.degenerate_modes.empty();

  out.separability = separability_from_sigma(out.sigma_triple, opts.tol);
  out.case_tag = case_from_sigma(out.sigma_triple, opts.sigma_tol);
  const unsigned support = support_mask(r.core, opts.tol);
  out.support_pattern = support_pattern(r.core, opts.tol);
  if (out.separability == Separability::genuine) out.special = gated_special(out.case_tag, support);

  auto& rep = out.residuals;
  rep.reconstruction = r.residuals.reconstruction;
  rep.all_orthogonality = r.residuals.all_orthogonality;
  rep.plane = plane_identity(r.core);
  rep.phase = phase_identity_residual(r.core);
  rep.coefficients = plane_coefficients(r.core);
  for (std::size_t k = 0; k < 3; ++k) {
    const auto cut = static_cast<Cut>(k);
    rep.core_biseparability[k] = core_biseparability_residual(r.core, cut, opts.tol);
    rep.product_conditions[k] = product_condition_residual(s, cut);
  }
  rep.polynomial_separability = separability_polynomial(s, opts.tol);
  rep.t111_t222 = guarded_t111_t222_check(r.core, opts.tol);

  out.core = r.core;
  return out;
}

}  // namespace hosvd3::qubit3
