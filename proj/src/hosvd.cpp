#include "hosvd3/hosvd.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace hosvd3 {

HosvdResult hosvd(const ComplexTensor& t, double tol) {
  const double x_norm = t.norm();
  if (x_norm == 0.0) throw DomainError("hosvd: the zero tensor has no decomposition");

  const int order = static_cast<int>(t.order());
  HosvdResult out;
  out.factors.reserve(t.order());
  std::vector<ComplexMatrix> adjoints;
  adjoints.reserve(t.order());

  for (int mode = 1; mode <= order; ++mode) {
    EigenDecomposition eig;
    try {
      eig = hermitian_eig(gram(unfold(t, mode).entries), tol);
    } catch (const NumericalError& e) {
      throw NumericalError(std::string("hosvd mode ") + std::to_string(mode) + ": " + e.what(), mode);
    }
    if (eig.degenerate) out.degenerate_modes.push_back(mode);
    adjoints.push_back(eig.unitary.adjoint());
    out.factors.push_back(std::move(eig.unitary));
  }

  out.core = multilinear_transform(t, adjoints);
  for (int mode = 1; mode <= order; ++mode) out.spectra.push_back(mode_singular_values(out.core, mode));

  out.residuals.all_orthogonality = verify_all_orthogonality(out.core);
  const auto back = reconstruct(out);
  double diff = 0.0;
  for (std::size_t i = 0; i < back.size(); ++i) diff += std::norm(back.elements()[i] - t.elements()[i]);
  out.residuals.reconstruction = std::sqrt(diff) / x_norm;
  for (const auto& u : out.factors) {
    out.residuals.max_unitarity = std::max(out.residuals.max_unitarity, validate_unitary(u));
  }
  return out;
}

std::vector<double> mode_singular_values(const ComplexTensor& core, int mode) {
  const std::size_t n = core.dim(mode);
  std::vector<double> sigma(n);
  for (std::size_t i = 0; i < n; ++i) sigma[i] = subtensor(core, mode, i + 1).norm();
  return sigma;
}

double verify_all_orthogonality(const ComplexTensor& core) {
  double worst = 0.0;
  for (int mode = 1; mode <= static_cast<int>(core.order()); ++mode) {
    const std::size_t n = core.dim(mode);
    std::vector<ComplexTensor> slices;
    slices.reserve(n);
    for (std::size_t i = 1; i <= n; ++i) slices.push_back(subtensor(core, mode, i));
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b) worst = std::max(worst, std::abs(inner(slices[a], slices[b])));
  }
  return worst;
}

ComplexTensor reconstruct(const HosvdResult& r) { return multilinear_transform(r.core, r.factors); }

}  // namespace hosvd3
