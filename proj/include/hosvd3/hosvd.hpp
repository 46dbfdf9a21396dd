#pragma once

#include <vector>

#include "hosvd3/smalllinalg.hpp"
#include "hosvd3/tensor.hpp"

namespace hosvd3 {

inline constexpr double kDefaultTol = 1e-10;

struct HosvdResiduals {
  double reconstruction = 0.0;     // ‖x − U⁽¹⁾⊗…⊗U⁽ᴺ⁾𝒯‖_F / ‖x‖_F
  double all_orthogonality = 0.0;  // verify_all_orthogonality(core)
  double max_unitarity = 0.0;      // max over modes of validate_unitary(U⁽ⁿ⁾)
};

/// Higher order SVD x = U⁽¹⁾ ⊗ … ⊗ U⁽ᴺ⁾ 𝒯 of a complex tensor.
struct HosvdResult {
  std::vector<ComplexMatrix> factors;        // Iₙ×Iₙ unitary, one per mode
  ComplexTensor core;
  std::vector<std::vector<double>> spectra;  // n-mode singular values σᵢ⁽ⁿ⁾, descending
  HosvdResiduals residuals;
  std::vector<int> degenerate_modes;         // 1-based modes with σ² pairs within tol
};

/// Computes the exact (untruncated) HOSVD.
///
/// U⁽ⁿ⁾ is the eigenvector matrix of X₍ₙ₎X₍ₙ₎† with descending eigenvalues
/// and the core is 𝒯 = U⁽¹⁾† ⊗ … ⊗ U⁽ᴺ⁾† x. Spectra are read off the core as
/// subtensor norms.
///
/// Throws DomainError for the zero tensor and NumericalError (carrying the
/// mode) if an eigensolve fails.
HosvdResult hosvd(const ComplexTensor& t, double tol = kDefaultTol);

/// σᵢ⁽ⁿ⁾ = ‖𝒯_{iₙ=i}‖ for i = 1..Iₙ.
std::vector<double> mode_singular_values(const ComplexTensor& core, int mode);

/// max over modes n and α≠β of |⟨𝒯_{iₙ=α}, 𝒯_{iₙ=β}⟩|.
double verify_all_orthogonality(const ComplexTensor& core);

/// U⁽¹⁾ ⊗ … ⊗ U⁽ᴺ⁾ 𝒯.
ComplexTensor reconstruct(const HosvdResult& r);

}  // namespace hosvd3
