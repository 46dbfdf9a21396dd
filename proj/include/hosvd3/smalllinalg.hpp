#pragma once

#include <vector>

#include "hosvd3/matrix.hpp"

namespace hosvd3 {

/// Spectral decomposition h = U diag(λ) U† of a Hermitian matrix.
struct EigenDecomposition {
  std::vector<double> eigenvalues;  // descending (ties within tol keep solver order)
  ComplexMatrix unitary;            // column k is the eigenvector of eigenvalues[k]
  bool degenerate = false;          // some adjacent eigenvalues lie within tol
  int sweeps = 0;
};

/// m m† for an r×c matrix; the result is r×r, Hermitian and positive semidefinite.
ComplexMatrix gram(const ComplexMatrix& m);

/// Largest |h_ij - conj(h_ji)|.
double hermiticity_residual(const ComplexMatrix& h);

/// Cyclic complex Jacobi eigensolver.
///
/// Eigenvalues are returned in descending order. When two eigenvalues differ
/// by no more than `tol` their relative order is left as the rotations
/// produced it, so an already-diagonal degenerate input comes back with the
/// identity as its eigenvector matrix. Each eigenvector column is then
/// phase-fixed: its largest-magnitude entry (lowest row on ties) is made real
/// and nonnegative.
///
/// Throws ValidationError when `h` is not square or not Hermitian within `tol`,
/// NumericalError when the sweeps do not converge.
EigenDecomposition hermitian_eig(const ComplexMatrix& h, double tol);

/// ‖u†u − I‖_F; callers compare against their own tolerance.
/// Throws ShapeError for a non-square matrix.
double validate_unitary(const ComplexMatrix& u);

/// Row index whose entry the gauge rule pins to the real nonnegative axis.
std::size_t gauge_pivot_row(const ComplexMatrix& u, std::size_t col);

}  // namespace hosvd3
