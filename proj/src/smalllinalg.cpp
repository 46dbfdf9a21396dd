#include "hosvd3/smalllinalg.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <numeric>
#include <string>

namespace hosvd3 {

// --- ComplexMatrix -----------------------------------------------------------

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = std::conj((*this)(r, c));
  return out;
}

ComplexMatrix ComplexMatrix::transpose() const {
  ComplexMatrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
  return out;
}

ComplexMatrix ComplexMatrix::conj() const {
  ComplexMatrix out = *this;
  for (auto& x : out.data_) x = std::conj(x);
  return out;
}

double ComplexMatrix::frobenius_norm() const {
  double sum = 0.0;
  for (const auto& x : data_) sum += std::norm(x);
  return std::sqrt(sum);
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows()) throw ShapeError("matrix product: inner dimensions differ");
  ComplexMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Complex aik = a(i, k);
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
    }
  return out;
}

ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw ShapeError("matrix difference: shapes differ");
  ComplexMatrix out = a;
  auto dst = out.data();
  const auto src = b.data();
  for (std::size_t i = 0; i < dst.size(); ++i) dst[i] -= src[i];
  return out;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
  return out;
}

// --- Hermitian kernels -------------------------------------------------------

ComplexMatrix gram(const ComplexMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) throw ShapeError("gram: empty matrix");
  const std::size_t n = m.rows();
  ComplexMatrix g(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      Complex acc = 0.0;
      for (std::size_t k = 0; k < m.cols(); ++k) acc += m(i, k) * std::conj(m(j, k));
      if (i == j) {
        g(i, i) = acc.real();
      } else {
        g(i, j) = acc;
        g(j, i) = std::conj(acc);
      }
    }
  }
  return g;
}

double hermiticity_residual(const ComplexMatrix& h) {
  double worst = 0.0;
  for (std::size_t i = 0; i < h.rows(); ++i)
    for (std::size_t j = i; j < h.cols(); ++j)
      worst = std::max(worst, std::abs(h(i, j) - std::conj(h(j, i))));
  return worst;
}

namespace {

double off_diagonal_norm(const ComplexMatrix& a) {
  double sum = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (i != j) sum += std::norm(a(i, j));
  return std::sqrt(sum);
}

// One two-sided rotation A <- V† A V annihilating a(p, q); accumulates U <- U V.
void rotate(ComplexMatrix& a, ComplexMatrix& u, std::size_t p, std::size_t q) {
  const Complex apq = a(p, q);
  const double r = std::abs(apq);
  if (r == 0.0) return;
  const Complex phase = apq / r;  // e^{iφ}

  const double tau = (a(q, q).real() - a(p, p).real()) / (2.0 * r);
  const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  const double s = t * c;

  // V = [[c, s e^{iφ}], [-s e^{-iφ}, c]] on the (p, q) plane.
  const Complex vpq = s * phase;
  const Complex vqp = -s * std::conj(phase);
  const std::size_t n = a.rows();

  for (std::size_t k = 0; k < n; ++k) {
    const Complex akp = a(k, p);
    const Complex akq = a(k, q);
    a(k, p) = c * akp + vqp * akq;
    a(k, q) = vpq * akp + c * akq;
  }
  for (std::size_t k = 0; k < n; ++k) {
    const Complex apk = a(p, k);
    const Complex aqk = a(q, k);
    a(p, k) = c * apk + std::conj(vqp) * aqk;
    a(q, k) = std::conj(vpq) * apk + c * aqk;
  }
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  a(p, p) = a(p, p).real();
  a(q, q) = a(q, q).real();

  for (std::size_t k = 0; k < n; ++k) {
    const Complex ukp = u(k, p);
    const Complex ukq = u(k, q);
    u(k, p) = c * ukp + vqp * ukq;
    u(k, q) = vpq * ukp + c * ukq;
  }
}

void fix_gauge(ComplexMatrix& u) {
  for (std::size_t col = 0; col < u.cols(); ++col) {
    const std::size_t pivot = gauge_pivot_row(u, col);
    const double mag = std::abs(u(pivot, col));
    if (mag == 0.0) continue;
    const Complex rot = std::conj(u(pivot, col)) / mag;
    for (std::size_t r = 0; r < u.rows(); ++r) u(r, col) *= rot;
    u(pivot, col) = mag;
  }
}

constexpr int kMaxSweeps = 100;

}  // namespace

std::size_t gauge_pivot_row(const ComplexMatrix& u, std::size_t col) {
  double largest = 0.0;
  for (std::size_t r = 0; r < u.rows(); ++r) largest = std::max(largest, std::abs(u(r, col)));
  // Entries equal to the largest up to rounding count as ties.
  const double cutoff = largest * (1.0 - 1e-12);
  for (std::size_t r = 0; r < u.rows(); ++r)
    if (std::abs(u(r, col)) >= cutoff) return r;
  return 0;
}

EigenDecomposition hermitian_eig(const ComplexMatrix& h, double tol) {
  if (!h.square() || h.rows() == 0) throw ValidationError("hermitian_eig: matrix must be square and nonempty");
  const double asym = hermiticity_residual(h);
  if (asym > tol) {
    throw ValidationError("hermitian_eig: matrix is not Hermitian (residual " + std::to_string(asym) + ")");
  }

  const std::size_t n = h.rows();
  ComplexMatrix a = h;
  for (std::size_t i = 0; i < n; ++i) a(i, i) = a(i, i).real();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) a(j, i) = std::conj(a(i, j));
  ComplexMatrix u = ComplexMatrix::identity(n);

  const double scale = a.frobenius_norm();
  int sweeps = 0;
  double off = off_diagonal_norm(a);
  while (off > 4.0 * DBL_EPSILON * scale) {
    if (sweeps == kMaxSweeps) {
      throw NumericalError("hermitian_eig: Jacobi sweeps did not converge (off-diagonal " +
                           std::to_string(off) + ")");
    }
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) rotate(a, u, p, q);
    ++sweeps;
    const double next = off_diagonal_norm(a);
    // Rounding floor reached: further sweeps cannot reduce it.
    if (next >= off && next <= 1e-12 * scale) break;
    off = next;
  }

  // Descending order; a pair within tol keeps its current relative order.
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  for (std::size_t i = 1; i < n; ++i) {
    for (std::size_t j = i; j > 0; --j) {
      if (a(order[j], order[j]).real() > a(order[j - 1], order[j - 1]).real() + tol) {
        std::swap(order[j], order[j - 1]);
      } else {
        break;
      }
    }
  }

  EigenDecomposition out;
  out.sweeps = sweeps;
  out.unitary = ComplexMatrix(n, n);
  out.eigenvalues.resize(n);
  for (std::size_t k = 0; k < n; ++k) {
    out.eigenvalues[k] = a(order[k], order[k]).real();
    for (std::size_t r = 0; r < n; ++r) out.unitary(r, k) = u(r, order[k]);
  }
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (std::abs(out.eigenvalues[k] - out.eigenvalues[k + 1]) <= tol) out.degenerate = true;
  }
  fix_gauge(out.unitary);
  return out;
}

double validate_unitary(const ComplexMatrix& u) {
  if (!u.square()) throw ShapeError("validate_unitary: matrix is not square");
  return (u.adjoint() * u - ComplexMatrix::identity(u.rows())).frobenius_norm();
}

}  // namespace hosvd3
