#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "hosvd3/matrix.hpp"

namespace hosvd3 {

/// Dense complex tensor of order N >= 1.
///
/// Elements are stored flat in row-major order with the last index varying
/// fastest. Multi-indices and modes in the public API are 1-based, so the
/// element x_{i1 i2 ... iN} is `t.at({i1, i2, ..., iN})`.
class ComplexTensor {
 public:
  ComplexTensor() = default;

  /// Throws ShapeError if `elements.size()` differs from the product of `dims`
  /// or if any dimension is zero.
  ComplexTensor(std::vector<std::size_t> dims, std::vector<Complex> elements);

  static ComplexTensor zeros(std::vector<std::size_t> dims);

  std::size_t order() const noexcept { return dims_.size(); }
  const std::vector<std::size_t>& dims() const noexcept { return dims_; }
  std::size_t dim(int mode) const;  // 1-based mode
  std::size_t size() const noexcept { return elements_.size(); }

  std::span<const Complex> elements() const noexcept { return elements_; }

  Complex& at(std::initializer_list<std::size_t> index);
  const Complex& at(std::initializer_list<std::size_t> index) const;
  Complex& at(std::span<const std::size_t> index);
  const Complex& at(std::span<const std::size_t> index) const;

  /// 0-based flat offset of a 1-based multi-index.
  std::size_t flat_offset(std::span<const std::size_t> index) const;

  double norm() const;

  friend bool operator==(const ComplexTensor&, const ComplexTensor&) = default;

 private:
  std::vector<std::size_t> dims_;
  std::vector<Complex> elements_;
};

ComplexTensor make_tensor(std::vector<std::size_t> dims, std::vector<Complex> elements);

/// The n-th matrix unfolding X_(n): Iₙ rows, ∏_{m≠n} I_m columns.
struct UnfoldedMatrix {
  int mode = 1;
  ComplexMatrix entries;

  std::size_t rows() const noexcept { return entries.rows(); }
  std::size_t cols() const noexcept { return entries.cols(); }
};

/// Element (i1..iN) goes to row iₙ; the column index runs over the remaining
/// indices in cyclic order i_{n+1}, ..., i_N, i_1, ..., i_{n-1} with
/// i_{n+1} most significant and i_{n-1} least.
UnfoldedMatrix unfold(const ComplexTensor& t, int mode);

/// Inverse of `unfold` for a tensor with dimension vector `dims`.
ComplexTensor refold(const UnfoldedMatrix& m, const std::vector<std::size_t>& dims);

/// Mode-n product: contracts index n of `t` with the columns of `m`,
/// x'_{..j..} = Σ_i m_{j i} x_{..i..}.
ComplexTensor mode_product(const ComplexTensor& t, int mode, const ComplexMatrix& m);

/// M⁽¹⁾ ⊗ M⁽²⁾ ⊗ ... ⊗ M⁽ᴺ⁾ 𝒳, one square matrix per mode.
ComplexTensor multilinear_transform(const ComplexTensor& t, std::span<const ComplexMatrix> mats);

/// Σ conj(a) b over all elements.
Complex inner(const ComplexTensor& a, const ComplexTensor& b);

double norm(const ComplexTensor& t);

/// The order N-1 subtensor with index `mode` fixed to `index` (both 1-based).
/// For an order-1 tensor the result is the single element as a dims {1} tensor.
ComplexTensor subtensor(const ComplexTensor& t, int mode, std::size_t index);

/// Relabels modes: result mode k is source mode `perm[k-1]` (1-based values).
ComplexTensor permute_modes(const ComplexTensor& t, std::span<const int> perm);

}  // namespace hosvd3
