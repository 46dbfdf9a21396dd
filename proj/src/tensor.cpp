#include "hosvd3/tensor.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <string>

namespace hosvd3 {
namespace {

std::size_t product(const std::vector<std::size_t>& dims) {
  return std::accumulate(dims.begin(), dims.end(), std::size_t{1}, std::multiplies<>{});
}

void check_mode(const ComplexTensor& t, int mode) {
  if (mode < 1 || static_cast<std::size_t>(mode) > t.order()) {
    throw ArgumentError("mode " + std::to_string(mode) + " out of range for order " +
                        std::to_string(t.order()));
  }
}

// Advances a 0-based multi-index in row-major order (last index fastest).
void increment(std::vector<std::size_t>& idx, const std::vector<std::size_t>& dims) {
  for (std::size_t k = dims.size(); k-- > 0;) {
    if (++idx[k] < dims[k]) return;
    idx[k] = 0;
  }
}

// Column of element `idx` (0-based) in the mode-`mode` unfolding.
std::size_t unfolding_column(const std::vector<std::size_t>& idx,
                             const std::vector<std::size_t>& dims, int mode) {
  const std::size_t order = dims.size();
  const std::size_t n = static_cast<std::size_t>(mode - 1);
  std::size_t col = 0;
  for (std::size_t step = 1; step < order; ++step) {
    const std::size_t m = (n + step) % order;
    col = col * dims[m] + idx[m];
  }
  return col;
}

}  // namespace

ComplexTensor::ComplexTensor(std::vector<std::size_t> dims, std::vector<Complex> elements)
    : dims_(std::move(dims)), elements_(std::move(elements)) {
  if (dims_.empty()) throw ShapeError("tensor order must be at least 1");
  if (std::find(dims_.begin(), dims_.end(), std::size_t{0}) != dims_.end()) {
    throw ShapeError("tensor dimensions must be positive");
  }
  if (elements_.size() != product(dims_)) {
    throw ShapeError("tensor has " + std::to_string(elements_.size()) +
                     " elements, dims require " + std::to_string(product(dims_)));
  }
}

ComplexTensor ComplexTensor::zeros(std::vector<std::size_t> dims) {
  const std::size_t n = dims.empty() ? 0 : product(dims);
  return ComplexTensor(std::move(dims), std::vector<Complex>(n));
}

std::size_t ComplexTensor::dim(int mode) const {
  check_mode(*this, mode);
  return dims_[static_cast<std::size_t>(mode - 1)];
}

std::size_t ComplexTensor::flat_offset(std::span<const std::size_t> index) const {
  if (index.size() != dims_.size()) throw ArgumentError("multi-index length differs from tensor order");
  std::size_t offset = 0;
  for (std::size_t k = 0; k < dims_.size(); ++k) {
    if (index[k] < 1 || index[k] > dims_[k]) {
      throw ArgumentError("index " + std::to_string(index[k]) + " out of range in mode " +
                          std::to_string(k + 1));
    }
    offset = offset * dims_[k] + (index[k] - 1);
  }
  return offset;
}

Complex& ComplexTensor::at(std::span<const std::size_t> index) {
  return elements_[flat_offset(index)];
}

const Complex& ComplexTensor::at(std::span<const std::size_t> index) const {
  return elements_[flat_offset(index)];
}

Complex& ComplexTensor::at(std::initializer_list<std::size_t> index) {
  return at(std::span<const std::size_t>(index.begin(), index.size()));
}

const Complex& ComplexTensor::at(std::initializer_list<std::size_t> index) const {
  return at(std::span<const std::size_t>(index.begin(), index.size()));
}

double ComplexTensor::norm() const {
  double sum = 0.0;
  for (const auto& x : elements_) sum += std::norm(x);
  return std::sqrt(sum);
}

ComplexTensor make_tensor(std::vector<std::size_t> dims, std::vector<Complex> elements) {
  return ComplexTensor(std::move(dims), std::move(elements));
}

UnfoldedMatrix unfold(const ComplexTensor& t, int mode) {
  check_mode(t, mode);
  const auto& dims = t.dims();
  const std::size_t rows = dims[static_cast<std::size_t>(mode - 1)];
  UnfoldedMatrix out{mode, ComplexMatrix(rows, t.size() / rows)};

  std::vector<std::size_t> idx(dims.size(), 0);
  for (const auto& x : t.elements()) {
    out.entries(idx[static_cast<std::size_t>(mode - 1)], unfolding_column(idx, dims, mode)) = x;
    increment(idx, dims);
  }
  return out;
}

ComplexTensor refold(const UnfoldedMatrix& m, const std::vector<std::size_t>& dims) {
  auto result = ComplexTensor::zeros(dims);
  if (m.mode < 1 || static_cast<std::size_t>(m.mode) > dims.size()) {
    throw ShapeError("unfolding mode " + std::to_string(m.mode) + " incompatible with dims");
  }
  const std::size_t rows = dims[static_cast<std::size_t>(m.mode - 1)];
  if (m.rows() != rows || m.rows() * m.cols() != result.size()) {
    throw ShapeError("unfolded matrix shape inconsistent with dims");
  }

  std::vector<std::size_t> idx(dims.size(), 0);
  std::vector<Complex> elements(result.size());
  for (auto& x : elements) {
    x = m.entries(idx[static_cast<std::size_t>(m.mode - 1)], unfolding_column(idx, dims, m.mode));
    increment(idx, dims);
  }
  return ComplexTensor(dims, std::move(elements));
}

ComplexTensor mode_product(const ComplexTensor& t, int mode, const ComplexMatrix& m) {
  check_mode(t, mode);
  const auto n = static_cast<std::size_t>(mode - 1);
  const auto& dims = t.dims();
  if (m.cols() != dims[n]) {
    throw ShapeError("mode product: matrix has " + std::to_string(m.cols()) +
                     " columns, mode " + std::to_string(mode) + " has dimension " +
                     std::to_string(dims[n]));
  }

  std::size_t outer = 1;
  for (std::size_t k = 0; k < n; ++k) outer *= dims[k];
  std::size_t inner_stride = 1;
  for (std::size_t k = n + 1; k < dims.size(); ++k) inner_stride *= dims[k];

  auto out_dims = dims;
  out_dims[n] = m.rows();
  const std::size_t in_len = dims[n];
  const std::size_t out_len = m.rows();
  std::vector<Complex> out(outer * out_len * inner_stride);
  const auto src = t.elements();

  for (std::size_t o = 0; o < outer; ++o) {
    for (std::size_t s = 0; s < inner_stride; ++s) {
      for (std::size_t j = 0; j < out_len; ++j) {
        Complex acc = 0.0;
        for (std::size_t i = 0; i < in_len; ++i) {
          acc += m(j, i) * src[(o * in_len + i) * inner_stride + s];
        }
        out[(o * out_len + j) * inner_stride + s] = acc;
      }
    }
  }
  return ComplexTensor(std::move(out_dims), std::move(out));
}

ComplexTensor multilinear_transform(const ComplexTensor& t, std::span<const ComplexMatrix> mats) {
  if (mats.size() != t.order()) {
    throw ShapeError("multilinear_transform: need one matrix per mode (" +
                     std::to_string(t.order()) + "), got " + std::to_string(mats.size()));
  }
  for (std::size_t k = 0; k < mats.size(); ++k) {
    if (!mats[k].square() || mats[k].rows() != t.dims()[k]) {
      throw ShapeError("multilinear_transform: matrix " + std::to_string(k + 1) +
                       " is not square of the mode dimension");
    }
  }
  ComplexTensor result = t;
  for (std::size_t k = 0; k < mats.size(); ++k) {
    result = mode_product(result, static_cast<int>(k + 1), mats[k]);
  }
  return result;
}

Complex inner(const ComplexTensor& a, const ComplexTensor& b) {
  if (a.dims() != b.dims()) throw ShapeError("inner: tensors differ in shape");
  Complex sum = 0.0;
  const auto x = a.elements();
  const auto y = b.elements();
  for (std::size_t i = 0; i < x.size(); ++i) sum += std::conj(x[i]) * y[i];
  return sum;
}

double norm(const ComplexTensor& t) { return t.norm(); }

ComplexTensor subtensor(const ComplexTensor& t, int mode, std::size_t index) {
  check_mode(t, mode);
  const auto n = static_cast<std::size_t>(mode - 1);
  const auto& dims = t.dims();
  if (index < 1 || index > dims[n]) {
    throw ArgumentError("subtensor index " + std::to_string(index) + " out of range for mode " +
                        std::to_string(mode));
  }
  if (t.order() == 1) return ComplexTensor({1}, {t.elements()[index - 1]});

  std::vector<std::size_t> out_dims;
  for (std::size_t k = 0; k < dims.size(); ++k) {
    if (k != n) out_dims.push_back(dims[k]);
  }
  std::size_t outer = 1;
  for (std::size_t k = 0; k < n; ++k) outer *= dims[k];
  std::size_t inner_stride = 1;
  for (std::size_t k = n + 1; k < dims.size(); ++k) inner_stride *= dims[k];

  std::vector<Complex> out;
  out.reserve(outer * inner_stride);
  const auto src = t.elements();
  for (std::size_t o = 0; o < outer; ++o) {
    const std::size_t base = (o * dims[n] + (index - 1)) * inner_stride;
    out.insert(out.end(), src.begin() + static_cast<std::ptrdiff_t>(base),
               src.begin() + static_cast<std::ptrdiff_t>(base + inner_stride));
  }
  return ComplexTensor(std::move(out_dims), std::move(out));
}

ComplexTensor permute_modes(const ComplexTensor& t, std::span<const int> perm) {
  const std::size_t order = t.order();
  if (perm.size() != order) throw ArgumentError("permutation length differs from tensor order");
  std::vector<bool> seen(order, false);
  for (int p : perm) {
    if (p < 1 || static_cast<std::size_t>(p) > order || seen[static_cast<std::size_t>(p - 1)]) {
      throw ArgumentError("not a permutation of the modes");
    }
    seen[static_cast<std::size_t>(p - 1)] = true;
  }

  std::vector<std::size_t> out_dims(order);
  for (std::size_t k = 0; k < order; ++k) out_dims[k] = t.dims()[static_cast<std::size_t>(perm[k] - 1)];

  std::vector<Complex> out(t.size());
  std::vector<std::size_t> idx(order, 0);
  std::vector<std::size_t> src_idx(order, 0);
  for (auto& x : out) {
    for (std::size_t k = 0; k < order; ++k) src_idx[static_cast<std::size_t>(perm[k] - 1)] = idx[k] + 1;
    x = t.at(std::span<const std::size_t>(src_idx));
    increment(idx, out_dims);
  }
  return ComplexTensor(std::move(out_dims), std::move(out));
}

}  // namespace hosvd3
