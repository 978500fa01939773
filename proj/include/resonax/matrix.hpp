#pragma once

#include <cassert>
#include <cstddef>
#include <span>
#include <vector>

namespace resonax {

// Dense row-major matrix. Only what the kernels need: element access,
// row views, and a handful of whole-matrix helpers.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill = T())
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return data_.empty(); }

  T& operator()(std::size_t i, std::size_t j) {
    assert(i < rows_ && j < cols_);
    return data_[i * cols_ + j];
  }
  const T& operator()(std::size_t i, std::size_t j) const {
    assert(i < rows_ && j < cols_);
    return data_[i * cols_ + j];
  }

  std::span<T> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const T> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

  std::vector<T>& storage() { return data_; }
  const std::vector<T>& storage() const { return data_; }

  // Leading principal block of size r x c.
  Matrix block(std::size_t r, std::size_t c) const {
    Matrix out(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) out(i, j) = (*this)(i, j);
    return out;
  }

  // Sub-matrix picking the listed rows and columns.
  Matrix select(const std::vector<std::size_t>& idx) const {
    Matrix out(idx.size(), idx.size());
    for (std::size_t i = 0; i < idx.size(); ++i)
      for (std::size_t j = 0; j < idx.size(); ++j) out(i, j) = (*this)(idx[i], idx[j]);
    return out;
  }

  template <class U, class F>
  Matrix<U> map(F&& f) const {
    Matrix<U> out(rows_, cols_);
    for (std::size_t k = 0; k < data_.size(); ++k) out.storage()[k] = f(data_[k]);
    return out;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

}  // namespace resonax
