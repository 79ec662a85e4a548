#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <type_traits>
#include <vector>

#include "rpluq/prime_field.hpp"

namespace rpluq {

/// Non-owning view of a rectangular block inside row-major storage.
/// `stride` is the distance between consecutive rows of the parent.
template <typename T>
class BasicMatrixView {
 public:
  BasicMatrixView() = default;
  BasicMatrixView(T* data, std::size_t rows, std::size_t cols, std::size_t stride)
      : data_(data), rows_(rows), cols_(cols), stride_(stride) {}

  // Mutable views convert to read-only ones.
  template <typename U>
    requires std::is_same_v<const U, T> && (!std::is_same_v<U, T>)
  BasicMatrixView(const BasicMatrixView<U>& o)  // NOLINT(google-explicit-constructor)
      : data_(o.data()), rows_(o.rows()), cols_(o.cols()), stride_(o.stride()) {}

  [[nodiscard]] std::size_t rows() const { return rows_; }
  [[nodiscard]] std::size_t cols() const { return cols_; }
  [[nodiscard]] std::size_t stride() const { return stride_; }
  [[nodiscard]] T* data() const { return data_; }
  [[nodiscard]] bool empty() const { return rows_ == 0 || cols_ == 0; }

  [[nodiscard]] T& operator()(std::size_t i, std::size_t j) const { return data_[i * stride_ + j]; }
  [[nodiscard]] T* row(std::size_t i) const { return data_ + i * stride_; }
  [[nodiscard]] std::span<T> row_span(std::size_t i) const { return {row(i), cols_}; }

  /// Sub-block starting at (r0, c0) of size nr x nc. Throws UsageError when
  /// the block leaves this view.
  [[nodiscard]] BasicMatrixView block(std::size_t r0, std::size_t c0, std::size_t nr,
                                      std::size_t nc) const;

 private:
  T* data_ = nullptr;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t stride_ = 0;
};

using MatrixView = BasicMatrixView<Residue>;
using ConstMatrixView = BasicMatrixView<const Residue>;

/// Row-major m x n matrix over Z/pZ. Zero dimensions are valid.
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols, std::uint32_t modulus);
  /// Entries are reduced modulo p.
  DenseMatrix(std::size_t rows, std::size_t cols, std::uint32_t modulus,
              std::span<const std::uint64_t> entries);

  static DenseMatrix identity(std::size_t n, std::uint32_t modulus);

  [[nodiscard]] std::size_t rows() const { return rows_; }
  [[nodiscard]] std::size_t cols() const { return cols_; }
  [[nodiscard]] std::uint32_t modulus() const { return p_; }
  [[nodiscard]] PrimeField field() const { return PrimeField(p_, PrimeField::kHardMaxModulus); }

  [[nodiscard]] Residue& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  [[nodiscard]] Residue operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  [[nodiscard]] MatrixView view() { return {data_.data(), rows_, cols_, cols_}; }
  [[nodiscard]] ConstMatrixView view() const { return {data_.data(), rows_, cols_, cols_}; }
  [[nodiscard]] std::span<const Residue> entries() const { return data_; }

  [[nodiscard]] bool is_zero() const;

  friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::uint32_t p_ = 2;
  std::vector<Residue> data_;
};

/// Copy of a view into an owning matrix.
DenseMatrix to_dense(ConstMatrixView v, std::uint32_t modulus);

/// Copy of the leading k x t block.
DenseMatrix leading_submatrix(const DenseMatrix& a, std::size_t k, std::size_t t);

/// The four blocks [A1 A2; A3 A4] of a split at (row_split, col_split).
template <typename T>
struct Quadrants {
  BasicMatrixView<T> a1, a2, a3, a4;
};

template <typename T>
Quadrants<T> quadrant_views(BasicMatrixView<T> a, std::size_t row_split, std::size_t col_split);

/// The split used by the recursive decomposition: A1 is floor(m/2) x floor(n/2).
template <typename T>
Quadrants<T> halve(BasicMatrixView<T> a) {
  return quadrant_views(a, a.rows() / 2, a.cols() / 2);
}

/// Plain product with per-entry reduction. Reference quality, used by
/// verification code and tests; not a kernel.
DenseMatrix multiply(const DenseMatrix& a, const DenseMatrix& b);

}  // namespace rpluq
