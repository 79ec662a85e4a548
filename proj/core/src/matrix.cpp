#include "rpluq/matrix.hpp"

#include <algorithm>
#include <string>

#include "rpluq/errors.hpp"

namespace rpluq {

template <typename T>
BasicMatrixView<T> BasicMatrixView<T>::block(std::size_t r0, std::size_t c0, std::size_t nr,
                                             std::size_t nc) const {
  if (r0 > rows_ || c0 > cols_ || nr > rows_ - r0 || nc > cols_ - c0) {
    throw UsageError("block (" + std::to_string(r0) + "," + std::to_string(c0) + ") " +
                     std::to_string(nr) + "x" + std::to_string(nc) + " outside " +
                     std::to_string(rows_) + "x" + std::to_string(cols_) + " view");
  }
  // Empty blocks may sit at the one-past-the-end corner; keep the pointer valid.
  if (nr == 0 || nc == 0) return {data_, nr, nc, stride_};
  return {data_ + r0 * stride_ + c0, nr, nc, stride_};
}

template class BasicMatrixView<Residue>;
template class BasicMatrixView<const Residue>;

DenseMatrix::DenseMatrix(std::size_t rows, std::size_t cols, std::uint32_t modulus)
    : rows_(rows), cols_(cols), p_(modulus), data_(rows * cols, 0) {
  if (modulus < 2) throw UsageError("modulus must be at least 2");
}

DenseMatrix::DenseMatrix(std::size_t rows, std::size_t cols, std::uint32_t modulus,
                         std::span<const std::uint64_t> entries)
    : DenseMatrix(rows, cols, modulus) {
  if (entries.size() != rows * cols) {
    throw UsageError("expected " + std::to_string(rows * cols) + " entries, got " +
                     std::to_string(entries.size()));
  }
  for (std::size_t i = 0; i < entries.size(); ++i) {
    data_[i] = static_cast<Residue>(entries[i] % modulus);
  }
}

DenseMatrix DenseMatrix::identity(std::size_t n, std::uint32_t modulus) {
  DenseMatrix m(n, n, modulus);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

bool DenseMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](Residue x) { return x == 0; });
}

DenseMatrix to_dense(ConstMatrixView v, std::uint32_t modulus) {
  DenseMatrix out(v.rows(), v.cols(), modulus);
  for (std::size_t i = 0; i < v.rows(); ++i) {
    std::copy_n(v.row(i), v.cols(), &out(i, 0));
  }
  return out;
}

DenseMatrix leading_submatrix(const DenseMatrix& a, std::size_t k, std::size_t t) {
  if (k > a.rows() || t > a.cols()) throw UsageError("leading submatrix out of range");
  return to_dense(a.view().block(0, 0, k, t), a.modulus());
}

template <typename T>
Quadrants<T> quadrant_views(BasicMatrixView<T> a, std::size_t row_split, std::size_t col_split) {
  if (row_split > a.rows() || col_split > a.cols()) throw UsageError("split out of range");
  const std::size_t m2 = a.rows() - row_split;
  const std::size_t n2 = a.cols() - col_split;
  return {a.block(0, 0, row_split, col_split), a.block(0, col_split, row_split, n2),
          a.block(row_split, 0, m2, col_split), a.block(row_split, col_split, m2, n2)};
}

template Quadrants<Residue> quadrant_views(MatrixView, std::size_t, std::size_t);
template Quadrants<const Residue> quadrant_views(ConstMatrixView, std::size_t, std::size_t);

DenseMatrix multiply(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.cols() != b.rows()) throw UsageError("multiply: inner dimensions differ");
  if (a.modulus() != b.modulus()) throw UsageError("multiply: moduli differ");
  const std::uint64_t p = a.modulus();
  DenseMatrix c(a.rows(), b.cols(), a.modulus());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t l = 0; l < a.cols(); ++l) {
      const std::uint64_t x = a(i, l);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        c(i, j) = static_cast<Residue>((c(i, j) + x * b(l, j)) % p);
      }
    }
  }
  return c;
}

}  // namespace rpluq
