#include "rpluq/leu.hpp"

#include "rpluq/errors.hpp"

namespace rpluq {

namespace {

// Mat(P) X Mat(P)^T: entry (i, j) is X(P(i), P(j)).
DenseMatrix conjugate_rows(const DenseMatrix& x, const Permutation& P) {
  DenseMatrix out(x.rows(), x.cols(), x.modulus());
  for (std::size_t i = 0; i < x.rows(); ++i) {
    for (std::size_t j = 0; j < x.cols(); ++j) out(i, j) = x(P(i), P(j));
  }
  return out;
}

// Mat(Q)^T Y Mat(Q): entry (Q(x), Q(y)) is Y(x, y).
DenseMatrix conjugate_cols(const DenseMatrix& y, const Permutation& Q) {
  DenseMatrix out(y.rows(), y.cols(), y.modulus());
  for (std::size_t x = 0; x < y.rows(); ++x) {
    for (std::size_t z = 0; z < y.cols(); ++z) out(Q(x), Q(z)) = y(x, z);
  }
  return out;
}

// [L 0; M Y] from the packed factors.
DenseMatrix lower_block(const PluqFactors& f, const DenseMatrix* Y) {
  const std::size_t m = f.rows(), r = f.rank;
  DenseMatrix x(m, m, f.modulus());
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < std::min(i, r); ++j) x(i, j) = f.packed(i, j);
    if (i < r) x(i, i) = 1;
  }
  for (std::size_t i = r; i < m; ++i) {
    for (std::size_t j = r; j < m; ++j) {
      x(i, j) = Y ? (*Y)(i - r, j - r) : static_cast<Residue>(i == j);
    }
  }
  return x;
}

// [U V; 0 Z] from the packed factors.
DenseMatrix upper_block(const PluqFactors& f, const DenseMatrix* Z) {
  const std::size_t n = f.cols(), r = f.rank;
  DenseMatrix y(n, n, f.modulus());
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = i; j < n; ++j) y(i, j) = f.packed(i, j);
  }
  if (Z) {
    for (std::size_t i = r; i < n; ++i) {
      for (std::size_t j = r; j < n; ++j) y(i, j) = (*Z)(i - r, j - r);
    }
  }
  return y;
}

}  // namespace

bool is_unit_lower_triangular(const DenseMatrix& a) {
  if (a.rows() != a.cols()) return false;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    if (a(i, i) != 1) return false;
    for (std::size_t j = i + 1; j < a.cols(); ++j) {
      if (a(i, j) != 0) return false;
    }
  }
  return true;
}

bool is_upper_triangular(const DenseMatrix& a) {
  if (a.rows() != a.cols()) return false;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (a(i, j) != 0) return false;
    }
  }
  return true;
}

LeuFactors to_leu(const PluqFactors& f, const DenseMatrix& a) {
  if (a.rows() != f.rows() || a.cols() != f.cols() || a.modulus() != f.modulus()) {
    throw UsageError("to_leu: factors and matrix disagree in shape or field");
  }
  LeuFactors out;
  out.Lbar = conjugate_rows(lower_block(f, nullptr), f.P);
  out.Ubar = conjugate_cols(upper_block(f, nullptr), f.Q);
  out.E = DenseMatrix(f.rows(), f.cols(), f.modulus());
  std::vector<std::size_t> orig_row(f.rank);
  for (std::size_t i = 0; i < f.rows(); ++i) {
    if (f.P(i) < f.rank) orig_row[f.P(i)] = i;
  }
  for (std::size_t s = 0; s < f.rank; ++s) out.E(orig_row[s], f.Q(s)) = 1;

  if (!is_unit_lower_triangular(out.Lbar)) throw IntegrityError("Lbar is not unit lower triangular");
  if (!is_upper_triangular(out.Ubar)) throw IntegrityError("Ubar is not upper triangular");
  if (multiply(multiply(out.Lbar, out.E), out.Ubar) != a) {
    throw IntegrityError("Lbar E Ubar does not reproduce A");
  }
  return out;
}

TriangularExtension check_triangular_extension(const PluqFactors& f, const DenseMatrix& Y,
                                               const DenseMatrix& Z) {
  const std::size_t m = f.rows(), n = f.cols(), r = f.rank;
  if (Y.rows() != m - r || Y.cols() != m - r || Z.rows() != n - r || Z.cols() != n - r) {
    throw UsageError("check_triangular_extension: Y must be (m-r)^2 and Z (n-r)^2");
  }
  if (Y.modulus() != f.modulus() || Z.modulus() != f.modulus()) {
    throw UsageError("check_triangular_extension: field mismatch");
  }
  return {is_unit_lower_triangular(conjugate_rows(lower_block(f, &Y), f.P)),
          is_upper_triangular(conjugate_cols(upper_block(f, &Z), f.Q))};
}

}  // namespace rpluq
