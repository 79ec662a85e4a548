#include <algorithm>
#include <numeric>
#include <optional>
#include <vector>

#include "rpluq/pluq.hpp"

namespace rpluq {

namespace {

struct Pivot {
  std::size_t row, col;
};

// Moves row p up to row r and column q left to column r, shifting the rows
// r..p-1 down and the columns r..q-1 right by one. Unlike a transposition
// this keeps the non-pivot rows and columns in their original relative
// order, which the "first nonzero" searches rely on.
void rotate_to_front(MatrixView a, std::size_t r, std::size_t p, std::size_t q) {
  if (q != r) {
    for (std::size_t s = 0; s < a.rows(); ++s) {
      Residue* row = a.row(s);
      std::rotate(row + r, row + q, row + q + 1);
    }
  }
  for (std::size_t s = p; s > r; --s) swap_rows(a, s, s - 1);
}

}  // namespace

// The pivot search scans the leading i x j submatrix, growing it along a
// Z-curve. At each step the candidate is, in order: the column segment
// A[r..i-1, j], the row segment A[i, r..j-1], then the corner A[i, j]. The
// region A[r..i-1, r..j-1] is zero on entry to every step.
InPlaceResult pluq_base_in_place(const PrimeField& f, MatrixView a, OpCounts& counts,
                                 FrontierLog* frontier) {
  const std::size_t m = a.rows(), n = a.cols();
  // row_at[s]: original row now stored at row s. col_at[c]: same for columns.
  std::vector<std::size_t> row_at(m), col_at(n);
  std::iota(row_at.begin(), row_at.end(), std::size_t{0});
  std::iota(col_at.begin(), col_at.end(), std::size_t{0});

  std::size_t r = 0, i = 0, j = 0;
  while (i < m || j < n) {
    std::optional<Pivot> piv;
    if (j < n) {
      for (std::size_t s = r; s < i; ++s) {
        if (a(s, j) != 0) {
          piv = Pivot{s, j};
          break;
        }
      }
      if (piv) j = std::min(j + 1, n);
    }
    if (!piv && i < m) {
      for (std::size_t c = r; c < j; ++c) {
        if (a(i, c) != 0) {
          piv = Pivot{i, c};
          break;
        }
      }
      if (piv) i = std::min(i + 1, m);
    }
    if (!piv) {
      if (i < m && j < n && a(i, j) != 0) piv = Pivot{i, j};
      i = std::min(i + 1, m);
      j = std::min(j + 1, n);
      if (!piv) {
        if (frontier) frontier->emplace_back(i, j);
        continue;
      }
    }

    if (frontier) frontier->emplace_back(i, j);
    const auto [p, q] = *piv;
    const Residue inv = f.inv(a(p, q));
    ++counts.field_inv;
    const Residue* prow = a.row(p);
    for (std::size_t s = p + 1; s < m; ++s) {
      Residue* srow = a.row(s);
      if (srow[q] == 0) continue;
      const Residue l = f.mul(srow[q], inv);
      srow[q] = l;
      for (std::size_t c = q + 1; c < n; ++c) srow[c] = f.sub(srow[c], f.mul(l, prow[c]));
      counts.field_mul += n - q;
      counts.field_add += n - q - 1;
      counts.modular_reductions += n - q;
    }
    rotate_to_front(a, r, p, q);
    std::rotate(row_at.begin() + r, row_at.begin() + p, row_at.begin() + p + 1);
    std::rotate(col_at.begin() + r, col_at.begin() + q, col_at.begin() + q + 1);
    ++r;
  }
  // Packed row s holds original row row_at[s], so P = row_at^-1; Q = col_at.
  return {Permutation(std::move(row_at)).inverse(), Permutation(std::move(col_at)), r};
}

PluqFactors pluq_base_case(DenseMatrix a, OpCounts& counts, FrontierLog* frontier) {
  auto [P, Q, r] = pluq_base_in_place(a.field(), a.view(), counts, frontier);
  return {std::move(P), std::move(Q), r, std::move(a)};
}

}  // namespace rpluq
