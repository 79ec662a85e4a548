#include "rpluq/oracle.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>

#include "rpluq/errors.hpp"
#include "rpluq/permutation.hpp"
#include "rpluq/pluq.hpp"

namespace rpluq::oracle {

namespace {

using u64 = std::uint64_t;

u64 pow_mod(u64 b, u64 e, u64 p) {
  u64 r = 1 % p;
  b %= p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

u64 inv_fermat(u64 a, u64 p) { return pow_mod(a, p - 2, p); }

using Rows = std::vector<std::vector<u64>>;

Rows to_rows(const DenseMatrix& a) {
  Rows out(a.rows(), std::vector<u64>(a.cols()));
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out[i][j] = a(i, j);
  }
  return out;
}

Rows transpose_rows(const DenseMatrix& a) {
  Rows out(a.cols(), std::vector<u64>(a.rows()));
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out[j][i] = a(i, j);
  }
  return out;
}

// Incremental echelon basis: each stored vector has a leading entry equal to 1
// at a distinct position.
class EchelonBasis {
 public:
  EchelonBasis(std::size_t width, u64 p) : width_(width), p_(p) {}

  // Adds v if independent of the basis; returns whether it was added.
  bool insert(std::vector<u64> v) {
    for (const auto& [lead, b] : basis_) {
      const u64 c = v[lead];
      if (c == 0) continue;
      for (std::size_t j = 0; j < width_; ++j) v[j] = (v[j] + (p_ - c) * b[j]) % p_;
    }
    std::size_t lead = 0;
    while (lead < width_ && v[lead] == 0) ++lead;
    if (lead == width_) return false;
    const u64 s = inv_fermat(v[lead], p_);
    for (auto& x : v) x = x * s % p_;
    // Keep the basis fully reduced on its lead positions.
    for (auto& [l2, b] : basis_) {
      const u64 c = b[lead];
      if (c == 0) continue;
      for (std::size_t j = 0; j < width_; ++j) b[j] = (b[j] + (p_ - c) * v[j]) % p_;
    }
    basis_.emplace(lead, std::move(v));
    return true;
  }

 private:
  std::size_t width_;
  u64 p_;
  std::map<std::size_t, std::vector<u64>> basis_;
};

std::vector<std::size_t> greedy(const Rows& rows, std::size_t width, std::size_t count, u64 p) {
  EchelonBasis basis(width, p);
  std::vector<std::size_t> picked;
  for (std::size_t i = 0; i < count; ++i) {
    std::vector<u64> v(rows[i].begin(), rows[i].begin() + width);
    if (basis.insert(std::move(v))) picked.push_back(i);
  }
  return picked;
}

}  // namespace

std::size_t rank_naive(const DenseMatrix& a) {
  Rows w = to_rows(a);
  const u64 p = a.modulus();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < a.cols() && rank < a.rows(); ++c) {
    std::size_t piv = rank;
    while (piv < a.rows() && w[piv][c] == 0) ++piv;
    if (piv == a.rows()) continue;
    std::swap(w[piv], w[rank]);
    const u64 s = inv_fermat(w[rank][c], p);
    for (std::size_t i = rank + 1; i < a.rows(); ++i) {
      const u64 f = w[i][c] * s % p;
      if (f == 0) continue;
      for (std::size_t j = c; j < a.cols(); ++j) w[i][j] = (w[i][j] + (p - f) * w[rank][j]) % p;
    }
    ++rank;
  }
  return rank;
}

RankProfile row_rank_profile_naive(const DenseMatrix& a) {
  return RankProfile(greedy(to_rows(a), a.cols(), a.rows(), a.modulus()));
}

RankProfile col_rank_profile_naive(const DenseMatrix& a) {
  return RankProfile(greedy(transpose_rows(a), a.rows(), a.cols(), a.modulus()));
}

LeadingProfileTable all_leading_rank_profiles_naive(const DenseMatrix& a) {
  const std::size_t m = a.rows(), n = a.cols();
  const u64 p = a.modulus();
  LeadingProfileTable table(m, n);
  const Rows rows = to_rows(a);
  const Rows cols = transpose_rows(a);
  // The greedy scan over the first k rows is a prefix of the scan over all m
  // rows, so one scan per width t gives the row profiles for every k.
  for (std::size_t t = 0; t <= n; ++t) {
    const auto picked = greedy(rows, t, m, p);
    for (std::size_t k = 0; k <= m; ++k) {
      std::vector<std::size_t> pre;
      for (std::size_t i : picked) {
        if (i < k) pre.push_back(i);
      }
      table.at(k, t).rows = RankProfile(std::move(pre));
    }
  }
  for (std::size_t k = 0; k <= m; ++k) {
    const auto picked = greedy(cols, k, n, p);
    for (std::size_t t = 0; t <= n; ++t) {
      std::vector<std::size_t> pre;
      for (std::size_t j : picked) {
        if (j < t) pre.push_back(j);
      }
      table.at(k, t).cols = RankProfile(std::move(pre));
    }
  }
  return table;
}

std::vector<std::uint32_t> leading_principal_minors(const DenseMatrix& a) {
  const std::size_t d = std::min(a.rows(), a.cols());
  const u64 p = a.modulus();
  std::vector<std::uint32_t> out;
  for (std::size_t k = 1; k <= d; ++k) {
    Rows w(k, std::vector<u64>(k));
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) w[i][j] = a(i, j);
    }
    u64 det = 1;
    for (std::size_t c = 0; c < k; ++c) {
      std::size_t piv = c;
      while (piv < k && w[piv][c] == 0) ++piv;
      if (piv == k) {
        det = 0;
        break;
      }
      if (piv != c) {
        std::swap(w[piv], w[c]);
        det = (p - det) % p;
      }
      det = det * w[c][c] % p;
      const u64 s = inv_fermat(w[c][c], p);
      for (std::size_t i = c + 1; i < k; ++i) {
        const u64 f = w[i][c] * s % p;
        for (std::size_t j = c; j < k; ++j) w[i][j] = (w[i][j] + (p - f) * w[c][j]) % p;
      }
    }
    out.push_back(static_cast<std::uint32_t>(det));
  }
  return out;
}

namespace {

InPlaceResult ple(const PrimeField& f, MatrixView a, OpCounts& counts, const Kernels& K) {
  const std::size_t m = a.rows(), n = a.cols();
  if (m == 0) return {Permutation::identity(0), Permutation::identity(n), 0};
  if (m == 1) {
    std::size_t i = 0;
    while (i < n && a(0, i) == 0) ++i;
    if (i == n) return {Permutation::identity(1), Permutation::identity(n), 0};
    // Rotate the pivot to the front so the skipped zero columns keep their order.
    std::vector<std::size_t> q(n);
    std::iota(q.begin(), q.end(), 0);
    q[0] = i;
    for (std::size_t j = 1; j <= i; ++j) q[j] = j - 1;
    const Residue piv = a(0, i);
    for (std::size_t j = i; j > 0; --j) a(0, j) = a(0, j - 1);
    a(0, 0) = piv;
    return {Permutation::identity(1), Permutation(std::move(q)), 1};
  }

  const std::size_t t = m / 2, m2 = m - t;
  auto top = ple(f, a.block(0, 0, t, n), counts, K);
  const std::size_t r1 = top.rank;

  MatrixView bottom = a.block(t, 0, m2, n);
  apply_cols_inverse(bottom, top.Q);
  MatrixView c1 = bottom.block(0, 0, m2, r1);
  MatrixView c2 = bottom.block(0, r1, m2, n - r1);
  MatrixView v1 = a.block(0, r1, r1, n - r1);
  K.trsm_right_upper(f, c1, a.block(0, 0, r1, r1), counts);
  K.mm_acc(f, c2, c1, v1, counts);

  auto low = ple(f, c2, counts, K);
  const std::size_t r2 = low.rank;
  apply_rows_inverse(c1, low.P);
  apply_cols_inverse(v1, low.Q);

  // New row order: top pivots, bottom pivots, top rest, bottom rest.
  std::vector<std::size_t> order;
  order.reserve(m);
  for (std::size_t i = 0; i < r1; ++i) order.push_back(i);
  for (std::size_t i = t; i < t + r2; ++i) order.push_back(i);
  for (std::size_t i = r1; i < t; ++i) order.push_back(i);
  for (std::size_t i = t + r2; i < m; ++i) order.push_back(i);
  const Permutation s_inv(std::move(order));
  apply_rows(a, s_inv);

  return {compose(block_diag(top.P, low.P), s_inv.inverse()),
          compose(embed(low.Q, r1, n), top.Q), r1 + r2};
}

}  // namespace

PluqFactors ple_row_major(DenseMatrix a, OpCounts& counts, const Kernels* kernels) {
  const PrimeField f = a.field();
  auto res = ple(f, a.view(), counts, kernels ? *kernels : classical_kernels());
  return {std::move(res.P), std::move(res.Q), res.rank, std::move(a)};
}

std::uint64_t r_pluq_closed_form(std::uint64_t m) {
  if (!std::has_single_bit(m)) throw UsageError("r_pluq_closed_form: m must be a power of two");
  return 2 * m * m - 2 * m;
}

std::uint64_t r_ple_recurrence(std::uint64_t m, std::uint64_t n) {
  if (m > n) throw UsageError("r_ple_recurrence: requires m <= n");
  if (m <= 1) return 0;
  const std::uint64_t t = m / 2;
  return r_ple_recurrence(t, n) + r_ple_recurrence(m - t, n - t) + (m - t) * (n + t);
}

}  // namespace rpluq::oracle
