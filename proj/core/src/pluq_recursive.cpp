#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "rpluq/errors.hpp"
#include "rpluq/pluq.hpp"

namespace rpluq {

namespace {

// Concatenates the index ranges [start, start + len) in the listed order.
std::vector<std::size_t> block_order(std::initializer_list<std::pair<std::size_t, std::size_t>>
                                         blocks) {
  std::vector<std::size_t> order;
  for (auto [start, len] : blocks) {
    for (std::size_t i = 0; i < len; ++i) order.push_back(start + i);
  }
  return order;
}

InPlaceResult recurse(const PrimeField& f, MatrixView a, OpCounts& counts,
                      const PluqOptions& opt, std::size_t depth);

InPlaceResult split(const PrimeField& f, MatrixView a, OpCounts& counts, const PluqOptions& opt,
                    std::size_t depth) {
  const Kernels& K = opt.kernels ? *opt.kernels : classical_kernels();
  const std::size_t m = a.rows(), n = a.cols();
  const std::size_t k = m / 2, h = n / 2;
  auto blk = [&](std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) {
    return a.block(r0, c0, nr, nc);
  };

  // A1 = P1 [L1; M1] [U1 V1] Q1
  auto [P1, Q1, r1] = recurse(f, blk(0, 0, k, h), counts, opt, depth + 1);

  apply_rows_inverse(blk(0, h, k, n - h), P1);  // [B1; B2] = P1^T A2
  apply_cols_inverse(blk(k, 0, m - k, h), Q1);  // [C1 C2] = A3 Q1^T

  const auto L1U1 = blk(0, 0, r1, r1);
  const auto D = blk(0, h, r1, n - h);
  const auto E = blk(k, 0, m - k, r1);
  K.trsm_left_unit_lower(f, L1U1, D, counts);  // D = L1^-1 B1
  K.trsm_right_upper(f, E, L1U1, counts);      // E = C1 U1^-1
  K.mm_acc(f, blk(r1, h, k - r1, n - h), blk(r1, 0, k - r1, r1), D, counts);  // F = B2 - M1 D
  K.mm_acc(f, blk(k, r1, m - k, h - r1), E, blk(0, r1, r1, h - r1), counts);  // G = C2 - E V1
  K.mm_acc(f, blk(k, h, m - k, n - h), E, D, counts);                          // H = A4 - E D

  auto [P2, Q2, r2] = recurse(f, blk(r1, h, k - r1, n - h), counts, opt, depth + 1);  // F
  auto [P3, Q3, r3] = recurse(f, blk(k, r1, m - k, h - r1), counts, opt, depth + 1);  // G

  const auto H = blk(k, h, m - k, n - h);
  apply_rows_inverse(H, P3);
  apply_cols_inverse(H, Q2);
  apply_rows_inverse(E, P3);                       // [E1; E2]
  apply_rows_inverse(blk(r1, 0, k - r1, r1), P2);  // [M11; M12]
  apply_cols_inverse(D, Q2);                       // [D1 D2]
  apply_cols_inverse(blk(0, r1, r1, h - r1), Q3);  // [V11 V12]

  const std::size_t m4 = m - k - r3, n4 = n - h - r2;
  const auto U2 = blk(r1, h, r2, r2);
  const auto L3 = blk(k, r1, r3, r3);
  const auto V2 = blk(r1, h + r2, r2, n4);
  const auto H1 = blk(k, h, r3, r2);
  const auto Kb = blk(k + r3, h, m4, r2);
  const auto N = blk(k, h + r2, r3, n4);
  const auto H4 = blk(k + r3, h + r2, m4, n4);

  K.trsm_right_upper(f, H1, U2, counts);  // I = H1 U2^-1, kept in place for the output
  {
    // J = L3^-1 I would overwrite I; work on a copy.
    std::vector<Residue> scratch(r3 * r2);
    MatrixView J(scratch.data(), r3, r2, r2);
    for (std::size_t i = 0; i < r3; ++i) std::copy_n(H1.row(i), r2, J.row(i));
    K.trsm_left_unit_lower(f, L3, J, counts);
    K.trsm_right_upper(f, Kb, U2, counts);      // K = H3 U2^-1
    K.trsm_left_unit_lower(f, L3, N, counts);   // N = L3^-1 H2
    K.mm_acc(f, N, J, V2, counts);              // O = N - J V2
    if (opt.trace) {
      opt.trace->max_scratch_elements = std::max(opt.trace->max_scratch_elements, r3 * r2);
    }
  }
  K.mm_acc(f, H4, Kb, V2, counts);                       // H4 - K V2
  K.mm_acc(f, H4, blk(k + r3, r1, m4, r3), N, counts);   // R = H4 - K V2 - M3 O

  auto [P4, Q4, r4] = recurse(f, H4, counts, opt, depth + 1);

  apply_rows_inverse(blk(k + r3, 0, m4, h + r2), P4);  // [E2 M3 0 K]
  apply_cols_inverse(blk(0, h + r2, k + r3, n4), Q4);  // [D2; V2; 0; O]

  const Permutation S = build_S(r1, r2, r3, r4, k, m);
  const Permutation T = build_T(r1, r2, r3, r4, h, n);
  apply_rows_inverse(a, S);
  apply_cols_inverse(a, T);

  if (opt.trace) opt.trace->splits.push_back({depth, m, n, r1, r2, r3, r4});

  // P = Diag(P1 Diag(I_r1, P2), P3 Diag(I_r3, P4)) S
  Permutation P = compose(
      block_diag(compose(P1, embed(P2, r1, k)), compose(P3, embed(P4, r3, m - k))), S);
  // Q = T Diag(Diag(I_r1, Q3) Q1, Diag(I_r2, Q4) Q2)
  Permutation Q = compose(
      T, block_diag(compose(embed(Q3, r1, h), Q1), compose(embed(Q4, r2, n - h), Q2)));
  return {std::move(P), std::move(Q), r1 + r2 + r3 + r4};
}

InPlaceResult recurse(const PrimeField& f, MatrixView a, OpCounts& counts,
                      const PluqOptions& opt, std::size_t depth) {
  const std::size_t m = a.rows(), n = a.cols();
  if (m == 0 || n == 0) return {Permutation::identity(m), Permutation::identity(n), 0};
  if (m == 1) return base_row_in_place(f, a, counts);
  if (n == 1) return base_col_in_place(f, a, counts);
  if (std::min(m, n) <= opt.threshold) {
    if (opt.trace) ++opt.trace->base_case_calls;
    return pluq_base_in_place(f, a, counts);
  }
  return split(f, a, counts, opt, depth);
}

void check_options(const PluqOptions& opt) {
  if (opt.threshold == 0) throw UsageError("threshold must be positive");
}

}  // namespace

Permutation build_S(std::size_t r1, std::size_t r2, std::size_t r3, std::size_t r4,
                    std::size_t k, std::size_t m) {
  if (r1 + r2 > k || k > m || r3 + r4 > m - k) {
    throw UsageError("build_S: inconsistent block sizes");
  }
  const std::size_t b2 = k - r1 - r2, b4 = m - k - r3 - r4;
  // order[i] is the old row placed at new row i, which is S^-1.
  return Permutation(block_order({{0, r1 + r2}, {k, r3 + r4}, {r1 + r2, b2}, {k + r3 + r4, b4}}))
      .inverse();
}

Permutation build_T(std::size_t r1, std::size_t r2, std::size_t r3, std::size_t r4,
                    std::size_t k, std::size_t n) {
  if (r1 + r3 > k || k > n || r2 + r4 > n - k) {
    throw UsageError("build_T: inconsistent block sizes");
  }
  // T(j) is the old column placed at new column j.
  return Permutation(block_order({{0, r1},
                                  {k, r2},
                                  {r1, r3},
                                  {k + r2, r4},
                                  {r1 + r3, k - r1 - r3},
                                  {k + r2 + r4, n - k - r2 - r4}}));
}

InPlaceResult pluq_in_place(const PrimeField& f, MatrixView a, OpCounts& counts,
                            const PluqOptions& options) {
  check_options(options);
  return recurse(f, a, counts, options, 0);
}

PluqFactors pluq(DenseMatrix a, OpCounts& counts, const PluqOptions& options) {
  check_options(options);
  const PrimeField f = a.field();
  auto [P, Q, r] = recurse(f, a.view(), counts, options, 0);
  return {std::move(P), std::move(Q), r, std::move(a)};
}

PluqFactors pluq(DenseMatrix a, std::size_t threshold, OpCounts& counts) {
  PluqOptions opt;
  opt.threshold = threshold;
  return pluq(std::move(a), counts, opt);
}

namespace {

// c(0) = i and c(j) = j - 1 for 1 <= j <= i: index i moves to the front and
// 0..i-1 keep their order. A transposition would put index 0 behind 1..i-1,
// and later "first nonzero" searches in other blocks would then prefer a
// larger original index.
Permutation cycle_to_front(std::size_t s, std::size_t i) {
  std::vector<std::size_t> map(s);
  std::iota(map.begin(), map.end(), std::size_t{0});
  map[0] = i;
  for (std::size_t j = 1; j <= i; ++j) map[j] = j - 1;
  return Permutation(std::move(map));
}

}  // namespace

InPlaceResult base_row_in_place(const PrimeField&, MatrixView a, OpCounts&) {
  if (a.rows() != 1) throw UsageError("base_case_row: expected a single row");
  const std::size_t n = a.cols();
  for (std::size_t i = 0; i < n; ++i) {
    if (a(0, i) != 0) {
      // Entries 0..i-1 are zero, so swapping the values is the same as the shift.
      std::swap(a(0, 0), a(0, i));
      return {Permutation::identity(1), cycle_to_front(n, i), 1};
    }
  }
  return {Permutation::identity(1), Permutation::identity(n), 0};
}

InPlaceResult base_col_in_place(const PrimeField& f, MatrixView a, OpCounts& counts) {
  if (a.cols() != 1) throw UsageError("base_case_col: expected a single column");
  const std::size_t m = a.rows();
  for (std::size_t i = 0; i < m; ++i) {
    if (a(i, 0) == 0) continue;
    std::swap(a(0, 0), a(i, 0));
    const Residue inv = f.inv(a(0, 0));
    ++counts.field_inv;
    // Rows 1..i are zero after the swap.
    for (std::size_t j = i + 1; j < m; ++j) a(j, 0) = f.mul(a(j, 0), inv);
    counts.field_mul += m - i - 1;
    counts.modular_reductions += m - i - 1;
    return {cycle_to_front(m, i).inverse(), Permutation::identity(1), 1};
  }
  return {Permutation::identity(m), Permutation::identity(1), 0};
}

PluqFactors base_case_row(DenseMatrix a, OpCounts& counts) {
  auto [P, Q, r] = base_row_in_place(a.field(), a.view(), counts);
  return {std::move(P), std::move(Q), r, std::move(a)};
}

PluqFactors base_case_col(DenseMatrix a, OpCounts& counts) {
  auto [P, Q, r] = base_col_in_place(a.field(), a.view(), counts);
  return {std::move(P), std::move(Q), r, std::move(a)};
}

}  // namespace rpluq
