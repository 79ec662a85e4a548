#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "rpluq/matrix.hpp"

// Seeded generators. The stream is std::mt19937_64 seeded with the 64-bit
// seed; bounded draws use rejection sampling on the raw 64-bit outputs so the
// matrices are identical across standard library implementations.
namespace rpluq::matgen {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  /// Uniform in [0, bound). bound must be positive.
  std::uint64_t below(std::uint64_t bound);
  /// Uniform in [1, p).
  std::uint32_t nonzero(std::uint32_t p) { return static_cast<std::uint32_t>(1 + below(p - 1)); }
  /// k distinct values from [0, n), in draw order (partial Fisher-Yates).
  std::vector<std::size_t> sample(std::size_t n, std::size_t k);

 private:
  std::mt19937_64 engine_;
};

/// Independent uniform entries.
DenseMatrix gen_uniform(std::size_t m, std::size_t n, std::uint32_t p, std::uint64_t seed);

/// L U with L m x d unit lower trapezoidal, U d x n upper trapezoidal with a
/// nonzero diagonal, d = min(m, n). Every leading k x k minor, k <= d, is
/// nonzero.
DenseMatrix gen_generic(std::size_t m, std::size_t n, std::uint32_t p, std::uint64_t seed);
/// Square case of gen_generic. Requires n >= 1.
DenseMatrix gen_full_rank_generic(std::size_t n, std::uint32_t p, std::uint64_t seed);

/// L E U with L m x m lower and U n x n upper triangular, both with nonzero
/// diagonals, and E a random partial permutation with r ones. rank = r.
/// Throws UsageError if r > min(m, n).
DenseMatrix gen_rank_deficient_leu(std::size_t m, std::size_t n, std::size_t r, std::uint32_t p,
                                   std::uint64_t seed);
DenseMatrix gen_rank_deficient_leu(std::size_t n, std::size_t r, std::uint32_t p,
                                   std::uint64_t seed);

}  // namespace rpluq::matgen
