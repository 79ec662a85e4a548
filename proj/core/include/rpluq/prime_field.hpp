#pragma once

#include <cstdint>
#include <span>

#include "rpluq/op_counts.hpp"

namespace rpluq {

/// Storage type for a canonical residue in [0, p).
using Residue = std::uint32_t;

/// A residue tagged with the modulus it belongs to. Used at API boundaries
/// where mixing elements of different fields must be caught; matrices store
/// bare `Residue` values.
struct FieldElement {
  Residue value = 0;
  std::uint32_t modulus = 0;

  friend bool operator==(const FieldElement&, const FieldElement&) = default;
};

/// Arithmetic in Z/pZ for a word-size prime p.
///
/// By default p must be below 2^26 so that long sums of products fit a 64-bit
/// accumulator before a single reduction. Passing a larger `max_modulus`
/// (at most 2^32) admits bigger primes; the accumulation bound then shrinks,
/// down to one product per reduction.
class PrimeField {
 public:
  static constexpr std::uint64_t kDefaultMaxModulus = std::uint64_t{1} << 26;
  static constexpr std::uint64_t kHardMaxModulus = std::uint64_t{1} << 32;

  explicit PrimeField(std::uint64_t p, std::uint64_t max_modulus = kDefaultMaxModulus);

  [[nodiscard]] std::uint32_t modulus() const { return p_; }

  /// Number of products of two residues that can be summed in a uint64
  /// without overflow: floor(2^63 / (p-1)^2), at least 1.
  [[nodiscard]] std::uint64_t accumulation_bound() const { return bound_; }

  [[nodiscard]] Residue reduce(std::uint64_t x) const { return static_cast<Residue>(x % p_); }
  [[nodiscard]] Residue add(Residue a, Residue b) const {
    std::uint64_t s = std::uint64_t{a} + b;
    return static_cast<Residue>(s >= p_ ? s - p_ : s);
  }
  [[nodiscard]] Residue sub(Residue a, Residue b) const {
    return a >= b ? a - b : static_cast<Residue>(std::uint64_t{a} + p_ - b);
  }
  [[nodiscard]] Residue neg(Residue a) const { return a == 0 ? 0 : p_ - a; }
  [[nodiscard]] Residue mul(Residue a, Residue b) const {
    return static_cast<Residue>((std::uint64_t{a} * b) % p_);
  }
  /// Extended Euclid. Throws DivisionByZero for a == 0.
  [[nodiscard]] Residue inv(Residue a) const;

  [[nodiscard]] FieldElement element(std::uint64_t v) const { return {reduce(v), p_}; }
  [[nodiscard]] FieldElement add(FieldElement a, FieldElement b) const;
  [[nodiscard]] FieldElement mul(FieldElement a, FieldElement b) const;
  [[nodiscard]] FieldElement inv(FieldElement a) const;

  /// Canonical residue of sum u_i * v_i, reduced once per accumulation chunk
  /// (once in total when the length is within accumulation_bound()).
  [[nodiscard]] Residue dot_accumulate(std::span<const Residue> u, std::span<const Residue> v,
                                       OpCounts& counts) const;
  [[nodiscard]] FieldElement dot_accumulate(std::span<const FieldElement> u,
                                            std::span<const FieldElement> v,
                                            OpCounts& counts) const;

  static bool is_prime(std::uint64_t n);

  friend bool operator==(const PrimeField& a, const PrimeField& b) { return a.p_ == b.p_; }

 private:
  void check(FieldElement a) const;

  std::uint32_t p_;
  std::uint64_t bound_;
};

}  // namespace rpluq
