#include "rpluq/prime_field.hpp"

#include <string>
#include <vector>

#include "rpluq/errors.hpp"

namespace rpluq {

bool PrimeField::is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0) return false;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint64_t p, std::uint64_t max_modulus) {
  if (max_modulus > kHardMaxModulus) {
    throw UsageError("modulus bound above 2^32 is not supported");
  }
  if (p >= max_modulus) {
    throw UsageError("modulus " + std::to_string(p) + " exceeds the bound " +
                     std::to_string(max_modulus));
  }
  if (!is_prime(p)) throw UsageError("modulus " + std::to_string(p) + " is not prime");
  p_ = static_cast<std::uint32_t>(p);
  const std::uint64_t sq = (std::uint64_t{p_} - 1) * (std::uint64_t{p_} - 1);
  const std::uint64_t two63 = std::uint64_t{1} << 63;
  bound_ = sq <= 1 ? two63 : two63 / sq;
  if (bound_ == 0) bound_ = 1;
}

Residue PrimeField::inv(Residue a) const {
  if (a % p_ == 0) throw DivisionByZero("inverse of zero modulo " + std::to_string(p_));
  std::int64_t r0 = p_, r1 = a;
  std::int64_t s0 = 0, s1 = 1;
  while (r1 != 0) {
    const std::int64_t q = r0 / r1;
    std::int64_t t = r0 - q * r1;
    r0 = r1;
    r1 = t;
    t = s0 - q * s1;
    s0 = s1;
    s1 = t;
  }
  std::int64_t x = s0 % static_cast<std::int64_t>(p_);
  if (x < 0) x += p_;
  return static_cast<Residue>(x);
}

void PrimeField::check(FieldElement a) const {
  if (a.modulus != p_) {
    throw UsageError("element of Z/" + std::to_string(a.modulus) + " used in Z/" +
                     std::to_string(p_));
  }
}

FieldElement PrimeField::add(FieldElement a, FieldElement b) const {
  check(a);
  check(b);
  return {add(a.value, b.value), p_};
}

FieldElement PrimeField::mul(FieldElement a, FieldElement b) const {
  check(a);
  check(b);
  return {mul(a.value, b.value), p_};
}

FieldElement PrimeField::inv(FieldElement a) const {
  check(a);
  return {inv(a.value), p_};
}

Residue PrimeField::dot_accumulate(std::span<const Residue> u, std::span<const Residue> v,
                                   OpCounts& counts) const {
  if (u.size() != v.size()) throw UsageError("dot_accumulate: length mismatch");
  if (u.empty()) return 0;
  std::uint64_t acc = 0;
  std::uint64_t pending = 0;
  std::uint64_t reductions = 0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (pending == bound_) {
      acc %= p_;
      ++reductions;
      pending = 0;
    }
    acc += std::uint64_t{u[i]} * v[i];
    ++pending;
  }
  counts.field_mul += u.size();
  counts.field_add += u.size() - 1;
  counts.modular_reductions += reductions + 1;
  return static_cast<Residue>(acc % p_);
}

FieldElement PrimeField::dot_accumulate(std::span<const FieldElement> u,
                                        std::span<const FieldElement> v,
                                        OpCounts& counts) const {
  if (u.size() != v.size()) throw UsageError("dot_accumulate: length mismatch");
  std::vector<Residue> a(u.size()), b(v.size());
  for (std::size_t i = 0; i < u.size(); ++i) {
    check(u[i]);
    check(v[i]);
    a[i] = u[i].value;
    b[i] = v[i].value;
  }
  return {dot_accumulate(std::span<const Residue>(a), std::span<const Residue>(b), counts), p_};
}

}  // namespace rpluq
