#include <random>
#include <vector>

#include "doctest.h"
#include "rpluq/errors.hpp"
#include "rpluq/prime_field.hpp"

#ifdef RPLUQ_HAVE_BOOST_MP
#include <boost/multiprecision/cpp_int.hpp>
#endif

using namespace rpluq;

TEST_CASE("addition examples") {
  const PrimeField f5(5), f2(2), f1009(1009);
  CHECK(f5.add(f5.element(3), f5.element(4)) == f5.element(2));
  CHECK(f2.add(f2.element(1), f2.element(1)) == f2.element(0));
  CHECK(f1009.add(f1009.element(1008), f1009.element(1)) == f1009.element(0));
}

TEST_CASE("multiplication examples") {
  const PrimeField f5(5), f7(7), f1009(1009);
  CHECK(f5.mul(f5.element(3), f5.element(4)).value == 2);
  CHECK(f7.mul(f7.element(0), f7.element(6)).value == 0);
#ifdef RPLUQ_HAVE_BOOST_MP
  using boost::multiprecision::cpp_int;
  const cpp_int want = (cpp_int(1000) * cpp_int(1000)) % 1009;
  CHECK(f1009.mul(f1009.element(1000), f1009.element(1000)).value == want.convert_to<unsigned>());
#else
  CHECK(f1009.mul(f1009.element(1000), f1009.element(1000)).value == 1000000 % 1009);
#endif
}

TEST_CASE("inverse examples") {
  const PrimeField f5(5), f7(7), f1009(1009);
  CHECK(f5.inv(f5.element(2)).value == 3);
  CHECK(f7.inv(f7.element(1)).value == 1);
  CHECK(f1009.inv(f1009.element(2)).value == 505);
  CHECK_THROWS_AS((void)f5.inv(f5.element(0)), DivisionByZero);
  CHECK_THROWS_AS((void)f5.inv(Residue{0}), DivisionByZero);
}

TEST_CASE("mixing moduli is a usage error") {
  const PrimeField f5(5), f7(7);
  CHECK_THROWS_AS((void)f5.add(f5.element(1), f7.element(1)), UsageError);
  CHECK_THROWS_AS((void)f5.mul(f7.element(1), f5.element(1)), UsageError);
  CHECK_THROWS_AS((void)f5.inv(f7.element(1)), UsageError);
}

TEST_CASE("constructor validates the modulus") {
  CHECK_THROWS_AS(PrimeField(0), UsageError);
  CHECK_THROWS_AS(PrimeField(1), UsageError);
  CHECK_THROWS_AS(PrimeField(9), UsageError);
  CHECK_THROWS_AS(PrimeField(67108879), UsageError);  // prime, above 2^26
  CHECK_NOTHROW(PrimeField(67108879, PrimeField::kHardMaxModulus));
  CHECK_NOTHROW(PrimeField(4294967291ULL, PrimeField::kHardMaxModulus));
  CHECK_THROWS_AS(PrimeField(5, PrimeField::kHardMaxModulus + 1), UsageError);
  CHECK(PrimeField::is_prime(2));
  CHECK(PrimeField::is_prime(1009));
  CHECK_FALSE(PrimeField::is_prime(1));
  CHECK_FALSE(PrimeField::is_prime(1001));
}

TEST_CASE("a * inv(a) = 1 for every nonzero a, all primes up to 101") {
  for (std::uint32_t p = 2; p <= 101; ++p) {
    if (!PrimeField::is_prime(p)) continue;
    const PrimeField f(p);
    for (Residue a = 1; a < p; ++a) REQUIRE(f.mul(a, f.inv(a)) == 1);
  }
}

TEST_CASE("ring laws on sampled triples") {
  std::mt19937_64 rng(7);
  for (std::uint32_t p : {2u, 3u, 101u, 1009u, 65521u, 67108859u}) {
    const PrimeField f(p);
    std::uniform_int_distribution<Residue> d(0, p - 1);
    for (int it = 0; it < 2000; ++it) {
      const Residue a = d(rng), b = d(rng), c = d(rng);
      REQUIRE(f.add(a, b) == f.add(b, a));
      REQUIRE(f.mul(a, b) == f.mul(b, a));
      REQUIRE(f.add(f.add(a, b), c) == f.add(a, f.add(b, c)));
      REQUIRE(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
      REQUIRE(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
      REQUIRE(f.add(f.sub(a, b), b) == a);
      REQUIRE(f.add(a, f.neg(a)) == 0);
    }
  }
}

TEST_CASE("dot_accumulate small examples") {
  const PrimeField f5(5);
  OpCounts c;
  const std::vector<Residue> z(4, 0);
  CHECK(f5.dot_accumulate(z, z, c) == 0);
  CHECK(c.modular_reductions == 1);

  c = {};
  const std::vector<FieldElement> u = {f5.element(1), f5.element(2)};
  const std::vector<FieldElement> v = {f5.element(3), f5.element(4)};
  CHECK(f5.dot_accumulate(u, v, c).value == 1);
  CHECK(c == OpCounts{2, 1, 0, 1});

  c = {};
  CHECK(f5.dot_accumulate(std::span<const Residue>{}, std::span<const Residue>{}, c) == 0);
  CHECK(c == OpCounts{});

  const std::vector<Residue> shorter(3, 1);
  CHECK_THROWS_AS((void)f5.dot_accumulate(z, shorter, c), UsageError);
}

TEST_CASE("dot_accumulate equals the fold of mul and add") {
  std::mt19937_64 rng(11);
  for (std::uint32_t p : {2u, 1009u, 67108859u}) {
    const PrimeField f(p);
    std::uniform_int_distribution<Residue> d(0, p - 1);
    for (std::size_t len : {1u, 2u, 17u, 1000u}) {
      std::vector<Residue> u(len), v(len);
      for (auto& x : u) x = d(rng);
      for (auto& x : v) x = d(rng);
      Residue fold = 0;
      for (std::size_t i = 0; i < len; ++i) fold = f.add(fold, f.mul(u[i], v[i]));
      OpCounts c;
      CHECK(f.dot_accumulate(u, v, c) == fold);
      CHECK(c.field_mul == len);
      CHECK(c.field_add == len - 1);
      CHECK(c.modular_reductions == 1);  // all lengths are within the bound
    }
  }
}

#ifdef RPLUQ_HAVE_BOOST_MP
TEST_CASE("dot_accumulate of length 1000 against a big-integer sum") {
  using boost::multiprecision::cpp_int;
  std::mt19937_64 rng(13);
  for (std::uint64_t p : {1009ULL, 67108859ULL, 4294967291ULL}) {
    const PrimeField f(p, PrimeField::kHardMaxModulus);
    std::uniform_int_distribution<Residue> d(0, static_cast<Residue>(p - 1));
    std::vector<Residue> u(1000), v(1000);
    cpp_int sum = 0;
    for (std::size_t i = 0; i < u.size(); ++i) {
      u[i] = d(rng);
      v[i] = d(rng);
      sum += cpp_int(u[i]) * v[i];
    }
    OpCounts c;
    const Residue got = f.dot_accumulate(u, v, c);
    CHECK(got == cpp_int(sum % p).convert_to<Residue>());
    // Chunks of accumulation_bound() products, one reduction per chunk.
    const std::uint64_t chunks = (u.size() + f.accumulation_bound() - 1) / f.accumulation_bound();
    CHECK(c.modular_reductions == chunks);
  }
}
#endif

TEST_CASE("accumulation bound") {
  CHECK(PrimeField(2).accumulation_bound() == (std::uint64_t{1} << 63));
  CHECK(PrimeField(1009).accumulation_bound() == (std::uint64_t{1} << 63) / (1008ULL * 1008ULL));
  // Above 2^31.5 a single product already fills half the word.
  CHECK(PrimeField(4294967291ULL, PrimeField::kHardMaxModulus).accumulation_bound() == 1);
}

TEST_CASE("long dot product over a large prime reduces per chunk") {
  const PrimeField f(4294967291ULL, PrimeField::kHardMaxModulus);
  const std::vector<Residue> u(10, 4294967290U);
  OpCounts c;
  // (-1)^2 * 10 = 10
  CHECK(f.dot_accumulate(u, u, c) == 10);
  CHECK(c.modular_reductions == 10);
}
