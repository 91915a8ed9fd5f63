#include "hnc/harmonic.hpp"

#include "hnc/bernoulli.hpp"
#include "hnc/exact_identities.hpp"
#include "hnc/primes.hpp"
#include "oracles.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace hnc;

TEST_CASE("harmonic table entries") {
  const HarmonicTable t25(make_ring(5, 2));
  CHECK(t25.h1(0).value() == 0);
  CHECK(t25.h1(4).value() == 0);  // H_4 = 25/12, numerator divisible by p^2

  const HarmonicTable t7(make_ring(7, 1));
  CHECK(t7.h1(4).value() == 5);  // 25/12 mod 7

  for (std::uint64_t k = 1; k < 7; ++k) CHECK((t7.inv_of(k) * t7.ring().res(static_cast<std::int64_t>(k))).value() == 1);
  CHECK_THROWS_AS(t7.inv_of(0), std::domain_error);
  CHECK_THROWS_AS(t7.inv_of(7), std::domain_error);
}

TEST_CASE("Wolstenholme across a prime range") {
  for (const std::uint64_t p : primes_in(5, 199)) {
    CHECK(HarmonicTable(make_ring(p, 2)).h1(p - 1).value() == 0);
    CHECK(HarmonicTable(make_ring(p, 1)).h2(p - 1).value() == 0);
  }
}

TEST_CASE("oracle residues at pinned points") {
  const HarmonicTable t25(make_ring(5, 2));
  CHECK(sum_pow_harmonic(t25, 0, 1).str() == "21 mod 25");  // 77/12; also 1-p
  CHECK(sum_pow_harmonic(t25, 2, 2).str() == "9 mod 25");   // 3949/36
  CHECK(sum_pow_harmonic(t25, 0, 3).str() == "11 mod 25");  // 33833/1728
  const HarmonicTable t49(make_ring(7, 2));
  CHECK(sum_pow_harmonic(t49, 2, 1).str() == "20 mod 49");  // 12127/60
  CHECK_THROWS_AS(sum_pow_harmonic(t49, 0, 4), std::domain_error);
}

TEST_CASE("oracle equals embedded exact sums") {
  for (const std::uint64_t p : {5ull, 7ull, 11ull, 13ull})
    for (int e = 1; e <= 2; ++e) {
      const HarmonicTable table(make_ring(p, e));
      for (std::size_t m = 0; m <= 6; ++m)
        for (int n = 0; n <= 3; ++n)
          CHECK(sum_pow_harmonic(table, static_cast<std::int64_t>(m), n) ==
                embed(sum_pow_harmonic_exact(m, n, p), table.ring()));
    }
}

TEST_CASE("sum H_k/k folds to H2_{p-1}/2 mod p^2") {
  for (const std::uint64_t p : primes_in(5, 61)) {
    const HarmonicTable table(make_ring(p, 2));
    CHECK(sum_pow_harmonic(table, -1, 1) == inv(table.ring().res(2)) * table.h2(p - 1));
  }
}

TEST_CASE("reflection of harmonic prefixes") {
  {
    const HarmonicTable t7(make_ring(7, 1));
    CHECK(reflection_check(t7, 3, 1));  // H_4 == H_2 == 5 (mod 7)
    CHECK(t7.h1(4).value() == 5);
    CHECK(t7.h1(2).value() == 5);
    CHECK(reflection_check(t7, 1, 1));  // H_6 == H_0 == 0
  }
  {
    const HarmonicTable t11(make_ring(11, 1));
    CHECK(reflection_check(t11, 4, 2));
  }
  for (const std::uint64_t p : primes_in(5, 31)) {
    const HarmonicTable table(make_ring(p, 1));
    for (std::uint64_t k = 1; k < p; ++k) {
      CHECK(reflection_check(table, k, 1));
      CHECK(reflection_check(table, k, 2));
    }
  }
  CHECK_THROWS_AS(reflection_check(HarmonicTable(make_ring(7, 2)), 1, 1), std::domain_error);
  CHECK_THROWS_AS(reflection_check(HarmonicTable(make_ring(7, 1)), 1, 3), std::domain_error);
}

TEST_CASE("nested triple sum: folded form vs literal loop vs closed form") {
  const BernoulliTable bern(30);
  for (const std::uint64_t p : {5ull, 7ull, 11ull, 13ull}) {
    const auto ring = make_ring(p, 1);
    CHECK(triple_sum_ij4k(HarmonicTable(ring)) == hnc_test::literal_triple_sum_ij4k(ring));
  }
  const auto closed = [&](std::uint64_t p) {
    const auto ring = make_ring(p, 1);
    const Residue b = embed(bern.at(p - 3), ring);
    return inv(ring.res(3)) * b * b;
  };
  for (const std::uint64_t p : primes_in(11, 31))
    CHECK(triple_sum_ij4k(HarmonicTable(make_ring(p, 1))) == closed(p));
  // boundary: the closed form is imported only for p > 7 and indeed fails at 7
  CHECK(triple_sum_ij4k(HarmonicTable(make_ring(7, 1))) != closed(7));
}

TEST_CASE("binomial congruence mod p^3") {
  CHECK(sun_binomial_check(HarmonicTable(make_ring(5, 3)), 1));
  CHECK(sun_binomial_check(HarmonicTable(make_ring(7, 3)), 3));
  CHECK(sun_binomial_check(HarmonicTable(make_ring(11, 3)), 10));
  for (const std::uint64_t p : primes_in(5, 19)) {
    const HarmonicTable table(make_ring(p, 3));
    for (std::uint64_t k = 1; k < p; ++k) CHECK(sun_binomial_check(table, k));
  }
  CHECK_THROWS_AS(sun_binomial_check(HarmonicTable(make_ring(5, 2)), 1), std::domain_error);
}
