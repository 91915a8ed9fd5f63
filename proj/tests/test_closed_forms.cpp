#include "hnc/closed_forms.hpp"

#include "hnc/catalog.hpp"
#include "hnc/primes.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace hnc;

TEST_CASE("closed-form constants") {
  const ConstantCache cc(13);
  CHECK(to_fraction_string(cc.mu(1)) == "-5/4");
  CHECK(to_fraction_string(cc.mu(5)) == "-77/1200");
  CHECK(to_fraction_string(cc.nu(4)) == "-7/225");
  CHECK(to_fraction_string(cc.lambda_coeff(4)) == "5743/27000");
  CHECK_THROWS_AS(cc.mu(4), std::domain_error);
  CHECK_THROWS_AS(cc.nu(5), std::domain_error);
}

TEST_CASE("degree-one closed form") {
  {
    const auto bt = bernoulli_mod_table(make_ring(7, 2), 5);
    CHECK(rhs_t31(2, bt).str() == "20 mod 49");  // -113/36
  }
  {
    const auto ring = make_ring(5, 2);
    const auto bt = bernoulli_mod_table(ring, 3);
    CHECK(rhs_t31(1, bt) == embed(make_rational(13, 4), ring));     // 3p/4 - 1/2
    CHECK(rhs_t31(2, bt) == embed(make_rational(-79, 36), ring));   // -17p/36 + 1/6
    CHECK_THROWS_AS(rhs_t31(4, bt), std::domain_error);
  }
  // all-modular route equals exact-embed route
  const ConstantCache cc(13);
  for (const std::uint64_t p : primes_in(5, 61)) {
    const auto ring = make_ring(p, 2);
    const auto bt = bernoulli_mod_table(ring, p - 2);
    const Residue p_res = ring.res(static_cast<std::int64_t>(p));
    for (std::size_t m = 1; m <= std::min<std::size_t>(p - 2, 12); ++m)
      CHECK(rhs_t31(m, bt) == embed(cc.bern().at(m), ring) -
                                  p_res * embed(cc.s(m) / Rational(m + 1), ring));
  }
}

TEST_CASE("degree-two closed forms against the oracle") {
  const ConstantCache cc(13);
  {
    const auto ring = make_ring(5, 2);
    const auto bt = bernoulli_mod_table(ring, 3);
    CHECK(rhs_t32(2, bt, cc).str() == "9 mod 25");  // 79p/108 - 4/9 = 347/108
  }
  for (const std::uint64_t p : primes_in(5, 31)) {
    const auto ring = make_ring(p, 2);
    const auto bt = bernoulli_mod_table(ring, p - 2);
    const HarmonicTable table(ring);
    for (std::size_t m = 1; m <= std::min<std::size_t>(p - 2, 10); ++m)
      CHECK(rhs_t32(m, bt, cc) == sum_pow_harmonic(table, static_cast<std::int64_t>(m), 2));
  }
}

TEST_CASE("general degree-two congruence matches every specialization") {
  const ConstantCache cc(13);
  for (const std::uint64_t p : primes_in(5, 61)) {
    const auto ring = make_ring(p, 2);
    const auto bt = bernoulli_mod_table(ring, p - 2);
    for (std::size_t m = 1; m <= std::min<std::size_t>(p - 2, 12); ++m)
      CHECK(rhs_t3_general(m, p, ring, cc) == rhs_t32(m, bt, cc));
  }
}

TEST_CASE("mod-p corollary forms") {
  {
    const auto ring1 = make_ring(11, 1);
    const auto bt = bernoulli_mod_table(make_ring(11, 2), 9);
    CHECK(rhs_c2_c3(1, false, bt, ring1).value() == 1);  // B_0
    CHECK(rhs_c2_c3(3, false, bt, ring1) == embed(make_rational(1, 6), ring1));
    CHECK_THROWS_AS(rhs_c2_c3(2, false, bt, ring1), std::domain_error);
  }
  {
    const auto ring1 = make_ring(7, 1);
    const auto bt = bernoulli_mod_table(make_ring(7, 2), 5);
    CHECK(rhs_c2_c3(1, true, bt, ring1).value() == 3);  // B_4 = -1/30 mod 7
  }
  // quadratic convolution form vs oracle, even m
  for (const std::uint64_t p : primes_in(5, 31)) {
    const auto ring1 = make_ring(p, 1);
    const auto bt = bernoulli_mod_table(make_ring(p, 2), p - 2);
    const HarmonicTable table(ring1);
    for (std::size_t m = 2; m <= std::min<std::size_t>(p - 3, 10); m += 2)
      CHECK(rhs_lemma3(m, bt, ring1) ==
            sum_pow_harmonic(table, -static_cast<std::int64_t>(m), 2));
  }
  CHECK(rhs_lemma3(2, bernoulli_mod_table(make_ring(13, 2), 11), make_ring(13, 1)).value() == 0);
}

TEST_CASE("inverse-exponent degree-two forms") {
  {
    // m=2 short-circuit is B_{p-3}
    const auto ring1 = make_ring(7, 1);
    const auto bt = bernoulli_mod_table(make_ring(7, 2), 5);
    const HarmonicTable t1(ring1);
    const Residue h2k2 = sum_pow_harmonic(t1, -2, 2);
    CHECK(rhs_c5_c6_c7(2, bt, bp3_mod_p2(7), h2k2, ring1).str() == "31 mod 49");
  }
  {
    // m=4 short-circuit is B_{p-5}
    const auto ring1 = make_ring(11, 1);
    const auto ring2 = make_ring(11, 2);
    const auto bt = bernoulli_mod_table(ring2, 9);
    const HarmonicTable t1(ring1);
    const Residue h2k4 = sum_pow_harmonic(t1, -4, 2);
    CHECK(rhs_c5_c6_c7(4, bt, bp3_mod_p2(11), h2k4, ring1) ==
          embed(make_rational(1, 42), ring2));  // B_6
  }
  {
    // general branch vs oracle
    const auto ring1 = make_ring(13, 1);
    const auto ring2 = make_ring(13, 2);
    const auto bt = bernoulli_mod_table(ring2, 11);
    const HarmonicTable t1(ring1), t2(ring2);
    const Residue h2k6 = sum_pow_harmonic(t1, -6, 2);
    CHECK(rhs_c5_c6_c7(6, bt, bp3_mod_p2(13), h2k6, ring1) ==
          sum_pow_harmonic(t2, 13 - 6, 2));
  }
}

TEST_CASE("cubic closed forms") {
  {
    const auto ring = make_ring(5, 2);
    const Residue bp3 = embed(make_rational(1, 6), ring);  // exact B_2 at p = 5
    CHECK(rhs_cubic(0, ring, bp3).str() == "11 mod 25");   // -427/18
  }
  {
    const auto ring = make_ring(7, 2);
    CHECK(rhs_cubic(1, ring, bp3_mod_p2(7)) == sum_pow_harmonic(HarmonicTable(ring), 1, 3));
  }
  {
    const auto ring = make_ring(11, 2);
    CHECK(rhs_cubic(3, ring, bp3_mod_p2(11)) ==
          embed(make_rational(425 * 11 - 240, 576), ring));
    CHECK_THROWS_AS(rhs_cubic(4, ring, bp3_mod_p2(11)), std::domain_error);
  }
}

TEST_CASE("cubic chains reproduce the oracle") {
  {
    const HarmonicTable t25(make_ring(5, 2));
    const auto chain = cubic_chain(t25, 2);
    CHECK(chain.at(0).str() == "11 mod 25");
    CHECK_THROWS_AS(cubic_chain(t25, 3), std::domain_error);  // M > p-3
  }
  {
    const HarmonicTable t49(make_ring(7, 2));
    const auto chain = cubic_chain(t49, 4);
    CHECK(chain.at(1) == rhs_cubic(1, t49.ring(), bp3_mod_p2(7)));
  }
  {
    const HarmonicTable t(make_ring(11, 2));
    const auto chain = cubic_chain(t, 8);
    for (std::size_t m = 0; m <= 8; ++m)
      CHECK(chain.at(m) == sum_pow_harmonic(t, static_cast<std::int64_t>(m), 3));
  }
}

TEST_CASE("index-shift congruence") {
  CHECK(shift_check(HarmonicTable(make_ring(5, 2)), 0, 1));
  CHECK(shift_check(HarmonicTable(make_ring(7, 2)), 3, 2));
  CHECK(shift_check(HarmonicTable(make_ring(11, 2)), 5, 3));
  for (const std::uint64_t p : primes_in(5, 31)) {
    const HarmonicTable table(make_ring(p, 2));
    for (std::int64_t m = 0; m <= 8; ++m)
      for (int n = 1; n <= 3; ++n) CHECK(shift_check(table, m, n));
  }
  CHECK_THROWS_AS(shift_check(HarmonicTable(make_ring(5, 2)), -1, 1), std::domain_error);
}

TEST_CASE("catalog contents") {
  const auto& entries = catalog();
  CHECK(entries.size() == 34);

  const std::vector<std::string> expected = {
      "WOLST_H1", "WOLST_H2", "H2_LIFT", "REFLECT_H", "REFLECT_HN", "SUN_BINOM",
      "SUM_H1", "SUM_H2", "SUM_H2_NEG2X", "T31", "T3_GENERAL", "T32_M2", "T32_M3",
      "T32_ODD", "T32_EVEN", "C_M1", "C_M4", "C_M5", "C2_MODP", "C3_MODP", "LEMMA3",
      "C5", "C6", "C7", "CUBIC_0", "CUBIC_1", "CUBIC_2", "CUBIC_3", "R1_CHAIN",
      "R2_SHIFT", "HK_OVER_K", "HOFFMAN_TRIPLE", "H2K2_ZERO", "HK_K5_ZERO"};
  for (const auto& id : expected) CHECK_NOTHROW(find_descriptor(id));
  CHECK_THROWS_AS(find_descriptor("NO_SUCH_ID"), std::invalid_argument);

  const auto& t31 = find_descriptor("T31");
  CHECK(t31.ring_exponent == 2);
  CHECK(t31.min_p == 4);
  CHECK(t31.m_values(7, 12).size() == 5);   // m = 1..p-2
  CHECK(t31.m_values(31, 12).size() == 12); // capped by m_max

  const auto& c7 = find_descriptor("C7");
  CHECK(c7.min_p == 8);  // p > 7

  const auto& w1 = find_descriptor("WOLST_H1");
  CHECK(w1.ring_exponent == 2);
  CHECK(w1.m_values(13, 12) == std::vector<std::optional<int>>{std::nullopt});

  // every descriptor carries its congruence statement
  for (const auto& d : entries) CHECK(!d.statement.empty());
}
