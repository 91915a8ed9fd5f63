#pragma once

#include "hnc/binomial.hpp"
#include "hnc/modring.hpp"
#include "hnc/rational.hpp"

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace hnc {

inline constexpr std::size_t kBernoulliIndexCap = 256;

// B_0..B_M as exact rationals from the defining recurrence
//   B_n = -(1/(n+1)) sum_{k=0}^{n-1} C(n+1,k) B_k        (B_1 = -1/2 convention)
class BernoulliTable {
 public:
  explicit BernoulliTable(std::size_t max_index) {
    if (max_index > kBernoulliIndexCap)
      throw std::domain_error("BernoulliTable: index beyond cap");
    BinomialCache binom(max_index + 1);
    values_.reserve(max_index + 1);
    values_.emplace_back(1);
    for (std::size_t n = 1; n <= max_index; ++n) {
      Rational acc = 0;
      for (std::size_t k = 0; k < n; ++k) acc += Rational(binom(n + 1, k)) * values_[k];
      values_.push_back(-acc / Rational(n + 1));
    }
  }

  std::size_t max_index() const { return values_.size() - 1; }

  const Rational& at(std::size_t n) const {
    if (n >= values_.size()) throw std::domain_error("BernoulliTable: table too short");
    return values_[n];
  }

 private:
  std::vector<Rational> values_;
};

inline BernoulliTable bernoulli_exact(std::size_t max_index) {
  return BernoulliTable(max_index);
}

// Product of the primes q with (q-1) | n; for even n this is exactly the
// denominator of B_n (von Staudt-Clausen), which doubles as a table
// integrity check and as the p-integrality criterion for embedding.
inline Int von_staudt_clausen_denominator(std::size_t n) {
  Int d = 1;
  for (std::uint64_t q = 2; q <= n + 1; ++q)
    if (is_prime(q) && n % (q - 1) == 0) d *= q;
  return d;
}

// S(m) = sum_{r=0}^{m} C(m+1,r) B_r B_{m-r}
inline Rational s_value(std::size_t m, const BernoulliTable& bern) {
  Rational acc = 0;
  for (std::size_t r = 0; r <= m; ++r)
    acc += Rational(binomial(m + 1, r)) * bern.at(r) * bern.at(m - r);
  return acc;
}

// sum_{r=0}^{m-1} B_r B_{m-1-r}
inline Rational conv_sum(std::size_t m, const BernoulliTable& bern) {
  if (m == 0) throw std::domain_error("conv_sum: m must be positive");
  Rational acc = 0;
  for (std::size_t r = 0; r < m; ++r) acc += bern.at(r) * bern.at(m - 1 - r);
  return acc;
}

enum class ConvWeight { kUpperM, kUpperMPlus1 };

// sum_{r=0}^{m-1} C(upper, r) B_r B_{m-1-r} with upper = m or m+1
inline Rational weighted_conv(std::size_t m, ConvWeight upper, const BernoulliTable& bern) {
  if (m == 0) throw std::domain_error("weighted_conv: m must be positive");
  const std::size_t u = upper == ConvWeight::kUpperM ? m : m + 1;
  Rational acc = 0;
  for (std::size_t r = 0; r < m; ++r)
    acc += Rational(binomial(u, r)) * bern.at(r) * bern.at(m - 1 - r);
  return acc;
}

// sum_{r=0}^{m} sum_{l=0}^{m-r} C(m+1,r) C(m+1-r,l) / (m+1-r) * B_r B_l B_{m-r-l}
inline Rational triple_convolution_sum(std::size_t m, const BernoulliTable& bern) {
  Rational acc = 0;
  for (std::size_t r = 0; r <= m; ++r) {
    const Rational outer = make_rational(binomial(m + 1, r), Int(m + 1 - r));
    Rational inner = 0;
    for (std::size_t l = 0; l <= m - r; ++l)
      inner += Rational(binomial(m + 1 - r, l)) * bern.at(l) * bern.at(m - r - l);
    acc += outer * bern.at(r) * inner;
  }
  return acc;
}

// Residues of B_0..B_N computed directly in the ring by the same recurrence,
// with Pascal rows reduced mod p^e. N <= p-2 keeps every value p-integral and
// every inverse inv(n+1) available. This is the route that scales with p; the
// exact-reduce route stays available as its independent cross-check.
class ModularBernoulliTable {
 public:
  ModularBernoulliTable(const PrimePowerRing& ring, std::size_t max_index) : ring_(ring) {
    if (max_index > ring.p - 2)
      throw std::domain_error("ModularBernoulliTable: index must be <= p-2 (B_{p-1} is not p-integral)");
    values_.reserve(max_index + 1);
    values_.push_back(1);
    std::vector<std::uint64_t> row{1};  // Pascal row 0 reduced mod p^e
    std::size_t row_index = 0;
    for (std::size_t n = 1; n <= max_index; ++n) {
      while (row_index < n + 1) {
        std::vector<std::uint64_t> next(row.size() + 1, 1);
        for (std::size_t k = 1; k < row.size(); ++k) {
          next[k] = row[k - 1] + row[k];
          if (next[k] >= ring.modulus) next[k] -= ring.modulus;
        }
        row = std::move(next);
        ++row_index;
      }
      Residue acc = ring.res(0);
      for (std::size_t k = 0; k < n; ++k)
        acc = acc + Residue(row[k], ring) * Residue(values_[k], ring);
      values_.push_back((-(inv(ring.res(static_cast<std::int64_t>(n) + 1)) * acc)).value());
    }
  }

  const PrimePowerRing& ring() const { return ring_; }
  std::size_t max_index() const { return values_.size() - 1; }

  Residue at(std::size_t n) const {
    if (n >= values_.size()) throw std::domain_error("ModularBernoulliTable: table too short");
    return Residue(values_[n], ring_);
  }

 private:
  PrimePowerRing ring_;
  std::vector<std::uint64_t> values_;
};

inline ModularBernoulliTable bernoulli_mod_table(const PrimePowerRing& ring, std::size_t max_index) {
  return ModularBernoulliTable(ring, max_index);
}

// B_{p-3} mod p^2, extracted from sum_{k=1}^{p-1} k^{p-3} == p B_{p-3} (mod p^3).
// The p^2 coefficient of the power sum carries B_{p-4}, which vanishes only
// for p >= 7; p = 5 must use the exact B_2 = 1/6 instead. Large sweeps get
// B_{p-3} this way without ever touching the exact table.
inline Residue bp3_mod_p2(std::uint64_t p) {
  if (p < 7)
    throw std::domain_error("bp3_mod_p2: requires p >= 7 (at p=5 the error term carries B_1 != 0)");
  const Residue s = power_sum(static_cast<std::int64_t>(p) - 3, make_ring(p, 3));
  if (s.value() % p != 0)
    throw std::runtime_error("bp3_mod_p2: power sum not divisible by p; ring arithmetic is inconsistent");
  return Residue(s.value() / p, make_ring(p, 2));
}

}  // namespace hnc
