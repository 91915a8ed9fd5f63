#pragma once

#include "hnc/bernoulli.hpp"
#include "hnc/exact_identities.hpp"
#include "hnc/harmonic.hpp"
#include "hnc/modring.hpp"

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

namespace hnc {

// S(m) and the degree-two closed-form coefficients mu_m (odd m), nu_m and
// lambda_m (even m), all exact:
//   mu_m     = -(m+2)/(2m) S(m-1) + 1/4 sum_{r<m} B_r B_{m-1-r}
//   nu_m     = -2/(m+1) S(m)
//   lambda_m = 2/(m+1) sum_{r<=m} C(m+1,r)/(m+1-r) B_r S(m-r) - (m^2-m+6)/12 B_{m-2}
// These are m-indexed constants of the closed forms themselves (like 79/108);
// every p-indexed Bernoulli value stays in the modular tables.
class ConstantCache {
 public:
  explicit ConstantCache(std::size_t m_max) : bern_(m_max + 1) {
    s_.reserve(m_max + 1);
    for (std::size_t m = 0; m <= m_max; ++m) s_.push_back(s_value(m, bern_));
  }

  const BernoulliTable& bern() const { return bern_; }

  const Rational& s(std::size_t m) const {
    if (m >= s_.size()) throw std::domain_error("ConstantCache: S(m) out of range");
    return s_[m];
  }

  Rational mu(std::size_t m) const {
    if (m == 0 || m % 2 == 0) throw std::domain_error("ConstantCache: mu wants odd m");
    return -make_rational(Int(m + 2), Int(2 * m)) * s(m - 1) + conv_sum(m, bern_) / Rational(4);
  }

  Rational nu(std::size_t m) const {
    if (m % 2 != 0) throw std::domain_error("ConstantCache: nu wants even m");
    return Rational(-2) / Rational(m + 1) * s(m);
  }

  Rational lambda_coeff(std::size_t m) const {
    if (m < 2 || m % 2 != 0) throw std::domain_error("ConstantCache: lambda wants even m >= 2");
    Rational acc = 0;
    for (std::size_t r = 0; r <= m; ++r)
      acc += make_rational(binomial(m + 1, r), Int(m + 1 - r)) * bern_.at(r) * s(m - r);
    return Rational(2) / Rational(m + 1) * acc -
           make_rational(Int(m) * Int(m) - Int(m) + 6, 12) * bern_.at(m - 2);
  }

 private:
  BernoulliTable bern_;
  std::vector<Rational> s_;
};

// Pascal row n reduced into the ring.
inline std::vector<std::uint64_t> pascal_row_mod(std::size_t n, const PrimePowerRing& ring) {
  std::vector<std::uint64_t> row{1};
  for (std::size_t i = 1; i <= n; ++i) {
    std::vector<std::uint64_t> next(i + 1, 1);
    for (std::size_t k = 1; k < i; ++k) {
      next[k] = row[k - 1] + row[k];
      if (next[k] >= ring.modulus) next[k] -= ring.modulus;
    }
    row = std::move(next);
  }
  return row;
}

// S(m) evaluated entirely in-ring from a modular Bernoulli table.
inline Residue s_value_mod(std::size_t m, const ModularBernoulliTable& bt) {
  const PrimePowerRing& ring = bt.ring();
  const auto row = pascal_row_mod(m + 1, ring);
  Residue acc = ring.res(0);
  for (std::size_t r = 0; r <= m; ++r)
    acc = acc + Residue(row[r], ring) * bt.at(r) * bt.at(m - r);
  return acc;
}

// sum_{k<p} k^m H_k == B_m - p/(m+1) S(m)  (mod p^2); all-modular route.
inline Residue rhs_t31(std::size_t m, const ModularBernoulliTable& bt) {
  const PrimePowerRing& ring = bt.ring();
  if (m == 0 || m > ring.p - 2) throw std::domain_error("rhs_t31: need 0 < m < p-1");
  return bt.at(m) - ring.res(static_cast<std::int64_t>(ring.p)) *
                        inv(ring.res(static_cast<std::int64_t>(m) + 1)) * s_value_mod(m, bt);
}

// Full intermediate congruence for sum_{k<p} k^m H_k^2 (mod p^2):
//   2p/(m+1) sum_r C(m+1,r)/(m+1-r) B_r S(m-r)
//   + p/(m+1) sum_{r<m} C(m+1,r) B_r B_{m-1-r}
//   - 2/(m+1) S(m) - m/2 B_{m-1}
// Evaluated exactly and embedded; valid for every 0 < m < p-1.
inline Residue rhs_t3_general(std::size_t m, std::uint64_t p, const PrimePowerRing& ring2,
                              const ConstantCache& cc) {
  if (m == 0 || m > p - 2) throw std::domain_error("rhs_t3_general: need 0 < m < p-1");
  Rational lead = 0;
  for (std::size_t r = 0; r <= m; ++r)
    lead += make_rational(binomial(m + 1, r), Int(m + 1 - r)) * cc.bern().at(r) * cc.s(m - r);
  const Rational value =
      make_rational(2 * Int(p), Int(m + 1)) * lead +
      make_rational(Int(p), Int(m + 1)) * weighted_conv(m, ConvWeight::kUpperMPlus1, cc.bern()) -
      Rational(2) / Rational(m + 1) * cc.s(m) -
      make_rational(Int(m), 2) * cc.bern().at(m - 1);
  return embed(value, ring2);
}

// Parity-split closed form for sum_{k<p} k^m H_k^2 (mod p^2):
//   odd m != 3:  B_{m-1} + p mu_m        even m != 2:  nu_m + p lambda_m
// with the m = 2 and m = 3 cases routed to their specialized constants.
inline Residue rhs_t32(std::size_t m, const ModularBernoulliTable& bt, const ConstantCache& cc) {
  const PrimePowerRing& ring = bt.ring();
  const Int p(ring.p);
  if (m == 0 || m > ring.p - 2) throw std::domain_error("rhs_t32: need 0 < m < p-1");
  if (m == 2) return embed(make_rational(79 * p - 48, 108), ring);
  if (m == 3) return embed(make_rational(-59 * p + 24, 144), ring);
  const Residue p_res = ring.res(static_cast<std::int64_t>(ring.p));
  if (m % 2 == 1) return bt.at(m - 1) + p_res * embed(cc.mu(m), ring);
  return embed(cc.nu(m), ring) + p_res * embed(cc.lambda_coeff(m), ring);
}

// Mod-p forms: sum k^m H_k^2 == B_{m-1} and sum H_k^2 / k^m == B_{p-2-m},
// both for odd m. The flag selects the inverse-power variant.
inline Residue rhs_c2_c3(std::size_t m, bool inverse_powers, const ModularBernoulliTable& bt,
                         const PrimePowerRing& ring1) {
  if (m % 2 == 0) throw std::domain_error("rhs_c2_c3: m must be odd");
  const std::uint64_t p = ring1.p;
  if (m > p - 2) throw std::domain_error("rhs_c2_c3: need 0 < m < p-1");
  const std::size_t index = inverse_powers ? p - 2 - m : m - 1;
  return ring1.res(static_cast<std::int64_t>(bt.at(index).value() % p));
}

// sum H_k^2 / k^m == -sum_{j=0}^{p-1-m} B_j B_{p-1-m-j}
//                    -sum_{j=p-m}^{p-2} B_j B_{2p-2-m-j}   (mod p), even m.
inline Residue rhs_lemma3(std::size_t m, const ModularBernoulliTable& bt,
                          const PrimePowerRing& ring1) {
  if (m == 0 || m % 2 != 0) throw std::domain_error("rhs_lemma3: m must be even and positive");
  const std::uint64_t p = ring1.p;
  if (m > p - 2) throw std::domain_error("rhs_lemma3: need 0 < m < p-1");
  const auto b = [&](std::size_t j) {
    return ring1.res(static_cast<std::int64_t>(bt.at(j).value() % p));
  };
  Residue acc = ring1.res(0);
  for (std::size_t j = 0; j + m <= p - 1; ++j) acc = acc + b(j) * b(p - 1 - m - j);
  for (std::size_t j = p - m; j <= p - 2; ++j) acc = acc + b(j) * b(2 * p - 2 - m - j);
  return -acc;
}

// General form of sum_{k<p} k^{p-m} H_k^2 (mod p^2) for even m:
//   B_{p-1-m} - p ( (m-1)/4 * [sum H_k^2/k^m mod p] + 1/4 sum_{r=p-m}^{p-2} B_r B_{2p-2-m-r} )
// The mod-p quantity sum H_k^2/k^m is consumed as given (from the oracle),
// not algebraically eliminated.
inline Residue rhs_c5_general(std::size_t m, const ModularBernoulliTable& bt,
                              const Residue& h2_over_km_modp, const PrimePowerRing& ring1) {
  const PrimePowerRing& ring2 = bt.ring();
  const std::uint64_t p = ring2.p;
  if (m == 0 || m % 2 != 0 || m > p - 3) throw std::domain_error("rhs_c5_general: bad m");
  const auto b = [&](std::size_t j) {
    return ring1.res(static_cast<std::int64_t>(bt.at(j).value() % p));
  };
  const Residue quarter = inv(ring1.res(4));
  Residue tail = ring1.res(0);
  for (std::size_t r = p - m; r <= p - 2; ++r) tail = tail + b(r) * b(2 * p - 2 - m - r);
  const Residue bracket =
      ring1.res(static_cast<std::int64_t>(m) - 1) * quarter * h2_over_km_modp + quarter * tail;
  return bt.at(p - 1 - m) - ring2.res(static_cast<std::int64_t>(p)) *
                                ring2.res(static_cast<std::int64_t>(bracket.value()));
}

// m = 2 and m = 4 short-circuit to B_{p-3} and B_{p-5} mod p^2; other even m
// use the general form above.
inline Residue rhs_c5_c6_c7(std::size_t m, const ModularBernoulliTable& bt, const Residue& bp3,
                            const Residue& h2_over_km_modp, const PrimePowerRing& ring1) {
  if (m == 2) return bp3;
  if (m == 4) return bt.at(bt.ring().p - 5);
  return rhs_c5_general(m, bt, h2_over_km_modp, ring1);
}

// Closed forms of sum_{k<p} k^m H_k^3 (mod p^2) for m = 0..3:
//   m=0:  p B_{p-3}/3 - 6p + 6            m=1:  27p/8 - p B_{p-3}/6 - 3
//   m=2:  -365p/216 + p B_{p-3}/18 + 23/18  m=3:  425p/576 - 5/12
// bp3 carries B_{p-3} mod p^2 (exact B_2 at p = 5).
inline Residue rhs_cubic(int m, const PrimePowerRing& ring2, const Residue& bp3) {
  const Int p(ring2.p);
  const Residue p_res = ring2.res(static_cast<std::int64_t>(ring2.p));
  switch (m) {
    case 0:
      return inv(ring2.res(3)) * p_res * bp3 + embed(Rational(6 - 6 * p), ring2);
    case 1:
      return embed(make_rational(27 * p - 24, 8), ring2) - inv(ring2.res(6)) * p_res * bp3;
    case 2:
      return embed(make_rational(-365 * p + 276, 216), ring2) + inv(ring2.res(18)) * p_res * bp3;
    case 3:
      return embed(make_rational(425 * p - 240, 576), ring2);
    default:
      throw std::domain_error("rhs_cubic: m must be in 0..3");
  }
}

// a_m = sum_{k<p} k^m H_k^3 mod p^2 produced by the binomial-shift recurrence
//   a_{m-1} = (1/m) ( -sum_{i=2}^{m} C(m,i) a_{m-i}
//                     - 3 sum k^{m-1} H_k^2 + 3 sum k^{m-2} H_k - sum k^{m-3} )
// run forward for m = 1..M+1. Negative exponents mean inverse powers.
class CubicChain {
 public:
  CubicChain(const PrimePowerRing& ring, std::vector<Residue> values)
      : ring_(ring), a_(std::move(values)) {}

  const PrimePowerRing& ring() const { return ring_; }
  std::size_t max_index() const { return a_.size() - 1; }

  const Residue& at(std::size_t m) const {
    if (m >= a_.size()) throw std::domain_error("CubicChain: index out of range");
    return a_[m];
  }

 private:
  PrimePowerRing ring_;
  std::vector<Residue> a_;
};

inline CubicChain cubic_chain(const HarmonicTable& table, std::size_t max_index) {
  const PrimePowerRing& ring = table.ring();
  if (ring.e != 2) throw std::domain_error("cubic_chain: table must be mod p^2");
  if (max_index > ring.p - 3) throw std::domain_error("cubic_chain: max index must be <= p-3");

  std::vector<Residue> a;
  a.reserve(max_index + 1);
  std::vector<std::uint64_t> row{1};  // Pascal row 0 mod p^2
  std::size_t row_index = 0;
  for (std::size_t m = 1; m <= max_index + 1; ++m) {
    while (row_index < m) {
      std::vector<std::uint64_t> next(row.size() + 1, 1);
      for (std::size_t k = 1; k < row.size(); ++k) {
        next[k] = row[k - 1] + row[k];
        if (next[k] >= ring.modulus) next[k] -= ring.modulus;
      }
      row = std::move(next);
      ++row_index;
    }
    const auto sm = static_cast<std::int64_t>(m);
    Residue acc = -(ring.res(3) * sum_pow_harmonic(table, sm - 1, 2)) +
                  ring.res(3) * sum_pow_harmonic(table, sm - 2, 1) - power_sum(sm - 3, ring);
    for (std::size_t i = 2; i <= m; ++i)
      acc = acc - Residue(row[i], ring) * a[m - i];
    a.push_back(inv(ring.res(sm)) * acc);
  }
  return CubicChain(ring, std::move(a));
}

// Both sides of sum (k+1)^m H_k^n == sum k^m H_{k-1}^n (mod p^2).
inline std::pair<Residue, Residue> shift_sides(const HarmonicTable& table, std::int64_t m, int n) {
  if (m < 0) throw std::domain_error("shift_sides: m must be >= 0");
  if (n < 1 || n > 3) throw std::domain_error("shift_sides: n must be in 1..3");
  const PrimePowerRing& ring = table.ring();
  Residue lhs = ring.res(0), rhs = ring.res(0);
  for (std::uint64_t k = 1; k < ring.p; ++k) {
    Residue lterm = ring.res(static_cast<std::int64_t>(k) + 1).pow(m);
    Residue rterm = ring.res(static_cast<std::int64_t>(k)).pow(m);
    for (int i = 0; i < n; ++i) {
      lterm = lterm * table.h1(k);
      rterm = rterm * table.h1(k - 1);
    }
    lhs = lhs + lterm;
    rhs = rhs + rterm;
  }
  return {lhs, rhs};
}

inline bool shift_check(const HarmonicTable& table, std::int64_t m, int n) {
  const auto [lhs, rhs] = shift_sides(table, m, n);
  return lhs == rhs;
}

}  // namespace hnc
