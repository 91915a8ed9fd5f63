#pragma once

#include "hnc/modring.hpp"

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

namespace hnc {

// H_k and H^(2)_k for k = 0..p-1 as residues. The inverses of 1..p-1 come
// from a single extended gcd plus two O(p) prefix-product passes, so table
// construction costs O(p) multiplications.
class HarmonicTable {
 public:
  explicit HarmonicTable(const PrimePowerRing& ring) : ring_(ring) {
    const std::uint64_t p = ring.p, mod = ring.modulus;
    inv_.assign(p, 0);
    h1_.assign(p, 0);
    h2_.assign(p, 0);

    std::vector<std::uint64_t> prefix(p, 1);
    for (std::uint64_t k = 1; k < p; ++k)
      prefix[k] = static_cast<std::uint64_t>(static_cast<unsigned __int128>(prefix[k - 1]) * k % mod);
    std::uint64_t run = inv(Residue(prefix[p - 1], ring)).value();
    for (std::uint64_t k = p - 1; k >= 1; --k) {
      inv_[k] = static_cast<std::uint64_t>(static_cast<unsigned __int128>(run) * prefix[k - 1] % mod);
      run = static_cast<std::uint64_t>(static_cast<unsigned __int128>(run) * k % mod);
    }

    for (std::uint64_t k = 1; k < p; ++k) {
      h1_[k] = h1_[k - 1] + inv_[k];
      if (h1_[k] >= mod) h1_[k] -= mod;
      const auto sq = static_cast<unsigned __int128>(inv_[k]) * inv_[k] % mod;
      h2_[k] = h2_[k - 1] + static_cast<std::uint64_t>(sq);
      if (h2_[k] >= mod) h2_[k] -= mod;
    }
  }

  const PrimePowerRing& ring() const { return ring_; }

  Residue h1(std::size_t k) const { return Residue(h1_.at(k), ring_); }
  Residue h2(std::size_t k) const { return Residue(h2_.at(k), ring_); }

  // inv(k) for 1 <= k <= p-1
  Residue inv_of(std::size_t k) const {
    if (k == 0 || k >= ring_.p) throw std::domain_error("HarmonicTable: inverse index out of range");
    return Residue(inv_[k], ring_);
  }

 private:
  PrimePowerRing ring_;
  std::vector<std::uint64_t> inv_, h1_, h2_;
};

inline HarmonicTable harmonic_table(const PrimePowerRing& ring) { return HarmonicTable(ring); }

// sum_{k=1}^{p-1} k^m H_k^n in the table's ring; negative m means inverse
// powers. The designated left-hand-side oracle for the whole catalog.
inline Residue sum_pow_harmonic(const HarmonicTable& table, std::int64_t m, int n) {
  if (n < 0 || n > 3) throw std::domain_error("sum_pow_harmonic: n must be in 0..3");
  const PrimePowerRing& ring = table.ring();
  Residue acc = ring.res(0);
  for (std::uint64_t k = 1; k < ring.p; ++k) {
    Residue term = m >= 0 ? ring.res(static_cast<std::int64_t>(k)).pow(m)
                          : table.inv_of(k).pow(-m);
    const Residue h = table.h1(k);
    for (int i = 0; i < n; ++i) term = term * h;
    acc = acc + term;
  }
  return acc;
}

inline Residue sum_pow_harmonic(std::int64_t m, int n, const PrimePowerRing& ring) {
  return sum_pow_harmonic(HarmonicTable(ring), m, n);
}

// H^(n)_{p-k} == (-1)^{n+1} H^(n)_{k-1} (mod p) for n in {1,2}.
inline bool reflection_check(const HarmonicTable& table, std::size_t k, int n) {
  if (table.ring().e != 1) throw std::domain_error("reflection_check: table must be mod p");
  if (k == 0 || k >= table.ring().p) throw std::domain_error("reflection_check: k out of range");
  const std::size_t p = table.ring().p;
  switch (n) {
    case 1:
      return table.h1(p - k) == table.h1(k - 1);
    case 2:
      return table.h2(p - k) == -table.h2(k - 1);
    default:
      throw std::domain_error("reflection_check: n must be 1 or 2");
  }
}

// sum over 1 <= i <= j <= k <= p-1 of 1/(i j^4 k) mod p, folded to O(p):
//   sum_j H_j (H_{p-1} - H_{j-1}) / j^4
inline Residue triple_sum_ij4k(const HarmonicTable& table) {
  if (table.ring().e != 1) throw std::domain_error("triple_sum_ij4k: table must be mod p");
  const std::uint64_t p = table.ring().p;
  Residue acc = table.ring().res(0);
  const Residue htop = table.h1(p - 1);
  for (std::uint64_t j = 1; j < p; ++j)
    acc = acc + table.h1(j) * (htop - table.h1(j - 1)) * table.inv_of(j).pow(4);
  return acc;
}

// Both sides of (-1)^k C(p-1,k) == 1 - p H_k + (p^2/2)(H_k^2 - H^(2)_k)  (mod p^3).
// C(p-1,k) is built in-ring from C(p-1,k) = C(p-1,k-1) (p-k) inv(k).
inline std::pair<Residue, Residue> sun_binomial_sides(const HarmonicTable& table, std::size_t k) {
  const PrimePowerRing& ring = table.ring();
  if (ring.e != 3) throw std::domain_error("sun_binomial_sides: table must be mod p^3");
  if (k == 0 || k >= ring.p) throw std::domain_error("sun_binomial_sides: k out of range");

  Residue binom = ring.res(1);
  for (std::size_t i = 1; i <= k; ++i)
    binom = binom * ring.res(static_cast<std::int64_t>(ring.p - i)) * table.inv_of(i);
  const Residue lhs = (k % 2 == 1) ? -binom : binom;

  const Residue h = table.h1(k);
  const Residue p_res = ring.res(static_cast<std::int64_t>(ring.p));
  const Residue rhs = ring.res(1) - p_res * h +
                      p_res * p_res * inv(ring.res(2)) * (h * h - table.h2(k));
  return {lhs, rhs};
}

inline bool sun_binomial_check(const HarmonicTable& table, std::size_t k) {
  const auto [lhs, rhs] = sun_binomial_sides(table, k);
  return lhs == rhs;
}

}  // namespace hnc
