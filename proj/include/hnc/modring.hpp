#pragma once

#include "hnc/primes.hpp"
#include "hnc/rational.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>

namespace hnc {

struct NotInvertible : std::domain_error {
  explicit NotInvertible(const std::string& what) : std::domain_error(what) {}
};

// Signals a rational that is not p-integral (e.g. B_{p-1}); such values have
// no residue mod p^e.
struct PDividesDenominator : std::domain_error {
  explicit PDividesDenominator(const std::string& what) : std::domain_error(what) {}
};

struct RingMismatch : std::logic_error {
  RingMismatch() : std::logic_error("operands belong to different rings") {}
};

class Residue;

// Modulus context p^e with p prime > 3 and e in {1,2,3}.
struct PrimePowerRing {
  std::uint64_t p = 0;
  int e = 0;
  std::uint64_t modulus = 0;

  friend bool operator==(const PrimePowerRing&, const PrimePowerRing&) = default;

  Residue res(std::int64_t v) const;
  Residue res(const Int& v) const;
};

inline PrimePowerRing make_ring(std::uint64_t p, int e) {
  if (p <= 3 || p > kMaxPrime || !is_prime(p))
    throw std::domain_error("make_ring: p must be a prime > 3 and <= 1000000");
  if (e < 1 || e > 3) throw std::domain_error("make_ring: e must be in {1,2,3}");
  std::uint64_t m = 1;
  for (int i = 0; i < e; ++i) m *= p;
  return PrimePowerRing{p, e, m};
}

inline std::uint64_t canonical_mod(std::int64_t v, std::uint64_t modulus) {
  std::int64_t r = v % static_cast<std::int64_t>(modulus);
  if (r < 0) r += static_cast<std::int64_t>(modulus);
  return static_cast<std::uint64_t>(r);
}

inline std::uint64_t canonical_mod(const Int& v, std::uint64_t modulus) {
  Int r = v % modulus;
  if (r < 0) r += modulus;
  return r.convert_to<std::uint64_t>();
}

// Canonical representative in [0, p^e). All binary operations require
// identical rings.
class Residue {
 public:
  Residue(std::uint64_t value, const PrimePowerRing& ring)
      : value_(value % ring.modulus), ring_(ring) {}

  std::uint64_t value() const { return value_; }
  const PrimePowerRing& ring() const { return ring_; }

  std::string str() const {
    return std::to_string(value_) + " mod " + std::to_string(ring_.modulus);
  }

  friend Residue operator+(const Residue& a, const Residue& b) {
    a.check(b);
    std::uint64_t v = a.value_ + b.value_;  // modulus < 2^63, no overflow
    if (v >= a.ring_.modulus) v -= a.ring_.modulus;
    return Residue(v, a.ring_, 0);
  }

  friend Residue operator-(const Residue& a, const Residue& b) {
    a.check(b);
    std::uint64_t v = a.value_ >= b.value_ ? a.value_ - b.value_
                                           : a.value_ + a.ring_.modulus - b.value_;
    return Residue(v, a.ring_, 0);
  }

  friend Residue operator*(const Residue& a, const Residue& b) {
    a.check(b);
    auto prod = static_cast<unsigned __int128>(a.value_) * b.value_;
    return Residue(static_cast<std::uint64_t>(prod % a.ring_.modulus), a.ring_, 0);
  }

  Residue operator-() const {
    return Residue(value_ == 0 ? 0 : ring_.modulus - value_, ring_, 0);
  }

  friend bool operator==(const Residue& a, const Residue& b) {
    a.check(b);
    return a.value_ == b.value_;
  }
  friend bool operator!=(const Residue& a, const Residue& b) { return !(a == b); }

  Residue pow(std::int64_t t) const;

 private:
  // trusted-value constructor used by the operators; skips the reduction
  Residue(std::uint64_t value, const PrimePowerRing& ring, int) : value_(value), ring_(ring) {}

  void check(const Residue& other) const {
    if (!(ring_ == other.ring_)) throw RingMismatch();
  }

  std::uint64_t value_;
  PrimePowerRing ring_;
};

inline Residue PrimePowerRing::res(std::int64_t v) const {
  return Residue(canonical_mod(v, modulus), *this);
}

inline Residue PrimePowerRing::res(const Int& v) const {
  return Residue(canonical_mod(v, modulus), *this);
}

// Multiplicative inverse by extended Euclid; exists iff p does not divide a.
inline Residue inv(const Residue& a) {
  const PrimePowerRing& ring = a.ring();
  if (a.value() % ring.p == 0)
    throw NotInvertible("inv: " + a.str() + " shares the factor " + std::to_string(ring.p));
  __int128 old_r = static_cast<__int128>(a.value()), r = static_cast<__int128>(ring.modulus);
  __int128 old_s = 1, s = 0;
  while (r != 0) {
    __int128 q = old_r / r;
    __int128 t = old_r - q * r;
    old_r = r;
    r = t;
    t = old_s - q * s;
    old_s = s;
    s = t;
  }
  if (old_s < 0) old_s += static_cast<__int128>(ring.modulus);
  return Residue(static_cast<std::uint64_t>(old_s), ring);
}

inline Residue Residue::pow(std::int64_t t) const {
  Residue base = t < 0 ? inv(*this) : *this;
  std::uint64_t n = t < 0 ? static_cast<std::uint64_t>(-(t + 1)) + 1 : static_cast<std::uint64_t>(t);
  Residue acc = ring_.res(1);
  while (n > 0) {
    if (n & 1) acc = acc * base;
    base = base * base;
    n >>= 1;
  }
  return acc;
}

// k^t mod p^e with k^{-s} meaning inv(k)^s.
inline Residue pow_signed(std::int64_t k, std::int64_t t, const PrimePowerRing& ring) {
  return ring.res(k).pow(t);
}

// Residue of a p-integral rational: numerator times inverse denominator.
inline Residue embed(const Rational& q, const PrimePowerRing& ring) {
  const Int& den = denominator(q);
  if (den % ring.p == 0)
    throw PDividesDenominator("embed: denominator of " + to_fraction_string(q) +
                              " is divisible by " + std::to_string(ring.p));
  return ring.res(numerator(q)) * inv(ring.res(den));
}

// sum_{k=1}^{p-1} k^t in the ring; every k is invertible, so t may be negative.
inline Residue power_sum(std::int64_t t, const PrimePowerRing& ring) {
  Residue acc = ring.res(0);
  for (std::uint64_t k = 1; k < ring.p; ++k)
    acc = acc + pow_signed(static_cast<std::int64_t>(k), t, ring);
  return acc;
}

}  // namespace hnc
