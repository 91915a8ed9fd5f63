#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace hnc {

// Desk-scale cap shared by the sieve and ring construction. With e = 3 the
// modulus stays below 2^63 and residue products below 2^128, so all ring
// arithmetic is exact in fixed-width integers.
inline constexpr std::uint64_t kMaxPrime = 1'000'000;

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  if (n % 3 == 0) return n == 3;
  for (std::uint64_t d = 5; d * d <= n; d += 6) {
    if (n % d == 0 || n % (d + 2) == 0) return false;
  }
  return true;
}

// Ascending primes in [lo, hi] from a plain sieve.
inline std::vector<std::uint64_t> primes_in(std::uint64_t lo, std::uint64_t hi) {
  if (lo < 5 || lo > hi || hi > kMaxPrime)
    throw std::invalid_argument("primes_in: bounds must satisfy 5 <= lo <= hi <= 1000000");
  std::vector<bool> composite(hi + 1, false);
  std::vector<std::uint64_t> out;
  for (std::uint64_t n = 2; n <= hi; ++n) {
    if (composite[n]) continue;
    if (n >= lo) out.push_back(n);
    for (std::uint64_t m = n * n; m <= hi; m += n) composite[m] = true;
  }
  return out;
}

}  // namespace hnc
