#pragma once

#include "hnc/bernoulli.hpp"
#include "hnc/binomial.hpp"
#include "hnc/rational.hpp"

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <utility>

namespace hnc {

// H_n = 1 + 1/2 + ... + 1/n, H_0 = 0.
inline Rational harmonic_exact(std::size_t n) {
  Rational h = 0;
  for (std::size_t i = 1; i <= n; ++i) h += make_rational(1, Int(i));
  return h;
}

// sum_{k=1}^{p-1} k^m H_k^n by the literal double loop (n = 0 gives the pure
// power sum). This is the brute-force side every closed form is checked
// against, so it deliberately takes no algebraic shortcuts.
inline Rational sum_pow_harmonic_exact(std::size_t m, int n, std::uint64_t p) {
  if (p < 2) throw std::domain_error("sum_pow_harmonic_exact: p must be >= 2");
  if (n < 0 || n > 3) throw std::domain_error("sum_pow_harmonic_exact: n must be in 0..3");
  Rational acc = 0;
  Rational h = 0;
  for (std::uint64_t k = 1; k < p; ++k) {
    h += make_rational(1, Int(k));
    Rational hp = 1;
    for (int i = 0; i < n; ++i) hp *= h;
    acc += Rational(boost::multiprecision::pow(Int(k), static_cast<unsigned>(m))) * hp;
  }
  return acc;
}

// Faulhaber form of sum_{k=1}^{p-1} k^m:
//   (1/(m+1)) sum_{r=0}^{m} C(m+1,r) B_r p^{m+1-r}
inline Rational faulhaber_sum_exact(std::size_t m, std::uint64_t p, const BernoulliTable& bern) {
  Rational acc = 0;
  for (std::size_t r = 0; r <= m; ++r)
    acc += Rational(binomial(m + 1, r)) * bern.at(r) *
           Rational(boost::multiprecision::pow(Int(p), static_cast<unsigned>(m + 1 - r)));
  return acc / Rational(m + 1);
}

// Bernoulli closed form of sum_{k=1}^{p-1} k^m H_k, an exact identity for all
// integers m >= 1, p >= 2:
//   H_{p-1}/(m+1) sum_{r=0}^{m} C(m+1,r) B_r p^{m+1-r}  -  (p-1) B_m
//   - 1/(m+1) sum_{r=0}^{m-1} sum_{l=0}^{m-r} C(m+1,r) C(m+1-r,l)/(m+1-r) B_r B_l p^{m+1-r-l}
inline Rational power_harmonic_sum_closed_form(std::size_t m, std::uint64_t p,
                                               const BernoulliTable& bern) {
  if (m == 0) throw std::domain_error("power_harmonic_sum_closed_form: m must be positive");
  const Int pi(p);
  Rational first = 0;
  for (std::size_t r = 0; r <= m; ++r)
    first += Rational(binomial(m + 1, r)) * bern.at(r) *
             Rational(boost::multiprecision::pow(pi, static_cast<unsigned>(m + 1 - r)));
  first *= harmonic_exact(p - 1) / Rational(m + 1);

  Rational dbl = 0;
  for (std::size_t r = 0; r < m; ++r) {
    const Rational outer = make_rational(binomial(m + 1, r), Int(m + 1 - r));
    for (std::size_t l = 0; l <= m - r; ++l)
      dbl += outer * Rational(binomial(m + 1 - r, l)) * bern.at(r) * bern.at(l) *
             Rational(boost::multiprecision::pow(pi, static_cast<unsigned>(m + 1 - r - l)));
  }
  return first - Rational(Int(p) - 1) * bern.at(m) - dbl / Rational(m + 1);
}

// Both sides of the cubic-convolution identity (odd m):
//   2/(m+1) * Sigma + 1/(m+1) sum C(m+1,r) B_r B_{m-1-r}
//     =  -(m+2)/(2m) sum C(m,r) B_r B_{m-1-r} + 1/4 sum B_r B_{m-1-r}
// where Sigma is the triple convolution sum. Exposed separately so the
// excluded m = 3 case can still be probed informationally.
inline std::pair<Rational, Rational> triple_convolution_identity_sides(
    std::size_t m, const BernoulliTable& bern) {
  if (m == 0 || m % 2 == 0)
    throw std::domain_error("triple_convolution_identity_sides: m must be odd and positive");
  const Rational lhs = Rational(2) / Rational(m + 1) * triple_convolution_sum(m, bern) +
                       weighted_conv(m, ConvWeight::kUpperMPlus1, bern) / Rational(m + 1);
  const Rational rhs = -make_rational(Int(m + 2), Int(2 * m)) *
                           weighted_conv(m, ConvWeight::kUpperM, bern) +
                       conv_sum(m, bern) / Rational(4);
  return {lhs, rhs};
}

inline bool triple_convolution_identity_check(std::size_t m, const BernoulliTable& bern) {
  if (m == 0 || m % 2 == 0 || m == 3)
    throw std::domain_error("triple_convolution_identity_check: m must be odd, positive and != 3");
  const auto [lhs, rhs] = triple_convolution_identity_sides(m, bern);
  return lhs == rhs;
}

// Both sides of   sum C(m+1,r) B_r B_{m-1-r} = (m+1)/2 sum B_r B_{m-1-r}.
inline std::pair<Rational, Rational> weighted_convolution_reduction_sides(
    std::size_t m, const BernoulliTable& bern) {
  if (m == 0 || m % 2 == 0)
    throw std::domain_error("weighted_convolution_reduction_sides: m must be odd and positive");
  return {weighted_conv(m, ConvWeight::kUpperMPlus1, bern),
          make_rational(Int(m + 1), 2) * conv_sum(m, bern)};
}

inline bool weighted_convolution_reduction_check(std::size_t m, const BernoulliTable& bern) {
  const auto [lhs, rhs] = weighted_convolution_reduction_sides(m, bern);
  return lhs == rhs;
}

// Dilcher's quadratic Bernoulli convolution identity for even n >= 4:
//   (n+2) sum_{k=2}^{n-2} B_k B_{n-k}
//     = 2 sum_{k=2}^{n-2} C(n+2,k) B_k B_{n-k} + n(n+1) B_n
inline bool dilcher_identity_check(std::size_t n, const BernoulliTable& bern) {
  if (n < 4 || n % 2 != 0)
    throw std::domain_error("dilcher_identity_check: n must be even and >= 4");
  Rational plain = 0, weighted = 0;
  for (std::size_t k = 2; k <= n - 2; ++k) {
    plain += bern.at(k) * bern.at(n - k);
    weighted += Rational(binomial(n + 2, k)) * bern.at(k) * bern.at(n - k);
  }
  return Rational(n + 2) * plain == Rational(2) * weighted + Rational(Int(n) * Int(n + 1)) * bern.at(n);
}

}  // namespace hnc
