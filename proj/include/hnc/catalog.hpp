#pragma once

#include "hnc/bernoulli.hpp"
#include "hnc/closed_forms.hpp"
#include "hnc/harmonic.hpp"
#include "hnc/modring.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hnc {

// Largest prime for which the in-ring Bernoulli route is still cross-checked
// against the exact-reduce route during a sweep.
inline constexpr std::uint64_t kExactCrosscheckMaxPrime = 97;

struct ContextNeeds {
  bool harm3 = false;
  bool modbern = false;
  bool bp3 = false;
  bool h2_over_km = false;
  bool cubic_chain = false;

  ContextNeeds& operator|=(const ContextNeeds& o) {
    harm3 |= o.harm3;
    modbern |= o.modbern;
    bp3 |= o.bp3;
    h2_over_km |= o.h2_over_km;
    cubic_chain |= o.cubic_chain;
    return *this;
  }
};

// Shared read-only state for one prime: rings, harmonic tables, the modular
// Bernoulli table, B_{p-3}, and the memoized mod-p values of sum H_k^2/k^m.
// Construction happens before evaluations fan out; failures surface through
// integrity_error() so they can be reported instead of thrown mid-sweep.
class PrimeContext {
 public:
  PrimeContext(std::uint64_t p, int m_max, const ContextNeeds& needs, const ConstantCache& constants,
               const BernoulliTable* exact_crosscheck)
      : p_(p),
        ring1_(make_ring(p, 1)),
        ring2_(make_ring(p, 2)),
        harm1_(ring1_),
        harm2_(ring2_),
        constants_(&constants) {
    try {
      if (needs.harm3) {
        ring3_ = make_ring(p, 3);
        harm3_.emplace(*ring3_);
      }
      if (needs.modbern) {
        modbern2_.emplace(ring2_, p - 2);
        if (exact_crosscheck != nullptr && p <= kExactCrosscheckMaxPrime) {
          const std::size_t top = std::min<std::size_t>(p - 2, exact_crosscheck->max_index());
          for (std::size_t i = 0; i <= top; ++i) {
            if (embed(exact_crosscheck->at(i), ring2_) != modbern2_->at(i)) {
              integrity_error_ = "modular Bernoulli table disagrees with exact reduction at index " +
                                 std::to_string(i);
              break;
            }
          }
        }
      }
      if (needs.bp3) bp3_ = p == 5 ? embed(Rational(1, 6), ring2_) : bp3_mod_p2(p);
      if (needs.h2_over_km) {
        const std::size_t top = std::min<std::size_t>(p - 2, static_cast<std::size_t>(m_max));
        h2_over_km_.reserve(top);
        for (std::size_t m = 1; m <= top; ++m)
          h2_over_km_.push_back(sum_pow_harmonic(harm1_, -static_cast<std::int64_t>(m), 2));
      }
      if (needs.cubic_chain)
        chain_.emplace(cubic_chain(harm2_, std::min<std::size_t>(p - 3, static_cast<std::size_t>(m_max))));
    } catch (const std::exception& e) {
      if (integrity_error_.empty()) integrity_error_ = e.what();
    }
  }

  std::uint64_t p() const { return p_; }
  const PrimePowerRing& ring1() const { return ring1_; }
  const PrimePowerRing& ring2() const { return ring2_; }
  const PrimePowerRing& ring3() const { return require(ring3_, "ring3"); }
  const HarmonicTable& harm1() const { return harm1_; }
  const HarmonicTable& harm2() const { return harm2_; }
  const HarmonicTable& harm3() const { return require(harm3_, "harm3"); }
  const ModularBernoulliTable& modbern2() const { return require(modbern2_, "modbern2"); }
  const Residue& bp3() const { return require(bp3_, "bp3"); }
  const CubicChain& chain() const { return require(chain_, "cubic chain"); }
  const ConstantCache& constants() const { return *constants_; }

  // sum_{k<p} H_k^2 / k^m mod p, memoized for m = 1..min(p-2, m_max)
  const Residue& h2_over_km(std::size_t m) const {
    if (m == 0 || m > h2_over_km_.size())
      throw std::logic_error("PrimeContext: h2_over_km not memoized for this m");
    return h2_over_km_[m - 1];
  }

  const std::string& integrity_error() const { return integrity_error_; }

 private:
  template <typename T>
  static const T& require(const std::optional<T>& opt, const char* what) {
    if (!opt) throw std::logic_error(std::string("PrimeContext: ") + what + " was not built");
    return *opt;
  }

  std::uint64_t p_;
  PrimePowerRing ring1_, ring2_;
  std::optional<PrimePowerRing> ring3_;
  HarmonicTable harm1_, harm2_;
  std::optional<HarmonicTable> harm3_;
  std::optional<ModularBernoulliTable> modbern2_;
  std::optional<Residue> bp3_;
  std::optional<CubicChain> chain_;
  std::vector<Residue> h2_over_km_;
  const ConstantCache* constants_;
  std::string integrity_error_;
};

struct EvalResult {
  Residue lhs, rhs;
  bool informational = false;
  std::string note;
};

// One catalog entry: the congruence it asserts, its admissible (p, m) domain,
// the tables it needs and the evaluation of both sides at one (p, m).
struct IdentityDescriptor {
  std::string id;
  int ring_exponent;     // 1, 2 or 3
  std::uint64_t min_p;   // inclusive bound; 4 encodes "p > 3", 6 "p > 5", 8 "p > 7"
  std::string statement;
  ContextNeeds needs;
  std::function<std::vector<std::optional<int>>(std::uint64_t p, int m_max)> m_values;
  std::function<EvalResult(const PrimeContext&, std::optional<int> m)> evaluate;
};

namespace detail {

inline std::vector<std::optional<int>> one_record(std::uint64_t, int) { return {std::nullopt}; }

inline std::vector<std::optional<int>> range_m(std::uint64_t p, int m_max, int lo, int p_slack,
                                               int parity /* -1 any, 0 even, 1 odd */,
                                               int excluded = -1) {
  const auto hi = static_cast<std::int64_t>(
      std::min<std::uint64_t>(p - p_slack, static_cast<std::uint64_t>(m_max)));
  std::vector<std::optional<int>> out;
  for (std::int64_t m = lo; m <= hi; ++m) {
    if (parity >= 0 && m % 2 != parity) continue;
    if (m == excluded) continue;
    out.push_back(static_cast<int>(m));
  }
  return out;
}

inline int require_m(const std::optional<int>& m) {
  if (!m) throw std::logic_error("catalog: descriptor expected an m parameter");
  return *m;
}

}  // namespace detail

// The full identity list. Statements use plain notation: sums run over
// k = 1..p-1 unless written otherwise, H denotes the harmonic numbers,
// H2 their second-order variant, B the Bernoulli numbers.
inline const std::vector<IdentityDescriptor>& catalog() {
  static const std::vector<IdentityDescriptor> entries = [] {
    using detail::one_record;
    using detail::range_m;
    using detail::require_m;
    std::vector<IdentityDescriptor> v;

    v.push_back({"WOLST_H1", 2, 4, "H_{p-1} == 0 (mod p^2)", {}, one_record,
                 [](const PrimeContext& c, std::optional<int>) {
                   return EvalResult{c.harm2().h1(c.p() - 1), c.ring2().res(0)};
                 }});

    v.push_back({"WOLST_H2", 1, 4, "H2_{p-1} == 0 (mod p)", {}, one_record,
                 [](const PrimeContext& c, std::optional<int>) {
                   return EvalResult{c.harm1().h2(c.p() - 1), c.ring1().res(0)};
                 }});

    v.push_back({"H2_LIFT", 2, 4, "H2_{p-1} == (2/3) p B_{p-3} (mod p^2)",
                 {.bp3 = true}, one_record,
                 [](const PrimeContext& c, std::optional<int>) {
                   const Residue rhs = embed(Rational(2, 3), c.ring2()) *
                                       c.ring2().res(static_cast<std::int64_t>(c.p())) * c.bp3();
                   return EvalResult{c.harm2().h2(c.p() - 1), rhs};
                 }});

    v.push_back({"REFLECT_H", 1, 4, "H_{p-k} == H_{k-1} (mod p)", {},
                 [](std::uint64_t p, int m_max) { return range_m(p, m_max, 1, 1, -1); },
                 [](const PrimeContext& c, std::optional<int> m) {
                   const auto k = static_cast<std::size_t>(require_m(m));
                   return EvalResult{c.harm1().h1(c.p() - k), c.harm1().h1(k - 1)};
                 }});

    v.push_back({"REFLECT_HN", 1, 4, "H2_{p-k} == -H2_{k-1} (mod p)", {},
                 [](std::uint64_t p, int m_max) { return range_m(p, m_max, 1, 1, -1); },
                 [](const PrimeContext& c, std::optional<int> m) {
                   const auto k = static_cast<std::size_t>(require_m(m));
                   return EvalResult{c.harm1().h2(c.p() - k), -c.harm1().h2(k - 1)};
                 }});

    v.push_back({"SUN_BINOM", 3, 4,
                 "(-1)^k C(p-1,k) == 1 - p H_k + (p^2/2)(H_k^2 - H2_k) (mod p^3)",
                 {.harm3 = true},
                 [](std::uint64_t p, int m_max) { return range_m(p, m_max, 1, 1, -1); },
                 [](const PrimeContext& c, std::optional<int> m) {
                   const auto [lhs, rhs] =
                       sun_binomial_sides(c.harm3(), static_cast<std::size_t>(require_m(m)));
                   return EvalResult{lhs, rhs};
                 }});

    v.push_back({"SUM_H1", 2, 4, "sum H_k == 1 - p (mod p^2)", {}, one_record,
                 [](const PrimeContext& c, std::optional<int>) {
                   return EvalResult{sum_pow_harmonic(c.harm2(), 0, 1),
                                     c.ring2().res(1 - static_cast<std::int64_t>(c.p()))};
                 }});

    v.push_back({"SUM_H2", 2, 4, "sum H_k^2 == 2p - 2 (mod p^2)", {}, one_record,
                 [](const PrimeContext& c, std::optional<int>) {
                   return EvalResult{sum_pow_harmonic(c.harm2(), 0, 2),
                                     c.ring2().res(2 * static_cast<std::int64_t>(c.p()) - 2)};
                 }});

    v.push_back({"SUM_H2_NEG2X", 2, 4, "sum H_k^2 == -2 sum H_k (mod p^2)", {}, one_record,
                 [](const PrimeContext& c, std::optional<int>) {
                   return EvalResult{sum_pow_harmonic(c.harm2(), 0, 2),
                                     -(c.ring2().res(2) * sum_pow_harmonic(c.harm2(), 0, 1))};
                 }});

    v.push_back({"T31", 2, 4, "sum k^m H_k == B_m - p S(m)/(m+1) (mod p^2)",
                 {.modbern = true},
                 [](std::uint64_t p, int m_max) { return range_m(p, m_max, 1, 2, -1); },
                 [](const PrimeContext& c, std::optional<int> m) {
                   const auto mm = static_cast<std::size_t>(require_m(m));
                   return EvalResult{sum_pow_harmonic(c.harm2(), require_m(m), 1),
                                     rhs_t31(mm, c.modbern2())};
                 }});

    v.push_back({"T3_GENERAL", 2, 4,
                 "sum k^m H_k^2 == 2p/(m+1) sum_r C(m+1,r)/(m+1-r) B_r S(m-r) "
                 "+ p/(m+1) sum_r C(m+1,r) B_r B_{m-1-r} - 2 S(m)/(m+1) - m B_{m-1}/2 (mod p^2)",
                 {},
                 [](std::uint64_t p, int m_max) { return range_m(p, m_max, 1, 2, -1); },
                 [](const PrimeContext& c, std::optional<int> m) {
                   const auto mm = static_cast<std::size_t>(require_m(m));
                   return EvalResult{sum_pow_harmonic(c.harm2(), require_m(m), 2),
                                     rhs_t3_general(mm, c.p(), c.ring2(), c.constants())};
                 }});

    v.push_back({"T32_M2", 2, 4, "sum k^2 H_k^2 == 79p/108 - 4/9 (mod p^2)", {.modbern = true},
                 one_record,
                 [](const PrimeContext& c, std::optional<int>) {
                   return EvalResult{sum_pow_harmonic(c.harm2(), 2, 2),
                                     rhs_t32(2, c.modbern2(), c.constants())};
                 }});

    v.push_back({"T32_M3", 2, 4, "sum k^3 H_k^2 == -59p/144 + 1/6 (mod p^2)", {.modbern = true},
                 one_record,
                 [](const PrimeContext& c, std::optional<int>) {
                   return EvalResult{sum_pow_harmonic(c.harm2(), 3, 2),
                                     rhs_t32(3, c.modbern2(), c.constants())};
                 }});

    v.push_back({"T32_ODD", 2, 4, "sum k^m H_k^2 == B_{m-1} + p mu_m (mod p^2), odd m != 3",
                 {.modbern = true},
                 [](std::uint64_t p, int m_max) { return range_m(p, m_max, 1, 2, 1, 3); },
                 [](const PrimeContext& c, std::optional<int> m) {
                   const auto mm = static_cast<std::size_t>(require_m(m));
                   return EvalResult{sum_pow_harmonic(c.harm2(), require_m(m), 2),
                                     rhs_t32(mm, c.modbern2(), c.constants())};
                 }});

    v.push_back({"T32_EVEN", 2, 4, "sum k^m H_k^2 == nu_m + p lambda_m (mod p^2), even m != 2",
                 {.modbern = true},
                 [](std::uint64_t p, int m_max) { return range_m(p, m_max, 4, 2, 0); },
                 [](const PrimeContext& c, std::optional<int> m) {
                   const auto mm = static_cast<std::size_t>(require_m(m));
                   return EvalResult{sum_pow_harmonic(c.harm2(), require_m(m), 2),
                                     rhs_t32(mm, c.modbern2(), c.constants())};
                 }});

    v.push_back({"C_M1", 2, 4, "sum k H_k^2 == -5p/4 + 1 (mod p^2)", {}, one_record,
                 [](const PrimeContext& c, std::optional<int>) {
                   const Int p(c.p());
                   return EvalResult{sum_pow_harmonic(c.harm2(), 1, 2),
                                     embed(make_rational(-5 * p + 4, 4), c.ring2())};
                 }});

    v.push_back({"C_M4", 2, 6, "sum k^4 H_k^2 == 5743p/27000 - 7/225 (mod p^2)", {}, one_record,
                 [](const PrimeContext& c, std::optional<int>) {
                   const Int p(c.p());
                   return EvalResult{sum_pow_harmonic(c.harm2(), 4, 2),
                                     embed(make_rational(5743 * p - 840, 27000), c.ring2())};
                 }});

    v.push_back({"C_M5", 2, 6, "sum k^5 H_k^2 == -77p/1200 - 1/30 (mod p^2)", {}, one_record,
                 [](const PrimeContext& c, std::optional<int>) {
                   const Int p(c.p());
                   return EvalResult{sum_pow_harmonic(c.harm2(), 5, 2),
                                     embed(make_rational(-77 * p - 40, 1200), c.ring2())};
                 }});

    v.push_back({"C2_MODP", 1, 4, "sum k^m H_k^2 == B_{m-1} (mod p), odd m", {.modbern = true},
                 [](std::uint64_t p, int m_max) { return range_m(p, m_max, 1, 2, 1); },
                 [](const PrimeContext& c, std::optional<int> m) {
                   const auto mm = static_cast<std::size_t>(require_m(m));
                   return EvalResult{sum_pow_harmonic(c.harm1(), require_m(m), 2),
                                     rhs_c2_c3(mm, false, c.modbern2(), c.ring1())};
                 }});

    v.push_back({"C3_MODP", 1, 4, "sum H_k^2 / k^m == B_{p-2-m} (mod p), odd m", {.modbern = true},
                 [](std::uint64_t p, int m_max) { return range_m(p, m_max, 1, 2, 1); },
                 [](const PrimeContext& c, std::optional<int> m) {
                   const auto mm = static_cast<std::size_t>(require_m(m));
                   return EvalResult{sum_pow_harmonic(c.harm1(), -require_m(m), 2),
                                     rhs_c2_c3(mm, true, c.modbern2(), c.ring1())};
                 }});

    v.push_back({"LEMMA3", 1, 4,
                 "sum H_k^2 / k^m == -sum_{j=0}^{p-1-m} B_j B_{p-1-m-j} "
                 "- sum_{j=p-m}^{p-2} B_j B_{2p-2-m-j} (mod p), even m",
                 {.modbern = true},
                 [](std::uint64_t p, int m_max) { return range_m(p, m_max, 2, 2, 0); },
                 [](const PrimeContext& c, std::optional<int> m) {
                   const auto mm = static_cast<std::size_t>(require_m(m));
                   return EvalResult{sum_pow_harmonic(c.harm1(), -require_m(m), 2),
                                     rhs_lemma3(mm, c.modbern2(), c.ring1())};
                 }});

    v.push_back({"C5", 2, 6,
                 "sum k^{p-m} H_k^2 == B_{p-1-m} - p((m-1)/4 sum H_k^2/k^m "
                 "+ 1/4 sum_{r=p-m}^{p-2} B_r B_{2p-2-m-r}) (mod p^2), even m <= p-5",
                 {.modbern = true, .bp3 = true, .h2_over_km = true},
                 [](std::uint64_t p, int m_max) {
                   auto ms = range_m(p, m_max, 2, 5, 0);
                   // informational probe one step past the stated bound
                   if (p >= 7 && p - 3 <= static_cast<std::uint64_t>(m_max))
                     ms.push_back(static_cast<int>(p - 3));
                   return ms;
                 },
                 [](const PrimeContext& c, std::optional<int> m) {
                   const auto mm = static_cast<std::size_t>(require_m(m));
                   const Residue lhs =
                       sum_pow_harmonic(c.harm2(), static_cast<std::int64_t>(c.p() - mm), 2);
                   if (mm == c.p() - 3) {
                     return EvalResult{lhs,
                                       rhs_c5_general(mm, c.modbern2(), c.h2_over_km(mm), c.ring1()),
                                       true, "m=p-3 is outside the stated bound m<=p-5"};
                   }
                   return EvalResult{lhs, rhs_c5_c6_c7(mm, c.modbern2(), c.bp3(),
                                                       c.h2_over_km(mm), c.ring1())};
                 }});

    v.push_back({"C6", 2, 6, "sum k^{p-2} H_k^2 == B_{p-3} (mod p^2)", {.bp3 = true}, one_record,
                 [](const PrimeContext& c, std::optional<int>) {
                   return EvalResult{
                       sum_pow_harmonic(c.harm2(), static_cast<std::int64_t>(c.p()) - 2, 2),
                       c.bp3()};
                 }});

    v.push_back({"C7", 2, 8, "sum k^{p-4} H_k^2 == B_{p-5} (mod p^2)", {.modbern = true},
                 one_record,
                 [](const PrimeContext& c, std::optional<int>) {
                   return EvalResult{
                       sum_pow_harmonic(c.harm2(), static_cast<std::int64_t>(c.p()) - 4, 2),
                       c.modbern2().at(c.p() - 5)};
                 }});

    const char* cubic_statements[4] = {
        "sum H_k^3 == p B_{p-3}/3 - 6p + 6 (mod p^2)",
        "sum k H_k^3 == 27p/8 - p B_{p-3}/6 - 3 (mod p^2)",
        "sum k^2 H_k^3 == -365p/216 + p B_{p-3}/18 + 23/18 (mod p^2)",
        "sum k^3 H_k^3 == 425p/576 - 5/12 (mod p^2)"};
    for (int mi = 0; mi < 4; ++mi) {
      v.push_back({"CUBIC_" + std::to_string(mi), 2, 4, cubic_statements[mi], {.bp3 = true},
                   one_record,
                   [mi](const PrimeContext& c, std::optional<int>) {
                     return EvalResult{sum_pow_harmonic(c.harm2(), mi, 3),
                                       rhs_cubic(mi, c.ring2(), c.bp3())};
                   }});
    }

    v.push_back({"R1_CHAIN", 2, 4,
                 "a_m from the shift recurrence equals sum k^m H_k^3 (mod p^2)",
                 {.cubic_chain = true},
                 [](std::uint64_t p, int m_max) { return range_m(p, m_max, 0, 3, -1); },
                 [](const PrimeContext& c, std::optional<int> m) {
                   const int mm = require_m(m);
                   return EvalResult{sum_pow_harmonic(c.harm2(), mm, 3),
                                     c.chain().at(static_cast<std::size_t>(mm))};
                 }});

    v.push_back({"R2_SHIFT", 2, 4,
                 "sum (k+1)^m H_k^n == sum k^m H_{k-1}^n (mod p^2) for n = 1,2,3", {},
                 [](std::uint64_t, int m_max) {
                   std::vector<std::optional<int>> ms;
                   for (int m = 0; m <= m_max; ++m) ms.push_back(m);
                   return ms;
                 },
                 [](const PrimeContext& c, std::optional<int> m) {
                   const int mm = require_m(m);
                   for (int n = 1; n <= 3; ++n) {
                     auto [lhs, rhs] = shift_sides(c.harm2(), mm, n);
                     if (lhs != rhs)
                       return EvalResult{lhs, rhs, false, "mismatch at n=" + std::to_string(n)};
                     if (n == 3) return EvalResult{lhs, rhs};
                   }
                   throw std::logic_error("unreachable");
                 }});

    v.push_back({"HK_OVER_K", 2, 4, "sum H_k/k == H2_{p-1}/2 (mod p^2)", {}, one_record,
                 [](const PrimeContext& c, std::optional<int>) {
                   return EvalResult{sum_pow_harmonic(c.harm2(), -1, 1),
                                     inv(c.ring2().res(2)) * c.harm2().h2(c.p() - 1)};
                 }});

    v.push_back({"HOFFMAN_TRIPLE", 1, 8,
                 "sum_{1<=i<=j<=k<=p-1} 1/(i j^4 k) == B_{p-3}^2 / 3 (mod p)", {.bp3 = true},
                 one_record,
                 [](const PrimeContext& c, std::optional<int>) {
                   const Residue b =
                       c.ring1().res(static_cast<std::int64_t>(c.bp3().value() % c.p()));
                   return EvalResult{triple_sum_ij4k(c.harm1()), inv(c.ring1().res(3)) * b * b};
                 }});

    v.push_back({"H2K2_ZERO", 1, 6, "sum H_k^2 / k^2 == 0 (mod p)", {}, one_record,
                 [](const PrimeContext& c, std::optional<int>) {
                   return EvalResult{sum_pow_harmonic(c.harm1(), -2, 2), c.ring1().res(0)};
                 }});

    v.push_back({"HK_K5_ZERO", 1, 8, "sum H_k / k^5 == 0 (mod p)", {}, one_record,
                 [](const PrimeContext& c, std::optional<int>) {
                   return EvalResult{sum_pow_harmonic(c.harm1(), -5, 1), c.ring1().res(0)};
                 }});

    return v;
  }();
  return entries;
}

inline const IdentityDescriptor& find_descriptor(const std::string& id) {
  for (const auto& d : catalog())
    if (d.id == id) return d;
  throw std::invalid_argument("unknown identity id: " + id);
}

}  // namespace hnc
