#pragma once

#include "hnc/catalog.hpp"
#include "hnc/exact_identities.hpp"
#include "hnc/primes.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <tuple>
#include <vector>

namespace hnc {

enum class Status { kPass, kFail, kSkip, kInfo };

inline const char* to_string(Status s) {
  switch (s) {
    case Status::kPass: return "pass";
    case Status::kFail: return "fail";
    case Status::kSkip: return "skip";
    case Status::kInfo: return "info";
  }
  return "?";
}

enum class OutputFormat { kText, kJson, kCsv };

struct SweepConfig {
  std::uint64_t prime_lo = 5;
  std::uint64_t prime_hi = 199;
  std::vector<std::string> identities;  // empty or {"all"} selects everything
  int m_max = 12;
  int workers = 1;
  OutputFormat format = OutputFormat::kText;
  std::string out_path;  // empty or "-" means stdout
};

struct VerificationRecord {
  std::string id;
  std::uint64_t p = 0;
  std::optional<int> m;
  std::string lhs, rhs;  // canonical residue strings; empty on skip
  Status status = Status::kSkip;
  std::string reason;  // violated constraint, mismatch hint or probe note
  std::chrono::nanoseconds elapsed{0};
};

struct StatusCounts {
  std::size_t pass = 0, fail = 0, skip = 0, info = 0;

  void add(Status s) {
    switch (s) {
      case Status::kPass: ++pass; break;
      case Status::kFail: ++fail; break;
      case Status::kSkip: ++skip; break;
      case Status::kInfo: ++info; break;
    }
  }
};

struct VerificationReport {
  std::vector<VerificationRecord> records;  // sorted by (id, p, m)
  std::map<std::string, StatusCounts> summary;
  std::chrono::nanoseconds total_elapsed{0};

  std::size_t failures() const {
    std::size_t n = 0;
    for (const auto& [id, c] : summary) n += c.fail;
    return n;
  }
};

namespace detail {

inline void parallel_for(std::size_t count, int workers, const std::function<void(std::size_t)>& fn) {
  if (workers <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr first_error;
  std::mutex error_mutex;
  auto body = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= count) return;
      try {
        fn(i);
      } catch (...) {
        std::scoped_lock lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  const auto n = std::min<std::size_t>(static_cast<std::size_t>(workers), count);
  pool.reserve(n);
  for (std::size_t i = 0; i < n; ++i) pool.emplace_back(body);
  for (auto& t : pool) t.join();
  if (first_error) std::rethrow_exception(first_error);
}

inline std::vector<const IdentityDescriptor*> select_descriptors(const std::vector<std::string>& ids) {
  std::vector<const IdentityDescriptor*> out;
  if (ids.empty() || (ids.size() == 1 && ids[0] == "all")) {
    for (const auto& d : catalog()) out.push_back(&d);
  } else {
    for (const auto& id : ids) out.push_back(&find_descriptor(id));
  }
  std::sort(out.begin(), out.end(),
            [](const IdentityDescriptor* a, const IdentityDescriptor* b) { return a->id < b->id; });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// Records for one (descriptor, prime) work item.
inline std::vector<VerificationRecord> run_item(const IdentityDescriptor& d, const PrimeContext& ctx,
                                                int m_max) {
  std::vector<VerificationRecord> out;
  if (ctx.p() < d.min_p) {
    out.push_back({d.id, ctx.p(), std::nullopt, "", "", Status::kSkip,
                   "requires p > " + std::to_string(d.min_p - 1)});
    return out;
  }
  const auto ms = d.m_values(ctx.p(), m_max);
  if (ms.empty()) {
    out.push_back({d.id, ctx.p(), std::nullopt, "", "", Status::kSkip, "no admissible m"});
    return out;
  }
  for (const auto& m : ms) {
    VerificationRecord rec;
    rec.id = d.id;
    rec.p = ctx.p();
    rec.m = m;
    const auto t0 = std::chrono::steady_clock::now();
    if (!ctx.integrity_error().empty()) {
      rec.status = Status::kFail;
      rec.reason = ctx.integrity_error();
    } else {
      try {
        const EvalResult r = d.evaluate(ctx, m);
        rec.lhs = r.lhs.str();
        rec.rhs = r.rhs.str();
        rec.status = r.informational ? Status::kInfo : (r.lhs == r.rhs ? Status::kPass : Status::kFail);
        rec.reason = r.note;
      } catch (const std::exception& e) {
        rec.status = Status::kFail;
        rec.reason = e.what();
      }
    }
    rec.elapsed = std::chrono::steady_clock::now() - t0;
    out.push_back(std::move(rec));
  }
  return out;
}

}  // namespace detail

// Sweep every selected identity over every prime in range. Per-prime tables
// are built once and shared read-only; the (identity, prime) work items then
// run independently, so the report is identical for any worker count.
inline VerificationReport run(const SweepConfig& cfg) {
  if (cfg.prime_lo < 5 || cfg.prime_lo > cfg.prime_hi || cfg.prime_hi > kMaxPrime)
    throw std::invalid_argument("run: prime range must satisfy 5 <= lo <= hi <= 1000000");
  if (cfg.m_max < 1 || cfg.m_max > static_cast<int>(kBernoulliIndexCap) - 2)
    throw std::invalid_argument("run: m_max must be in 1.." + std::to_string(kBernoulliIndexCap - 2));
  if (cfg.workers < 1) throw std::invalid_argument("run: workers must be positive");

  const auto t0 = std::chrono::steady_clock::now();
  const auto primes = primes_in(cfg.prime_lo, cfg.prime_hi);
  const auto descriptors = detail::select_descriptors(cfg.identities);

  ContextNeeds needs;
  for (const auto* d : descriptors) needs |= d->needs;

  const ConstantCache constants(static_cast<std::size_t>(cfg.m_max) + 1);
  std::optional<BernoulliTable> exact_crosscheck;
  if (needs.modbern && !primes.empty() && primes.front() <= kExactCrosscheckMaxPrime)
    exact_crosscheck.emplace(kExactCrosscheckMaxPrime - 2);

  std::vector<std::unique_ptr<PrimeContext>> contexts(primes.size());
  detail::parallel_for(primes.size(), cfg.workers, [&](std::size_t i) {
    contexts[i] = std::make_unique<PrimeContext>(primes[i], cfg.m_max, needs, constants,
                                                 exact_crosscheck ? &*exact_crosscheck : nullptr);
  });

  struct Item {
    const IdentityDescriptor* desc;
    std::size_t prime_index;
  };
  std::vector<Item> items;
  items.reserve(descriptors.size() * primes.size());
  for (const auto* d : descriptors)
    for (std::size_t i = 0; i < primes.size(); ++i) items.push_back({d, i});

  std::vector<std::vector<VerificationRecord>> slots(items.size());
  detail::parallel_for(items.size(), cfg.workers, [&](std::size_t i) {
    slots[i] = detail::run_item(*items[i].desc, *contexts[items[i].prime_index], cfg.m_max);
  });

  VerificationReport report;
  for (auto& slot : slots)
    for (auto& rec : slot) report.records.push_back(std::move(rec));
  std::sort(report.records.begin(), report.records.end(),
            [](const VerificationRecord& a, const VerificationRecord& b) {
              return std::make_tuple(std::cref(a.id), a.p, a.m.value_or(-1)) <
                     std::make_tuple(std::cref(b.id), b.p, b.m.value_or(-1));
            });
  for (const auto& rec : report.records) report.summary[rec.id].add(rec.status);
  report.total_elapsed = std::chrono::steady_clock::now() - t0;
  return report;
}

namespace detail {

inline std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace detail

inline std::string render(const VerificationReport& report, OutputFormat format) {
  std::ostringstream os;
  switch (format) {
    case OutputFormat::kJson: {
      for (const auto& r : report.records) {
        nlohmann::ordered_json j;
        j["id"] = r.id;
        j["p"] = r.p;
        if (r.m) j["m"] = *r.m; else j["m"] = nullptr;
        j["lhs"] = r.lhs;
        j["rhs"] = r.rhs;
        j["status"] = to_string(r.status);
        if (r.reason.empty()) j["reason"] = nullptr; else j["reason"] = r.reason;
        os << j.dump() << '\n';
      }
      break;
    }
    case OutputFormat::kCsv: {
      os << "id,p,m,lhs,rhs,status,reason\n";
      for (const auto& r : report.records) {
        os << detail::csv_escape(r.id) << ',' << r.p << ',';
        if (r.m) os << *r.m;
        os << ',' << detail::csv_escape(r.lhs) << ',' << detail::csv_escape(r.rhs) << ','
           << to_string(r.status) << ',' << detail::csv_escape(r.reason) << '\n';
      }
      break;
    }
    case OutputFormat::kText: {
      std::size_t width = 8;
      for (const auto& [id, c] : report.summary) width = std::max(width, id.size());
      os << std::left << std::setw(static_cast<int>(width + 2)) << "identity" << std::right
         << std::setw(8) << "pass" << std::setw(8) << "fail" << std::setw(8) << "skip"
         << std::setw(8) << "info" << '\n';
      StatusCounts total;
      for (const auto& [id, c] : report.summary) {
        os << std::left << std::setw(static_cast<int>(width + 2)) << id << std::right
           << std::setw(8) << c.pass << std::setw(8) << c.fail << std::setw(8) << c.skip
           << std::setw(8) << c.info << '\n';
        total.pass += c.pass;
        total.fail += c.fail;
        total.skip += c.skip;
        total.info += c.info;
      }
      os << std::left << std::setw(static_cast<int>(width + 2)) << "total" << std::right
         << std::setw(8) << total.pass << std::setw(8) << total.fail << std::setw(8) << total.skip
         << std::setw(8) << total.info << '\n';
      for (const auto& r : report.records) {
        if (r.status != Status::kFail) continue;
        os << "FAIL " << r.id << " p=" << r.p;
        if (r.m) os << " m=" << *r.m;
        os << " lhs=[" << r.lhs << "] rhs=[" << r.rhs << "]";
        if (!r.reason.empty()) os << " (" << r.reason << ")";
        os << '\n';
      }
      os << "elapsed: "
         << std::chrono::duration_cast<std::chrono::milliseconds>(report.total_elapsed).count()
         << " ms\n";
      break;
    }
  }
  return os.str();
}

inline void emit(const VerificationReport& report, OutputFormat format, std::ostream& os) {
  os << render(report, format);
  os.flush();
  if (!os) throw std::runtime_error("emit: write failed");
}

inline void emit(const VerificationReport& report, OutputFormat format, const std::string& path) {
  if (path.empty() || path == "-") {
    emit(report, format, std::cout);
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("emit: cannot open " + path);
  emit(report, format, out);
}

// ---------------------------------------------------------------------------
// Exact (non-modular) identity suite

struct ExactCheckLine {
  std::string name;
  Status status = Status::kPass;
  std::string detail;
};

// Runs the exact-rational identity checks: the Bernoulli closed form of
// sum k^m H_k against brute force, the cubic- and quadratic-convolution
// identities, Dilcher's identity and the von Staudt-Clausen denominators.
// The excluded m = 3 cases are probed and reported informationally.
inline std::vector<ExactCheckLine> run_exact_identity_suite(int m_max) {
  if (m_max < 1 || m_max > static_cast<int>(kBernoulliIndexCap) - 2)
    throw std::invalid_argument("exact suite: m_max out of range");
  std::vector<ExactCheckLine> lines;
  const auto cap = static_cast<std::size_t>(m_max);
  const BernoulliTable bern(std::max<std::size_t>(std::min<std::size_t>(cap, 41) + 1, 62));

  for (std::size_t m = 1; m <= std::min<std::size_t>(cap, 8); ++m) {
    bool ok = true;
    for (std::uint64_t p = 2; p <= 13; ++p)
      ok = ok && power_harmonic_sum_closed_form(m, p, bern) == sum_pow_harmonic_exact(m, 1, p);
    lines.push_back({"power-harmonic closed form, m=" + std::to_string(m) + ", p=2..13",
                     ok ? Status::kPass : Status::kFail, ""});
  }

  for (std::size_t m = 1; m <= std::min<std::size_t>(cap, 41); m += 2) {
    if (m == 3) {
      const auto [lhs, rhs] = triple_convolution_identity_sides(3, bern);
      lines.push_back({"triple-convolution identity, m=3", Status::kInfo,
                       std::string(lhs == rhs ? "holds" : "does not hold") + " at the excluded m=3: lhs=" +
                           to_fraction_string(lhs) + " rhs=" + to_fraction_string(rhs)});
      continue;
    }
    lines.push_back({"triple-convolution identity, m=" + std::to_string(m),
                     triple_convolution_identity_check(m, bern) ? Status::kPass : Status::kFail, ""});
  }

  for (std::size_t m = 1; m <= std::min<std::size_t>(cap, 21); m += 2) {
    const auto [lhs, rhs] = weighted_convolution_reduction_sides(m, bern);
    if (m == 3) {
      lines.push_back({"weighted-convolution reduction, m=3", Status::kInfo,
                       std::string(lhs == rhs ? "holds" : "does not hold") + " at the excluded m=3: lhs=" +
                           to_fraction_string(lhs) + " rhs=" + to_fraction_string(rhs)});
      continue;
    }
    lines.push_back({"weighted-convolution reduction, m=" + std::to_string(m),
                     lhs == rhs ? Status::kPass : Status::kFail, ""});
  }

  for (std::size_t n = 4; n <= std::min<std::size_t>(cap, 40); n += 2)
    lines.push_back({"Dilcher identity, n=" + std::to_string(n),
                     dilcher_identity_check(n, bern) ? Status::kPass : Status::kFail, ""});

  for (std::size_t k = 1; k <= std::min<std::size_t>(cap, 30); ++k) {
    const bool ok = denominator(bern.at(2 * k)) == von_staudt_clausen_denominator(2 * k);
    lines.push_back({"von Staudt-Clausen denominator, B_" + std::to_string(2 * k),
                     ok ? Status::kPass : Status::kFail, ""});
  }

  return lines;
}

}  // namespace hnc
