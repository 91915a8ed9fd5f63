// Command-line front end: batch verification sweeps, Bernoulli printing,
// single-oracle evaluation and the exact-identity suites.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error.

#include "hnc/verifier.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::pair<std::uint64_t, std::uint64_t> parse_prime_range(const std::string& s) {
  const auto colon = s.find(':');
  if (colon == std::string::npos) throw UsageError("--primes expects LO:HI, got '" + s + "'");
  try {
    const std::uint64_t lo = std::stoull(s.substr(0, colon));
    const std::uint64_t hi = std::stoull(s.substr(colon + 1));
    return {lo, hi};
  } catch (const std::exception&) {
    throw UsageError("--primes expects LO:HI with integer bounds, got '" + s + "'");
  }
}

std::vector<std::string> split_ids(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

hnc::OutputFormat parse_format(const std::string& s) {
  if (s == "text") return hnc::OutputFormat::kText;
  if (s == "json") return hnc::OutputFormat::kJson;
  if (s == "csv") return hnc::OutputFormat::kCsv;
  throw UsageError("--format must be text, json or csv");
}

int cmd_verify(const std::string& primes, const std::string& identities, int m_max,
               const std::string& format, const std::string& out, int workers) {
  hnc::SweepConfig cfg;
  std::tie(cfg.prime_lo, cfg.prime_hi) = parse_prime_range(primes);
  cfg.identities = split_ids(identities);
  cfg.m_max = m_max;
  cfg.workers = workers;
  cfg.format = parse_format(format);
  cfg.out_path = out;
  const hnc::VerificationReport report = hnc::run(cfg);
  hnc::emit(report, cfg.format, cfg.out_path);
  return report.failures() == 0 ? 0 : 1;
}

int cmd_bernoulli(int max_index, const std::string& mod) {
  if (max_index < 0) throw UsageError("--max must be >= 0");
  const auto top = static_cast<std::size_t>(max_index);
  if (mod.empty()) {
    const hnc::BernoulliTable table(top);
    for (std::size_t n = 0; n <= top; ++n)
      std::cout << "B_" << n << " = " << hnc::to_fraction_string(table.at(n)) << "\n";
    return 0;
  }
  const auto colon = mod.find(':');
  const std::uint64_t p = std::stoull(colon == std::string::npos ? mod : mod.substr(0, colon));
  const int e = colon == std::string::npos ? 1 : std::stoi(mod.substr(colon + 1));
  const hnc::ModularBernoulliTable table(hnc::make_ring(p, e), top);
  for (std::size_t n = 0; n <= top; ++n)
    std::cout << "B_" << n << " = " << table.at(n).str() << "\n";
  return 0;
}

int cmd_oracle(std::uint64_t p, int e, std::int64_t m, int n) {
  const hnc::HarmonicTable table(hnc::make_ring(p, e));
  std::cout << hnc::sum_pow_harmonic(table, m, n).str() << "\n";
  return 0;
}

int cmd_exact_identities(int m_max) {
  const auto lines = hnc::run_exact_identity_suite(m_max);
  std::size_t failed = 0;
  for (const auto& line : lines) {
    std::cout << "[" << hnc::to_string(line.status) << "] " << line.name;
    if (!line.detail.empty()) std::cout << ": " << line.detail;
    std::cout << "\n";
    if (line.status == hnc::Status::kFail) ++failed;
  }
  std::cout << lines.size() << " checks, " << failed << " failed\n";
  return failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Batch verifier for harmonic-number congruences modulo prime powers"};
  app.require_subcommand(1);

  std::string primes = "5:199", identities = "all", format = "text", out;
  int m_max = 12, workers = 1;
  auto* verify = app.add_subcommand("verify", "sweep the identity catalog over a prime range");
  verify->add_option("--primes", primes, "prime range LO:HI (default 5:199)");
  verify->add_option("--identities", identities, "all or comma-separated identity ids");
  verify->add_option("--m-max", m_max, "cap on the exponent parameter m (default 12)");
  verify->add_option("--format", format, "text | json | csv");
  verify->add_option("--out", out, "output path (default stdout)");
  verify->add_option("--workers", workers, "worker thread count (default 1)");

  int bern_max = 0;
  std::string bern_mod;
  auto* bernoulli = app.add_subcommand("bernoulli", "print B_0..B_M exactly or reduced mod p^e");
  bernoulli->add_option("--max", bern_max, "largest index M")->required();
  bernoulli->add_option("--mod", bern_mod, "reduce mod P or P:E");

  std::uint64_t oracle_p = 0;
  int oracle_e = 1, oracle_n = 1;
  std::int64_t oracle_m = 0;
  auto* oracle = app.add_subcommand("oracle", "print one brute-force sum k^m H_k^n residue");
  oracle->add_option("--p", oracle_p, "prime > 3")->required();
  oracle->add_option("--e", oracle_e, "ring exponent 1..3")->required();
  oracle->add_option("--m", oracle_m, "power of k (may be negative)")->required();
  oracle->add_option("--n", oracle_n, "power of H_k (0..3)")->required();

  int exact_m_max = 41;
  auto* exact = app.add_subcommand("exact-identities", "run the exact rational identity suites");
  exact->add_option("--m-max", exact_m_max, "cap on identity parameters (default 41)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (verify->parsed()) return cmd_verify(primes, identities, m_max, format, out, workers);
    if (bernoulli->parsed()) return cmd_bernoulli(bern_max, bern_mod);
    if (oracle->parsed()) return cmd_oracle(oracle_p, oracle_e, oracle_m, oracle_n);
    if (exact->parsed()) return cmd_exact_identities(exact_m_max);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
