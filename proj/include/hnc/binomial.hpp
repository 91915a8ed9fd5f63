#pragma once

#include "hnc/rational.hpp"

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace hnc {

inline constexpr std::size_t kBinomialRowCap = 256;

// Pascal's triangle of exact binomial coefficients. Rows are built eagerly in
// the constructor; a constructed cache is immutable and safe to share across
// threads.
class BinomialCache {
 public:
  explicit BinomialCache(std::size_t max_row = kBinomialRowCap) {
    rows_.reserve(max_row + 1);
    for (std::size_t n = 0; n <= max_row; ++n) {
      std::vector<Int> row(n + 1, Int(1));
      for (std::size_t k = 1; k < n; ++k) row[k] = rows_[n - 1][k - 1] + rows_[n - 1][k];
      rows_.push_back(std::move(row));
    }
  }

  std::size_t max_row() const { return rows_.size() - 1; }

  // C(n, k); k > n is a contract violation rather than zero.
  const Int& operator()(std::size_t n, std::size_t k) const {
    if (n >= rows_.size()) throw std::domain_error("BinomialCache: row beyond cache");
    if (k > n) throw std::domain_error("binomial: k > n");
    return rows_[n][k];
  }

 private:
  std::vector<std::vector<Int>> rows_;
};

inline Int binomial(std::size_t n, std::size_t k) {
  if (k > n) throw std::domain_error("binomial: k > n");
  if (n <= kBinomialRowCap) {
    static const BinomialCache cache;
    return cache(n, k);
  }
  // beyond the memoized triangle: multiplicative form, exact at every step
  Int c = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    c *= Int(n - k + i);
    c /= Int(i);
  }
  return c;
}

}  // namespace hnc
