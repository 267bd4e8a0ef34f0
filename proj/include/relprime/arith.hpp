// Sieved Möbius and Mertens tables plus small divisor/gcd helpers.
#pragma once

#include <cstdint>
#include <limits>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace relprime {

/// μ(1..limit), built with a linear sieve. Immutable after construction.
class MobiusTable {
 public:
  explicit MobiusTable(std::int64_t limit) : limit_(limit) {
    if (limit < 1) throw std::invalid_argument("MobiusTable: limit must be >= 1");
    if (limit > std::numeric_limits<std::int32_t>::max())
      throw std::invalid_argument("MobiusTable: limit too large");
    const auto n = static_cast<std::size_t>(limit);
    values_.assign(n + 1, 0);
    std::vector<bool> composite(n + 1, false);
    std::vector<std::uint32_t> primes;
    values_[1] = 1;
    for (std::size_t i = 2; i <= n; ++i) {
      if (!composite[i]) {
        primes.push_back(static_cast<std::uint32_t>(i));
        values_[i] = -1;
      }
      for (const std::uint32_t p : primes) {
        const std::size_t ip = i * p;
        if (ip > n) break;
        composite[ip] = true;
        if (i % p == 0) {
          values_[ip] = 0;  // p^2 | ip
          break;
        }
        values_[ip] = static_cast<std::int8_t>(-values_[i]);
      }
    }
  }

  std::int64_t limit() const noexcept { return limit_; }

  int operator[](std::int64_t d) const noexcept { return values_[static_cast<std::size_t>(d)]; }

  int at(std::int64_t d) const {
    if (d < 1 || d > limit_)
      throw std::out_of_range("mobius: " + std::to_string(d) + " outside table [1, " +
                              std::to_string(limit_) + "]");
    return (*this)[d];
  }

  void require(std::int64_t n) const {
    if (n > limit_)
      throw std::out_of_range("mobius table limit " + std::to_string(limit_) +
                              " does not cover " + std::to_string(n));
  }

 private:
  std::int64_t limit_;
  std::vector<std::int8_t> values_;
};

/// Prefix sums M(0..limit) of a MobiusTable.
class MertensTable {
 public:
  explicit MertensTable(const MobiusTable& mu) : limit_(mu.limit()) {
    prefix_.resize(static_cast<std::size_t>(limit_) + 1);
    prefix_[0] = 0;
    for (std::int64_t n = 1; n <= limit_; ++n)
      prefix_[static_cast<std::size_t>(n)] = prefix_[static_cast<std::size_t>(n - 1)] + mu[n];
  }

  std::int64_t limit() const noexcept { return limit_; }

  std::int64_t operator[](std::int64_t n) const noexcept {
    return prefix_[static_cast<std::size_t>(n)];
  }

  std::int64_t at(std::int64_t n) const {
    if (n < 0 || n > limit_)
      throw std::out_of_range("mertens: " + std::to_string(n) + " outside table [0, " +
                              std::to_string(limit_) + "]");
    return (*this)[n];
  }

 private:
  std::int64_t limit_;
  std::vector<std::int32_t> prefix_;
};

inline std::int64_t mertens(const MertensTable& table, std::int64_t n) { return table.at(n); }

/// Both tables sized to the same limit.
struct SieveTables {
  MobiusTable mobius;
  MertensTable mertens;

  explicit SieveTables(std::int64_t limit) : mobius(limit), mertens(mobius) {}

  std::int64_t limit() const noexcept { return mobius.limit(); }
};

/// Divisors of n in ascending order.
inline std::vector<std::int64_t> divisors(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("divisors: n must be >= 1");
  std::vector<std::int64_t> low, high;
  for (std::int64_t d = 1; d <= n / d; ++d) {
    if (n % d != 0) continue;
    low.push_back(d);
    if (d != n / d) high.push_back(n / d);
  }
  low.insert(low.end(), high.rbegin(), high.rend());
  return low;
}

inline std::int64_t gcd_all(std::span<const std::int64_t> xs) {
  if (xs.empty()) throw std::invalid_argument("gcd_all: empty list");
  std::int64_t g = 0;
  for (const std::int64_t x : xs) {
    if (x < 1) throw std::invalid_argument("gcd_all: entries must be positive");
    g = std::gcd(g, x);
  }
  return g;
}

}  // namespace relprime
