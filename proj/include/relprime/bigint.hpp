// Exact integer type and the two combinatorial primitives every count is
// built from: powers of two and binomial coefficients.
#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace relprime {

using BigInt = boost::multiprecision::cpp_int;

/// Exact 2^e.
inline BigInt pow2(std::uint64_t e) {
  BigInt r = 1;
  r <<= static_cast<unsigned>(e);
  return r;
}

/// C(n, k), with C(n, k) = 0 whenever n < k or n < 0.
inline BigInt binom(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || n < k) return 0;
  const std::int64_t kk = (k > n - k) ? n - k : k;
  BigInt r = 1;
  for (std::int64_t i = 1; i <= kk; ++i) {
    r *= n - kk + i;
    r /= i;  // exact: r is C(n-kk+i, i) after this step
  }
  return r;
}

inline std::string to_decimal(const BigInt& v) { return v.str(); }

}  // namespace relprime
