// Closed-form Möbius sums for the number of relatively prime subsets of
// [1,n], [l,m], [1,m1] ∪ [l2,m2] and [l1,m1] ∪ [l2,m2], and for the
// constrained counts where one or two endpoints are forced into the subset.
//
// Every evaluator accumulates in BigInt in ascending d. The Möbius table
// passed in must cover the largest d summed over; otherwise std::out_of_range.
#pragma once

#include <cassert>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "relprime/arith.hpp"
#include "relprime/bigint.hpp"
#include "relprime/intervals.hpp"

namespace relprime {

enum class FormulaId { prefix, interval, prefix_union, union_of_two };

inline std::string_view to_string(FormulaId id) {
  switch (id) {
    case FormulaId::prefix: return "prefix";
    case FormulaId::interval: return "interval";
    case FormulaId::prefix_union: return "prefix_union";
    case FormulaId::union_of_two: return "union";
  }
  return "unknown";
}

struct CountResult {
  BigInt value;
  FormulaId formula;
  std::vector<std::int64_t> inputs;
  std::optional<std::int64_t> k;
};

namespace detail {

inline void require_positive(std::int64_t v, const char* what) {
  if (v < 1) throw std::invalid_argument(std::string(what) + " must be >= 1");
}

inline void require_k(std::int64_t k, std::int64_t min_k = 1) {
  if (k < min_k)
    throw std::invalid_argument("cardinality k must be >= " + std::to_string(min_k));
}

inline void require_split(std::int64_t m1, std::int64_t l2, std::int64_t m2) {
  if (m1 < 1 || !(m1 < l2 && l2 <= m2))
    throw std::invalid_argument("expected 1 <= m1 < l2 <= m2, got m1=" + std::to_string(m1) +
                                " l2=" + std::to_string(l2) + " m2=" + std::to_string(m2));
}

// Number of multiples of d in [lo, hi].
inline std::int64_t multiples_in(std::int64_t d, std::int64_t lo, std::int64_t hi) {
  return hi / d - (lo - 1) / d;
}

// Σ_{d=1}^{bound} μ(d) · term(count(d)), where count(d) is the number of
// multiples of d in the ground set.
template <class Count, class Term>
BigInt mobius_sum_to(const MobiusTable& mu, std::int64_t bound, Count count, Term term) {
  mu.require(bound);
  BigInt acc = 0;
  for (std::int64_t d = 1; d <= bound; ++d) {
    const int m = mu[d];
    if (m == 0) continue;
    const std::int64_t c = count(d);
    assert(c >= 0);
    if (m > 0)
      acc += term(c);
    else
      acc -= term(c);
  }
  return acc;
}

// Same sum restricted to the divisors of n.
template <class Count, class Term>
BigInt mobius_sum_over_divisors(const MobiusTable& mu, std::int64_t n, Count count, Term term) {
  mu.require(n);
  BigInt acc = 0;
  for (const std::int64_t d : divisors(n)) {
    const int m = mu[d];
    if (m == 0) continue;
    const std::int64_t c = count(d);
    assert(c >= 0);
    if (m > 0)
      acc += term(c);
    else
      acc -= term(c);
  }
  return acc;
}

inline auto nonempty_subsets() {
  return [](std::int64_t c) { return pow2(static_cast<std::uint64_t>(c)) - 1; };
}

inline auto all_subsets() {
  return [](std::int64_t c) { return pow2(static_cast<std::uint64_t>(c)); };
}

inline auto subsets_of_size(std::int64_t k) {
  return [k](std::int64_t c) { return binom(c, k); };
}

}  // namespace detail

// --- [1, n] ----------------------------------------------------------------

inline BigInt f_prefix(const MobiusTable& mu, std::int64_t n) {
  detail::require_positive(n, "n");
  return detail::mobius_sum_to(
      mu, n, [n](std::int64_t d) { return n / d; }, detail::nonempty_subsets());
}

inline BigInt fk_prefix(const MobiusTable& mu, std::int64_t n, std::int64_t k) {
  detail::require_positive(n, "n");
  detail::require_k(k);
  return detail::mobius_sum_to(
      mu, n, [n](std::int64_t d) { return n / d; }, detail::subsets_of_size(k));
}

// --- constrained counts ------------------------------------------------------

/// Subsets of [1,m1] ∪ [l2,m2] that contain l2 and have gcd 1.
inline BigInt g_count(const MobiusTable& mu, std::int64_t m1, std::int64_t l2, std::int64_t m2) {
  detail::require_split(m1, l2, m2);
  return detail::mobius_sum_over_divisors(
      mu, l2, [=](std::int64_t d) { return m1 / d + m2 / d - l2 / d; }, detail::all_subsets());
}

inline BigInt gk_count(const MobiusTable& mu, std::int64_t m1, std::int64_t l2, std::int64_t m2,
                       std::int64_t k) {
  detail::require_split(m1, l2, m2);
  detail::require_k(k);
  return detail::mobius_sum_over_divisors(
      mu, l2, [=](std::int64_t d) { return m1 / d + m2 / d - l2 / d; },
      detail::subsets_of_size(k - 1));
}

/// Subsets of [l1,m1] that contain l1 and have gcd 1.
inline BigInt h1_count(const MobiusTable& mu, std::int64_t l1, std::int64_t m1) {
  const Interval iv(l1, m1);
  return detail::mobius_sum_over_divisors(
      mu, iv.lo, [=](std::int64_t d) { return iv.hi / d - iv.lo / d; }, detail::all_subsets());
}

// The forced element l1 takes one of the k slots, so the free elements fill k - 1.
inline BigInt h1k_count(const MobiusTable& mu, std::int64_t l1, std::int64_t m1, std::int64_t k) {
  const Interval iv(l1, m1);
  detail::require_k(k);
  return detail::mobius_sum_over_divisors(
      mu, iv.lo, [=](std::int64_t d) { return iv.hi / d - iv.lo / d; },
      detail::subsets_of_size(k - 1));
}

/// Subsets of [l1,m1] ∪ [l2,m2] that contain both l1 and l2 and have gcd 1.
inline BigInt h2_count(const MobiusTable& mu, std::int64_t l1, std::int64_t m1, std::int64_t l2,
                       std::int64_t m2) {
  const IntervalUnion u(Interval(l1, m1), Interval(l2, m2));
  return detail::mobius_sum_over_divisors(
      mu, std::gcd(l1, l2),
      [=](std::int64_t d) { return m1 / d + m2 / d - (l1 + l2) / d; }, detail::all_subsets());
}

inline BigInt h2k_count(const MobiusTable& mu, std::int64_t l1, std::int64_t m1, std::int64_t l2,
                        std::int64_t m2, std::int64_t k) {
  const IntervalUnion u(Interval(l1, m1), Interval(l2, m2));
  detail::require_k(k, 2);
  return detail::mobius_sum_over_divisors(
      mu, std::gcd(l1, l2),
      [=](std::int64_t d) { return m1 / d + m2 / d - (l1 + l2) / d; },
      detail::subsets_of_size(k - 2));
}

// --- [1, m1] ∪ [l2, m2] --------------------------------------------------------

inline BigInt f_prefix_union(const MobiusTable& mu, std::int64_t m1, std::int64_t l2,
                             std::int64_t m2) {
  detail::require_split(m1, l2, m2);
  return detail::mobius_sum_to(
      mu, m2, [=](std::int64_t d) { return m1 / d + m2 / d - (l2 - 1) / d; },
      detail::nonempty_subsets());
}

inline BigInt fk_prefix_union(const MobiusTable& mu, std::int64_t m1, std::int64_t l2,
                              std::int64_t m2, std::int64_t k) {
  detail::require_split(m1, l2, m2);
  detail::require_k(k);
  return detail::mobius_sum_to(
      mu, m2, [=](std::int64_t d) { return m1 / d + m2 / d - (l2 - 1) / d; },
      detail::subsets_of_size(k));
}

// --- [l1, m1] ∪ [l2, m2] -------------------------------------------------------

inline BigInt f_union(const MobiusTable& mu, const IntervalUnion& u) {
  const auto [a, b] = u;
  return detail::mobius_sum_to(
      mu, b.hi,
      [&](std::int64_t d) { return detail::multiples_in(d, a.lo, a.hi) + detail::multiples_in(d, b.lo, b.hi); },
      detail::nonempty_subsets());
}

inline BigInt fk_union(const MobiusTable& mu, const IntervalUnion& u, std::int64_t k) {
  detail::require_k(k);
  const auto [a, b] = u;
  return detail::mobius_sum_to(
      mu, b.hi,
      [&](std::int64_t d) { return detail::multiples_in(d, a.lo, a.hi) + detail::multiples_in(d, b.lo, b.hi); },
      detail::subsets_of_size(k));
}

// --- [l, m] --------------------------------------------------------------------

inline BigInt f_interval(const MobiusTable& mu, std::int64_t l, std::int64_t m) {
  const Interval iv(l, m);
  return detail::mobius_sum_to(
      mu, m, [=](std::int64_t d) { return detail::multiples_in(d, l, m); },
      detail::nonempty_subsets());
}

inline BigInt fk_interval(const MobiusTable& mu, std::int64_t l, std::int64_t m, std::int64_t k) {
  const Interval iv(l, m);
  detail::require_k(k);
  return detail::mobius_sum_to(
      mu, m, [=](std::int64_t d) { return detail::multiples_in(d, l, m); },
      detail::subsets_of_size(k));
}

/// Dispatches to the most specific closed form for the ground set.
inline CountResult count(const MobiusTable& mu, const IntervalSet& set,
                         std::optional<std::int64_t> k = std::nullopt) {
  if (const auto* iv = std::get_if<Interval>(&set)) {
    if (iv->lo == 1)
      return {k ? fk_prefix(mu, iv->hi, *k) : f_prefix(mu, iv->hi), FormulaId::prefix, {iv->hi}, k};
    return {k ? fk_interval(mu, iv->lo, iv->hi, *k) : f_interval(mu, iv->lo, iv->hi),
            FormulaId::interval, {iv->lo, iv->hi}, k};
  }
  const auto& u = std::get<IntervalUnion>(set);
  const std::vector<std::int64_t> inputs{u.first.lo, u.first.hi, u.second.lo, u.second.hi};
  if (u.first.lo == 1) {
    return {k ? fk_prefix_union(mu, u.first.hi, u.second.lo, u.second.hi, *k)
              : f_prefix_union(mu, u.first.hi, u.second.lo, u.second.hi),
            FormulaId::prefix_union, inputs, k};
  }
  return {k ? fk_union(mu, u, *k) : f_union(mu, u), FormulaId::union_of_two, inputs, k};
}

}  // namespace relprime
