// Mertens-function identities obtained by counting relatively prime subsets of
// tiny ground sets ({n, n+1}, {n-2, n-1, n}, {m} ∪ {n, n+1}) two ways.
//
// Each identity has the shape
//     Σ_{d=1}^{N} μ(d) · 2^{e(d)} = c + M(N),
// where e(d) counts the multiples of d in the ground set and c is the number
// of relatively prime subsets of that set.
#pragma once

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <functional>
#include <future>
#include <numeric>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "relprime/arith.hpp"
#include "relprime/bigint.hpp"

namespace relprime {

/// Which identity, by its ground set.
enum class Identity {
  adjacent_pair,        // {n, n+1},        n > 1
  triple_window,        // {n-2, n-1, n},   n > 3
  singleton_then_pair,  // {m} ∪ {n, n+1},  1 < m < n
  pair_then_singleton,  // {n, n+1} ∪ {m},  1 < n < m-1
};

/// CLI / report tag.
inline std::string_view tag(Identity id) {
  switch (id) {
    case Identity::adjacent_pair: return "3.1";
    case Identity::triple_window: return "3.2";
    case Identity::singleton_then_pair: return "3.3a";
    case Identity::pair_then_singleton: return "3.3b";
  }
  return "?";
}

inline std::optional<Identity> parse_identity(std::string_view s) {
  for (const auto id : {Identity::adjacent_pair, Identity::triple_window,
                        Identity::singleton_then_pair, Identity::pair_then_singleton})
    if (tag(id) == s) return id;
  return std::nullopt;
}

inline bool takes_m(Identity id) {
  return id == Identity::singleton_then_pair || id == Identity::pair_then_singleton;
}

enum class Parity { even, odd };

enum class GcdCase { both_gt1, exactly_one_coprime, both_coprime };

using CaseLabel = std::variant<std::monostate, Parity, GcdCase>;

inline std::string_view to_string(Parity p) { return p == Parity::even ? "even" : "odd"; }

inline std::string_view to_string(GcdCase c) {
  switch (c) {
    case GcdCase::both_gt1: return "BOTH_GT1";
    case GcdCase::exactly_one_coprime: return "EXACTLY_ONE_COPRIME";
    case GcdCase::both_coprime: return "BOTH_COPRIME";
  }
  return "?";
}

inline std::string to_string(const CaseLabel& c) {
  if (const auto* p = std::get_if<Parity>(&c)) return std::string(to_string(*p));
  if (const auto* g = std::get_if<GcdCase>(&c)) return std::string(to_string(*g));
  return "none";
}

inline GcdCase classify_case(std::int64_t m, std::int64_t n) {
  if (m < 1 || n < 1) throw std::invalid_argument("classify_case: m, n must be >= 1");
  const bool a = std::gcd(m, n) == 1;
  const bool b = std::gcd(m, n + 1) == 1;
  if (a && b) return GcdCase::both_coprime;
  if (!a && !b) return GcdCase::both_gt1;
  return GcdCase::exactly_one_coprime;
}

/// Relatively prime subsets of {m, n, n+1}: {n, n+1} and the full triple always,
/// plus {m, n} and {m, n+1} when coprime.
inline std::int64_t case_constant(GcdCase c) {
  switch (c) {
    case GcdCase::both_gt1: return 2;
    case GcdCase::exactly_one_coprime: return 3;
    case GcdCase::both_coprime: return 4;
  }
  return 0;
}

inline std::int64_t case_constant(Parity p) { return p == Parity::even ? 3 : 4; }

struct IdentityReport {
  Identity identity;
  std::int64_t n;
  std::optional<std::int64_t> m;
  CaseLabel label;
  BigInt lhs;
  BigInt rhs;
  bool holds;

  friend bool operator==(const IdentityReport&, const IdentityReport&) = default;
};

enum class LhsEvaluation {
  termwise,  // one term per d
  blocked,   // runs of d with equal floors, weighted by Mertens differences
};

/// Count of multiples of d in a ground set, written as Σ sign·⌊x/d⌋.
struct FloorTerm {
  std::int64_t numerator;
  int sign;
};

namespace detail {

inline std::int64_t exponent_at(std::span<const FloorTerm> terms, std::int64_t d) {
  std::int64_t e = 0;
  for (const auto& t : terms) e += t.sign * (t.numerator / d);
  return e;
}

}  // namespace detail

/// Σ_{d=1}^{bound} μ(d) 2^{e(d)}, e(d) = Σ sign·⌊numerator/d⌋.
inline BigInt exponential_mobius_sum(const SieveTables& tables, std::span<const FloorTerm> terms,
                                     std::int64_t bound, LhsEvaluation how = LhsEvaluation::termwise) {
  tables.mobius.require(bound);
  BigInt acc = 0;
  if (how == LhsEvaluation::termwise) {
    // terms below 2^31 go to a machine word; bound < 2^31 keeps it below 2^62
    std::int64_t small = 0;
    for (std::int64_t d = 1; d <= bound; ++d) {
      const int mu = tables.mobius[d];
      if (mu == 0) continue;
      const auto e = detail::exponent_at(terms, d);
      assert(e >= 0);
      if (e < 31)
        small += mu * (std::int64_t{1} << e);
      else if (mu > 0)
        acc += pow2(static_cast<std::uint64_t>(e));
      else
        acc -= pow2(static_cast<std::uint64_t>(e));
    }
    return acc + small;
  }
  std::int64_t small = 0;
  for (std::int64_t d = 1; d <= bound;) {
    std::int64_t end = bound;
    for (const auto& t : terms)
      if (t.numerator / d > 0) end = std::min(end, t.numerator / (t.numerator / d));
    const auto e = detail::exponent_at(terms, d);
    assert(e >= 0);
    const std::int64_t weight = tables.mertens[end] - tables.mertens[d - 1];
    if (e < 31)
      small += weight * (std::int64_t{1} << e);
    else
      acc += weight * pow2(static_cast<std::uint64_t>(e));
    d = end + 1;
  }
  return acc + small;
}

namespace detail {

inline IdentityReport finish(const SieveTables& tables, Identity id, std::int64_t n,
                             std::optional<std::int64_t> m, CaseLabel label, std::int64_t constant,
                             std::span<const FloorTerm> terms, std::int64_t bound,
                             LhsEvaluation how) {
  tables.mobius.require(bound);
  BigInt lhs = exponential_mobius_sum(tables, terms, bound, how);
  BigInt rhs = constant + tables.mertens[bound];
  const bool holds = lhs == rhs;
  return {id, n, m, label, std::move(lhs), std::move(rhs), holds};
}

}  // namespace detail

inline IdentityReport verify_t31(const SieveTables& tables, std::int64_t n,
                                 LhsEvaluation how = LhsEvaluation::termwise) {
  if (n <= 1) throw std::invalid_argument("adjacent-pair identity requires n > 1");
  const FloorTerm terms[] = {{n + 1, +1}, {n - 1, -1}};
  return detail::finish(tables, Identity::adjacent_pair, n, std::nullopt, std::monostate{}, 1,
                        terms, n + 1, how);
}

inline IdentityReport verify_t32(const SieveTables& tables, std::int64_t n,
                                 LhsEvaluation how = LhsEvaluation::termwise) {
  if (n <= 3) throw std::invalid_argument("triple-window identity requires n > 3");
  const Parity p = n % 2 == 0 ? Parity::even : Parity::odd;
  const FloorTerm terms[] = {{n, +1}, {n - 3, -1}};
  return detail::finish(tables, Identity::triple_window, n, std::nullopt, p, case_constant(p),
                        terms, n, how);
}

inline IdentityReport verify_t33a(const SieveTables& tables, std::int64_t m, std::int64_t n,
                                  LhsEvaluation how = LhsEvaluation::termwise) {
  if (!(1 < m && m < n)) throw std::invalid_argument("singleton-then-pair identity requires 1 < m < n");
  const GcdCase c = classify_case(m, n);
  const FloorTerm terms[] = {{n + 1, +1}, {n - 1, -1}, {m, +1}, {m - 1, -1}};
  return detail::finish(tables, Identity::singleton_then_pair, n, m, c, case_constant(c), terms,
                        n + 1, how);
}

inline IdentityReport verify_t33b(const SieveTables& tables, std::int64_t m, std::int64_t n,
                                  LhsEvaluation how = LhsEvaluation::termwise) {
  if (!(1 < n && n < m - 1))
    throw std::invalid_argument("pair-then-singleton identity requires 1 < n < m - 1");
  const GcdCase c = classify_case(m, n);
  const FloorTerm terms[] = {{n + 1, +1}, {n - 1, -1}, {m, +1}, {m - 1, -1}};
  return detail::finish(tables, Identity::pair_then_singleton, n, m, c, case_constant(c), terms, m,
                        how);
}

/// Inclusive integer range; empty when lo > hi.
struct Range {
  std::int64_t lo = 0;
  std::int64_t hi = -1;

  bool empty() const noexcept { return lo > hi; }
};

struct SweepSpec {
  Identity identity;
  Range n;
  Range m;  // ignored by the single-variable identities
};

struct SweepOptions {
  LhsEvaluation evaluation = LhsEvaluation::termwise;
  unsigned workers = 1;
  std::size_t chunk = 4096;
};

struct SweepSummary {
  std::size_t checked = 0;
  std::size_t failures = 0;

  bool all_hold() const noexcept { return failures == 0; }
};

inline bool in_domain(Identity id, std::int64_t m, std::int64_t n) {
  switch (id) {
    case Identity::adjacent_pair: return n > 1;
    case Identity::triple_window: return n > 3;
    case Identity::singleton_then_pair: return 1 < m && m < n;
    case Identity::pair_then_singleton: return 1 < n && n < m - 1;
  }
  return false;
}

/// The largest d any instance sums to, i.e. the table limit it needs.
inline std::int64_t sum_bound(Identity id, std::int64_t m, std::int64_t n) {
  switch (id) {
    case Identity::adjacent_pair:
    case Identity::singleton_then_pair: return n + 1;
    case Identity::triple_window: return n;
    case Identity::pair_then_singleton: return m;
  }
  return 0;
}

inline IdentityReport verify(const SieveTables& tables, Identity id, std::int64_t m, std::int64_t n,
                             LhsEvaluation how = LhsEvaluation::termwise) {
  switch (id) {
    case Identity::adjacent_pair: return verify_t31(tables, n, how);
    case Identity::triple_window: return verify_t32(tables, n, how);
    case Identity::singleton_then_pair: return verify_t33a(tables, m, n, how);
    case Identity::pair_then_singleton: return verify_t33b(tables, m, n, how);
  }
  throw std::logic_error("unknown identity");
}

/// Walks the in-domain (m, n) instances of a sweep in emission order: m
/// ascending, then n ascending. m is 0 for the single-variable identities.
class InstanceCursor {
 public:
  explicit InstanceCursor(const SweepSpec& spec)
      : spec_(spec), two_(takes_m(spec.identity)), m_(two_ ? spec.m.lo : 0), n_(spec.n.lo - 1) {
    if (spec_.n.empty() || (two_ && spec_.m.empty())) done_ = true;
  }

  std::optional<std::pair<std::int64_t, std::int64_t>> next() {
    while (!done_) {
      if (++n_ > spec_.n.hi) {
        if (!two_ || ++m_ > spec_.m.hi) {
          done_ = true;
          break;
        }
        n_ = spec_.n.lo;
      }
      if (in_domain(spec_.identity, m_, n_)) return std::pair{m_, n_};
    }
    return std::nullopt;
  }

 private:
  SweepSpec spec_;
  bool two_;
  std::int64_t m_;
  std::int64_t n_;
  bool done_ = false;
};

inline std::vector<std::pair<std::int64_t, std::int64_t>> sweep_instances(const SweepSpec& spec) {
  std::vector<std::pair<std::int64_t, std::int64_t>> out;
  InstanceCursor cursor(spec);
  while (const auto p = cursor.next()) out.push_back(*p);
  return out;
}

/// Table limit needed to sweep spec; 1 for an empty sweep.
inline std::int64_t required_limit(const SweepSpec& spec) {
  const Range& n = spec.n;
  const Range& m = spec.m;
  if (n.empty()) return 1;
  switch (spec.identity) {
    case Identity::adjacent_pair:
      return n.hi >= 2 ? n.hi + 1 : 1;
    case Identity::triple_window:
      return n.hi >= 4 ? n.hi : 1;
    case Identity::singleton_then_pair: {
      // largest n that has some m in [max(m.lo, 2), min(m.hi, n - 1)]
      const std::int64_t m_lo = std::max<std::int64_t>(m.lo, 2);
      if (m.hi < m_lo || n.hi - 1 < m_lo) return 1;
      return n.hi + 1;
    }
    case Identity::pair_then_singleton: {
      // largest m that has some n in [max(n.lo, 2), min(n.hi, m - 2)]
      const std::int64_t n_lo = std::max<std::int64_t>(n.lo, 2);
      if (m.empty() || n.hi < n_lo || m.hi - 2 < n_lo) return 1;
      return m.hi;
    }
  }
  return 1;
}

/// Verifies every in-domain instance and hands each report to sink in input
/// order. Failures are recorded, never fatal.
template <class Sink>
SweepSummary sweep(const SieveTables& tables, const SweepSpec& spec, Sink&& sink,
                   const SweepOptions& options = {}) {
  tables.mobius.require(required_limit(spec));

  using Batch = std::vector<std::pair<std::int64_t, std::int64_t>>;
  auto run = [&](const Batch& batch) {
    std::vector<IdentityReport> out;
    out.reserve(batch.size());
    for (const auto& [m, n] : batch) out.push_back(verify(tables, spec.identity, m, n, options.evaluation));
    return out;
  };

  SweepSummary summary;
  auto emit = [&](const std::vector<IdentityReport>& reports) {
    for (const auto& r : reports) {
      ++summary.checked;
      if (!r.holds) ++summary.failures;
      sink(r);
    }
  };

  const unsigned workers = std::max(1u, options.workers);
  const std::size_t chunk = std::max<std::size_t>(1, options.chunk);
  InstanceCursor cursor(spec);
  for (bool more = true; more;) {
    std::vector<Batch> batches(workers);
    for (auto& b : batches) {
      while (b.size() < chunk) {
        const auto p = cursor.next();
        if (!p) {
          more = false;
          break;
        }
        b.push_back(*p);
      }
      if (!more) break;
    }
    if (workers == 1) {
      emit(run(batches.front()));
      continue;
    }
    std::vector<std::future<std::vector<IdentityReport>>> parts;
    for (const auto& b : batches)
      if (!b.empty()) parts.push_back(std::async(std::launch::async, run, std::cref(b)));
    for (auto& p : parts) emit(p.get());
  }
  return summary;
}

}  // namespace relprime
