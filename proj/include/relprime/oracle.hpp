// Brute-force ground truth. Everything here enumerates subsets explicitly and
// is deliberately free of any Möbius-sum shortcut.
#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "relprime/arith.hpp"
#include "relprime/bigint.hpp"
#include "relprime/intervals.hpp"

namespace relprime {

inline constexpr std::size_t default_enumeration_cap = 24;

class capacity_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A finite set of positive integers small enough to enumerate.
class GroundSet {
 public:
  explicit GroundSet(std::vector<std::int64_t> elems, std::size_t cap = default_enumeration_cap)
      : elements_(std::move(elems)) {
    std::sort(elements_.begin(), elements_.end());
    if (std::adjacent_find(elements_.begin(), elements_.end()) != elements_.end())
      throw std::invalid_argument("ground set has duplicate elements");
    if (!elements_.empty() && elements_.front() < 1)
      throw std::invalid_argument("ground set elements must be positive");
    if (elements_.size() > cap)
      throw capacity_error("ground set of size " + std::to_string(elements_.size()) +
                           " exceeds enumeration cap " + std::to_string(cap));
  }

  explicit GroundSet(const IntervalSet& s, std::size_t cap = default_enumeration_cap)
      : GroundSet(checked_elements(s, cap), cap) {}

  const std::vector<std::int64_t>& elements() const noexcept { return elements_; }
  std::size_t size() const noexcept { return elements_.size(); }
  bool contains(std::int64_t x) const {
    return std::binary_search(elements_.begin(), elements_.end(), x);
  }

 private:
  static std::vector<std::int64_t> checked_elements(const IntervalSet& s, std::size_t cap) {
    // refuse before materializing a huge interval
    if (static_cast<std::uint64_t>(set_size(s)) > cap)
      throw capacity_error("ground set of size " + std::to_string(set_size(s)) +
                           " exceeds enumeration cap " + std::to_string(cap));
    return relprime::elements(s);
  }

  std::vector<std::int64_t> elements_;
};

/// Elements every counted subset must contain, and optionally its exact size.
struct ConstraintSpec {
  std::vector<std::int64_t> required;
  std::optional<std::int64_t> cardinality;
};

namespace detail {

inline void validate(const GroundSet& set, const ConstraintSpec& spec) {
  for (const auto r : spec.required)
    if (!set.contains(r))
      throw std::invalid_argument("required element " + std::to_string(r) + " not in ground set");
  auto req = spec.required;
  std::sort(req.begin(), req.end());
  if (std::adjacent_find(req.begin(), req.end()) != req.end())
    throw std::invalid_argument("required elements repeat");
  if (spec.cardinality) {
    const auto c = *spec.cardinality;
    if (c < 1 || c < static_cast<std::int64_t>(req.size()) ||
        c > static_cast<std::int64_t>(set.size()))
      throw std::invalid_argument("cardinality " + std::to_string(c) + " out of range");
  }
}

template <class Visit>
void extend(const std::vector<std::int64_t>& free, std::size_t i, std::int64_t g, std::size_t size,
            Visit& visit) {
  if (i == free.size()) {
    if (size > 0) visit(g, size);
    return;
  }
  extend(free, i + 1, g, size, visit);
  extend(free, i + 1, std::gcd(g, free[i]), size + 1, visit);
}

}  // namespace detail

/// Calls visit(gcd(X), |X|) for every nonempty X with required ⊆ X ⊆ set.
/// The cardinality field is ignored here; callers filter on it.
template <class Visit>
void for_each_subset(const GroundSet& set, const ConstraintSpec& spec, Visit visit) {
  detail::validate(set, spec);
  std::vector<std::int64_t> free;
  for (const auto x : set.elements())
    if (std::find(spec.required.begin(), spec.required.end(), x) == spec.required.end())
      free.push_back(x);
  std::int64_t g = 0;
  for (const auto r : spec.required) g = std::gcd(g, r);
  detail::extend(free, 0, g, spec.required.size(), visit);
}

/// Number of subsets X of set with gcd(X) = target that satisfy spec.
inline BigInt count_with_gcd(const GroundSet& set, const ConstraintSpec& spec, std::int64_t target) {
  std::uint64_t n = 0;
  const auto want = spec.cardinality;
  for_each_subset(set, spec, [&](std::int64_t g, std::size_t size) {
    if (g == target && (!want || static_cast<std::int64_t>(size) == *want)) ++n;
  });
  return n;
}

inline BigInt count_relprime(const GroundSet& set, const ConstraintSpec& spec = {}) {
  return count_with_gcd(set, spec, 1);
}

/// Relatively prime subsets containing required, tallied by size: out[s] counts size s.
inline std::vector<BigInt> count_relprime_by_size(const GroundSet& set,
                                                  const std::vector<std::int64_t>& required = {}) {
  std::vector<std::uint64_t> tally(set.size() + 1, 0);
  for_each_subset(set, ConstraintSpec{required, std::nullopt}, [&](std::int64_t g, std::size_t s) {
    if (g == 1) ++tally[s];
  });
  return {tally.begin(), tally.end()};
}

/// gcd(X) -> number of constrained subsets X with that gcd.
inline std::map<std::int64_t, BigInt> gcd_classes(const GroundSet& set,
                                                  const ConstraintSpec& spec = {}) {
  std::map<std::int64_t, std::uint64_t> tally;
  const auto want = spec.cardinality;
  for_each_subset(set, spec, [&](std::int64_t g, std::size_t size) {
    if (!want || static_cast<std::int64_t>(size) == *want) ++tally[g];
  });
  return {tally.begin(), tally.end()};
}

/// Sums the gcd classes and compares against the number of constrained
/// subsets counted directly from the set sizes.
inline bool gcd_partition_check(const GroundSet& set, const ConstraintSpec& spec = {}) {
  BigInt sum = 0;
  for (const auto& [g, n] : gcd_classes(set, spec)) sum += n;
  const auto free = static_cast<std::int64_t>(set.size() - spec.required.size());
  BigInt total;
  if (spec.cardinality)
    total = binom(free, *spec.cardinality - static_cast<std::int64_t>(spec.required.size()));
  else
    total = pow2(static_cast<std::uint64_t>(free)) - (spec.required.empty() ? 1 : 0);
  return sum == total;
}

// --- multivariable Möbius inversion harness -----------------------------------

enum class FieldKind { random, zero };

/// Functions of a divisible arguments m_1..m_a (domain 1..bound) and b floored
/// arguments n_1..n_b (domain 0..bound, since floors can reach 0).
struct InversionParams {
  std::size_t a = 1;
  std::size_t b = 0;
  std::vector<std::int64_t> bounds;  // one per variable, m's first
  std::uint64_t seed = 0;
  FieldKind field = FieldKind::random;
};

struct InversionReport {
  std::size_t lattice_points = 0;  // points with every argument >= 1
  std::size_t forward_mismatches = 0;
  std::size_t converse_mismatches = 0;

  bool holds() const noexcept { return forward_mismatches == 0 && converse_mismatches == 0; }
};

namespace detail {

class Lattice {
 public:
  Lattice(std::size_t a, const std::vector<std::int64_t>& bounds) : a_(a) {
    std::size_t stride = 1;
    for (std::size_t i = 0; i < bounds.size(); ++i) {
      lo_.push_back(i < a ? 1 : 0);
      extent_.push_back(static_cast<std::size_t>(bounds[i] - lo_.back() + 1));
      stride_.push_back(stride);
      stride *= extent_.back();
    }
    size_ = stride;
  }

  std::size_t size() const noexcept { return size_; }
  std::size_t dims() const noexcept { return extent_.size(); }

  std::vector<std::int64_t> point(std::size_t index) const {
    std::vector<std::int64_t> p(dims());
    for (std::size_t i = 0; i < dims(); ++i)
      p[i] = lo_[i] + static_cast<std::int64_t>((index / stride_[i]) % extent_[i]);
    return p;
  }

  std::size_t index(const std::vector<std::int64_t>& p) const {
    std::size_t idx = 0;
    for (std::size_t i = 0; i < dims(); ++i)
      idx += static_cast<std::size_t>(p[i] - lo_[i]) * stride_[i];
    return idx;
  }

  std::int64_t common_divisor(const std::vector<std::int64_t>& p) const {
    std::int64_t g = 0;
    for (std::size_t i = 0; i < a_; ++i) g = std::gcd(g, p[i]);
    return g;
  }

  std::vector<std::int64_t> scaled(const std::vector<std::int64_t>& p, std::int64_t d) const {
    auto q = p;
    for (auto& x : q) x /= d;  // exact for the m's, floor for the n's
    return q;
  }

  bool interior(const std::vector<std::int64_t>& p) const {
    return std::all_of(p.begin(), p.end(), [](std::int64_t x) { return x >= 1; });
  }

 private:
  std::size_t a_;
  std::vector<std::int64_t> lo_;
  std::vector<std::size_t> extent_;
  std::vector<std::size_t> stride_;
  std::size_t size_ = 0;
};

// out(x) = Σ_{d | gcd(m)} weight(d) · in(m/d, ⌊n/d⌋)
template <class Weight>
std::vector<std::int64_t> divisor_transform(const Lattice& L, const std::vector<std::int64_t>& in,
                                            Weight weight) {
  std::vector<std::int64_t> out(L.size(), 0);
  for (std::size_t i = 0; i < L.size(); ++i) {
    const auto p = L.point(i);
    std::int64_t acc = 0;
    for (const auto d : divisors(L.common_divisor(p))) acc += weight(d) * in[L.index(L.scaled(p, d))];
    out[i] = acc;
  }
  return out;
}

}  // namespace detail

inline InversionReport inversion_check(const InversionParams& params) {
  if (params.a < 1) throw std::invalid_argument("inversion_check: a must be >= 1");
  if (params.bounds.size() != params.a + params.b)
    throw std::invalid_argument("inversion_check: need one bound per variable");
  for (const auto bnd : params.bounds)
    if (bnd < 1) throw std::invalid_argument("inversion_check: bounds must be >= 1");

  const detail::Lattice L(params.a, params.bounds);
  const MobiusTable mu(*std::max_element(params.bounds.begin(), params.bounds.end()));

  std::mt19937_64 rng(params.seed);
  std::uniform_int_distribution<std::int64_t> dist(-50, 50);
  auto field = [&] {
    std::vector<std::int64_t> v(L.size(), 0);
    if (params.field == FieldKind::random)
      for (auto& x : v) x = dist(rng);
    return v;
  };
  const auto one = [](std::int64_t) -> std::int64_t { return 1; };
  const auto mobius = [&](std::int64_t d) -> std::int64_t { return mu[d]; };

  InversionReport report;
  // forward: G = Σ F, then F = Σ μ G
  const auto F = field();
  const auto recovered_F = detail::divisor_transform(L, detail::divisor_transform(L, F, one), mobius);
  // converse: F = Σ μ G, then G = Σ F
  const auto G = field();
  const auto recovered_G = detail::divisor_transform(L, detail::divisor_transform(L, G, mobius), one);

  for (std::size_t i = 0; i < L.size(); ++i) {
    if (!L.interior(L.point(i))) continue;
    ++report.lattice_points;
    if (recovered_F[i] != F[i]) ++report.forward_mismatches;
    if (recovered_G[i] != G[i]) ++report.converse_mismatches;
  }
  return report;
}

}  // namespace relprime
