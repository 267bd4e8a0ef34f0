// Integer intervals [lo, hi] and ordered unions of two disjoint intervals.
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace relprime {

struct Interval {
  std::int64_t lo;
  std::int64_t hi;

  Interval(std::int64_t lo_, std::int64_t hi_) : lo(lo_), hi(hi_) {
    if (lo < 1 || lo > hi)
      throw std::invalid_argument("interval [" + std::to_string(lo) + "," + std::to_string(hi) +
                                  "] requires 1 <= lo <= hi");
  }

  std::int64_t size() const noexcept { return hi - lo + 1; }
  friend bool operator==(const Interval&, const Interval&) = default;
};

/// first.hi < second.lo. Contiguous pairs (first.hi + 1 == second.lo) are allowed.
struct IntervalUnion {
  Interval first;
  Interval second;

  IntervalUnion(Interval a, Interval b) : first(a), second(b) {
    if (first.hi >= second.lo)
      throw std::invalid_argument("interval union requires first.hi < second.lo");
  }

  std::int64_t size() const noexcept { return first.size() + second.size(); }
  friend bool operator==(const IntervalUnion&, const IntervalUnion&) = default;
};

using IntervalSet = std::variant<Interval, IntervalUnion>;

inline std::vector<std::int64_t> elements(const Interval& iv) {
  std::vector<std::int64_t> out;
  out.reserve(static_cast<std::size_t>(iv.size()));
  for (std::int64_t x = iv.lo; x <= iv.hi; ++x) out.push_back(x);
  return out;
}

inline std::vector<std::int64_t> elements(const IntervalUnion& u) {
  auto out = elements(u.first);
  const auto tail = elements(u.second);
  out.insert(out.end(), tail.begin(), tail.end());
  return out;
}

inline std::vector<std::int64_t> elements(const IntervalSet& s) {
  return std::visit([](const auto& v) { return elements(v); }, s);
}

inline std::int64_t max_element(const IntervalSet& s) {
  return std::visit(
      [](const auto& v) -> std::int64_t {
        if constexpr (std::is_same_v<std::decay_t<decltype(v)>, Interval>)
          return v.hi;
        else
          return v.second.hi;
      },
      s);
}

inline std::int64_t set_size(const IntervalSet& s) {
  return std::visit([](const auto& v) { return v.size(); }, s);
}

inline std::string to_string(const Interval& iv) {
  return std::to_string(iv.lo) + ".." + std::to_string(iv.hi);
}

inline std::string to_string(const IntervalUnion& u) {
  return to_string(u.first) + "," + to_string(u.second);
}

inline std::string to_string(const IntervalSet& s) {
  return std::visit([](const auto& v) { return to_string(v); }, s);
}

}  // namespace relprime
