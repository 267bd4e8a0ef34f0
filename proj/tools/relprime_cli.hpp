// Command-line front end. run() is separate from main() so the tests can drive
// it in-process.
//
// Exit codes: 0 ok, 1 identity or formula/oracle mismatch, 2 usage, 3 resource cap.
#pragma once

#include <chrono>
#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "relprime/relprime.hpp"

namespace relprime::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_mismatch = 1;
inline constexpr int exit_usage = 2;
inline constexpr int exit_resource = 3;

inline constexpr std::int64_t max_table_limit = 200'000'000;
inline constexpr std::int64_t max_formula_bench = 2'000'000;
inline constexpr std::size_t max_oracle_cap = 30;
inline constexpr std::string_view schema = "relprime/1";

class usage_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

namespace detail {

inline std::int64_t parse_int(const std::string& s) {
  std::size_t pos = 0;
  long long v = 0;
  try {
    v = std::stoll(s, &pos);
  } catch (const std::exception&) {
    throw usage_error("not an integer: '" + s + "'");
  }
  if (pos != s.size()) throw usage_error("not an integer: '" + s + "'");
  return static_cast<std::int64_t>(v);
}

/// "A..B" or "A".
inline Range parse_range(const std::string& s) {
  const auto dots = s.find("..");
  if (dots == std::string::npos) {
    const auto v = parse_int(s);
    return {v, v};
  }
  return {parse_int(s.substr(0, dots)), parse_int(s.substr(dots + 2))};
}

inline Interval parse_interval(const std::string& s) {
  const auto dots = s.find("..");
  if (dots == std::string::npos) throw usage_error("interval must look like L..M: '" + s + "'");
  try {
    return Interval(parse_int(s.substr(0, dots)), parse_int(s.substr(dots + 2)));
  } catch (const usage_error&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw usage_error(e.what());
  }
}

}  // namespace detail

/// "l..m" or "l1..m1,l2..m2", ascending and disjoint.
inline IntervalSet parse_interval_set(const std::string& s) {
  const auto comma = s.find(',');
  if (comma == std::string::npos) return detail::parse_interval(s);
  if (s.find(',', comma + 1) != std::string::npos)
    throw usage_error("at most two intervals are supported");
  const auto a = detail::parse_interval(s.substr(0, comma));
  const auto b = detail::parse_interval(s.substr(comma + 1));
  try {
    return IntervalUnion(a, b);
  } catch (const std::invalid_argument& e) {
    throw usage_error(std::string(e.what()) + " (give intervals ascending and disjoint)");
  }
}

inline nlohmann::json to_json(const IdentityReport& r) {
  nlohmann::json j{{"schema", schema},
                   {"type", "report"},
                   {"theorem", tag(r.identity)},
                   {"n", r.n},
                   {"case", to_string(r.label)},
                   {"lhs", to_decimal(r.lhs)},
                   {"rhs", to_decimal(r.rhs)},
                   {"holds", r.holds}};
  if (r.m) j["m"] = *r.m;
  return j;
}

namespace detail {

using clock = std::chrono::steady_clock;

inline double ms_since(clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(clock::now() - t0).count();
}

inline void require_table_limit(std::int64_t n) {
  if (n > max_table_limit)
    throw capacity_error("table limit " + std::to_string(n) + " exceeds budget " +
                         std::to_string(max_table_limit));
}

struct Context {
  std::ostream& out;
  std::vector<std::string> args;
  bool json = false;

  void emit(std::string_view command, nlohmann::json result, double ms) const {
    out << nlohmann::json{{"schema", schema},
                          {"command", command},
                          {"args", args},
                          {"result", std::move(result)},
                          {"timing_ms", ms}}
               .dump()
        << '\n';
  }
};

inline int cmd_mobius(const Context& ctx, std::int64_t n, bool prefix_sum) {
  if (n < 1) throw usage_error("n must be >= 1");
  require_table_limit(n);
  const auto t0 = clock::now();
  const SieveTables tables(n);
  const std::int64_t value = prefix_sum ? mertens(tables.mertens, n) : tables.mobius.at(n);
  const double ms = ms_since(t0);
  if (ctx.json)
    ctx.emit(prefix_sum ? "mertens" : "mobius", {{"n", n}, {"value", std::to_string(value)}}, ms);
  else
    ctx.out << value << '\n';
  return exit_ok;
}

inline int cmd_count(const Context& ctx, const std::string& spec, std::optional<std::int64_t> k,
                     const std::string& method, std::size_t cap) {
  const IntervalSet set = parse_interval_set(spec);
  if (k && *k < 1) throw usage_error("--k must be >= 1");
  const bool want_formula = method == "formula" || method == "both";
  const bool want_oracle = method == "oracle" || method == "both";
  if (!want_formula && !want_oracle) throw usage_error("--method must be formula, oracle or both");
  if (cap > max_oracle_cap) throw usage_error("--cap may not exceed " + std::to_string(max_oracle_cap));

  const auto t0 = clock::now();
  std::optional<CountResult> formula;
  std::optional<BigInt> oracle;
  if (want_oracle) {
    const GroundSet ground(set, cap);
    if (k && *k > static_cast<std::int64_t>(ground.size()))
      oracle = BigInt(0);
    else
      oracle = count_relprime(ground, ConstraintSpec{{}, k});
  }
  if (want_formula) {
    require_table_limit(max_element(set));
    const MobiusTable mu(max_element(set));
    formula = count(mu, set, k);
  }
  const double ms = ms_since(t0);
  const bool match = !(formula && oracle) || formula->value == *oracle;

  if (ctx.json) {
    nlohmann::json result{{"set", to_string(set)}, {"method", method}};
    if (k) result["k"] = *k;
    if (formula) {
      result["formula"] = to_decimal(formula->value);
      result["formula_id"] = to_string(formula->formula);
    }
    if (oracle) result["oracle"] = to_decimal(*oracle);
    if (formula && oracle) result["match"] = match;
    ctx.emit("count", std::move(result), ms);
  } else if (formula && oracle) {
    ctx.out << "formula=" << formula->value << " oracle=" << *oracle
            << (match ? " match" : " MISMATCH") << '\n';
  } else {
    ctx.out << (formula ? formula->value : *oracle) << '\n';
  }
  return match ? exit_ok : exit_mismatch;
}

inline int cmd_verify(const Context& ctx, const std::string& theorem,
                      const std::optional<std::string>& n_arg,
                      const std::optional<std::string>& m_arg, bool blocked, unsigned workers) {
  const auto id = parse_identity(theorem);
  if (!id) throw usage_error("unknown identity '" + theorem + "' (use 3.1, 3.2, 3.3a or 3.3b)");
  if (!n_arg) throw usage_error("--n A..B is required");
  SweepSpec spec{*id, detail::parse_range(*n_arg), {}};
  if (takes_m(*id)) {
    if (m_arg)
      spec.m = detail::parse_range(*m_arg);
    else
      spec.m = spec.n;
  } else if (m_arg) {
    throw usage_error("--m is only meaningful for 3.3a and 3.3b");
  }

  const auto t0 = clock::now();
  const std::int64_t limit = required_limit(spec);
  require_table_limit(limit);
  const SieveTables tables(limit);
  SweepOptions options;
  options.evaluation = blocked ? LhsEvaluation::blocked : LhsEvaluation::termwise;
  options.workers = workers;
  const auto summary =
      sweep(tables, spec, [&](const IdentityReport& r) { ctx.out << to_json(r).dump() << '\n'; }, options);
  ctx.out << nlohmann::json{{"schema", schema},
                            {"type", "summary"},
                            {"theorem", tag(*id)},
                            {"checked", summary.checked},
                            {"failures", summary.failures},
                            {"all_hold", summary.all_hold()},
                            {"timing_ms", ms_since(t0)}}
                 .dump()
          << '\n';
  return summary.all_hold() ? exit_ok : exit_mismatch;
}

inline int cmd_bench(const Context& ctx, const std::string& target, std::int64_t size,
                     std::size_t cap) {
  if (size < 1) throw usage_error("size must be >= 1");
  nlohmann::json result{{"target", target}, {"size", size}};
  double ms = 0;
  if (target == "sieve") {
    require_table_limit(size);
    const auto t0 = clock::now();
    const MobiusTable mu(size);
    ms = ms_since(t0);
    const MertensTable mt(mu);
    result["mertens"] = std::to_string(mt[size]);
  } else if (target == "formula") {
    if (size > max_formula_bench)
      throw capacity_error("formula bench size exceeds " + std::to_string(max_formula_bench));
    const MobiusTable mu(size);
    // ladder: m = 10, 100, ..., capped at size, each over [m/2 + 1, m]
    std::vector<std::int64_t> ladder;
    for (std::int64_t m = 10; m < size; m *= 10) ladder.push_back(m);
    ladder.push_back(size);
    nlohmann::json bits = nlohmann::json::array();
    const auto t0 = clock::now();
    for (const auto m : ladder) {
      const auto v = f_interval(mu, m / 2 + 1, m);
      bits.push_back({{"interval", std::to_string(m / 2 + 1) + ".." + std::to_string(m)},
                      {"bits", boost::multiprecision::msb(v) + 1}});
    }
    ms = ms_since(t0);
    result["ladder"] = std::move(bits);
  } else if (target == "oracle") {
    if (cap > max_oracle_cap) throw usage_error("--cap may not exceed " + std::to_string(max_oracle_cap));
    const GroundSet ground(IntervalSet{Interval(1, size)}, cap);
    const auto t0 = clock::now();
    const auto n = count_relprime(ground);
    ms = ms_since(t0);
    result["count"] = to_decimal(n);
  } else {
    throw usage_error("bench target must be sieve, formula or oracle");
  }
  result["elapsed_ms"] = ms;
  if (ctx.json)
    ctx.emit("bench", std::move(result), ms);
  else
    ctx.out << "bench " << target << " size=" << size << " elapsed_ms=" << ms << '\n';
  return exit_ok;
}

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Relatively prime subset counts and Mertens-function identities", "relprime"};
  app.require_subcommand(1);

  bool json = false;
  std::int64_t n_value = 0;
  std::string spec, method = "formula", theorem, target;
  std::optional<std::int64_t> k;
  std::optional<std::string> n_range, m_range;
  std::size_t cap = default_enumeration_cap;
  bool blocked = false;
  unsigned workers = 1;
  std::int64_t size = 0;

  auto* mobius = app.add_subcommand("mobius", "print mu(n)");
  mobius->add_option("n", n_value)->required();
  auto* mert = app.add_subcommand("mertens", "print M(n)");
  mert->add_option("n", n_value)->required();

  auto* cnt = app.add_subcommand("count", "count relatively prime subsets of L..M[,L..M]");
  cnt->add_option("set", spec, "ground set, e.g. 2..4 or 2..3,5..6")->required();
  cnt->add_option("--k", k, "count only subsets of this size");
  cnt->add_option("--method", method, "formula | oracle | both")->capture_default_str();
  cnt->add_option("--cap", cap, "largest ground set the oracle will enumerate")->capture_default_str();

  auto* ver = app.add_subcommand("verify", "check an identity over a range, JSON lines");
  ver->add_option("theorem", theorem, "3.1 | 3.2 | 3.3a | 3.3b")->required();
  ver->add_option("--n", n_range, "A..B");
  ver->add_option("--m", m_range, "A..B (3.3a/3.3b; defaults to the --n range)");
  ver->add_flag("--blocked", blocked, "evaluate sums over runs of equal floors");
  ver->add_option("--workers", workers, "worker threads")->capture_default_str();

  auto* bench = app.add_subcommand("bench", "time a sieve, formula or oracle workload");
  bench->add_option("target", target, "sieve | formula | oracle")->required();
  bench->add_option("size", size)->required();
  bench->add_option("--cap", cap, "oracle enumeration cap")->capture_default_str();

  for (auto* sub : {mobius, mert, cnt, ver, bench}) sub->add_flag("--json", json, "JSON output");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_ok;
  } catch (const CLI::ParseError& e) {
    err << "relprime: " << e.what() << '\n';
    return exit_usage;
  }

  detail::Context ctx{out, args, json};
  try {
    if (*mobius) return detail::cmd_mobius(ctx, n_value, false);
    if (*mert) return detail::cmd_mobius(ctx, n_value, true);
    if (*cnt) return detail::cmd_count(ctx, spec, k, method, cap);
    if (*ver) return detail::cmd_verify(ctx, theorem, n_range, m_range, blocked, workers);
    if (*bench) return detail::cmd_bench(ctx, target, size, cap);
  } catch (const capacity_error& e) {
    err << "relprime: " << e.what() << '\n';
    return exit_resource;
  } catch (const std::invalid_argument& e) {
    err << "relprime: " << e.what() << '\n';
    return exit_usage;
  } catch (const std::out_of_range& e) {
    err << "relprime: " << e.what() << '\n';
    return exit_usage;
  }
  return exit_usage;
}

}  // namespace relprime::cli
