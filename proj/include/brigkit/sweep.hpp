#pragma once

// Parameter-grid sweep with brute-force oracles and JSON/CSV reports.
// Records are produced in grid order regardless of the number of worker
// threads, so identical configurations give byte-identical reports.

#include "brigkit/core.hpp"
#include "brigkit/growth.hpp"
#include "brigkit/terms.hpp"
#include "brigkit/zeros.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <map>
#include <mutex>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

namespace brigkit::app {

using json = nlohmann::json;

inline constexpr const char* kVersion = "1.0.0";

class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct IntRange {
  long lo = 0;
  long hi = 0;
  friend bool operator==(const IntRange&, const IntRange&) = default;
};

struct SweepConfig {
  IntRange a{-5, 5};
  IntRange b{-5, 5};
  IntRange p{-3, 3};
  IntRange q{-3, 3};
  Index n_horizon = 200;
  std::int64_t c4 = kDefaultC4;
  Rational c5{kDefaultC5};
  int parallelism = 1;
  Index oracle_horizon = 2000;
  std::string output_path;
  std::string format = "json";

  friend bool operator==(const SweepConfig&, const SweepConfig&) = default;
};

inline void validate(const SweepConfig& c) {
  for (const auto& [name, r] : {std::pair{"a", c.a}, {"b", c.b}, {"p", c.p}, {"q", c.q}})
    if (r.lo > r.hi) throw ConfigError(std::string("empty range for ") + name);
  if (c.n_horizon < 2) throw ConfigError("n_horizon must be >= 2");
  if (c.n_horizon > kIterativeLimit) throw ConfigError("n_horizon must be <= " + std::to_string(kIterativeLimit));
  if (c.oracle_horizon > 100000) throw ConfigError("oracle_horizon must be <= 100000");
  if (c.parallelism < 1) throw ConfigError("parallelism must be >= 1");
  if (c.c4 < 0) throw ConfigError("c4 must be >= 0");
  if (sgn(c.c5) <= 0) throw ConfigError("c5 must be > 0");
  if (c.format != "json" && c.format != "csv") throw ConfigError("format must be json or csv");
}

/// Parallelism from the environment (BRIGKIT_THREADS) when set.
inline void apply_environment(SweepConfig& c) {
  if (const char* env = std::getenv("BRIGKIT_THREADS"); env != nullptr && *env != '\0') {
    try {
      c.parallelism = std::stoi(env);
    } catch (const std::exception&) {
      throw ConfigError(std::string("BRIGKIT_THREADS is not an integer: ") + env);
    }
  }
}

inline json range_to_json(const IntRange& r) { return json::array({r.lo, r.hi}); }

inline IntRange range_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2) throw ConfigError("range must be [lo, hi]");
  return IntRange{j.at(0).get<long>(), j.at(1).get<long>()};
}

inline json config_to_json(const SweepConfig& c) {
  return json{{"a", range_to_json(c.a)},
              {"b", range_to_json(c.b)},
              {"p", range_to_json(c.p)},
              {"q", range_to_json(c.q)},
              {"n_horizon", c.n_horizon},
              {"c4", c.c4},
              {"c5", c.c5.get_str()},
              {"oracle_horizon", c.oracle_horizon},
              {"format", c.format}};
}

/// Reads a configuration object; missing keys keep their defaults.
/// `parallelism` and `output_path` are accepted but not echoed into
/// reports, which keeps reports independent of the thread count.
inline SweepConfig config_from_json(const json& j) {
  SweepConfig c;
  try {
    if (j.contains("a")) c.a = range_from_json(j["a"]);
    if (j.contains("b")) c.b = range_from_json(j["b"]);
    if (j.contains("p")) c.p = range_from_json(j["p"]);
    if (j.contains("q")) c.q = range_from_json(j["q"]);
    if (j.contains("n_horizon")) c.n_horizon = j["n_horizon"].get<Index>();
    if (j.contains("c4")) c.c4 = j["c4"].get<std::int64_t>();
    if (j.contains("c5")) c.c5 = parse_rational(j["c5"].is_string() ? j["c5"].get<std::string>() : j["c5"].dump());
    if (j.contains("oracle_horizon")) c.oracle_horizon = j["oracle_horizon"].get<Index>();
    if (j.contains("parallelism")) c.parallelism = j["parallelism"].get<int>();
    if (j.contains("output_path")) c.output_path = j["output_path"].get<std::string>();
    if (j.contains("format")) c.format = j["format"].get<std::string>();
  } catch (const json::exception& e) {
    throw ConfigError(std::string("bad config: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("bad config: ") + e.what());
  }
  return c;
}

/// Every k in [0, horizon] with u_k = 0, by plain iteration on the given
/// parameters (no normalization, no bounds).
inline std::vector<Index> brute_force_zero_oracle(const SequenceParams& s, Index horizon) {
  std::vector<Index> zeros;
  TermWindow w = TermWindow::start(s);
  for (;;) {
    if (sgn(w.current) == 0) zeros.push_back(w.n);
    if (w.n >= horizon) break;
    w.advance(s.a, s.b);
  }
  return zeros;
}

/// Compact verdict code used in reports, e.g. "zero-at:5",
/// "none:29:conclusive", "periodic:3:2".
inline std::string verdict_code(const ZeroResult& r) {
  struct Visitor {
    std::string operator()(const NoZero& z) const {
      return "none:" + std::to_string(z.searched_up_to) + ":" +
             (!z.conclusive ? "inconclusive" : (z.assumes_c4 ? "conditional-c4" : "conclusive"));
    }
    std::string operator()(const ZeroAt& z) const { return "zero-at:" + std::to_string(z.k); }
    std::string operator()(const PeriodicZeros& z) const {
      std::string s = "periodic:" + std::to_string(z.modulus) + ":";
      for (std::size_t i = 0; i < z.residues.size(); ++i) s += (i ? "|" : "") + std::to_string(z.residues[i]);
      return s;
    }
    std::string operator()(const AllZero&) const { return "all-zero"; }
    std::string operator()(const EventuallyZero& z) const {
      std::string s = "eventually:" + std::to_string(z.from) + ":";
      for (std::size_t i = 0; i < z.earlier.size(); ++i) s += (i ? "|" : "") + std::to_string(z.earlier[i]);
      return s;
    }
  };
  return std::visit(Visitor{}, r);
}

struct Thm23Summary {
  std::string branch;  // e.g. "far-a"
  Index n_min = 0;
  Index checked = 0;
  Index failures = 0;
  Index sharp_checked = 0;
  Index sharp_failures = 0;
  friend bool operator==(const Thm23Summary&, const Thm23Summary&) = default;
};

struct Thm24Summary {
  Index empirical = 0;  // n*
  Index formula = 0;    // n0 with the configured c5
  friend bool operator==(const Thm24Summary&, const Thm24Summary&) = default;
};

struct HeightSummary {
  std::string h;
  bool linear = false;
  bool height_bound_ok = false;
  std::string sandwich;  // "ok", "fail", "unit"
  bool self_reciprocal = false;
  friend bool operator==(const HeightSummary&, const HeightSummary&) = default;
};

struct Record {
  std::string a, b, p, q;
  std::string cls;
  std::string zero;
  Index zero_bound = 0;
  bool oracle_agrees = true;
  bool fast_agrees = true;
  std::optional<Thm23Summary> thm23;
  std::optional<Thm24Summary> thm24;
  std::optional<HeightSummary> height;
  std::optional<Index> lucas_failures;
  Index violations = 0;
  friend bool operator==(const Record&, const Record&) = default;
};

struct Discrepancy {
  std::string params;
  std::string kind;
  std::string detail;
  friend bool operator==(const Discrepancy&, const Discrepancy&) = default;
};

struct Summary {
  Index records = 0;
  Index degenerate = 0;
  Index real = 0;
  Index non_real = 0;
  Index zeros_found = 0;
  Index thm23_checked = 0;
  Index thm23_failures = 0;
  Index violations = 0;
  Index discrepancies = 0;
  friend bool operator==(const Summary&, const Summary&) = default;
};

struct Report {
  SweepConfig config;
  std::vector<Record> records;
  Summary summary;
  std::vector<Discrepancy> discrepancies;
};

inline std::string params_key(const Record& r) { return r.a + "," + r.b + "," + r.p + "," + r.q; }

namespace detail {

struct LucasCache {
  std::map<std::pair<long, long>, Index> failures;  // real-root non-degenerate pairs only
};

inline Record evaluate_point(const SequenceParams& s, const SweepConfig& cfg, const LucasCache& lucas) {
  Record rec;
  rec.a = s.a.get_str();
  rec.b = s.b.get_str();
  rec.p = s.p.get_str();
  rec.q = s.q.get_str();
  const SequenceClass cls = classify(s);
  rec.cls = cls.tag();

  // Zeros: decision procedure against the brute-force oracle.
  ZeroResult verdict;
  try {
    if (cls.is_degenerate()) {
      verdict = degenerate_zeros(s);
    } else {
      const SearchBound bound = zero_search_bound(s, cfg.c4);
      rec.zero_bound = bound.n_max;
      verdict = find_zero_within(s, bound);
    }
    rec.zero = verdict_code(verdict);
    const Index horizon = std::max(rec.zero_bound, cfg.oracle_horizon);
    const std::vector<Index> oracle = brute_force_zero_oracle(s, horizon);
    std::vector<Index> predicted;
    if (const auto* z = std::get_if<ZeroAt>(&verdict)) {
      predicted.push_back(z->k);
    } else if (!std::holds_alternative<NoZero>(verdict)) {
      for (Index n = 0; n <= horizon; ++n)
        if (predicts_zero(verdict, n)) predicted.push_back(n);
    }
    rec.oracle_agrees = predicted == oracle;
    if (!rec.oracle_agrees) ++rec.violations;
    // Real-root zero bound on normalized parameters.
    if (const auto* z = std::get_if<ZeroAt>(&verdict); z && cls.is_real()) {
      const Integer q = abs(normalize(s).q);
      if (sgn(q) != 0 &&
          compare_with_affine_ln(Rational(static_cast<unsigned long>(z->k)), Rational(9), Rational(12), Rational(q)) >= 0)
        ++rec.violations;
    }
  } catch (const InvariantViolation& e) {
    rec.zero = "invariant-violation";
    rec.oracle_agrees = false;
    ++rec.violations;
  }

  // Fast and iterative terms at the horizon.
  rec.fast_agrees = term_fast(s, cfg.n_horizon) == term_iter(s, cfg.n_horizon);
  if (!rec.fast_agrees) ++rec.violations;

  if (cls.is_real() && sgn(s.p) != 0 && sgn(s.q) != 0) {
    const Thm23Scan scan = scan_thm23(s, cfg.n_horizon, true);
    Thm23Summary t;
    t.branch = to_string(scan.branch.branch) + "-" + to_string(scan.branch.sub_case);
    t.n_min = scan.branch.n_min;
    t.checked = scan.checked;
    t.failures = scan.failures.size();
    t.sharp_checked = scan.sharp_checked;
    t.sharp_failures = scan.sharp_failures.size();
    rec.violations += t.failures;
    rec.thm23 = t;
  }
  if (cls.is_non_real()) {
    Thm24Summary t;
    t.empirical = empirical_threshold(s, cfg.n_horizon);
    t.formula = thm24_threshold(s, cfg.c5).n0;
    rec.thm24 = t;
  }
  if (!cls.is_degenerate()) {
    const RatioHeight rh = ratio_height(s);
    const HeightBoundCheck hb = height_bound_check(s, rh);
    HeightSummary h;
    h.h = rh.h.get_str();
    h.linear = rh.linear_case;
    h.height_bound_ok = hb.first_holds && hb.second_holds;
    h.self_reciprocal = rh.c0 == rh.c2;
    const SandwichResult sw = height_sandwich_check(s);
    h.sandwich = sw.unit_modulus ? "unit" : (sw.holds ? "ok" : "fail");
    if (!h.height_bound_ok) ++rec.violations;
    if (!rh.square_delta && !h.self_reciprocal) ++rec.violations;
    if (h.sandwich == "fail") ++rec.violations;
    rec.height = h;
  }
  if (cls.is_real()) {
    const auto it = lucas.failures.find({s.a.get_si(), s.b.get_si()});
    if (it != lucas.failures.end()) rec.lucas_failures = it->second;
  }
  return rec;
}

}  // namespace detail

/// Runs the sweep over the configured grid.
inline Report run_sweep(const SweepConfig& cfg) {
  validate(cfg);
  std::vector<SequenceParams> grid;
  for (long a = cfg.a.lo; a <= cfg.a.hi; ++a)
    for (long b = cfg.b.lo; b <= cfg.b.hi; ++b)
      for (long p = cfg.p.lo; p <= cfg.p.hi; ++p)
        for (long q = cfg.q.lo; q <= cfg.q.hi; ++q) grid.push_back(make_params(a, b, p, q));

  detail::LucasCache lucas;
  std::map<std::pair<long, long>, std::vector<Index>> lucas_lists;
  for (long a = cfg.a.lo; a <= cfg.a.hi; ++a)
    for (long b = cfg.b.lo; b <= cfg.b.hi; ++b) {
      if (!is_non_degenerate_pair(Integer(a), Integer(b)) || a * a - 4 * b <= 0) continue;
      auto failures = scan_lucas_bounds(Integer(a), Integer(b), cfg.n_horizon);
      lucas.failures[{a, b}] = failures.size();
      lucas_lists[{a, b}] = std::move(failures);
    }

  Report rep;
  rep.config = cfg;
  rep.records.resize(grid.size());
  std::atomic<std::size_t> next{0};
  std::mutex error_mutex;
  std::string first_error;
  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= grid.size()) return;
      try {
        rep.records[i] = detail::evaluate_point(grid[i], cfg, lucas);
      } catch (const std::exception& e) {
        std::lock_guard lock(error_mutex);
        if (first_error.empty()) first_error = grid[i].to_string() + ": " + e.what();
      }
    }
  };
  const int threads = std::max(1, std::min<int>(cfg.parallelism, static_cast<int>(grid.size())));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (!first_error.empty()) throw std::runtime_error("sweep failed at " + first_error);

  for (const auto& [key, list] : lucas_lists) {
    if (list.empty()) continue;
    std::string ns;
    for (std::size_t i = 0; i < list.size() && i < 10; ++i) ns += (i ? "," : "") + std::to_string(list[i]);
    if (list.size() > 10) ns += ",...";
    rep.discrepancies.push_back({std::to_string(key.first) + "," + std::to_string(key.second), "lucas-bound",
                                 "U_n bound fails at n=" + ns});
  }
  for (const auto& r : rep.records) {
    ++rep.summary.records;
    if (r.cls == "real") ++rep.summary.real;
    else if (r.cls == "non-real") ++rep.summary.non_real;
    else ++rep.summary.degenerate;
    if (r.zero.rfind("zero-at:", 0) == 0) ++rep.summary.zeros_found;
    if (r.thm23) {
      rep.summary.thm23_checked += r.thm23->checked;
      rep.summary.thm23_failures += r.thm23->failures;
      if (r.thm23->sharp_failures > 0)
        rep.discrepancies.push_back({params_key(r), "case-bound",
                                     "per-case bound fails at " + std::to_string(r.thm23->sharp_failures) + " of " +
                                         std::to_string(r.thm23->sharp_checked) + " indices (case " +
                                         r.thm23->branch + ")"});
    }
    if (r.thm24 && r.thm24->empirical > cfg.n_horizon)
      rep.discrepancies.push_back({params_key(r), "thm24-horizon", "|u_n|^3 >= B^n fails at the horizon"});
    rep.summary.violations += r.violations;
  }
  rep.summary.discrepancies = rep.discrepancies.size();
  return rep;
}

// ---------------------------------------------------------------------------
// JSON
// ---------------------------------------------------------------------------

inline json to_json(const Record& r) {
  json j;
  j["params"] = {{"a", r.a}, {"b", r.b}, {"p", r.p}, {"q", r.q}};
  j["class"] = r.cls;
  j["zero"] = {{"verdict", r.zero}, {"bound", std::to_string(r.zero_bound)}, {"oracle_agrees", r.oracle_agrees}};
  json g = json::object();
  g["fast_agrees"] = r.fast_agrees;
  if (r.thm23)
    g["thm23"] = {{"branch", r.thm23->branch},
                  {"n_min", r.thm23->n_min},
                  {"checked", r.thm23->checked},
                  {"failures", r.thm23->failures},
                  {"sharp_checked", r.thm23->sharp_checked},
                  {"sharp_failures", r.thm23->sharp_failures}};
  if (r.thm24) g["thm24"] = {{"empirical_n", r.thm24->empirical}, {"formula_n0", r.thm24->formula}};
  if (r.height)
    g["height"] = {{"h", r.height->h},
                   {"linear", r.height->linear},
                   {"height_bound_ok", r.height->height_bound_ok},
                   {"sandwich", r.height->sandwich},
                   {"self_reciprocal", r.height->self_reciprocal}};
  if (r.lucas_failures) g["lucas_failures"] = *r.lucas_failures;
  j["growth"] = g;
  j["violations"] = r.violations;
  return j;
}

inline Record record_from_json(const json& j) {
  Record r;
  const json& p = j.at("params");
  r.a = p.at("a").get<std::string>();
  r.b = p.at("b").get<std::string>();
  r.p = p.at("p").get<std::string>();
  r.q = p.at("q").get<std::string>();
  r.cls = j.at("class").get<std::string>();
  r.zero = j.at("zero").at("verdict").get<std::string>();
  r.zero_bound = std::stoull(j.at("zero").at("bound").get<std::string>());
  r.oracle_agrees = j.at("zero").at("oracle_agrees").get<bool>();
  const json& g = j.at("growth");
  r.fast_agrees = g.at("fast_agrees").get<bool>();
  if (g.contains("thm23")) {
    const json& t = g["thm23"];
    r.thm23 = Thm23Summary{t.at("branch").get<std::string>(), t.at("n_min").get<Index>(),
                           t.at("checked").get<Index>(),      t.at("failures").get<Index>(),
                           t.at("sharp_checked").get<Index>(), t.at("sharp_failures").get<Index>()};
  }
  if (g.contains("thm24"))
    r.thm24 = Thm24Summary{g["thm24"].at("empirical_n").get<Index>(), g["thm24"].at("formula_n0").get<Index>()};
  if (g.contains("height")) {
    const json& h = g["height"];
    r.height = HeightSummary{h.at("h").get<std::string>(), h.at("linear").get<bool>(), h.at("height_bound_ok").get<bool>(),
                             h.at("sandwich").get<std::string>(), h.at("self_reciprocal").get<bool>()};
  }
  if (g.contains("lucas_failures")) r.lucas_failures = g["lucas_failures"].get<Index>();
  r.violations = j.at("violations").get<Index>();
  return r;
}

inline json to_json(const Summary& s) {
  return json{{"records", s.records},         {"degenerate", s.degenerate},
              {"real", s.real},               {"non_real", s.non_real},
              {"zeros_found", s.zeros_found}, {"thm23_checked", s.thm23_checked},
              {"thm23_failures", s.thm23_failures}, {"violations", s.violations},
              {"discrepancies", s.discrepancies}};
}

inline Summary summary_from_json(const json& j) {
  Summary s;
  s.records = j.at("records").get<Index>();
  s.degenerate = j.at("degenerate").get<Index>();
  s.real = j.at("real").get<Index>();
  s.non_real = j.at("non_real").get<Index>();
  s.zeros_found = j.at("zeros_found").get<Index>();
  s.thm23_checked = j.at("thm23_checked").get<Index>();
  s.thm23_failures = j.at("thm23_failures").get<Index>();
  s.violations = j.at("violations").get<Index>();
  s.discrepancies = j.at("discrepancies").get<Index>();
  return s;
}

inline json to_json(const Report& rep) {
  json j;
  j["meta"] = {{"config", config_to_json(rep.config)}, {"version", kVersion}};
  json records = json::array();
  for (const auto& r : rep.records) records.push_back(to_json(r));
  j["records"] = std::move(records);
  j["summary"] = to_json(rep.summary);
  json disc = json::array();
  for (const auto& d : rep.discrepancies) disc.push_back({{"params", d.params}, {"kind", d.kind}, {"detail", d.detail}});
  j["discrepancies"] = std::move(disc);
  return j;
}

inline Report report_from_json(const json& j) {
  Report rep;
  rep.config = config_from_json(j.at("meta").at("config"));
  for (const auto& r : j.at("records")) rep.records.push_back(record_from_json(r));
  rep.summary = summary_from_json(j.at("summary"));
  for (const auto& d : j.at("discrepancies"))
    rep.discrepancies.push_back(
        {d.at("params").get<std::string>(), d.at("kind").get<std::string>(), d.at("detail").get<std::string>()});
  return rep;
}

// ---------------------------------------------------------------------------
// CSV
// ---------------------------------------------------------------------------

inline constexpr const char* kCsvHeader =
    "a,b,p,q,class,zero_verdict,zero_bound,oracle_agrees,fast_agrees,thm23_branch,thm23_n_min,thm23_checked,"
    "thm23_failures,sharp_checked,sharp_failures,thm24_empirical_n,thm24_formula_n0,height_h,height_linear,"
    "height_bound_ok,sandwich,self_reciprocal,lucas_failures,violations";

namespace detail {
inline std::string b01(bool x) { return x ? "1" : "0"; }
inline bool parse_b01(const std::string& s) {
  if (s == "1") return true;
  if (s == "0") return false;
  throw std::invalid_argument("expected 0/1, got '" + s + "'");
}
}  // namespace detail

inline std::string to_csv_row(const Record& r) {
  using detail::b01;
  std::vector<std::string> f = {r.a, r.b, r.p, r.q, r.cls, r.zero, std::to_string(r.zero_bound), b01(r.oracle_agrees),
                                b01(r.fast_agrees)};
  if (r.thm23) {
    for (auto x : {r.thm23->branch, std::to_string(r.thm23->n_min), std::to_string(r.thm23->checked),
                   std::to_string(r.thm23->failures), std::to_string(r.thm23->sharp_checked),
                   std::to_string(r.thm23->sharp_failures)})
      f.push_back(x);
  } else {
    f.insert(f.end(), 6, "");
  }
  if (r.thm24) {
    f.push_back(std::to_string(r.thm24->empirical));
    f.push_back(std::to_string(r.thm24->formula));
  } else {
    f.insert(f.end(), 2, "");
  }
  if (r.height) {
    for (auto x : {r.height->h, b01(r.height->linear), b01(r.height->height_bound_ok), r.height->sandwich,
                   b01(r.height->self_reciprocal)})
      f.push_back(x);
  } else {
    f.insert(f.end(), 5, "");
  }
  f.push_back(r.lucas_failures ? std::to_string(*r.lucas_failures) : "");
  f.push_back(std::to_string(r.violations));
  std::string line;
  for (std::size_t i = 0; i < f.size(); ++i) line += (i ? "," : "") + f[i];
  return line;
}

inline std::string to_csv(const Report& rep) {
  std::string out = std::string(kCsvHeader) + "\n";
  for (const auto& r : rep.records) out += to_csv_row(r) + "\n";
  return out;
}

inline std::vector<Record> records_from_csv(const std::string& text) {
  using detail::parse_b01;
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line != kCsvHeader) throw std::invalid_argument("CSV header mismatch");
  std::vector<Record> out;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string> f;
    std::string cell;
    std::istringstream ls(line);
    while (std::getline(ls, cell, ',')) f.push_back(cell);
    if (!line.empty() && line.back() == ',') f.push_back("");
    if (f.size() != 24) throw std::invalid_argument("CSV row has " + std::to_string(f.size()) + " fields");
    Record r;
    r.a = f[0];
    r.b = f[1];
    r.p = f[2];
    r.q = f[3];
    r.cls = f[4];
    r.zero = f[5];
    r.zero_bound = std::stoull(f[6]);
    r.oracle_agrees = parse_b01(f[7]);
    r.fast_agrees = parse_b01(f[8]);
    if (!f[9].empty())
      r.thm23 = Thm23Summary{f[9], std::stoull(f[10]), std::stoull(f[11]), std::stoull(f[12]), std::stoull(f[13]),
                             std::stoull(f[14])};
    if (!f[15].empty()) r.thm24 = Thm24Summary{std::stoull(f[15]), std::stoull(f[16])};
    if (!f[17].empty()) r.height = HeightSummary{f[17], parse_b01(f[18]), parse_b01(f[19]), f[20], parse_b01(f[21])};
    if (!f[22].empty()) r.lucas_failures = std::stoull(f[22]);
    r.violations = std::stoull(f[23]);
    out.push_back(std::move(r));
  }
  return out;
}

/// Serialized report text in the configured format.
inline std::string render_report(const Report& rep) {
  if (rep.config.format == "csv") return to_csv(rep);
  return to_json(rep).dump(2) + "\n";
}

/// Writes the report; a partially written file is removed on failure.
inline void write_report(const Report& rep, const std::string& path) {
  const std::string text = render_report(rep);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open " + path);
  out << text;
  out.close();
  if (!out) {
    std::remove(path.c_str());
    throw std::runtime_error("write failed for " + path);
  }
}

}  // namespace brigkit::app
