// brigkit command-line interface.
//
// Exit codes: 0 success, 1 usage or configuration error, 2 internal
// invariant violation, 3 sweep assertion failure.

#include "brigkit/brigkit.hpp"
#include "brigkit/sweep.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

namespace {

using brigkit::Index;
using brigkit::Integer;
using brigkit::SequenceParams;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInvariant = 2;
constexpr int kExitSweepFailure = 3;

struct ParamText {
  std::string a = "0", b = "0", p = "0", q = "0";

  void add_to(CLI::App* cmd, bool with_initial = true) {
    cmd->add_option("--a", a, "recurrence coefficient A")->required();
    cmd->add_option("--b", b, "recurrence coefficient B")->required();
    if (with_initial) {
      cmd->add_option("--p", p, "initial value u_0")->required();
      cmd->add_option("--q", q, "initial value u_1")->required();
    }
  }

  SequenceParams parse() const {
    return SequenceParams{brigkit::parse_integer(a), brigkit::parse_integer(b), brigkit::parse_integer(p),
                          brigkit::parse_integer(q)};
  }
};

Index parse_index(const std::string& text, const char* what) {
  const Integer v = brigkit::parse_integer(text);
  if (sgn(v) < 0) throw std::invalid_argument(std::string(what) + " must be >= 0");
  if (!v.fits_ulong_p()) throw std::invalid_argument(std::string(what) + " too large");
  return static_cast<Index>(v.get_ui());
}

json report_json(const brigkit::GrowthReport& r) {
  json checks = json::array();
  for (const auto& c : r.checks)
    checks.push_back({{"label", c.label},
                      {"holds", c.holds},
                      {"margin", {{"r", c.margin.r().get_str()}, {"s", c.margin.s().get_str()},
                                  {"delta", c.margin.delta().get_str()}}}});
  json j = {{"n", r.n}, {"theorem", brigkit::to_string(r.theorem)}, {"applicable", r.applicable}, {"note", r.note},
            {"checks", checks}};
  j["holds"] = r.bound_holds ? json(*r.bound_holds) : json(nullptr);
  return j;
}

std::string report_text(const brigkit::GrowthReport& r, bool below_threshold) {
  std::string s = brigkit::to_string(r.theorem) + " n=" + std::to_string(r.n) + ": ";
  if (!r.applicable && !r.bound_holds) return s + "not applicable (" + r.note + ")";
  s += "holds=" + std::string(r.bound_holds.value_or(false) ? "true" : "false");
  if (below_threshold) s += " (below threshold)";
  s += " [" + r.note + "]";
  for (const auto& c : r.checks) s += "\n  " + std::string(c.holds ? "ok   " : "FAIL ") + c.label;
  return s;
}

std::optional<brigkit::app::IntRange> parse_range(const std::string& text) {
  if (text.empty()) return std::nullopt;
  const auto colon = text.find(':', 1);
  if (colon == std::string::npos) throw std::invalid_argument("range must be lo:hi, got '" + text + "'");
  return brigkit::app::IntRange{std::stol(text.substr(0, colon)), std::stol(text.substr(colon + 1))};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"brigkit: exact tools for binary recurrences u_n = A u_{n-1} - B u_{n-2}"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "machine-readable output");

  ParamText classify_args;
  auto* classify_cmd = app.add_subcommand("classify", "classify a sequence");
  classify_args.add_to(classify_cmd);

  ParamText term_args;
  std::string term_n = "0";
  bool term_fast = false, term_iter = false;
  auto* term_cmd = app.add_subcommand("term", "compute u_n exactly");
  term_args.add_to(term_cmd);
  term_cmd->add_option("--n", term_n, "index")->required();
  auto* fast_flag = term_cmd->add_flag("--fast", term_fast, "matrix-power path");
  term_cmd->add_flag("--iter", term_iter, "iterative path")->excludes(fast_flag);

  ParamText zeros_args;
  std::int64_t zeros_c4 = brigkit::kDefaultC4;
  auto* zeros_cmd = app.add_subcommand("zeros", "decide whether and where u_k = 0");
  zeros_args.add_to(zeros_cmd);
  zeros_cmd->add_option("--c4", zeros_c4, "assumed bound on the implicit constant c4")->check(CLI::NonNegativeNumber);

  ParamText mz_args;
  std::string mz_k = "2", mz_kmax = "6";
  bool mz_family = false;
  auto* mz_cmd = app.add_subcommand("make-zero", "initial values with u_k = 0");
  mz_args.add_to(mz_cmd, false);
  mz_cmd->add_option("--k", mz_k, "vanishing index (>= 2)");
  mz_cmd->add_flag("--family", mz_family, "print the recursive family up to --kmax");
  mz_cmd->add_option("--kmax", mz_kmax, "largest k for --family");

  ParamText growth_args;
  std::string growth_n = "0", growth_check = "thm23", growth_c5 = "50", growth_c1;
  auto* growth_cmd = app.add_subcommand("growth", "check a growth lower bound at n");
  growth_args.add_to(growth_cmd);
  growth_cmd->add_option("--n", growth_n, "index");
  growth_cmd->add_option("--check", growth_check, "thm23|thm24|sharp|lucas|height")
      ->check(CLI::IsMember({"thm23", "thm24", "sharp", "lucas", "height"}));
  growth_cmd->add_option("--c5", growth_c5, "constant for the complex-root threshold (reporting only)");
  growth_cmd->add_option("--c1", growth_c1, "constant for the complex-root Lucas bound (reporting only)");

  brigkit::app::SweepConfig sweep_cfg;
  std::string sweep_config_file, ra, rb, rp, rq, sweep_c5;
  Index sweep_horizon = 0;
  std::int64_t sweep_c4 = -1;
  int sweep_threads = 0;
  auto* sweep_cmd = app.add_subcommand("sweep", "grid sweep with oracles; writes a report");
  sweep_cmd->add_option("--config", sweep_config_file, "JSON configuration file");
  sweep_cmd->add_option("--a-range", ra, "lo:hi");
  sweep_cmd->add_option("--b-range", rb, "lo:hi");
  sweep_cmd->add_option("--p-range", rp, "lo:hi");
  sweep_cmd->add_option("--q-range", rq, "lo:hi");
  sweep_cmd->add_option("--horizon", sweep_horizon, "largest n for growth checks");
  sweep_cmd->add_option("--c4", sweep_c4, "c4 for the zero search");
  sweep_cmd->add_option("--c5", sweep_c5, "c5 for the reported threshold formula");
  sweep_cmd->add_option("--threads", sweep_threads, "worker threads");
  sweep_cmd->add_option("--output", sweep_cfg.output_path, "report path (stdout when omitted)");
  sweep_cmd->add_option("--format", sweep_cfg.format, "json|csv");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*classify_cmd) {
      const SequenceParams s = classify_args.parse();
      const brigkit::SequenceClass cls = brigkit::classify(s);
      if (as_json)
        std::cout << json{{"class", cls.tag()}, {"text", cls.to_string()}}.dump() << "\n";
      else
        std::cout << cls.to_string() << "\n";
      return kExitOk;
    }
    if (*term_cmd) {
      const SequenceParams s = term_args.parse();
      const Index n = parse_index(term_n, "--n");
      const Integer u = term_fast ? brigkit::term_fast(s, n) : term_iter ? brigkit::term_iter(s, n) : brigkit::term(s, n);
      if (as_json)
        std::cout << json{{"n", n}, {"u", u.get_str()}}.dump() << "\n";
      else
        std::cout << u.get_str() << "\n";
      return kExitOk;
    }
    if (*zeros_cmd) {
      const SequenceParams s = zeros_args.parse();
      brigkit::ZeroResult r;
      std::optional<brigkit::SearchBound> bound;
      if (brigkit::classify(s).is_degenerate()) {
        r = brigkit::degenerate_zeros(s);
      } else {
        bound = brigkit::zero_search_bound(s, zeros_c4);
        r = brigkit::find_zero_within(s, *bound);
      }
      if (as_json) {
        json j = {{"verdict", brigkit::app::verdict_code(r)}, {"text", brigkit::render(r, bound ? &*bound : nullptr)}};
        if (bound) j["bound"] = {{"n_max", bound->n_max}, {"basis", brigkit::basis_name(bound->basis)}};
        std::cout << j.dump() << "\n";
      } else {
        std::cout << brigkit::render(r, bound ? &*bound : nullptr) << "\n";
      }
      return kExitOk;
    }
    if (*mz_cmd) {
      const Integer a = brigkit::parse_integer(mz_args.a), b = brigkit::parse_integer(mz_args.b);
      if (mz_family) {
        const Index kmax = parse_index(mz_kmax, "--kmax");
        json rows = json::array();
        for (const auto& e : brigkit::zero_family(a, b, kmax)) {
          Integer check = brigkit::term_iter(SequenceParams{a, b, e.p, e.q}, e.k);
          if (as_json)
            rows.push_back({{"k", e.k}, {"p", e.p.get_str()}, {"q", e.q.get_str()}, {"u_k", check.get_str()}});
          else
            std::cout << "k=" << e.k << " P=" << e.p.get_str() << " Q=" << e.q.get_str() << " u_k=" << check.get_str()
                      << "\n";
        }
        if (as_json) std::cout << rows.dump() << "\n";
      } else {
        const Index k = parse_index(mz_k, "--k");
        const brigkit::ZeroPair z = brigkit::construct_zero_at(a, b, k);
        if (as_json)
          std::cout << json{{"k", k}, {"p", z.p.get_str()}, {"q", z.q.get_str()}}.dump() << "\n";
        else
          std::cout << "P=" << z.p.get_str() << " Q=" << z.q.get_str() << "\n";
      }
      return kExitOk;
    }
    if (*growth_cmd) {
      const SequenceParams s = growth_args.parse();
      const Index n = parse_index(growth_n, "--n");
      if (growth_check == "height") {
        const brigkit::RatioHeight rh = brigkit::ratio_height(s);
        const brigkit::HeightBoundCheck hb = brigkit::height_bound_check(s, rh);
        const brigkit::SandwichResult sw = brigkit::height_sandwich_check(s);
        if (as_json) {
          json poly = json::array();
          for (const auto& c : rh.minimal) poly.push_back(c.get_str());
          std::cout << json{{"h", rh.h.get_str()},
                            {"minimal_polynomial", poly},
                            {"linear", rh.linear_case},
                            {"height_bounds_hold", hb.first_holds && hb.second_holds},
                            {"sandwich_holds", sw.holds},
                            {"unit_modulus", sw.unit_modulus}}
                           .dump()
                    << "\n";
        } else {
          std::cout << "H=" << rh.h.get_str() << ", sandwich " << (sw.holds ? "holds" : "fails")
                    << (sw.unit_modulus ? " (|b/a| = 1)" : "") << ", height bounds "
                    << (hb.first_holds && hb.second_holds ? "hold" : "fail") << "\n";
        }
        return kExitOk;
      }
      brigkit::GrowthReport rep;
      bool below = false;
      const brigkit::Rational c5 = brigkit::parse_rational(growth_c5);
      if (growth_check == "thm23") {
        rep = brigkit::check_thm23(s, n);
      }
      else if (growth_check == "sharp") rep = brigkit::check_case_sharp(s, n);
      else if (growth_check == "thm24") {
        rep = brigkit::check_thm24(s, n, c5);
        // The formula threshold carries a non-explicit constant; the
        // empirical threshold over a finite horizon is reported alongside.
        const brigkit::Index n_star = brigkit::empirical_threshold(s, std::max<brigkit::Index>(n, 300));
        rep.note += ", empirical n*=" + std::to_string(n_star);
        below = !rep.applicable || n < n_star;
      }
      else {
        std::optional<brigkit::Rational> c1;
        if (!growth_c1.empty()) c1 = brigkit::parse_rational(growth_c1);
        rep = brigkit::check_lucas_bounds(s.a, s.b, n, c1);
      }
      if (as_json) {
        json j = report_json(rep);
        j["below_threshold"] = below || !rep.applicable;
        std::cout << j.dump() << "\n";
      }
      else {
        std::cout << report_text(rep, below || !rep.applicable) << "\n";
      }
      return kExitOk;
    }
    if (*sweep_cmd) {
      brigkit::app::SweepConfig cfg = sweep_cfg;
      if (!sweep_config_file.empty()) {
        std::ifstream in(sweep_config_file);
        if (!in) throw brigkit::app::ConfigError("cannot read " + sweep_config_file);
        json j;
        try {
          in >> j;
        } catch (const json::exception& e) {
          throw brigkit::app::ConfigError(std::string("bad config file: ") + e.what());
        }
        const std::string out_path = cfg.output_path, fmt = cfg.format;
        cfg = brigkit::app::config_from_json(j);
        if (!out_path.empty()) cfg.output_path = out_path;
        if (sweep_cmd->count("--format")) cfg.format = fmt;
      }
      if (auto r = parse_range(ra)) cfg.a = *r;
      if (auto r = parse_range(rb)) cfg.b = *r;
      if (auto r = parse_range(rp)) cfg.p = *r;
      if (auto r = parse_range(rq)) cfg.q = *r;
      if (sweep_horizon != 0) cfg.n_horizon = sweep_horizon;
      if (sweep_c4 >= 0) cfg.c4 = sweep_c4;
      if (!sweep_c5.empty()) cfg.c5 = brigkit::parse_rational(sweep_c5);
      if (sweep_threads != 0) cfg.parallelism = sweep_threads;
      brigkit::app::apply_environment(cfg);
      brigkit::app::validate(cfg);
      const brigkit::app::Report rep = brigkit::app::run_sweep(cfg);
      if (cfg.output_path.empty())
        std::cout << brigkit::app::render_report(rep);
      else
        brigkit::app::write_report(rep, cfg.output_path);
      std::cerr << "records=" << rep.summary.records << " violations=" << rep.summary.violations
                << " discrepancies=" << rep.summary.discrepancies << "\n";
      return rep.summary.violations == 0 ? kExitOk : kExitSweepFailure;
    }
  } catch (const brigkit::InvariantViolation& e) {
    std::cerr << "invariant violation: " << e.what() << "\n";
    return kExitInvariant;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
