#pragma once

// Exact verification of growth lower bounds for |u_n|:
//  - real roots: the far/near threshold theorem and the sharper per-case
//    bounds (cases a, b1, b2, c, d),
//  - complex roots: |u_n|^3 >= B^n,
//  - Lucas sequence bounds for U_n,
//  - the height of b/a and its two-sided modulus estimate.
//
// Every comparison is exact. Powers of alpha = (A + sqrt(delta))/2 are
// written as (V_m + U_m sqrt(delta))/2, powers of the golden ratio as
// (L_n + F_n sqrt(5))/2, and all rational prefactors are cleared by
// cross-multiplication before a single quad_sign call.

#include "brigkit/core.hpp"
#include "brigkit/exactnum.hpp"
#include "brigkit/terms.hpp"

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

namespace brigkit {

inline constexpr long kDefaultC5 = 50;
inline constexpr long kDefaultC1 = 100;

enum class RealBranch { Far, Near };

enum class RealSubCase { A, B, C, D };

inline std::string to_string(RealBranch b) { return b == RealBranch::Far ? "far" : "near"; }

inline std::string to_string(RealSubCase c) {
  switch (c) {
    case RealSubCase::A:
      return "a";
    case RealSubCase::B:
      return "b";
    case RealSubCase::C:
      return "c";
    case RealSubCase::D:
      return "d";
  }
  return "?";
}

/// Branch and case split for a real-root sequence, computed on the
/// A > 0 representative (u_n -> (-1)^n u_n leaves |u_n| unchanged).
struct RealCaseBranch {
  RealBranch branch = RealBranch::Far;
  RealSubCase sub_case = RealSubCase::A;
  Index n_min = 0;           ///< first n covered by the theorem for this branch
  Rational ratio;            ///< |Q/P|
  SequenceParams positive;   ///< parameters with A > 0
  Integer delta;             ///< A^2 - 4B
};

enum class GrowthTheorem { Thm23, Thm24, Lemma31, Case18, Case21, Case24, Case26, Case32 };

inline std::string to_string(GrowthTheorem t) {
  switch (t) {
    case GrowthTheorem::Thm23:
      return "thm23";
    case GrowthTheorem::Thm24:
      return "thm24";
    case GrowthTheorem::Lemma31:
      return "lemma31";
    case GrowthTheorem::Case18:
      return "case-a";
    case GrowthTheorem::Case21:
      return "case-b1";
    case GrowthTheorem::Case24:
      return "case-b2";
    case GrowthTheorem::Case26:
      return "case-c";
    case GrowthTheorem::Case32:
      return "case-d";
  }
  return "?";
}

/// One exact inequality. `margin` is a positive multiple of lhs - rhs; the
/// inequality holds iff quad_sign(margin) >= 0.
struct BoundCheck {
  std::string label;
  bool holds = false;
  QuadElem margin;
};

struct GrowthReport {
  Index n = 0;
  GrowthTheorem theorem = GrowthTheorem::Thm23;
  bool applicable = false;
  std::optional<bool> bound_holds;  ///< set whenever the inequalities were evaluated
  std::vector<BoundCheck> checks;
  std::string note;

  /// Certificate of the first failing check, or of the first check.
  const QuadElem* margin_certificate() const {
    for (const auto& c : checks)
      if (!c.holds) return &c.margin;
    return checks.empty() ? nullptr : &checks.front().margin;
  }
};

namespace detail {

inline QuadElem int_margin(const Integer& x) { return QuadElem::rational(Rational(x), Integer(0)); }

/// k*|u| scaled against c*alpha^m: margin 2k|u| - c V_m - c U_m sqrt(delta).
inline BoundCheck alpha_check(std::string label, const Integer& lhs_times_two, const Integer& c, const Integer& v,
                              const Integer& u, const Integer& delta) {
  Integer r = lhs_times_two - c * v;
  Integer s = -c * u;
  const bool ok = quad_sign(r, s, delta) >= 0;
  return BoundCheck{std::move(label), ok, QuadElem(Rational(r), Rational(s), delta)};
}

inline BoundCheck int_check(std::string label, const Integer& margin) {
  return BoundCheck{std::move(label), sgn(margin) >= 0, int_margin(margin)};
}

inline Integer shl(const Integer& x, Index bits) {
  Integer r;
  mpz_mul_2exp(r.get_mpz_t(), x.get_mpz_t(), static_cast<mp_bitcnt_t>(bits));
  return r;
}

inline void finish(GrowthReport& r) {
  bool all = true;
  for (const auto& c : r.checks) all = all && c.holds;
  r.bound_holds = all;
}

}  // namespace detail

/// Lucas data needed to evaluate the real-case inequalities at index n:
/// (U, V) at n-2, n-1, n for (A, B) and (F_n, L_n) for the golden ratio,
/// plus 3^n and 5^n.
struct PowerView {
  const LucasPair* at_n_minus_2 = nullptr;
  const LucasPair* at_n_minus_1 = nullptr;
  const LucasPair* at_n = nullptr;
  const LucasPair* golden_n = nullptr;
  const Integer* pow3 = nullptr;
  const Integer* pow5 = nullptr;
};

/// Consecutive Lucas pairs (U_m, V_m), ..., (U_{m+count-1}, V_{m+count-1}).
inline std::vector<LucasPair> lucas_window(const Integer& a, const Integer& b, Index m, Index count) {
  std::vector<LucasPair> out;
  if (count == 0) return out;
  LucasPair first = lucas_pair(a, b, m);
  LucasPair second = lucas_pair(a, b, m + 1);
  out.push_back(first);
  if (count > 1) out.push_back(second);
  while (out.size() < count) {
    const LucasPair& p1 = out[out.size() - 1];
    const LucasPair& p0 = out[out.size() - 2];
    out.push_back(LucasPair{p1.n + 1, Integer(a * p1.u - b * p0.u), Integer(a * p1.v - b * p0.v)});
  }
  return out;
}

/// Owns the data behind a PowerView computed by fast doubling.
struct PointPowers {
  std::vector<LucasPair> window;
  LucasPair golden;
  Integer pow3;
  Integer pow5;

  PointPowers(const Integer& a, const Integer& b, Index n)
      : window(lucas_window(a, b, n >= 2 ? n - 2 : 0, 3)),
        golden(lucas_pair(Integer(1), Integer(-1), n)),
        pow3(pow_integer(3, n)),
        pow5(pow_integer(5, n)) {}

  PowerView view() const { return PowerView{&window[0], &window[1], &window[2], &golden, &pow3, &pow5}; }
};

/// Branch selection; every comparison is a quad_sign call with radicand
/// delta = A^2 - 4B.
inline RealCaseBranch real_case_branch(const SequenceParams& s) {
  if (!classify(s).is_real()) throw DomainError("real_case_branch: not a real-case sequence " + s.to_string());
  if (sgn(s.p) == 0 || sgn(s.q) == 0) throw DomainError("real_case_branch: requires PQ != 0");
  RealCaseBranch br;
  br.positive = with_positive_a(s);
  br.delta = br.positive.a * br.positive.a - 4 * br.positive.b;
  br.ratio = Rational(abs(s.q), abs(s.p));
  br.ratio.canonicalize();
  const Rational a(br.positive.a);
  const Rational six_q = 6 * br.ratio;
  const Rational nine_q = 9 * br.ratio;
  // A - D >= 6|Q/P|  <=>  (A - 6|Q/P|) - sqrt(delta) >= 0
  const bool case_a = quad_sign(a - six_q, Rational(-1), br.delta) >= 0;
  // D - A >= 6|Q/P|  <=>  (-A - 6|Q/P|) + sqrt(delta) >= 0
  const bool case_b = quad_sign(-a - six_q, Rational(1), br.delta) >= 0;
  if (case_a || case_b) {
    br.branch = RealBranch::Far;
    br.sub_case = case_a ? RealSubCase::A : RealSubCase::B;
    br.n_min = to_index(ceil_of(six_q + 6));
  } else {
    br.branch = RealBranch::Near;
    // A + D >= 9|Q/P|  <=>  (A - 9|Q/P|) + sqrt(delta) >= 0
    br.sub_case = quad_sign(a - nine_q, Rational(1), br.delta) >= 0 ? RealSubCase::C : RealSubCase::D;
    const Rational ln_q = abs(s.q) == 1 ? Rational(0) : ln_upper(Integer(abs(s.q)));
    const Rational factor = std::max(Rational(1), br.ratio);
    br.n_min = to_index(ceil_of((18 + 7 * ln_q) * factor));
  }
  return br;
}

/// Both inequalities of the threshold theorem for the branch, at index n,
/// given |u_n|. Evaluated regardless of the threshold.
inline std::vector<BoundCheck> thm23_inequalities(const RealCaseBranch& br, Index n, const Integer& abs_u,
                                                  const PowerView& pw) {
  using detail::alpha_check;
  using detail::shl;
  std::vector<BoundCheck> out;
  const Integer abs_p = abs(br.positive.p);
  const Integer abs_q = abs(br.positive.q);
  if (n < 2) throw DomainError("thm23 inequalities need n >= 2");
  const LucasPair& m2 = *pw.at_n_minus_2;
  if (br.branch == RealBranch::Far) {
    // 2^(n-2)|u_n| >= |Q| alpha^(n-2)
    out.push_back(alpha_check("|u_n| >= |Q|(alpha/2)^(n-2)", shl(abs_u, n - 1), abs_q, m2.v, m2.u, br.delta));
    // 4^n u_n^2 >= Q^2 5^n
    out.push_back(detail::int_check("|u_n| >= |Q|(sqrt5/2)^n", shl(abs_u * abs_u, 2 * n) - abs_q * abs_q * *pw.pow5));
  } else {
    const Integer m = std::max(Integer(5 * abs_p), Integer(22 * abs_q));
    out.push_back(alpha_check("|u_n| >= min(1/(5|P|),1/(22|Q|)) alpha^(n-2)", 2 * m * abs_u, Integer(1), m2.v, m2.u,
                              br.delta));
    const Integer m_phi = std::max(Integer(14 * abs_p), Integer(36 * abs_q));
    out.push_back(alpha_check("|u_n| >= min(1/(14|P|),1/(36|Q|)) phi^n", 2 * m_phi * abs_u, Integer(1),
                              pw.golden_n->v, pw.golden_n->u, Integer(5)));
  }
  return out;
}

/// Threshold theorem for real roots at index n.
inline GrowthReport check_thm23(const SequenceParams& s, Index n) {
  const RealCaseBranch br = real_case_branch(s);
  GrowthReport rep;
  rep.n = n;
  rep.theorem = GrowthTheorem::Thm23;
  rep.note = "branch=" + to_string(br.branch) + " case=" + to_string(br.sub_case) + " n_min=" + std::to_string(br.n_min);
  if (sgn(s.a) < 0) rep.note += " (evaluated on A -> -A, |u_n| unchanged)";
  if (n < br.n_min) {
    rep.applicable = false;
    return rep;
  }
  rep.applicable = true;
  const PointPowers pp(br.positive.a, br.positive.b, n);
  rep.checks = thm23_inequalities(br, n, abs(term(s, n)), pp.view());
  detail::finish(rep);
  return rep;
}

/// Hypotheses of the sharper per-case bound at index n; empty string when
/// they hold, otherwise the reason.
inline std::string sharp_case_hypothesis_failure(const RealCaseBranch& br, Index n) {
  const Integer abs_q = abs(br.positive.q);
  if (n < 7) return "requires n >= 7";
  switch (br.sub_case) {
    case RealSubCase::A:
      return "";
    case RealSubCase::B:
      if (n % 2 == 1 && Rational(static_cast<unsigned long>(n)) < 6 * br.ratio + 3) return "case b2 requires n >= 6|Q/P|+3";
      return "";
    case RealSubCase::C: {
      // n > 12 + 5 ln|Q|
      const Rational bound = abs_q == 1 ? Rational(12) : 12 + 5 * ln_upper(abs_q);
      if (!(Rational(static_cast<unsigned long>(n)) > bound)) return "case c requires n > 12 + 5 ln|Q|";
      return "";
    }
    case RealSubCase::D: {
      const Rational ln_q = abs_q == 1 ? Rational(0) : ln_upper(abs_q);
      const Rational bound = (18 + 7 * ln_q) * std::max(Rational(1), br.ratio);
      if (Rational(static_cast<unsigned long>(n)) < bound) return "case d requires n >= (18 + 7 ln|Q|) max(1,|Q/P|)";
      return "";
    }
  }
  return "unknown case";
}

/// Per-case sharper inequalities at index n (hypotheses not checked here).
inline GrowthReport sharp_inequalities(const RealCaseBranch& br, Index n, const Integer& abs_u, const PowerView& pw) {
  using detail::alpha_check;
  using detail::int_check;
  using detail::shl;
  GrowthReport rep;
  rep.n = n;
  rep.applicable = true;
  const Integer& a = br.positive.a;
  const Integer abs_p = abs(br.positive.p);
  const Integer abs_q = abs(br.positive.q);
  const LucasPair& m2 = *pw.at_n_minus_2;
  const LucasPair& m1 = *pw.at_n_minus_1;
  const LucasPair& m0 = *pw.at_n;
  const LucasPair& phi = *pw.golden_n;
  switch (br.sub_case) {
    case RealSubCase::A:
      rep.theorem = GrowthTheorem::Case18;
      rep.checks.push_back(int_check("|u_n| >= 11|Q|(A/2)^(n-1)",
                                     shl(abs_u, n - 1) - 11 * abs_q * pow_integer(a, n - 1)));
      rep.checks.push_back(alpha_check("|u_n| >= 11|Q|(alpha/2)^(n-1)", shl(abs_u, n), Integer(11 * abs_q), m1.v, m1.u,
                                       br.delta));
      rep.checks.push_back(int_check("|u_n| >= 7|Q|(3/2)^n", shl(abs_u, n) - 7 * abs_q * *pw.pow3));
      break;
    case RealSubCase::B:
      if (n % 2 == 0) {
        rep.theorem = GrowthTheorem::Case21;
        rep.checks.push_back(alpha_check("|u_n| >= |Q| alpha^(n-1)", 2 * abs_u, abs_q, m1.v, m1.u, br.delta));
        // 10|u_n| >= 3|Q|(L_n + F_n sqrt5)
        rep.checks.push_back(alpha_check("|u_n| >= 0.6|Q| phi^n", 10 * abs_u, Integer(3 * abs_q), phi.v, phi.u,
                                         Integer(5)));
      } else {
        rep.theorem = GrowthTheorem::Case24;
        // 2^(n-1)|u_n| >= n A |Q| delta^((n-3)/2) sqrt(delta)
        {
          Integer r = shl(abs_u, n - 1);
          Integer sc = -(Integer(static_cast<unsigned long>(n)) * a * abs_q * pow_integer(br.delta, (n - 3) / 2));
          const bool ok = quad_sign(r, sc, br.delta) >= 0;
          rep.checks.push_back({"|u_n| >= (1/2) n A |Q| (D/2)^(n-2)", ok, QuadElem(Rational(r), Rational(sc), br.delta)});
        }
        rep.checks.push_back(alpha_check("|u_n| >= (7/2) A |Q| (alpha/2)^(n-2)", shl(abs_u, n), Integer(7 * a * abs_q),
                                         m2.v, m2.u, br.delta));
        // 25 * 4^n u^2 >= 196 Q^2 5^n
        rep.checks.push_back(int_check("|u_n| >= 2.8|Q|(sqrt5/2)^n",
                                       25 * shl(abs_u * abs_u, 2 * n) - 196 * abs_q * abs_q * *pw.pow5));
      }
      break;
    case RealSubCase::C:
      rep.theorem = GrowthTheorem::Case26;
      rep.checks.push_back(alpha_check("|u_n| >= alpha^(n-2)/(5|P|)", 10 * abs_p * abs_u, Integer(1), m2.v, m2.u,
                                       br.delta));
      rep.checks.push_back(alpha_check("|u_n| >= phi^n/(14|P|)", 28 * abs_p * abs_u, Integer(1), phi.v, phi.u,
                                       Integer(5)));
      break;
    case RealSubCase::D: {
      rep.theorem = GrowthTheorem::Case32;
      // 11|Q| D |u_n| >= alpha^n:  -V_n + (22|Q||u_n| - U_n) sqrt(delta) >= 0
      Integer r = -m0.v;
      Integer sc = 22 * abs_q * abs_u - m0.u;
      const bool ok = quad_sign(r, sc, br.delta) >= 0;
      rep.checks.push_back({"|u_n| >= ((A+D)/2)^n / (11|Q|D)", ok, QuadElem(Rational(r), Rational(sc), br.delta)});
      rep.checks.push_back(alpha_check("|u_n| >= alpha^(n-1)/(22|Q|)", 44 * abs_q * abs_u, Integer(1), m1.v, m1.u,
                                       br.delta));
      rep.checks.push_back(alpha_check("|u_n| >= phi^n/(36|Q|)", 72 * abs_q * abs_u, Integer(1), phi.v, phi.u,
                                       Integer(5)));
      break;
    }
  }
  detail::finish(rep);
  return rep;
}

/// Sharper per-case bound at index n; not applicable when the case's own
/// hypotheses fail.
inline GrowthReport check_case_sharp(const SequenceParams& s, Index n) {
  const RealCaseBranch br = real_case_branch(s);
  const std::string why = sharp_case_hypothesis_failure(br, n);
  if (!why.empty()) {
    GrowthReport rep;
    rep.n = n;
    rep.applicable = false;
    rep.note = "case " + to_string(br.sub_case) + ": " + why;
    switch (br.sub_case) {
      case RealSubCase::A:
        rep.theorem = GrowthTheorem::Case18;
        break;
      case RealSubCase::B:
        rep.theorem = n % 2 == 0 ? GrowthTheorem::Case21 : GrowthTheorem::Case24;
        break;
      case RealSubCase::C:
        rep.theorem = GrowthTheorem::Case26;
        break;
      case RealSubCase::D:
        rep.theorem = GrowthTheorem::Case32;
        break;
    }
    return rep;
  }
  const PointPowers pp(br.positive.a, br.positive.b, n);
  GrowthReport rep = sharp_inequalities(br, n, abs(term(s, n)), pp.view());
  rep.note = "case " + to_string(br.sub_case);
  return rep;
}

// ---------------------------------------------------------------------------
// Complex roots
// ---------------------------------------------------------------------------

struct Thm24Threshold {
  Rational value;  ///< certified upper bound of c5 ln(X) (ln ln X)^2, X = B|P| + |Q|
  Index n0 = 1;
};

/// Structural threshold c5 * ln(X) * (ln ln X)^2 with X = B|P| + |Q|,
/// rounded up; 1 when X <= e.
inline Thm24Threshold thm24_threshold(const SequenceParams& s, const Rational& c5 = Rational(kDefaultC5)) {
  if (!classify(s).is_non_real()) throw DomainError("thm24_threshold: not a non-real sequence " + s.to_string());
  const Integer x = s.b * abs(s.p) + abs(s.q);
  if (x <= 2) return {Rational(1), 1};
  const Rational ln_x = ln_upper(x);
  const Rational ln_ln_x = ln_upper(ln_x);
  Thm24Threshold t;
  t.value = c5 * ln_x * ln_ln_x * ln_ln_x;
  t.n0 = to_index(ceil_of(t.value));
  if (t.n0 < 1) t.n0 = 1;
  return t;
}

inline std::vector<BoundCheck> thm24_inequalities(const Integer& abs_u, const Integer& b, Index n) {
  std::vector<BoundCheck> out;
  // |u_n|^3 >= B^n
  out.push_back(detail::int_check("|u_n| >= |alpha|^(2n/3)", abs_u * abs_u * abs_u - pow_integer(b, n)));
  // |u_n| 4^n >= 5^n
  out.push_back(detail::int_check("|u_n| >= 1.25^n", detail::shl(abs_u, 2 * n) - pow_integer(5, n)));
  return out;
}

/// |u_n|^3 >= B^n, always evaluated. `applicable` reflects the configured
/// structural threshold, whose constant is not explicit.
inline GrowthReport check_thm24(const SequenceParams& s, Index n, const Rational& c5 = Rational(kDefaultC5)) {
  const Thm24Threshold t = thm24_threshold(s, c5);
  GrowthReport rep;
  rep.n = n;
  rep.theorem = GrowthTheorem::Thm24;
  rep.applicable = n > t.n0;
  rep.note = "threshold n0=" + std::to_string(t.n0) + " (c5=" + c5.get_str() + ")";
  if (!rep.applicable) rep.note += ", below threshold";
  rep.checks = thm24_inequalities(abs(term(s, n)), s.b, n);
  detail::finish(rep);
  return rep;
}

/// Smallest n* such that |u_n|^3 >= B^n for every n in [n*, horizon];
/// horizon + 1 when the check fails at the horizon itself.
inline Index empirical_threshold(const SequenceParams& s, Index horizon) {
  if (!classify(s).is_non_real()) throw DomainError("empirical_threshold: not a non-real sequence " + s.to_string());
  Index last_failure = 0;
  bool any_failure = false;
  TermWindow w = TermWindow::start(s);
  Integer b_pow = 1;
  Integer cube;
  for (;;) {
    const Integer& u = w.current;
    cube = u * u;
    cube *= u;
    if (abs(cube) < b_pow) {
      any_failure = true;
      last_failure = w.n;
    }
    if (w.n >= horizon) break;
    w.advance(s.a, s.b);
    b_pow *= s.b;
  }
  return any_failure ? last_failure + 1 : 0;
}

// ---------------------------------------------------------------------------
// Lucas sequences
// ---------------------------------------------------------------------------

inline bool is_non_degenerate_pair(const Integer& a, const Integer& b) {
  return classify(SequenceParams{a, b, Integer(0), Integer(1)}).kind != SequenceClass::Kind::Degenerate;
}

/// Lucas bounds for U_n: 2|U_n| >= alpha^(n-2) when B < 0 and
/// |U_n| >= alpha^(n-1) when 0 < 4B < A^2. For complex roots the bound
/// |U_n| >= |alpha|^(n - c1 (ln n)^2) needs an explicit c1 and is reported
/// conservatively as |U_n|^2 >= B^ceil(n - c1 (ln n)^2).
inline GrowthReport check_lucas_bounds(const Integer& a_in, const Integer& b, Index n,
                                       std::optional<Rational> c1 = std::nullopt) {
  if (!is_non_degenerate_pair(a_in, b)) throw DomainError("check_lucas_bounds: degenerate (A,B)");
  if (n < 2) throw DomainError("check_lucas_bounds requires n >= 2");
  const Integer a = abs(a_in);
  const Integer delta = a * a - 4 * b;
  GrowthReport rep;
  rep.n = n;
  rep.theorem = GrowthTheorem::Lemma31;
  rep.applicable = true;
  if (sgn(delta) < 0) {
    if (!c1) throw DomainError("check_lucas_bounds: complex roots need an explicit c1");
    const Integer u = abs(lucas_U(a, b, n));
    const Rational ln_n = ln_enclosure(Integer(static_cast<unsigned long>(n))).lo;
    const Rational exponent_upper = Rational(static_cast<unsigned long>(n)) - *c1 * ln_n * ln_n;
    rep.note = "c1=" + c1->get_str() + " (reporting only)";
    if (sgn(exponent_upper) <= 0) {
      rep.checks.push_back(detail::int_check("|U_n| >= |alpha|^(n - c1 ln^2 n)", Integer(sgn(u) != 0 ? 1 : -1)));
    } else {
      const Index e = to_index(ceil_of(exponent_upper));
      rep.checks.push_back(detail::int_check("|U_n| >= |alpha|^(n - c1 ln^2 n)", u * u - pow_integer(b, e)));
    }
    detail::finish(rep);
    return rep;
  }
  const auto window = lucas_window(a, b, n - 2, 3);
  const Integer u = abs(window[2].u);
  if (sgn(b) < 0) {
    // 2|U_n| >= alpha^(n-2)  <=>  4|U_n| - V_{n-2} - U_{n-2} sqrt(delta) >= 0
    rep.checks.push_back(detail::alpha_check("2|U_n| >= alpha^(n-2)", 4 * u, Integer(1), window[0].v, window[0].u, delta));
  } else {
    rep.checks.push_back(detail::alpha_check("|U_n| >= alpha^(n-1)", 2 * u, Integer(1), window[1].v, window[1].u, delta));
  }
  detail::finish(rep);
  return rep;
}

// ---------------------------------------------------------------------------
// Height of b/a
// ---------------------------------------------------------------------------

struct RatioHeight {
  /// Content-reduced c0 x^2 + c1 x + c2 with c0 = c2 = Q^2 - PQA + BP^2,
  /// c1 = -(2Q^2 - 2PQA + P^2 (A^2 - 2B)), from D^2 (bx - a)(ax - b).
  Integer c0, c1, c2;
  /// Primitive minimal polynomial of b/a, highest degree first.
  std::vector<Integer> minimal;
  Integer h;  ///< naive height: max |coefficient| of `minimal`
  bool linear_case = false;
  bool square_delta = false;
};

namespace detail {
inline void make_primitive(std::vector<Integer>& coeffs) {
  Integer g = 0;
  for (const auto& c : coeffs) g = gcd(g, c);
  if (sgn(g) == 0) return;
  if (sgn(coeffs.front()) < 0) g = -g;
  for (auto& c : coeffs) c /= g;
}
}  // namespace detail

/// Requires a, b defined and non-zero: A^2 != 4B, (P,Q) != (0,0), and for
/// square delta Q != P*alpha, Q != P*beta.
inline RatioHeight ratio_height(const SequenceParams& s_in) {
  const SequenceParams s = with_positive_a(s_in);  // b/a is unchanged
  const Discriminant disc = discriminant(s);
  if (sgn(disc.delta) == 0) throw DomainError("ratio_height: equal roots");
  if (sgn(s.p) == 0 && sgn(s.q) == 0) throw DomainError("ratio_height: P = Q = 0");
  const Integer &a = s.a, &b = s.b, &p = s.p, &q = s.q;
  if (disc.is_square) {
    const Integer& d = disc.root;
    if (2 * q == p * (a - d) || 2 * q == p * (a + d)) throw DomainError("ratio_height: a*b = 0");
  }
  RatioHeight out;
  out.square_delta = disc.is_square;
  std::vector<Integer> eq = {q * q - p * q * a + b * p * p, -(2 * q * q - 2 * p * q * a + p * p * (a * a - 2 * b)),
                             q * q - p * q * a + b * p * p};
  detail::make_primitive(eq);
  out.c0 = eq[0];
  out.c1 = eq[1];
  out.c2 = eq[2];
  if (disc.is_square) {
    const Integer& d = disc.root;
    out.minimal = {p * a - p * d - 2 * q, -(p * a + p * d - 2 * q)};
    out.linear_case = true;
  } else if (out.c1 * out.c1 == 4 * out.c0 * out.c2) {
    // Double root -c1/(2 c0) = +-1: b/a is rational.
    out.minimal = {Integer(1), Integer(out.c1 / (2 * out.c0))};
    out.linear_case = true;
  } else {
    out.minimal = eq;
  }
  detail::make_primitive(out.minimal);
  out.h = 0;
  for (const auto& c : out.minimal) out.h = std::max(out.h, Integer(abs(c)));
  return out;
}

struct HeightBoundCheck {
  bool first_holds = false;   ///< H <= 2Q^2 + 2|PQ|A + P^2 (A^2 + |delta|)/2
  bool second_holds = false;  ///< H <= 2(|Q| + |P|(A + |D|)/2)^2 - 1
  Integer first_rhs;
  QuadElem second_margin;
};

/// Both height bounds with A taken positive and |D| = sqrt(|A^2 - 4B|).
inline HeightBoundCheck height_bound_check(const SequenceParams& s_in, const RatioHeight& rh) {
  const SequenceParams s = with_positive_a(s_in);
  const Integer abs_delta = abs(Integer(s.a * s.a - 4 * s.b));
  const Integer abs_p = abs(s.p), abs_q = abs(s.q);
  HeightBoundCheck out;
  out.first_rhs = 2 * abs_q * abs_q + 2 * abs_p * abs_q * s.a + abs_p * abs_p * ((s.a * s.a + abs_delta) / 2);
  out.first_holds = rh.h <= out.first_rhs;
  // t = |Q| + |P| A / 2 + (|P|/2) sqrt(|delta|)
  const QuadElem t(Rational(abs_q) + Rational(abs_p * s.a, 2), Rational(abs_p, 2), abs_delta);
  const QuadElem bound = quad_sub(quad_scale(quad_mul(t, t), Rational(2)), QuadElem::rational(Rational(1), abs_delta));
  out.second_margin = quad_sub(bound, QuadElem::rational(Rational(rh.h), abs_delta));
  out.second_holds = quad_sign(out.second_margin) >= 0;
  return out;
}

struct SandwichResult {
  bool holds = false;
  bool unit_modulus = false;  ///< complex roots: |b/a| = 1
  Integer h;
  QuadElem ratio;  ///< b/a for real roots
};

/// b/a = (2Q - PA - P sqrt(delta)) / (2Q - PA + P sqrt(delta)) for A > 0.
inline QuadElem ratio_b_over_a(const SequenceParams& s_in) {
  const SequenceParams s = with_positive_a(s_in);
  const Integer delta = s.a * s.a - 4 * s.b;
  if (sgn(delta) <= 0) throw DomainError("ratio_b_over_a: needs real distinct roots");
  const Integer x = 2 * s.q - s.p * s.a;
  const Integer den = x * x - s.p * s.p * delta;
  if (sgn(den) == 0) throw DomainError("ratio_b_over_a: a = 0");
  return QuadElem(Rational(x * x + s.p * s.p * delta, den), Rational(-2 * x * s.p, den), delta);
}

/// 1/(H+1) < |b/a| < H+1.
inline SandwichResult height_sandwich_check(const SequenceParams& s) {
  const SequenceClass cls = classify(s);
  if (cls.is_degenerate()) throw DomainError("height_sandwich_check: degenerate sequence " + s.to_string());
  const RatioHeight rh = ratio_height(s);
  SandwichResult out;
  out.h = rh.h;
  if (cls.is_non_real()) {
    out.unit_modulus = true;
    out.holds = true;  // 1/(H+1) < 1 < H+1 for H >= 1
    return out;
  }
  out.ratio = ratio_b_over_a(s);
  const Integer& delta = out.ratio.delta();
  const QuadElem upper = QuadElem::rational(Rational(rh.h + 1), delta);
  const QuadElem lower = QuadElem::rational(Rational(1, rh.h + 1), delta);
  const bool below_upper = quad_sign(quad_sub(upper, out.ratio)) > 0 && quad_sign(quad_add(upper, out.ratio)) > 0;
  const bool above_lower = quad_sign(quad_sub(out.ratio, lower)) > 0 || quad_sign(quad_add(out.ratio, lower)) < 0;
  out.holds = below_upper && above_lower;
  return out;
}

// ---------------------------------------------------------------------------
// Incremental scans used by sweeps
// ---------------------------------------------------------------------------

struct Thm23Scan {
  RealCaseBranch branch;
  Index checked = 0;
  std::vector<Index> failures;        ///< threshold theorem
  Index sharp_checked = 0;
  std::vector<Index> sharp_failures;  ///< per-case bounds
};

/// Evaluates the threshold theorem for every n in [n_min, horizon], and the
/// per-case bounds wherever their hypotheses hold, with rolling recurrences
/// instead of per-index doubling.
inline Thm23Scan scan_thm23(const SequenceParams& s, Index horizon, bool with_sharp = true) {
  Thm23Scan out;
  out.branch = real_case_branch(s);
  const RealCaseBranch& br = out.branch;
  const Integer& a = br.positive.a;
  const Integer& b = br.positive.b;
  // (U, V) at n-2, n-1, n; golden (F, L) at n.
  LucasPair w0{0, Integer(0), Integer(2)};
  LucasPair w1{1, Integer(1), a};
  LucasPair w2{2, Integer(a), Integer(a * a - 2 * b)};
  LucasPair g0{0, Integer(0), Integer(2)}, g1{1, Integer(1), Integer(1)};
  LucasPair golden = g0;
  Integer pow3 = 1, pow5 = 1;
  TermWindow t = TermWindow::start(s);
  for (Index n = 0; n <= horizon; ++n) {
    if (n >= 2) {
      if (n > 2) {
        // advance (A,B) window by one
        LucasPair next{n, Integer(a * w2.u - b * w1.u), Integer(a * w2.v - b * w1.v)};
        w0 = std::move(w1);
        w1 = std::move(w2);
        w2 = std::move(next);
      }
      const PowerView pw{&w0, &w1, &w2, &golden, &pow3, &pow5};
      const Integer abs_u = abs(t.current);
      if (n >= br.n_min) {
        ++out.checked;
        const auto checks = thm23_inequalities(br, n, abs_u, pw);
        if (!std::all_of(checks.begin(), checks.end(), [](const BoundCheck& c) { return c.holds; }))
          out.failures.push_back(n);
      }
      if (with_sharp && sharp_case_hypothesis_failure(br, n).empty()) {
        ++out.sharp_checked;
        const GrowthReport rep = sharp_inequalities(br, n, abs_u, pw);
        if (!rep.bound_holds.value_or(false)) out.sharp_failures.push_back(n);
      }
    }
    if (n == horizon) break;
    t.advance(s.a, s.b);
    // golden to n+1
    LucasPair g2{n + 2, Integer(g1.u + g0.u), Integer(g1.v + g0.v)};
    golden = g1;
    g0 = std::move(g1);
    g1 = std::move(g2);
    pow3 *= 3;
    pow5 *= 5;
  }
  return out;
}

/// Lucas bound failures for n in [2, horizon] (real roots only).
inline std::vector<Index> scan_lucas_bounds(const Integer& a_in, const Integer& b, Index horizon) {
  std::vector<Index> failures;
  const Integer a = abs(a_in);
  const Integer delta = a * a - 4 * b;
  if (sgn(delta) <= 0) throw DomainError("scan_lucas_bounds: real roots only");
  LucasPair p0{0, Integer(0), Integer(2)}, p1{1, Integer(1), a}, p2{2, a, Integer(a * a - 2 * b)};
  for (Index n = 2; n <= horizon; ++n) {
    if (n > 2) {
      LucasPair next{n, Integer(a * p2.u - b * p1.u), Integer(a * p2.v - b * p1.v)};
      p0 = std::move(p1);
      p1 = std::move(p2);
      p2 = std::move(next);
    }
    const Integer u = abs(p2.u);
    const BoundCheck c = sgn(b) < 0 ? detail::alpha_check("", 4 * u, Integer(1), p0.v, p0.u, delta)
                                    : detail::alpha_check("", 2 * u, Integer(1), p1.v, p1.u, delta);
    if (!c.holds) failures.push_back(n);
  }
  return failures;
}

}  // namespace brigkit
