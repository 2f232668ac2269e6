#pragma once

// Zero-index decision procedure. Non-degenerate sequences vanish at most
// once, and a vanishing index k satisfies k < 9 ln|Q| + 12 (real roots) or,
// for k > c4, k < 10 ln max(|Q|, 2) (complex roots), with Q taken after
// d-reduction and gcd normalization. Degenerate sequences are settled
// analytically.

#include "brigkit/core.hpp"
#include "brigkit/exactnum.hpp"
#include "brigkit/terms.hpp"

#include <cstdint>
#include <set>
#include <string>
#include <variant>
#include <vector>

namespace brigkit {

/// Default c4 for the complex-root bound, whose true value is not explicit.
inline constexpr std::int64_t kDefaultC4 = 10000;

struct NoZero {
  Index searched_up_to = 0;
  bool conclusive = true;
  /// Completeness relies on the implicit constant c4 being at most the configured value.
  bool assumes_c4 = false;

  friend bool operator==(const NoZero&, const NoZero&) = default;
};

struct ZeroAt {
  Index k = 0;
  friend bool operator==(const ZeroAt&, const ZeroAt&) = default;
};

/// u_n = 0 exactly when n mod modulus lies in residues.
struct PeriodicZeros {
  int modulus = 1;
  std::vector<int> residues;
  friend bool operator==(const PeriodicZeros&, const PeriodicZeros&) = default;
};

struct AllZero {
  friend bool operator==(const AllZero&, const AllZero&) = default;
};

/// u_n = 0 for every n >= from, and at the listed earlier indices.
struct EventuallyZero {
  Index from = 0;
  std::vector<Index> earlier;
  friend bool operator==(const EventuallyZero&, const EventuallyZero&) = default;
};

using ZeroResult = std::variant<NoZero, ZeroAt, PeriodicZeros, AllZero, EventuallyZero>;

enum class BoundBasis { RealLog, NonRealLog, UserOverride };

struct SearchBound {
  Index n_max = 0;
  BoundBasis basis = BoundBasis::UserOverride;
  std::int64_t c4 = 0;

  friend bool operator==(const SearchBound&, const SearchBound&) = default;
};

inline std::string basis_name(BoundBasis b) {
  switch (b) {
    case BoundBasis::RealLog:
      return "real:9ln|Q|+12";
    case BoundBasis::NonRealLog:
      return "non-real:10ln(max(|Q|,2)),c4";
    case BoundBasis::UserOverride:
      return "override";
  }
  return "?";
}

/// Upper bound for ceil(coeff*ln x + offset), rounding up.
inline Index ceil_affine_ln(const Rational& coeff, const Rational& offset, const Integer& x) {
  const Rational value = x == 1 ? offset : coeff * ln_upper(x) + offset;
  return to_index(ceil_of(value));
}

/// Scan bound for the zero search, evaluated on the normalized Q.
inline SearchBound zero_search_bound(const SequenceParams& s, std::int64_t c4 = kDefaultC4) {
  const SequenceClass cls = classify(s);
  if (cls.is_degenerate()) throw DomainError("zero_search_bound: degenerate sequence " + s.to_string());
  const Integer q = abs(normalize(s).q);
  if (cls.is_real()) {
    // |Q| = 0 means u_1 = 0, which is already below 12.
    const Integer x = sgn(q) == 0 ? Integer(1) : q;
    return SearchBound{ceil_affine_ln(Rational(9), Rational(12), x), BoundBasis::RealLog, c4};
  }
  const Integer x = q < 2 ? Integer(2) : q;
  Index n = ceil_affine_ln(Rational(10), Rational(0), x);
  if (c4 > 0 && static_cast<Index>(c4) > n) n = static_cast<Index>(c4);
  return SearchBound{n, BoundBasis::NonRealLog, c4};
}

/// Settles degenerate sequences without a bounded scan.
inline ZeroResult degenerate_zeros(const SequenceParams& s) {
  const SequenceClass cls = classify(s);
  if (!cls.is_degenerate()) throw DomainError("degenerate_zeros: sequence is not degenerate " + s.to_string());
  switch (cls.reason) {
    case DegenerateReason::BothInitialZero:
      return AllZero{};
    case DegenerateReason::BZero: {
      // u_n = A^(n-1) Q for n >= 1.
      const bool zero_at_0 = sgn(s.p) == 0;
      if (sgn(s.q) == 0) return EventuallyZero{1, {}};
      if (sgn(s.a) == 0) {
        std::vector<Index> earlier;
        if (zero_at_0) earlier.push_back(0);
        return EventuallyZero{2, earlier};
      }
      if (zero_at_0) return ZeroAt{0};
      return NoZero{0, true, false};
    }
    case DegenerateReason::EqualRoots: {
      // A = 2t, B = t^2, u_n = t^(n-1) (n Q - (n-1) P t); zero iff k (P t - Q) = P t.
      const Integer t = s.a / 2;
      const Integer pt = s.p * t;
      const Integer den = pt - s.q;
      if (sgn(den) == 0) return NoZero{0, true, false};  // u_n = P t^n, P != 0
      if (!mpz_divisible_p(pt.get_mpz_t(), den.get_mpz_t())) return NoZero{0, true, false};
      const Integer k = pt / den;
      if (sgn(k) < 0) return NoZero{0, true, false};
      return ZeroAt{to_index(k)};
    }
    case DegenerateReason::AZero:
    case DegenerateReason::RootOfUnityRatio: {
      // alpha^m = beta^m = V_m/2 is a non-zero rational, so u_{n+m} = (V_m/2) u_n.
      const int m = cls.root_order;
      std::vector<int> residues;
      TermWindow w = TermWindow::start(s);
      for (int r = 0; r < m; ++r) {
        if (sgn(w.current) == 0) residues.push_back(r);
        w.advance(s.a, s.b);
      }
      if (residues.empty()) return NoZero{static_cast<Index>(m - 1), true, false};
      return PeriodicZeros{m, residues};
    }
    case DegenerateReason::CoefficientAZero:
    case DegenerateReason::CoefficientBZero:
      // u_n is a single non-zero geometric term.
      return NoZero{0, true, false};
  }
  throw InvariantViolation("unhandled degenerate reason");
}

/// Scans k = 0..bound.n_max on the normalized sequence (the zero index is
/// invariant under both normalizations). The scan continues after a hit;
/// a second zero raises InvariantViolation.
inline ZeroResult find_zero_within(const SequenceParams& s, const SearchBound& bound) {
  const SequenceClass cls = classify(s);
  if (cls.is_degenerate()) return degenerate_zeros(s);
  const SequenceParams norm = normalize(s);
  TermWindow w = TermWindow::start(norm);
  bool found = false;
  Index k = 0;
  for (;;) {
    if (sgn(w.current) == 0) {
      if (found)
        throw InvariantViolation("second zero at " + std::to_string(w.n) + " after " + std::to_string(k) + " for " +
                                 s.to_string());
      found = true;
      k = w.n;
    }
    if (w.n >= bound.n_max) break;
    w.advance(norm.a, norm.b);
  }
  if (found) return ZeroAt{k};
  const bool assumes_c4 = bound.basis == BoundBasis::NonRealLog;
  const bool conclusive = bound.basis != BoundBasis::UserOverride;
  return NoZero{bound.n_max, conclusive, assumes_c4};
}

inline ZeroResult find_zero(const SequenceParams& s, std::int64_t c4 = kDefaultC4) {
  if (classify(s).is_degenerate()) return degenerate_zeros(s);
  return find_zero_within(s, zero_search_bound(s, c4));
}

struct ZeroPair {
  Integer p;
  Integer q;
  friend bool operator==(const ZeroPair&, const ZeroPair&) = default;
};

/// Initial values (P, Q) proportional to (U_k, B*U_{k-1}), gcd-normalized,
/// so that u_k = 0.
inline ZeroPair construct_zero_at(const Integer& a, const Integer& b, Index k) {
  if (sgn(a) == 0 || sgn(b) == 0) throw DomainError("construct_zero_at requires AB != 0");
  if (k < 2) throw DomainError("construct_zero_at requires k >= 2");
  auto [prev, cur] = lucas_u_pair(a, b, k - 1);  // (U_{k-1}, U_k)
  if (sgn(prev) == 0 || sgn(cur) == 0)
    throw DomainError("construct_zero_at: U_k * U_{k-1} = 0 for A=" + a.get_str() + ", B=" + b.get_str() +
                      ", k=" + std::to_string(k));
  Integer p = cur;
  Integer q = b * prev;
  const Integer g = gcd(p, q);
  return ZeroPair{p / g, q / g};
}

struct ZeroFamilyEntry {
  Index k = 0;
  Integer p;
  Integer q;
};

/// (P_2, Q_2) = (A, B), then P_{m+1} = A P_m - Q_m, Q_{m+1} = B P_m; the
/// sequence started at (P_k, Q_k) vanishes at index k.
inline std::vector<ZeroFamilyEntry> zero_family(const Integer& a, const Integer& b, Index k_max) {
  if (sgn(a) == 0 || sgn(b) == 0) throw DomainError("zero_family requires AB != 0");
  if (k_max < 2) throw DomainError("zero_family requires k_max >= 2");
  std::vector<ZeroFamilyEntry> out;
  Integer p = a, q = b;
  for (Index k = 2; k <= k_max; ++k) {
    out.push_back({k, p, q});
    Integer next_p = a * p - q;
    q = b * p;
    p = std::move(next_p);
  }
  return out;
}

/// Human-readable verdict.
inline std::string render(const ZeroResult& r, const SearchBound* bound = nullptr) {
  struct Visitor {
    const SearchBound* bound;
    std::string operator()(const NoZero& z) const {
      std::string s = "no zero up to " + std::to_string(z.searched_up_to);
      if (!z.conclusive) return s + ", inconclusive";
      return s + (z.assumes_c4 ? ", conclusive under c4" : ", conclusive");
    }
    std::string operator()(const ZeroAt& z) const {
      std::string s = "zero at k=" + std::to_string(z.k);
      if (bound) {
        s += " (bound " + std::to_string(bound->n_max);
        s += bound->basis == BoundBasis::NonRealLog ? ", conclusive under c4)" : ", conclusive)";
      }
      return s;
    }
    std::string operator()(const PeriodicZeros& z) const {
      std::string s = "periodic zeros: n mod " + std::to_string(z.modulus) + " in {";
      for (std::size_t i = 0; i < z.residues.size(); ++i) s += (i ? "," : "") + std::to_string(z.residues[i]);
      return s + "}";
    }
    std::string operator()(const AllZero&) const { return "all terms zero"; }
    std::string operator()(const EventuallyZero& z) const {
      std::string s = "zero for all n >= " + std::to_string(z.from);
      for (Index e : z.earlier) s += ", and at n=" + std::to_string(e);
      return s;
    }
  };
  return std::visit(Visitor{bound}, r);
}

/// Whether u_n = 0 according to a verdict (for n within the verdict's scope).
inline bool predicts_zero(const ZeroResult& r, Index n) {
  struct Visitor {
    Index n;
    bool operator()(const NoZero&) const { return false; }
    bool operator()(const ZeroAt& z) const { return z.k == n; }
    bool operator()(const PeriodicZeros& z) const {
      const int r = static_cast<int>(n % static_cast<Index>(z.modulus));
      for (int x : z.residues)
        if (x == r) return true;
      return false;
    }
    bool operator()(const AllZero&) const { return true; }
    bool operator()(const EventuallyZero& z) const {
      if (n >= z.from) return true;
      for (Index e : z.earlier)
        if (e == n) return true;
      return false;
    }
  };
  return std::visit(Visitor{n}, r);
}

}  // namespace brigkit
