#pragma once

// Sequence parameters, classification, and the two normalizations used by
// the zero bounds (removing the largest d with d | A, d^2 | B, and dividing
// the initial values by their gcd).

#include "brigkit/exactnum.hpp"

#include <string>
#include <utility>

namespace brigkit {

/// Integer data of u_0 = p, u_1 = q, u_n = a*u_{n-1} - b*u_{n-2}.
/// No invariants are imposed; degenerate inputs are representable.
struct SequenceParams {
  Integer a;
  Integer b;
  Integer p;
  Integer q;

  friend bool operator==(const SequenceParams&, const SequenceParams&) = default;

  std::string to_string() const {
    return "(A=" + a.get_str() + ", B=" + b.get_str() + ", P=" + p.get_str() + ", Q=" + q.get_str() + ")";
  }
};

inline SequenceParams make_params(long a, long b, long p, long q) {
  return SequenceParams{Integer(a), Integer(b), Integer(p), Integer(q)};
}

/// Discriminant A^2 - 4B of the characteristic polynomial x^2 - Ax + B.
struct Discriminant {
  Integer delta;
  bool is_square = false;
  Integer root;  // meaningful only when is_square
};

inline Discriminant discriminant(const Integer& a, const Integer& b) {
  Discriminant d;
  d.delta = a * a - 4 * b;
  d.is_square = is_perfect_square(d.delta);
  if (d.is_square) d.root = isqrt(d.delta);
  return d;
}

inline Discriminant discriminant(const SequenceParams& s) { return discriminant(s.a, s.b); }

enum class DegenerateReason {
  BothInitialZero,
  BZero,
  AZero,
  EqualRoots,
  RootOfUnityRatio,
  CoefficientAZero,
  CoefficientBZero,
};

/// Classification verdict. `root_order` is the multiplicative order of
/// alpha/beta and is set for RootOfUnityRatio (3, 4 or 6), AZero (2) and
/// EqualRoots (1).
struct SequenceClass {
  enum class Kind { Degenerate, Real, NonReal };

  Kind kind = Kind::Real;
  DegenerateReason reason = DegenerateReason::BothInitialZero;
  int root_order = 0;

  static SequenceClass real() { return {Kind::Real, {}, 0}; }
  static SequenceClass non_real() { return {Kind::NonReal, {}, 0}; }
  static SequenceClass degenerate(DegenerateReason why, int order = 0) { return {Kind::Degenerate, why, order}; }

  bool is_degenerate() const { return kind == Kind::Degenerate; }
  bool is_real() const { return kind == Kind::Real; }
  bool is_non_real() const { return kind == Kind::NonReal; }

  friend bool operator==(const SequenceClass& x, const SequenceClass& y) {
    if (x.kind != y.kind) return false;
    if (x.kind != Kind::Degenerate) return true;
    return x.reason == y.reason && x.root_order == y.root_order;
  }

  std::string to_string() const {
    switch (kind) {
      case Kind::Real:
        return "real";
      case Kind::NonReal:
        return "non-real";
      case Kind::Degenerate:
        break;
    }
    switch (reason) {
      case DegenerateReason::BothInitialZero:
        return "degenerate: both initial values zero";
      case DegenerateReason::BZero:
        return "degenerate: B = 0";
      case DegenerateReason::AZero:
        return "degenerate: A = 0 (ratio -1)";
      case DegenerateReason::EqualRoots:
        return "degenerate: equal roots";
      case DegenerateReason::RootOfUnityRatio:
        return "degenerate: root-of-unity ratio, order " + std::to_string(root_order);
      case DegenerateReason::CoefficientAZero:
        return "degenerate: coefficient a = 0";
      case DegenerateReason::CoefficientBZero:
        return "degenerate: coefficient b = 0";
    }
    return "degenerate";
  }

  /// Short machine tag used in reports.
  std::string tag() const {
    switch (kind) {
      case Kind::Real:
        return "real";
      case Kind::NonReal:
        return "non-real";
      case Kind::Degenerate:
        break;
    }
    switch (reason) {
      case DegenerateReason::BothInitialZero:
        return "degenerate:both-initial-zero";
      case DegenerateReason::BZero:
        return "degenerate:b-zero";
      case DegenerateReason::AZero:
        return "degenerate:a-zero";
      case DegenerateReason::EqualRoots:
        return "degenerate:equal-roots";
      case DegenerateReason::RootOfUnityRatio:
        return "degenerate:root-of-unity-" + std::to_string(root_order);
      case DegenerateReason::CoefficientAZero:
        return "degenerate:coefficient-a-zero";
      case DegenerateReason::CoefficientBZero:
        return "degenerate:coefficient-b-zero";
    }
    return "degenerate";
  }
};

/// Order m of alpha/beta when it is a root of unity other than 1 or -1,
/// read off the trace (A^2 - 2B)/B = 2cos(2*pi/m); 0 otherwise.
/// A^2 = B gives m = 3, A^2 = 2B gives m = 4, A^2 = 3B gives m = 6.
inline int root_of_unity_order(const Integer& a, const Integer& b) {
  if (sgn(b) == 0) return 0;
  const Integer a2 = a * a;
  if (a2 == b) return 3;
  if (a2 == 2 * b) return 4;
  if (a2 == 3 * b) return 6;
  return 0;
}

/// Total classification. Degenerate reasons are reported with priority
/// BothInitialZero > BZero > AZero > EqualRoots > RootOfUnityRatio >
/// CoefficientAZero/BZero.
inline SequenceClass classify(const SequenceParams& s) {
  if (sgn(s.p) == 0 && sgn(s.q) == 0) return SequenceClass::degenerate(DegenerateReason::BothInitialZero);
  if (sgn(s.b) == 0) return SequenceClass::degenerate(DegenerateReason::BZero);
  if (sgn(s.a) == 0) return SequenceClass::degenerate(DegenerateReason::AZero, 2);
  const Discriminant disc = discriminant(s);
  if (sgn(disc.delta) == 0) return SequenceClass::degenerate(DegenerateReason::EqualRoots, 1);
  if (int m = root_of_unity_order(s.a, s.b); m != 0) return SequenceClass::degenerate(DegenerateReason::RootOfUnityRatio, m);
  if (disc.is_square) {
    // alpha is the root of larger absolute value: (A + sgn(A)*D)/2.
    const Integer d = sgn(s.a) > 0 ? disc.root : Integer(-disc.root);
    const Integer two_alpha = s.a + d;
    const Integer two_beta = s.a - d;
    // a = (Q - P*beta)/D, b = (Q - P*alpha)/D
    if (2 * s.q == s.p * two_beta) return SequenceClass::degenerate(DegenerateReason::CoefficientAZero);
    if (2 * s.q == s.p * two_alpha) return SequenceClass::degenerate(DegenerateReason::CoefficientBZero);
  }
  return sgn(disc.delta) > 0 ? SequenceClass::real() : SequenceClass::non_real();
}

/// Largest s with s^2 | k, for k > 0. Trial division runs while p^3 <= the
/// remaining cofactor; what is left is then 1, a prime, a prime square or a
/// product of two distinct primes, and only the square case contributes.
inline Integer square_divisor_root(Integer k) {
  k = abs(k);
  if (sgn(k) == 0) throw DomainError("square_divisor_root(0)");
  Integer root = 1;
  if (is_perfect_square(k)) return isqrt(k);
  for (unsigned long p = 2;; p = (p == 2 ? 3 : p + 2)) {
    Integer cube = Integer(p) * p * p;
    if (cube > k) break;
    unsigned long e = 0;
    while (mpz_divisible_ui_p(k.get_mpz_t(), p)) {
      mpz_divexact_ui(k.get_mpz_t(), k.get_mpz_t(), p);
      ++e;
    }
    for (unsigned long i = 0; i < e / 2; ++i) root *= p;
    if (e > 0 && is_perfect_square(k)) return root * isqrt(k);
  }
  if (k > 1 && is_perfect_square(k)) root *= isqrt(k);
  return root;
}

struct ReducedParams {
  SequenceParams params;
  Integer d;
};

/// Removes the largest d with d | A and d^2 | B. The reduced sequence is
/// u'_n = u_n / d^(n-1), with P' = d*P and Q' = Q.
/// d is the square-divisor root of gcd(A^2, B): for each prime,
/// floor(min(2 v_p(A), v_p(B)) / 2) = min(v_p(A), floor(v_p(B)/2)).
inline ReducedParams reduce_d(const SequenceParams& s) {
  if (sgn(s.a) == 0 && sgn(s.b) == 0) throw DomainError("reduce_d: A = B = 0");
  const Integer k = gcd(Integer(s.a * s.a), s.b);
  const Integer d = square_divisor_root(k);
  ReducedParams out{s, d};
  if (d != 1) {
    out.params.a = s.a / d;
    out.params.b = s.b / (d * d);
    out.params.p = d * s.p;
  }
  return out;
}

struct GcdNormalized {
  SequenceParams params;
  Integer s;
};

/// Divides both initial values by s = gcd(P, Q) > 0.
inline GcdNormalized normalize_gcd(const SequenceParams& s) {
  if (sgn(s.p) == 0 && sgn(s.q) == 0) throw DomainError("normalize_gcd: P = Q = 0");
  const Integer g = gcd(s.p, s.q);
  GcdNormalized out{s, g};
  if (g != 1) {
    out.params.p = s.p / g;
    out.params.q = s.q / g;
  }
  return out;
}

/// d-reduction followed by gcd normalization.
inline SequenceParams normalize(const SequenceParams& s) { return normalize_gcd(reduce_d(s).params).params; }

/// g = gcd(|A|, |B|).
inline Integer g_of(const SequenceParams& s) {
  if (sgn(s.a) == 0 && sgn(s.b) == 0) throw DomainError("g_of: A = B = 0");
  return gcd(s.a, s.b);
}

/// Replaces A by -A (and Q by -Q); the new sequence is (-1)^n u_n.
inline SequenceParams flip_a_sign(const SequenceParams& s) { return SequenceParams{-s.a, s.b, s.p, -s.q}; }

/// Same sequence up to the sign (-1)^n, with A >= 0.
inline SequenceParams with_positive_a(const SequenceParams& s) { return sgn(s.a) < 0 ? flip_a_sign(s) : s; }

}  // namespace brigkit
