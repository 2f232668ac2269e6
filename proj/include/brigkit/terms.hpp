#pragma once

// Exact terms u_n, the Lucas sequences U_n and V_n, and the decomposition
// u_n = c_P(n)*P + c_Q(n)*Q. Linear iteration and an O(log n) doubling path
// are both provided and must agree bit for bit.

#include "brigkit/core.hpp"
#include "brigkit/exactnum.hpp"

#include <bit>
#include <utility>
#include <vector>

namespace brigkit {

/// Terms beyond this index are never computed by plain iteration when a
/// single term is requested through term().
inline constexpr Index kIterativeLimit = 10000;

/// Two consecutive terms (u_n, u_{n+1}).
struct TermWindow {
  Index n = 0;
  Integer current;
  Integer next;

  static TermWindow start(const SequenceParams& s) { return TermWindow{0, s.p, s.q}; }

  /// Shifts to (u_{n+1}, u_{n+2}) with u_{n+2} = A*u_{n+1} - B*u_n.
  void advance(const Integer& a, const Integer& b) {
    current *= b;
    mpz_submul(current.get_mpz_t(), a.get_mpz_t(), next.get_mpz_t());
    current = -current;
    swap(current, next);
    ++n;
  }
};

/// u_n by n - 1 applications of the recurrence.
inline Integer term_iter(const SequenceParams& s, Index n) {
  TermWindow w = TermWindow::start(s);
  while (w.n < n) w.advance(s.a, s.b);
  return w.current;
}

/// All of u_0..u_n by iteration.
inline std::vector<Integer> terms_upto(const SequenceParams& s, Index n) {
  std::vector<Integer> out;
  out.reserve(n + 1);
  TermWindow w = TermWindow::start(s);
  out.push_back(w.current);
  while (w.n < n) {
    w.advance(s.a, s.b);
    out.push_back(w.current);
  }
  return out;
}

/// (U_m, U_{m+1}) by binary doubling:
///   U_{2k}   = U_k * (2*U_{k+1} - A*U_k)
///   U_{2k+1} = U_{k+1}^2 - B*U_k^2
/// Three full-size multiplications per doubling step.
inline std::pair<Integer, Integer> lucas_u_pair(const Integer& a, const Integer& b, Index m) {
  Integer u0 = 0;  // U_k
  Integer u1 = 1;  // U_{k+1}
  Integer t, sq0, sq1;
  for (int bit = m == 0 ? -1 : static_cast<int>(std::bit_width(m)) - 1; bit >= 0; --bit) {
    // doubling: k -> 2k
    t = 2 * u1;
    mpz_submul(t.get_mpz_t(), a.get_mpz_t(), u0.get_mpz_t());
    sq0 = u0 * u0;
    sq1 = u1 * u1;
    u0 *= t;
    u1 = sq1;
    mpz_submul(u1.get_mpz_t(), b.get_mpz_t(), sq0.get_mpz_t());
    if ((m >> bit) & 1U) {
      // k -> k + 1
      t = a * u1;
      mpz_submul(t.get_mpz_t(), b.get_mpz_t(), u0.get_mpz_t());
      swap(u0, u1);
      swap(u1, t);
    }
  }
  return {std::move(u0), std::move(u1)};
}

/// u_n via powers of the companion matrix [[A, -B], [1, 0]] applied to
/// (Q, P). M^(n-1) = [[U_n, -B*U_{n-1}], [U_{n-1}, -B*U_{n-2}]], so only the
/// pair (U_{n-1}, U_n) is needed.
inline Integer term_fast(const SequenceParams& s, Index n) {
  if (n == 0) return s.p;
  auto [prev, cur] = lucas_u_pair(s.a, s.b, n - 1);
  Integer r = cur * s.q;
  prev *= s.b;
  mpz_submul(r.get_mpz_t(), prev.get_mpz_t(), s.p.get_mpz_t());
  return r;
}

/// Single-term entry point: iteration for small n, doubling beyond
/// kIterativeLimit.
inline bool uses_fast_path(Index n) { return n > kIterativeLimit; }

inline Integer term(const SequenceParams& s, Index n) { return uses_fast_path(n) ? term_fast(s, n) : term_iter(s, n); }

inline Integer lucas_U(const Integer& a, const Integer& b, Index n) { return lucas_u_pair(a, b, n).first; }

/// V_n = 2*U_{n+1} - A*U_n.
inline Integer lucas_V(const Integer& a, const Integer& b, Index n) {
  auto [u, u_next] = lucas_u_pair(a, b, n);
  Integer v = 2 * u_next;
  mpz_submul(v.get_mpz_t(), a.get_mpz_t(), u.get_mpz_t());
  return v;
}

/// (U_n, V_n) for parameters (A, B). Satisfies V_n^2 - (A^2-4B) U_n^2 = 4 B^n.
struct LucasPair {
  Index n = 0;
  Integer u;
  Integer v;
};

inline LucasPair lucas_pair(const Integer& a, const Integer& b, Index n) {
  auto [u, u_next] = lucas_u_pair(a, b, n);
  Integer v = 2 * u_next;
  mpz_submul(v.get_mpz_t(), a.get_mpz_t(), u.get_mpz_t());
  return LucasPair{n, std::move(u), std::move(v)};
}

/// Coefficients with u_n = c_p*P + c_q*Q: (c_p, c_q) = (-B*U_{n-1}, U_n).
struct CoefficientPair {
  Integer c_p;
  Integer c_q;
};

inline CoefficientPair coeffs(const Integer& a, const Integer& b, Index n) {
  if (n == 0) return {Integer(1), Integer(0)};
  auto [prev, cur] = lucas_u_pair(a, b, n - 1);
  return {Integer(-b * prev), std::move(cur)};
}

/// gcd(U_m, U_{m+1}) for d-reduced (A, B). For such pairs this equals
/// g^floor(m/2) with g = gcd(A, B); the value is computed directly.
inline Integer gcd_consecutive_U(const Integer& a, const Integer& b, Index m) {
  const ReducedParams r = reduce_d(SequenceParams{a, b, Integer(0), Integer(1)});
  if (r.d != 1) throw DomainError("gcd_consecutive_U requires d = 1, got d = " + r.d.get_str());
  auto [u, u_next] = lucas_u_pair(a, b, m);
  return gcd(u, u_next);
}

/// alpha^m = (V_m + U_m*sqrt(delta))/2 with alpha = (A + sqrt(delta))/2.
inline QuadElem alpha_power(const Integer& a, const Integer& b, Index m) {
  const Integer delta = a * a - 4 * b;
  if (sgn(delta) < 0) throw DomainError("alpha_power needs A^2 - 4B >= 0");
  LucasPair lp = lucas_pair(a, b, m);
  return QuadElem(Rational(lp.v, 2), Rational(lp.u, 2), delta);
}

/// beta^m = (V_m - U_m*sqrt(delta))/2.
inline QuadElem beta_power(const Integer& a, const Integer& b, Index m) { return alpha_power(a, b, m).conjugate(); }

/// phi^n = (L_n + F_n*sqrt(5))/2 for the golden ratio phi.
inline QuadElem golden_power(Index n) { return alpha_power(Integer(1), Integer(-1), n); }

}  // namespace brigkit
