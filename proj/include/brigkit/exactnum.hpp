#pragma once

// Exact arithmetic substrate: GMP integers and rationals, elements of a real
// quadratic extension Q(sqrt(delta)) with exact sign determination, and
// certified enclosures of natural logarithms for bound formulas.

#include <gmpxx.h>
#include <mpfr.h>

#include <cstdint>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>

namespace brigkit {

using Integer = mpz_class;
using Rational = mpq_class;

/// Sequence index. Negative indices are never used.
using Index = std::uint64_t;

/// Raised when an operation is called outside its stated domain.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Raised when a proven property fails at runtime (would falsify a theorem).
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Raised when two quadratic elements with different radicands are combined.
class RadicandMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline int sign(const Integer& x) { return sgn(x); }
inline int sign(const Rational& x) { return sgn(x); }

inline Integer abs_value(const Integer& x) { return abs(x); }

inline Integer pow_integer(const Integer& base, Index e) {
  Integer r;
  if (e > std::numeric_limits<unsigned long>::max()) throw DomainError("exponent too large");
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(e));
  return r;
}

inline Integer pow_integer(long base, Index e) { return pow_integer(Integer(base), e); }

inline bool is_perfect_square(const Integer& x) {
  return sgn(x) >= 0 && mpz_perfect_square_p(x.get_mpz_t()) != 0;
}

inline Integer isqrt(const Integer& x) {
  Integer r;
  mpz_sqrt(r.get_mpz_t(), x.get_mpz_t());
  return r;
}

inline Integer gcd_of(const Integer& x, const Integer& y) { return gcd(x, y); }

/// Smallest integer >= x.
inline Integer ceil_of(const Rational& x) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return r;
}

inline Integer floor_of(const Rational& x) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return r;
}

/// Non-negative index from an integer; negative values clamp to 0.
inline Index to_index(const Integer& x) {
  if (sgn(x) < 0) return 0;
  if (!x.fits_ulong_p()) throw DomainError("index does not fit in 64 bits: " + x.get_str());
  return static_cast<Index>(x.get_ui());
}

inline Integer parse_integer(const std::string& text) {
  Integer r;
  std::string body = text;
  if (body.size() > 1 && body[0] == '+' && body[1] != '-') body.erase(0, 1);
  const std::size_t digits_from = !body.empty() && body.front() == '-' ? 1 : 0;
  const bool well_formed = body.size() > digits_from &&
                           body.find_first_not_of("0123456789", digits_from) == std::string::npos;
  if (!well_formed || r.set_str(body, 10) != 0) throw std::invalid_argument("malformed integer: '" + text + "'");
  return r;
}

inline Rational parse_rational(const std::string& text) {
  Rational r;
  if (text.empty() || r.set_str(text, 10) != 0) {
    // Allow plain decimals such as "12.5".
    auto dot = text.find('.');
    if (dot == std::string::npos) throw std::invalid_argument("malformed rational: '" + text + "'");
    std::string digits = text.substr(0, dot) + text.substr(dot + 1);
    Integer num = parse_integer(digits);
    Integer den = pow_integer(10, text.size() - dot - 1);
    r = Rational(num, den);
  }
  r.canonicalize();
  return r;
}

// ---------------------------------------------------------------------------
// Quadratic elements r + s*sqrt(delta)
// ---------------------------------------------------------------------------

/// Exact element r + s*sqrt(delta) with rational r, s and integer delta >= 0.
/// When delta is a perfect square the element is folded into s = 0, so two
/// equal real numbers with the same radicand compare equal structurally.
class QuadElem {
 public:
  QuadElem() = default;

  QuadElem(Rational r, Rational s, Integer delta) : r_(std::move(r)), s_(std::move(s)), delta_(std::move(delta)) {
    if (sgn(delta_) < 0) throw DomainError("negative radicand " + delta_.get_str());
    r_.canonicalize();
    s_.canonicalize();
    if (is_perfect_square(delta_) && sgn(s_) != 0) {
      r_ += s_ * Rational(isqrt(delta_));
      s_ = 0;
    }
  }

  static QuadElem rational(Rational r, Integer delta) { return QuadElem(std::move(r), Rational(0), std::move(delta)); }
  static QuadElem surd(Integer delta) { return QuadElem(Rational(0), Rational(1), std::move(delta)); }

  const Rational& r() const { return r_; }
  const Rational& s() const { return s_; }
  const Integer& delta() const { return delta_; }

  /// Field norm r^2 - s^2*delta.
  Rational norm() const { return r_ * r_ - s_ * s_ * Rational(delta_); }

  QuadElem conjugate() const { return QuadElem(r_, -s_, delta_); }

  friend bool operator==(const QuadElem& x, const QuadElem& y) {
    return x.delta_ == y.delta_ && x.r_ == y.r_ && x.s_ == y.s_;
  }

  std::string to_string() const {
    return "(" + r_.get_str() + ") + (" + s_.get_str() + ")*sqrt(" + delta_.get_str() + ")";
  }

  friend std::ostream& operator<<(std::ostream& os, const QuadElem& x) { return os << x.to_string(); }

 private:
  Rational r_{0};
  Rational s_{0};
  Integer delta_{0};
};

namespace detail {
inline void require_same_radicand(const QuadElem& x, const QuadElem& y) {
  if (x.delta() != y.delta())
    throw RadicandMismatch("radicands differ: " + x.delta().get_str() + " vs " + y.delta().get_str());
}
}  // namespace detail

inline QuadElem quad_add(const QuadElem& x, const QuadElem& y) {
  detail::require_same_radicand(x, y);
  return QuadElem(x.r() + y.r(), x.s() + y.s(), x.delta());
}

inline QuadElem quad_neg(const QuadElem& x) { return QuadElem(-x.r(), -x.s(), x.delta()); }

inline QuadElem quad_sub(const QuadElem& x, const QuadElem& y) { return quad_add(x, quad_neg(y)); }

inline QuadElem quad_mul(const QuadElem& x, const QuadElem& y) {
  detail::require_same_radicand(x, y);
  const Rational d(x.delta());
  return QuadElem(x.r() * y.r() + x.s() * y.s() * d, x.r() * y.s() + x.s() * y.r(), x.delta());
}

inline QuadElem quad_scale(const QuadElem& x, const Rational& c) { return QuadElem(x.r() * c, x.s() * c, x.delta()); }

inline QuadElem operator+(const QuadElem& x, const QuadElem& y) { return quad_add(x, y); }
inline QuadElem operator-(const QuadElem& x, const QuadElem& y) { return quad_sub(x, y); }
inline QuadElem operator-(const QuadElem& x) { return quad_neg(x); }
inline QuadElem operator*(const QuadElem& x, const QuadElem& y) { return quad_mul(x, y); }
inline QuadElem operator*(const QuadElem& x, const Rational& c) { return quad_scale(x, c); }

/// Exact sign of r + s*sqrt(delta). When r and s disagree in sign the
/// answer is sign(r) * sign(r^2 - s^2*delta).
inline int quad_sign(const Rational& r, const Rational& s, const Integer& delta) {
  const int sr = sgn(r);
  const int ss = sgn(delta) == 0 ? 0 : sgn(s);
  if (ss == 0) return sr;
  if (sr == 0 || sr == ss) return ss;
  return sr * sgn(r * r - s * s * Rational(delta));
}

inline int quad_sign(const QuadElem& x) { return quad_sign(x.r(), x.s(), x.delta()); }

/// Integer-coefficient variant: sign of r + s*sqrt(delta), no rationals.
inline int quad_sign(const Integer& r, const Integer& s, const Integer& delta) {
  const int sr = sgn(r);
  const int ss = sgn(delta) == 0 ? 0 : sgn(s);
  if (ss == 0) return sr;
  if (sr == 0 || sr == ss) return ss;
  return sr * sgn(r * r - s * s * delta);
}

inline int quad_compare(const QuadElem& x, const QuadElem& y) { return quad_sign(quad_sub(x, y)); }

// ---------------------------------------------------------------------------
// Certified logarithms
// ---------------------------------------------------------------------------

namespace detail {

class MpfrValue {
 public:
  explicit MpfrValue(mpfr_prec_t prec) { mpfr_init2(v_, prec); }
  ~MpfrValue() { mpfr_clear(v_); }
  MpfrValue(const MpfrValue&) = delete;
  MpfrValue& operator=(const MpfrValue&) = delete;
  mpfr_ptr get() { return v_; }

  Rational to_rational() {
    Rational q;
    mpfr_get_q(q.get_mpq_t(), v_);
    return q;
  }

 private:
  mpfr_t v_;
};

}  // namespace detail

/// Closed interval [lo, hi] of rationals.
struct Enclosure {
  Rational lo;
  Rational hi;
};

/// Enclosure of ln(x) for rational x > 0 at the given working precision.
inline Enclosure ln_enclosure(const Rational& x, mpfr_prec_t prec = 128) {
  if (sgn(x) <= 0) throw DomainError("logarithm of non-positive value " + x.get_str());
  if (x == 1) return {Rational(0), Rational(0)};
  detail::MpfrValue lo(prec), hi(prec);
  mpfr_set_q(lo.get(), x.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(hi.get(), x.get_mpq_t(), MPFR_RNDU);
  mpfr_log(lo.get(), lo.get(), MPFR_RNDD);
  mpfr_log(hi.get(), hi.get(), MPFR_RNDU);
  return {lo.to_rational(), hi.to_rational()};
}

inline Enclosure ln_enclosure(const Integer& x, mpfr_prec_t prec = 128) { return ln_enclosure(Rational(x), prec); }

/// Rational upper bound for ln(x).
inline Rational ln_upper(const Rational& x, mpfr_prec_t prec = 128) { return ln_enclosure(x, prec).hi; }
inline Rational ln_upper(const Integer& x, mpfr_prec_t prec = 128) { return ln_enclosure(x, prec).hi; }

/// Sign of value - (coeff*ln(x) + offset), decided exactly. ln of a rational
/// other than 1 is transcendental, so the refinement loop always terminates
/// unless x == 1, which is handled exactly.
inline int compare_with_affine_ln(const Rational& value, const Rational& coeff, const Rational& offset,
                                  const Rational& x) {
  if (sgn(coeff) == 0 || x == 1) return sgn(value - offset);
  for (mpfr_prec_t prec = 64; prec <= (1 << 16); prec *= 2) {
    Enclosure e = ln_enclosure(x, prec);
    Rational a = coeff * e.lo + offset;
    Rational b = coeff * e.hi + offset;
    if (a > b) std::swap(a, b);
    if (value < a) return -1;
    if (value > b) return 1;
  }
  throw InvariantViolation("logarithm comparison did not separate");
}

}  // namespace brigkit
