#pragma once

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <ostream>
#include <string>
#include <utility>

#include "baconf/exact/rational.hpp"

// after gmp.h so the mpq/mpz conversions are declared
#include <mpfr.h>

namespace baconf {

/// Binary floating point with an explicit mantissa width, correctly rounded
/// (round-to-nearest) by MPFR. Binary operations run at the wider operand's precision.
class BigFloat {
 public:
  using Bits = mpfr_prec_t;
  static constexpr Bits kMinBits = 64;

  explicit BigFloat(Bits bits = kMinBits) {
    mpfr_init2(v_, clamp(bits));
    mpfr_set_zero(v_, 1);
  }
  BigFloat(long value, Bits bits) {
    mpfr_init2(v_, clamp(bits));
    mpfr_set_si(v_, value, MPFR_RNDN);
  }
  BigFloat(int value, Bits bits) : BigFloat(static_cast<long>(value), bits) {}
  BigFloat(double value, Bits bits) {
    mpfr_init2(v_, clamp(bits));
    mpfr_set_d(v_, value, MPFR_RNDN);
  }
  BigFloat(const Rational& value, Bits bits) {
    mpfr_init2(v_, clamp(bits));
    mpfr_set_q(v_, value.backend().data(), MPFR_RNDN);
  }
  BigFloat(const BigInt& value, Bits bits) {
    mpfr_init2(v_, clamp(bits));
    mpfr_set_z(v_, value.backend().data(), MPFR_RNDN);
  }
  /// Re-round `other` to a new width.
  BigFloat(const BigFloat& other, Bits bits) {
    mpfr_init2(v_, clamp(bits));
    mpfr_set(v_, other.v_, MPFR_RNDN);
  }

  BigFloat(const BigFloat& other) {
    mpfr_init2(v_, mpfr_get_prec(other.v_));
    mpfr_set(v_, other.v_, MPFR_RNDN);
  }
  BigFloat(BigFloat&& other) noexcept {
    mpfr_init2(v_, mpfr_get_prec(other.v_));
    mpfr_swap(v_, other.v_);
  }
  BigFloat& operator=(const BigFloat& other) {
    if (this != &other) {
      mpfr_set_prec(v_, mpfr_get_prec(other.v_));
      mpfr_set(v_, other.v_, MPFR_RNDN);
    }
    return *this;
  }
  BigFloat& operator=(BigFloat&& other) noexcept {
    mpfr_swap(v_, other.v_);
    return *this;
  }
  ~BigFloat() { mpfr_clear(v_); }

  Bits precision() const { return mpfr_get_prec(v_); }

  mpfr_ptr raw() { return v_; }
  mpfr_srcptr raw() const { return v_; }

  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  bool is_finite() const { return mpfr_number_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

  /// log2|x|, -inf for zero.
  double log2_abs() const {
    if (is_zero()) return -std::numeric_limits<double>::infinity();
    BigFloat a(53);
    mpfr_abs(a.v_, v_, MPFR_RNDN);
    mpfr_log2(a.v_, a.v_, MPFR_RNDN);
    return a.to_double();
  }

  /// Hex-float text ("0x1.8p+1"); exact at the value's own precision.
  std::string to_hex() const {
    char* buf = nullptr;
    mpfr_asprintf(&buf, "%Ra", v_);
    std::string out(buf);
    mpfr_free_str(buf);
    return out;
  }

  static BigFloat from_hex(const std::string& text, Bits bits) {
    BigFloat r(bits);
    char* end = nullptr;
    mpfr_strtofr(r.v_, text.c_str(), &end, 16, MPFR_RNDN);
    require(end != nullptr && *end == '\0' && end != text.c_str(), ErrorKind::Parse,
            "not a hex float: '" + text + "'");
    return r;
  }

  static BigFloat pi(Bits bits) {
    BigFloat r(bits);
    mpfr_const_pi(r.v_, MPFR_RNDN);
    return r;
  }

  /// 2^exponent at the given width.
  static BigFloat exp2(long exponent, Bits bits) {
    BigFloat r(1L, bits);
    mpfr_mul_2si(r.v_, r.v_, exponent, MPFR_RNDN);
    return r;
  }

  BigFloat operator-() const {
    BigFloat r(precision());
    mpfr_neg(r.v_, v_, MPFR_RNDN);
    return r;
  }

#define BACONF_BIGFLOAT_BINOP(op, fn, fn_si)                                   \
  BigFloat& operator op##=(const BigFloat& o) {                                \
    if (o.precision() > precision()) mpfr_prec_round(v_, o.precision(), MPFR_RNDN); \
    fn(v_, v_, o.v_, MPFR_RNDN);                                               \
    return *this;                                                              \
  }                                                                            \
  BigFloat& operator op##=(long o) {                                           \
    fn_si(v_, v_, o, MPFR_RNDN);                                               \
    return *this;                                                              \
  }                                                                            \
  friend BigFloat operator op(const BigFloat& a, const BigFloat& b) {          \
    BigFloat r(std::max(a.precision(), b.precision()));                        \
    fn(r.v_, a.v_, b.v_, MPFR_RNDN);                                           \
    return r;                                                                  \
  }                                                                            \
  friend BigFloat operator op(BigFloat a, long b) { return a op##= b; }

  BACONF_BIGFLOAT_BINOP(+, mpfr_add, mpfr_add_si)
  BACONF_BIGFLOAT_BINOP(-, mpfr_sub, mpfr_sub_si)
  BACONF_BIGFLOAT_BINOP(*, mpfr_mul, mpfr_mul_si)
  BACONF_BIGFLOAT_BINOP(/, mpfr_div, mpfr_div_si)
#undef BACONF_BIGFLOAT_BINOP

  friend BigFloat operator+(long a, const BigFloat& b) { return b + a; }
  friend BigFloat operator*(long a, const BigFloat& b) { return b * a; }
  friend BigFloat operator-(long a, const BigFloat& b) { return -(b - a); }
  friend BigFloat operator/(long a, const BigFloat& b) { return BigFloat(a, b.precision()) / b; }

  friend int compare(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_); }
  friend bool operator<(const BigFloat& a, const BigFloat& b) { return compare(a, b) < 0; }
  friend bool operator>(const BigFloat& a, const BigFloat& b) { return compare(a, b) > 0; }
  friend bool operator<=(const BigFloat& a, const BigFloat& b) { return compare(a, b) <= 0; }
  friend bool operator>=(const BigFloat& a, const BigFloat& b) { return compare(a, b) >= 0; }
  friend bool operator==(const BigFloat& a, const BigFloat& b) { return compare(a, b) == 0; }

  friend std::ostream& operator<<(std::ostream& os, const BigFloat& x) {
    char* buf = nullptr;
    mpfr_asprintf(&buf, "%.30Rg", x.v_);
    os << buf;
    mpfr_free_str(buf);
    return os;
  }

 private:
  template <class Fn>
  friend BigFloat apply_unary(const BigFloat& x, Fn fn);

  static Bits clamp(Bits bits) { return bits < MPFR_PREC_MIN ? MPFR_PREC_MIN : bits; }

  mpfr_t v_;
};

template <class Fn>
BigFloat apply_unary(const BigFloat& x, Fn fn) {
  BigFloat r(x.precision());
  fn(r.v_, x.v_, MPFR_RNDN);
  return r;
}

inline BigFloat abs(const BigFloat& x) { return apply_unary(x, mpfr_abs); }
inline BigFloat sqrt(const BigFloat& x) { return apply_unary(x, mpfr_sqrt); }
inline BigFloat sin(const BigFloat& x) { return apply_unary(x, mpfr_sin); }
inline BigFloat cos(const BigFloat& x) { return apply_unary(x, mpfr_cos); }
inline BigFloat tan(const BigFloat& x) { return apply_unary(x, mpfr_tan); }
inline BigFloat cot(const BigFloat& x) { return apply_unary(x, mpfr_cot); }
inline BigFloat log(const BigFloat& x) { return apply_unary(x, mpfr_log); }
inline BigFloat exp(const BigFloat& x) { return apply_unary(x, mpfr_exp); }
inline BigFloat atan(const BigFloat& x) { return apply_unary(x, mpfr_atan); }

inline BigFloat atan2(const BigFloat& y, const BigFloat& x) {
  BigFloat r(std::max(y.precision(), x.precision()));
  mpfr_atan2(r.raw(), y.raw(), x.raw(), MPFR_RNDN);
  return r;
}

inline BigFloat ldexp(const BigFloat& x, long exponent) {
  BigFloat r(x);
  mpfr_mul_2si(r.raw(), r.raw(), exponent, MPFR_RNDN);
  return r;
}

inline const BigFloat& max(const BigFloat& a, const BigFloat& b) { return a < b ? b : a; }
inline const BigFloat& min(const BigFloat& a, const BigFloat& b) { return b < a ? b : a; }

/// Reduce x into [0, period).
inline BigFloat reduce_mod(const BigFloat& x, const BigFloat& period) {
  BigFloat q = x / period;
  mpfr_floor(q.raw(), q.raw());
  BigFloat r = x - q * period;
  if (r.sign() < 0) r += period;
  if (r >= period) r -= period;
  return r;
}

/// Complex pair of BigFloats.
struct Complex {
  BigFloat re;
  BigFloat im;

  explicit Complex(BigFloat::Bits bits = BigFloat::kMinBits) : re(bits), im(bits) {}
  Complex(BigFloat real, BigFloat imag) : re(std::move(real)), im(std::move(imag)) {}
  explicit Complex(const BigFloat& real) : re(real), im(real.precision()) {}

  BigFloat::Bits precision() const { return std::max(re.precision(), im.precision()); }

  /// e^{i theta}
  static Complex expi(const BigFloat& theta) {
    BigFloat s(theta.precision()), c(theta.precision());
    mpfr_sin_cos(s.raw(), c.raw(), theta.raw(), MPFR_RNDN);
    return {std::move(c), std::move(s)};
  }
  static Complex polar(const BigFloat& r, const BigFloat& theta) {
    Complex z = expi(theta);
    z.re *= r;
    z.im *= r;
    return z;
  }

  Complex conj() const { return {re, -im}; }
  BigFloat norm() const { return re * re + im * im; }
  BigFloat abs() const {
    BigFloat r(precision());
    mpfr_hypot(r.raw(), re.raw(), im.raw(), MPFR_RNDN);
    return r;
  }
  BigFloat arg() const { return atan2(im, re); }
  bool is_finite() const { return re.is_finite() && im.is_finite(); }

  Complex operator-() const { return {-re, -im}; }
  Complex& operator+=(const Complex& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  Complex& operator-=(const Complex& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  Complex& operator*=(const Complex& o) {
    BigFloat r = re * o.re - im * o.im;
    im = re * o.im + im * o.re;
    re = std::move(r);
    return *this;
  }
  Complex& operator*=(const BigFloat& s) {
    re *= s;
    im *= s;
    return *this;
  }
  Complex& operator/=(const Complex& o) {
    BigFloat n = o.norm();
    *this *= o.conj();
    re /= n;
    im /= n;
    return *this;
  }
  Complex& operator/=(const BigFloat& s) {
    re /= s;
    im /= s;
    return *this;
  }

  friend Complex operator+(Complex a, const Complex& b) { return a += b; }
  friend Complex operator-(Complex a, const Complex& b) { return a -= b; }
  friend Complex operator*(Complex a, const Complex& b) { return a *= b; }
  friend Complex operator*(Complex a, const BigFloat& s) { return a *= s; }
  friend Complex operator*(const BigFloat& s, Complex a) { return a *= s; }
  friend Complex operator/(Complex a, const Complex& b) { return a /= b; }
  friend Complex operator/(Complex a, const BigFloat& s) { return a /= s; }

  friend std::ostream& operator<<(std::ostream& os, const Complex& z) {
    return os << "(" << z.re << ", " << z.im << ")";
  }
};

inline Complex pow(Complex base, long exponent) {
  if (exponent < 0) {
    Complex one(BigFloat(1L, base.precision()));
    return pow(one / base, -exponent);
  }
  Complex r(BigFloat(1L, base.precision()));
  while (exponent) {
    if (exponent & 1L) r *= base;
    base *= base;
    exponent >>= 1;
  }
  return r;
}

inline BigFloat pow(BigFloat base, long exponent) {
  BigFloat r(base.precision());
  mpfr_pow_si(r.raw(), base.raw(), exponent, MPFR_RNDN);
  return r;
}

}  // namespace baconf
