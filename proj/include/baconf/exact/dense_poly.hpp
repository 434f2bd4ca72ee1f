#pragma once

#include <cstddef>
#include <ostream>
#include <utility>
#include <vector>

#include "baconf/exact/bigfloat.hpp"
#include "baconf/exact/gaussian.hpp"
#include "baconf/exact/rational.hpp"

namespace baconf {

/// Dense univariate polynomial over a field; coeffs[i] multiplies x^i.
/// Trailing zeros are stripped so the zero polynomial has no coefficients.
template <class T>
class DensePoly {
 public:
  DensePoly() = default;
  explicit DensePoly(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }
  DensePoly(std::initializer_list<T> coeffs) : c_(coeffs) { trim(); }

  static DensePoly constant(const T& value) { return DensePoly(std::vector<T>{value}); }
  static DensePoly monomial(const T& value, std::size_t degree) {
    std::vector<T> c(degree + 1, T(0));
    c[degree] = value;
    return DensePoly(std::move(c));
  }
  static DensePoly x() { return monomial(T(1), 1); }

  bool is_zero() const { return c_.empty(); }
  /// Degree; -1 for the zero polynomial.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  const std::vector<T>& coeffs() const { return c_; }
  /// Coefficient of x^i, zero beyond the degree.
  T operator[](std::size_t i) const { return i < c_.size() ? c_[i] : T(0); }
  const T& leading() const { return c_.back(); }

  DensePoly derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<T> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * T(static_cast<int>(i));
    return DensePoly(std::move(d));
  }

  DensePoly monic() const {
    if (is_zero()) return *this;
    DensePoly r = *this;
    T lead = leading();
    for (auto& x : r.c_) x /= lead;
    return r;
  }

  /// p(x^q)
  DensePoly inflate(std::size_t q) const {
    require(q >= 1, ErrorKind::InvalidArgument, "inflate needs q >= 1");
    if (is_zero()) return {};
    std::vector<T> r(q * (c_.size() - 1) + 1, T(0));
    for (std::size_t i = 0; i < c_.size(); ++i) r[q * i] = c_[i];
    return DensePoly(std::move(r));
  }

  /// p(s x)
  DensePoly scale_argument(const T& s) const {
    DensePoly r = *this;
    T f(1);
    for (auto& x : r.c_) {
      x *= f;
      f *= s;
    }
    r.trim();
    return r;
  }

  T eval(const T& at) const {
    T r(0);
    for (std::size_t i = c_.size(); i-- > 0;) r = r * at + c_[i];
    return r;
  }

  DensePoly& operator+=(const DensePoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), T(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  DensePoly& operator-=(const DensePoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), T(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  DensePoly& operator*=(const T& s) {
    for (auto& x : c_) x *= s;
    trim();
    return *this;
  }
  DensePoly operator-() const {
    DensePoly r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
  }

  friend DensePoly operator+(DensePoly a, const DensePoly& b) { return a += b; }
  friend DensePoly operator-(DensePoly a, const DensePoly& b) { return a -= b; }
  friend DensePoly operator*(DensePoly a, const T& s) { return a *= s; }
  friend DensePoly operator*(const T& s, DensePoly a) { return a *= s; }
  friend DensePoly operator*(const DensePoly& a, const DensePoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<T> r(a.c_.size() + b.c_.size() - 1, T(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (baconf::is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return DensePoly(std::move(r));
  }

  /// Euclidean division; returns {quotient, remainder}.
  friend std::pair<DensePoly, DensePoly> divmod(const DensePoly& a, const DensePoly& b) {
    require(!b.is_zero(), ErrorKind::InvalidArgument, "polynomial division by zero");
    if (a.degree() < b.degree()) return {DensePoly{}, a};
    std::vector<T> rem = a.c_;
    std::vector<T> quo(a.c_.size() - b.c_.size() + 1, T(0));
    const T& lead = b.leading();
    for (std::size_t k = quo.size(); k-- > 0;) {
      T coef = rem[k + b.c_.size() - 1] / lead;
      if (baconf::is_zero(coef)) continue;
      quo[k] = coef;
      for (std::size_t j = 0; j < b.c_.size(); ++j) rem[k + j] -= coef * b.c_[j];
    }
    rem.resize(b.c_.size() - 1);
    return {DensePoly(std::move(quo)), DensePoly(std::move(rem))};
  }
  friend DensePoly operator%(const DensePoly& a, const DensePoly& b) { return divmod(a, b).second; }
  friend DensePoly operator/(const DensePoly& a, const DensePoly& b) { return divmod(a, b).first; }

  /// Monic greatest common divisor (zero if both inputs are zero).
  friend DensePoly gcd(DensePoly a, DensePoly b) {
    while (!b.is_zero()) {
      DensePoly r = a % b;
      a = std::move(b);
      b = std::move(r);
    }
    return a.monic();
  }

  friend bool operator==(const DensePoly& a, const DensePoly& b) { return a.c_ == b.c_; }

  friend std::ostream& operator<<(std::ostream& os, const DensePoly& p) {
    if (p.is_zero()) return os << "0";
    bool first = true;
    for (std::size_t i = p.c_.size(); i-- > 0;) {
      if (baconf::is_zero(p.c_[i])) continue;
      if (!first) os << " + ";
      first = false;
      os << "(" << p.c_[i] << ")";
      if (i >= 1) os << "x";
      if (i >= 2) os << "^" << i;
    }
    return os;
  }

 private:
  void trim() {
    while (!c_.empty() && baconf::is_zero(c_.back())) c_.pop_back();
  }

  std::vector<T> c_;
};

using RationalPoly = DensePoly<Rational>;
using GaussianPoly = DensePoly<GaussianRational>;

/// Horner evaluation of a rational polynomial at a complex point.
inline Complex eval(const RationalPoly& p, const Complex& z) {
  const auto prec = z.precision();
  Complex r(prec);
  for (std::size_t i = p.coeffs().size(); i-- > 0;) {
    r *= z;
    r.re += BigFloat(p.coeffs()[i], prec);
  }
  return r;
}

inline BigFloat eval(const RationalPoly& p, const BigFloat& x) {
  BigFloat r(x.precision());
  for (std::size_t i = p.coeffs().size(); i-- > 0;) r = r * x + BigFloat(p.coeffs()[i], x.precision());
  return r;
}

/// True when p has no repeated factor over Q.
inline bool is_squarefree(const RationalPoly& p) {
  if (p.degree() <= 1) return true;
  return gcd(p, p.derivative()).degree() == 0;
}

inline GaussianPoly to_gaussian(const RationalPoly& p) {
  std::vector<GaussianRational> c;
  c.reserve(p.coeffs().size());
  for (const auto& x : p.coeffs()) c.emplace_back(x);
  return GaussianPoly(std::move(c));
}

}  // namespace baconf
