#pragma once

#include <map>
#include <ostream>
#include <utility>
#include <vector>

#include "baconf/exact/bigfloat.hpp"
#include "baconf/exact/dense_poly.hpp"
#include "baconf/exact/gaussian.hpp"

namespace baconf {

/// Laurent polynomial sum c_l u^l in u = e^{i phi} with Q(i) coefficients.
/// Zero coefficients are never stored.
class TrigPoly {
 public:
  using Terms = std::map<long, GaussianRational>;

  TrigPoly() = default;
  explicit TrigPoly(Terms terms) : t_(std::move(terms)) { prune(); }

  static TrigPoly constant(const GaussianRational& c) { return monomial(c, 0); }
  static TrigPoly monomial(const GaussianRational& c, long exponent) {
    TrigPoly r;
    if (!c.is_zero()) r.t_.emplace(exponent, c);
    return r;
  }
  /// sin(k phi) = (u^k - u^-k) / 2i
  static TrigPoly sin(long k) {
    GaussianRational h(Rational(0), make_rational(-1, 2));
    return monomial(h, k) - monomial(h, -k);
  }
  /// cos(k phi) = (u^k + u^-k) / 2
  static TrigPoly cos(long k) {
    GaussianRational h(make_rational(1, 2));
    return monomial(h, k) + monomial(h, -k);
  }

  const Terms& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  long min_exponent() const { return t_.empty() ? 0 : t_.begin()->first; }
  long max_exponent() const { return t_.empty() ? 0 : t_.rbegin()->first; }
  GaussianRational coeff(long exponent) const {
    auto it = t_.find(exponent);
    return it == t_.end() ? GaussianRational() : it->second;
  }

  /// Real-valued on the real line iff c_{-l} = conj(c_l).
  bool is_real() const {
    for (const auto& [l, c] : t_)
      if (!(coeff(-l) == c.conj())) return false;
    return true;
  }

  /// d/dphi: c_l -> i l c_l
  TrigPoly derivative() const {
    TrigPoly r;
    for (const auto& [l, c] : t_) {
      if (l == 0) continue;
      r.t_.emplace(l, c * GaussianRational(Rational(0), Rational(l)));
    }
    return r;
  }

  TrigPoly derivative(unsigned order) const {
    TrigPoly r = *this;
    for (unsigned i = 0; i < order; ++i) r = r.derivative();
    return r;
  }

  /// f(q phi): exponent l -> q l.
  TrigPoly scale_frequency(long q) const {
    require(q != 0, ErrorKind::InvalidArgument, "frequency scale must be nonzero");
    TrigPoly r;
    for (const auto& [l, c] : t_) r.t_.emplace(q * l, c);
    return r;
  }

  /// u^s f
  TrigPoly shift(long s) const {
    TrigPoly r;
    for (const auto& [l, c] : t_) r.t_.emplace(l + s, c);
    return r;
  }

  TrigPoly pow(unsigned e) const {
    TrigPoly r = constant(GaussianRational(1));
    TrigPoly b = *this;
    while (e) {
      if (e & 1U) r *= b;
      b *= b;
      e >>= 1U;
    }
    return r;
  }

  Complex eval(const BigFloat& phi) const {
    Complex r(phi.precision());
    for (const auto& [l, c] : t_) {
      Complex u = Complex::expi(phi * l);
      Complex cc(BigFloat(c.re, phi.precision()), BigFloat(c.im, phi.precision()));
      r += cc * u;
    }
    return r;
  }

  TrigPoly& operator+=(const TrigPoly& o) {
    for (const auto& [l, c] : o.t_) add_term(l, c);
    return *this;
  }
  TrigPoly& operator-=(const TrigPoly& o) {
    for (const auto& [l, c] : o.t_) add_term(l, -c);
    return *this;
  }
  TrigPoly& operator*=(const GaussianRational& s) {
    if (s.is_zero()) {
      t_.clear();
      return *this;
    }
    for (auto& [l, c] : t_) c *= s;
    return *this;
  }
  TrigPoly& operator*=(const TrigPoly& o) { return *this = *this * o; }
  TrigPoly operator-() const {
    TrigPoly r = *this;
    for (auto& [l, c] : r.t_) c = -c;
    return r;
  }

  friend TrigPoly operator+(TrigPoly a, const TrigPoly& b) { return a += b; }
  friend TrigPoly operator-(TrigPoly a, const TrigPoly& b) { return a -= b; }
  friend TrigPoly operator*(TrigPoly a, const GaussianRational& s) { return a *= s; }
  friend TrigPoly operator*(const GaussianRational& s, TrigPoly a) { return a *= s; }
  friend TrigPoly operator*(const TrigPoly& a, const TrigPoly& b) {
    TrigPoly r;
    for (const auto& [la, ca] : a.t_)
      for (const auto& [lb, cb] : b.t_) r.add_term(la + lb, ca * cb);
    return r;
  }

  /// Exact quotient a / b in the Laurent ring; fails if b does not divide a.
  friend TrigPoly exact_divide(const TrigPoly& a, const TrigPoly& b) {
    require(!b.is_zero(), ErrorKind::InvalidArgument, "Laurent division by zero");
    if (a.is_zero()) return {};
    const long la = a.min_exponent();
    const long lb = b.min_exponent();
    auto [q, r] = divmod(a.to_poly(), b.to_poly());
    require(r.is_zero(), ErrorKind::InvalidArgument, "Laurent division is not exact");
    return from_poly(q, la - lb);
  }

  friend bool operator==(const TrigPoly& a, const TrigPoly& b) { return a.t_ == b.t_; }

  friend std::ostream& operator<<(std::ostream& os, const TrigPoly& p) {
    if (p.is_zero()) return os << "0";
    bool first = true;
    for (const auto& [l, c] : p.t_) {
      if (!first) os << " + ";
      first = false;
      os << "(" << c << ")u^" << l;
    }
    return os;
  }

 private:
  /// Coefficients shifted so the lowest exponent lands at degree 0.
  GaussianPoly to_poly() const {
    if (t_.empty()) return {};
    const long lo = min_exponent();
    std::vector<GaussianRational> c(static_cast<std::size_t>(max_exponent() - lo + 1));
    for (const auto& [l, v] : t_) c[static_cast<std::size_t>(l - lo)] = v;
    return GaussianPoly(std::move(c));
  }
  static TrigPoly from_poly(const GaussianPoly& p, long offset) {
    TrigPoly r;
    for (std::size_t i = 0; i < p.coeffs().size(); ++i)
      if (!p.coeffs()[i].is_zero()) r.t_.emplace(static_cast<long>(i) + offset, p.coeffs()[i]);
    return r;
  }

  void add_term(long l, const GaussianRational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = t_.emplace(l, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) t_.erase(it);
    }
  }
  void prune() {
    for (auto it = t_.begin(); it != t_.end();) it = it->second.is_zero() ? t_.erase(it) : std::next(it);
  }

  Terms t_;
};

}  // namespace baconf
