#pragma once

#include "baconf/config/configuration.hpp"

namespace baconf {

namespace detail {

/// The simple-block polynomial of an (m, 1^n) or two-multiplicity configuration;
/// for a q-expansion P(w^q) is deflated back to P(w).
inline RationalPoly base_polynomial(const Configuration& c, Kind family) {
  require(c.P.has_value(), ErrorKind::MissingExactData, "configuration carries no exact P(w)");
  if (c.kind == family) return *c.P;
  require(c.kind == Kind::QExpanded && c.base == family && c.q, ErrorKind::InvalidArgument,
          "configuration is not of the " + to_string(family) + " family");
  const auto q = static_cast<std::size_t>(*c.q);
  const auto& coeffs = c.P->coeffs();
  std::vector<Rational> base;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (i % q == 0) base.push_back(coeffs[i]);
    else require(coeffs[i].is_zero(), ErrorKind::InvalidArgument, "P is not a polynomial in w^q");
  }
  return RationalPoly(std::move(base));
}

inline RationalPoly lin(long c0, long c1) { return RationalPoly({Rational(c0), Rational(c1)}); }

}  // namespace detail

/// w(w - 1) P'' - ((n - 1)(w - 1) - m(w + 1)) P' - m n P, exactly.
inline RationalPoly ode_residual_am1n(const Configuration& c) {
  const RationalPoly p = detail::base_polynomial(c, Kind::Am1n);
  const long m = c.m, n = c.n;
  const RationalPoly w = RationalPoly::x();
  const RationalPoly d1 = p.derivative(), d2 = d1.derivative();
  RationalPoly coef1 = detail::lin(-(n - 1), n - 1) - detail::lin(m, m);
  return w * detail::lin(-1, 1) * d2 - coef1 * d1 - p * Rational(m * n);
}

/// w(w^2 - 1) P'' - ((n - 1)(w^2 - 1) - m(w + 1)^2 - mt(w - 1)^2) P' - (n(m + mt) w + n(m - mt)) P.
inline RationalPoly ode_residual_two_mult(const Configuration& c) {
  const RationalPoly p = detail::base_polynomial(c, Kind::TwoMult);
  const long m = c.m, mt = c.mtilde.value_or(0), n = c.n;
  const RationalPoly w = RationalPoly::x();
  const RationalPoly w2m1({Rational(-1), Rational(0), Rational(1)});
  const RationalPoly wp1 = detail::lin(1, 1), wm1 = detail::lin(-1, 1);
  const RationalPoly d1 = p.derivative(), d2 = d1.derivative();
  RationalPoly coef1 = w2m1 * Rational(n - 1) - wp1 * wp1 * Rational(m) - wm1 * wm1 * Rational(mt);
  RationalPoly coef0 = detail::lin(n * (m - mt), n * (m + mt));
  return w * w2m1 * d2 - coef1 * d1 - coef0 * p;
}

}  // namespace baconf
