#pragma once

#include <algorithm>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "baconf/certify/residuals.hpp"
#include "baconf/config/configuration.hpp"
#include "baconf/exact/roots.hpp"
#include "baconf/exact/symmetric.hpp"

namespace baconf {

namespace detail {

inline void add_roots_as_lines(Configuration& c, const RationalPoly& p) {
  for (const auto& z : poly_roots(p, c.precision)) c.lines.push_back(make_line_from_z(Rational(1), z));
}

inline void sort_lines(Configuration& c) {
  std::stable_sort(c.lines.begin(), c.lines.end(), [](const Line& a, const Line& b) { return a.phi < b.phi; });
}

}  // namespace detail

/// The (m, 1^n) arrangement: multiplicity m on phi = 0 and n simple lines whose
/// z-chart elementary symmetric values are (-1)^k C(n,k) C(m+k-1,k) / C(m+n-1,k).
inline Configuration build_am1n(long m, long n, BigFloat::Bits precision = 256) {
  require(m >= 1 && n >= 1, ErrorKind::InvalidArgument, "build_am1n needs m >= 1 and n >= 1");
  Configuration c;
  c.kind = Kind::Am1n;
  c.m = m;
  c.n = n;
  c.precision = precision;
  c.e = am1n_e(m, n);
  c.ehat = am1n_ehat(m, n);
  c.P = poly_from_elementary(*c.e, n);
  c.R = r_from_ehat(*c.ehat, n);
  c.lines.push_back(make_line(Rational(m), BigFloat(precision)));
  detail::add_roots_as_lines(c, *c.P);
  detail::sort_lines(c);
  return c;
}

/// e_1..e_n from the two-multiplicity recurrence seeded with e_n = 1 and the
/// given e_{n-1}; the recurrence must close with e_0 = 1.
inline std::optional<std::vector<Rational>> two_mult_elementary(long m, long mt, long n, const Rational& e_top) {
  std::vector<Rational> e(static_cast<std::size_t>(n) + 1);
  e[static_cast<std::size_t>(n)] = 1;
  e[static_cast<std::size_t>(n - 1)] = e_top;
  for (long k = 1; k <= n - 1; ++k) {
    Rational lead(BigInt((m + mt + n - k - 1) * (k + 1)));
    require(!lead.is_zero(), ErrorKind::RecurrenceBreakdown, "vanishing leading recurrence coefficient");
    Rational a(BigInt((m + mt + k - 1) * (k - n - 1)));
    Rational b(BigInt((n - 2 * k) * (m - mt)));
    e[static_cast<std::size_t>(n - k - 1)] =
        -(a * e[static_cast<std::size_t>(n - k + 1)] + b * e[static_cast<std::size_t>(n - k)]) / lead;
  }
  if (e[0] != 1) return std::nullopt;
  return std::vector<Rational>(e.begin() + 1, e.end());
}

namespace detail {

inline bool first_conditions_hold(const Configuration& c, long threshold_log2) {
  for (std::size_t j = 0; j < c.size(); ++j) {
    ConditionResidual r = first_condition_residual(c, j, 1);
    if (r.relative_log2() >= static_cast<double>(threshold_log2)) return false;
  }
  return true;
}

}  // namespace detail

/// Multiplicity m on phi = 0, multiplicity mt on phi = pi/2 (absent for mt = 0),
/// and n simple lines from the recurrence. Both signs of e_{n-1} are tried; the
/// one whose configuration satisfies the first conditions is kept.
inline Configuration build_two_mult(long m, long mt, long n, BigFloat::Bits precision = 256) {
  require(m >= 1 && mt >= 0, ErrorKind::InvalidArgument, "build_two_mult needs m >= 1 and mt >= 0");
  require(n >= 2 && n % 2 == 0, ErrorKind::InvalidArgument, "build_two_mult needs even n >= 2");
  const Rational mag = make_rational((m - mt) * n, n + m + mt - 1);
  const long threshold_log2 = -(static_cast<long>(precision) - 32);
  std::string why;
  for (int sign : {-1, +1}) {
    if (m == mt && sign > 0) break;
    auto e = two_mult_elementary(m, mt, n, sign > 0 ? mag : Rational(-mag));
    if (!e) {
      why += " sign " + std::to_string(sign) + ": recurrence does not close;";
      continue;
    }
    Configuration c;
    c.kind = Kind::TwoMult;
    c.m = m;
    c.mtilde = mt;
    c.n = n;
    c.precision = precision;
    c.e = *e;
    c.P = poly_from_elementary(*e, n);
    c.branch = m == mt ? 0 : sign;
    try {
      c.lines.push_back(make_line(Rational(m), BigFloat(precision)));
      if (mt > 0) c.lines.push_back(make_line(Rational(mt), BigFloat::pi(precision) / 2L));
      detail::add_roots_as_lines(c, *c.P);
      detail::sort_lines(c);
      if (detail::first_conditions_hold(c, threshold_log2)) return c;
      why += " sign " + std::to_string(sign) + ": first conditions fail;";
    } catch (const Error& err) {
      if (err.kind() != ErrorKind::Collinear && err.kind() != ErrorKind::NonSquarefree) throw;
      why += " sign " + std::to_string(sign) + ": " + err.what() + ";";
    }
  }
  fail(ErrorKind::NoConvergence, "no branch of e_{n-1} gives a valid configuration:" + why);
}

/// Replace every line phi_i by the q lines (phi_i + pi s) / q, s = 0..q-1.
/// The simple block's polynomial becomes P(w^q).
inline Configuration t_q_expand(const Configuration& c, long q) {
  require(q >= 1, ErrorKind::InvalidArgument, "t_q_expand needs q >= 1");
  if (q == 1) return c;
  const auto prec = c.precision;
  Configuration r;
  r.kind = Kind::QExpanded;
  r.base = c.kind == Kind::QExpanded ? c.base : std::optional<Kind>(c.kind);
  r.m = c.m;
  r.mtilde = c.mtilde;
  r.n = c.n;
  r.q = q * c.q.value_or(1);
  r.seed = c.seed;
  r.precision = prec;
  r.branch = c.branch;
  const BigFloat pi = BigFloat::pi(prec);
  for (const auto& l : c.lines)
    for (long s = 0; s < q; ++s) r.lines.push_back(make_line(l.mult, (l.phi + pi * s) / q));
  detail::sort_lines(r);
  const BigFloat tiny = BigFloat::exp2(-static_cast<long>(prec) + 32, prec);
  for (std::size_t i = 0; i < r.size(); ++i) {
    BigFloat gap = i + 1 < r.size() ? r.lines[i + 1].phi - r.lines[i].phi : r.lines[0].phi + pi - r.lines[i].phi;
    require(r.size() == 1 || gap > tiny, ErrorKind::Collision, "expanded lines coincide");
  }
  if (c.P) {
    r.P = c.P->inflate(static_cast<std::size_t>(q));
    std::vector<Rational> e;
    const long deg = r.P->degree();
    for (long k = 1; k <= deg; ++k) {
      Rational v = (*r.P)[static_cast<std::size_t>(deg - k)];
      e.push_back(k % 2 ? Rational(-v) : v);
    }
    r.e = e;
  }
  return r;
}

/// Type (m, 1^n) arrangement from explicit distinct nonzero rational slopes.
inline Configuration from_alphas(long m, const std::vector<Rational>& alphas, BigFloat::Bits precision = 256) {
  require(m >= 1, ErrorKind::InvalidArgument, "from_alphas needs m >= 1");
  std::set<Rational> seen;
  for (const auto& a : alphas) {
    require(!a.is_zero(), ErrorKind::InvalidArgument, "slope 0 is reserved for the orthogonal line");
    require(seen.insert(a).second, ErrorKind::InvalidArgument, "slopes must be distinct");
  }
  Configuration c;
  c.kind = Kind::Random;
  c.m = m;
  c.n = static_cast<long>(alphas.size());
  c.precision = precision;
  c.R = poly_from_roots(alphas);
  c.lines.push_back(make_line(Rational(m), BigFloat(precision)));
  for (const auto& a : alphas) c.lines.push_back(make_line_from_alpha(Rational(1), a, precision));
  detail::sort_lines(c);
  return c;
}

/// Slopes p/q with |p| <= 50 and 1 <= q <= 50, distinct and nonzero, drawn from a
/// 64-bit Mersenne twister seeded with `seed`.
inline std::vector<Rational> random_alphas(long n, unsigned long long seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> num(-50, 50);
  std::uniform_int_distribution<long> den(1, 50);
  std::vector<Rational> out;
  std::set<Rational> seen;
  while (static_cast<long>(out.size()) < n) {
    Rational a = make_rational(num(rng), den(rng));
    if (a.is_zero() || !seen.insert(a).second) continue;
    out.push_back(a);
  }
  return out;
}

inline Configuration random_type_m1n(long m, long n, unsigned long long seed, BigFloat::Bits precision = 256) {
  Configuration c = from_alphas(m, random_alphas(n, seed), precision);
  c.seed = seed;
  return c;
}

/// Copy of c with line j rotated by delta. Exact data no longer describes the
/// result and is dropped; the kind becomes General.
inline Configuration perturb_angle(const Configuration& c, std::size_t j, const BigFloat& delta) {
  require(j < c.size(), ErrorKind::OutOfRange, "line index out of range");
  Configuration r = c;
  r.kind = Kind::General;
  r.e.reset();
  r.ehat.reset();
  r.P.reset();
  r.R.reset();
  r.lines[j] = make_line(c.lines[j].mult, c.lines[j].phi + delta);
  detail::sort_lines(r);
  return r;
}

}  // namespace baconf
