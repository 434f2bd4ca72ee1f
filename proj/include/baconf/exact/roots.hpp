#pragma once

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "baconf/exact/bigfloat.hpp"
#include "baconf/exact/dense_poly.hpp"

namespace baconf {

namespace detail {

/// Fujiwara bound on root moduli of a polynomial with the given coefficients.
inline double fujiwara_bound(const RationalPoly& p) {
  const long n = p.degree();
  const double lead = std::fabs(p.leading().convert_to<double>());
  double bound = 0.0;
  for (long k = 1; k <= n; ++k) {
    double a = std::fabs(p[static_cast<std::size_t>(n - k)].convert_to<double>()) / lead;
    if (k == n) a /= 2.0;
    bound = std::max(bound, std::pow(a, 1.0 / static_cast<double>(k)));
  }
  return 2.0 * bound;
}

inline Complex eval_with_derivative(const std::vector<Complex>& c, const Complex& z, Complex& dp) {
  const auto prec = z.precision();
  Complex v(prec);
  dp = Complex(prec);
  for (std::size_t i = c.size(); i-- > 0;) {
    dp = dp * z + v;
    v = v * z + c[i];
  }
  return v;
}

}  // namespace detail

/// Principal argument mapped into [0, 2 pi).
inline BigFloat arg_0_2pi(const Complex& z) {
  BigFloat a = z.arg();
  if (a.sign() < 0) a += BigFloat::pi(a.precision()) * 2L;
  return a;
}

/// All complex roots of a squarefree rational polynomial by Aberth iteration,
/// sorted by argument in [0, 2 pi) and then by modulus.
inline std::vector<Complex> poly_roots(const RationalPoly& p, BigFloat::Bits precision) {
  require(!p.is_zero(), ErrorKind::InvalidArgument, "roots of the zero polynomial");
  const long n = p.degree();
  if (n == 0) return {};
  require(is_squarefree(p), ErrorKind::NonSquarefree, "gcd(p, p') is nonconstant");

  const BigFloat::Bits wp = precision + 64;
  std::vector<Complex> c;
  c.reserve(static_cast<std::size_t>(n) + 1);
  const RationalPoly mp = p.monic();
  for (const auto& x : mp.coeffs()) c.emplace_back(BigFloat(x, wp));

  const double radius = std::max(detail::fujiwara_bound(mp), 1e-3);
  std::mt19937_64 rng(0x5eed);
  std::uniform_real_distribution<double> jitter(-0.25, 0.25);
  std::vector<Complex> z;
  const BigFloat two_pi = BigFloat::pi(wp) * 2L;
  for (long k = 0; k < n; ++k) {
    BigFloat theta = two_pi * BigFloat((static_cast<double>(k) + 0.4 + jitter(rng)) / static_cast<double>(n), wp);
    z.push_back(Complex::polar(BigFloat(radius * (1.0 + 0.1 * jitter(rng)), wp), theta));
  }

  const BigFloat tol = BigFloat::exp2(-static_cast<long>(precision) - 16, wp);
  bool converged = false;
  for (int iter = 0; iter < 4000 && !converged; ++iter) {
    converged = true;
    for (long k = 0; k < n; ++k) {
      Complex dp(wp);
      Complex v = detail::eval_with_derivative(c, z[k], dp);
      if (v.re.is_zero() && v.im.is_zero()) continue;
      Complex ratio = v / dp;
      Complex sum(wp);
      for (long j = 0; j < n; ++j)
        if (j != k) sum += Complex(BigFloat(1L, wp)) / (z[k] - z[j]);
      Complex step = ratio / (Complex(BigFloat(1L, wp)) - ratio * sum);
      require(step.is_finite(), ErrorKind::NoConvergence, "Aberth step diverged");
      z[k] -= step;
      BigFloat scale = max(z[k].abs(), BigFloat(1L, wp));
      if (step.abs() > tol * scale) converged = false;
    }
  }
  require(converged, ErrorKind::NoConvergence, "Aberth iteration did not converge");

  BigFloat cmax(wp);
  for (const auto& x : p.coeffs()) cmax = max(cmax, abs(BigFloat(x, wp)));
  const BigFloat bound = cmax * BigFloat::exp2(-(static_cast<long>(precision) - 16), wp);
  std::vector<Complex> out;
  out.reserve(z.size());
  for (const auto& r : z) {
    require(eval(p, r).abs() < bound, ErrorKind::NoConvergence, "root residual above tolerance");
    out.emplace_back(BigFloat(r.re, precision), BigFloat(r.im, precision));
  }
  std::sort(out.begin(), out.end(), [](const Complex& a, const Complex& b) {
    int c = compare(arg_0_2pi(a), arg_0_2pi(b));
    if (c != 0) return c < 0;
    return a.abs() < b.abs();
  });
  return out;
}

}  // namespace baconf
