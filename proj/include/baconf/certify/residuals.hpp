#pragma once

#include <cmath>
#include <string>
#include <utility>

#include "baconf/config/configuration.hpp"

namespace baconf {

enum class Form { PolarFirst, PolarLocus, CartesianFirst, CartesianLocus };

inline std::string to_string(Form f) {
  switch (f) {
    case Form::PolarFirst: return "polar-first";
    case Form::PolarLocus: return "polar-locus";
    case Form::CartesianFirst: return "cartesian-first";
    case Form::CartesianLocus: return "cartesian-locus";
  }
  return "unknown";
}

/// Value of one existence condition at line j and order k.
struct ConditionResidual {
  std::size_t j = 0;
  long k = 1;
  Form form = Form::PolarFirst;
  Complex value;
  BigFloat scale;  // largest a priori summand bound

  /// |value| / scale, or zero if every summand vanishes.
  BigFloat relative() const {
    if (scale.is_zero()) return BigFloat(value.precision());
    return value.abs() / scale;
  }
  double relative_log2() const { return relative().log2_abs(); }
};

namespace detail {

inline void check_index(const Configuration& c, std::size_t j, long k) {
  require(j < c.size(), ErrorKind::InvalidArgument, "line index out of range");
  require(k >= 1, ErrorKind::InvalidArgument, "condition order must be >= 1");
}

inline void check_distinct(const Complex& diff, BigFloat::Bits prec, std::size_t i, std::size_t j) {
  const BigFloat tiny = BigFloat::exp2(-static_cast<long>(prec) + 16, prec);
  require(diff.abs() > tiny, ErrorKind::Collinear,
          "lines " + std::to_string(i) + " and " + std::to_string(j) + " coincide");
}

/// Each term returns its value and a bound on its modulus obtained with |z_i + z_j| <= 2
/// (|cos| <= 1 in the Cartesian form). The bound keeps the scale away from zero when a
/// summand cancels exactly, as for orthogonal lines, so rounding noise is not inflated.
template <class Term>
ConditionResidual accumulate(const Configuration& c, std::size_t j, long k, Form form, Term term) {
  const auto prec = c.precision;
  ConditionResidual r{j, k, form, Complex(prec), BigFloat(prec)};
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i == j) continue;
    auto [t, bound] = term(i);
    if (bound > r.scale) r.scale = bound;
    r.value += t;
  }
  return r;
}

}  // namespace detail

/// sum_{i != j} m_i ((z_i + z_j) / (z_i - z_j))^{2k-1}
inline ConditionResidual first_condition_residual(const Configuration& c, std::size_t j, long k) {
  detail::check_index(c, j, k);
  const Complex& zj = c.lines[j].z;
  return detail::accumulate(c, j, k, Form::PolarFirst, [&](std::size_t i) {
    const Complex& zi = c.lines[i].z;
    Complex diff = zi - zj;
    detail::check_distinct(diff, c.precision, i, j);
    const BigFloat mi(c.lines[i].mult, c.precision);
    Complex t = pow((zi + zj) / diff, 2 * k - 1) * mi;
    BigFloat bound = pow(BigFloat(2L, c.precision) / diff.abs(), 2 * k - 1) * abs(mi);
    return std::pair{t, bound};
  });
}

/// sum_{i != j} m_i (m_i + 1) z_i (z_i + z_j)^{2k-1} / (z_i - z_j)^{2k+1}
inline ConditionResidual locus_condition_residual(const Configuration& c, std::size_t j, long k) {
  detail::check_index(c, j, k);
  const Complex& zj = c.lines[j].z;
  return detail::accumulate(c, j, k, Form::PolarLocus, [&](std::size_t i) {
    const Complex& zi = c.lines[i].z;
    Complex diff = zi - zj;
    detail::check_distinct(diff, c.precision, i, j);
    const Rational& mi = c.lines[i].mult;
    const BigFloat w(Rational(mi * (mi + 1)), c.precision);
    Complex t = zi * pow(zi + zj, 2 * k - 1) / pow(diff, 2 * k + 1) * w;
    BigFloat bound = BigFloat::exp2(2 * k - 1, c.precision) / pow(diff.abs(), 2 * k + 1) * abs(w);
    return std::pair{t, bound};
  });
}

enum class Which { First, Locus };

/// The conditions with inner products against x = (-sin phi_j, cos phi_j):
/// first: sum m_i cos^{2k-1} d / sin^{2k-1} d, locus: sum m_i (m_i + 1) cos^{2k-1} d / sin^{2k+1} d,
/// with d = phi_i - phi_j. Real valued; stored in value.re.
inline ConditionResidual cartesian_condition_residual(const Configuration& c, std::size_t j, long k, Which which) {
  detail::check_index(c, j, k);
  const auto prec = c.precision;
  const BigFloat& pj = c.lines[j].phi;
  const Form form = which == Which::First ? Form::CartesianFirst : Form::CartesianLocus;
  return detail::accumulate(c, j, k, form, [&](std::size_t i) {
    detail::check_distinct(c.lines[i].z - c.lines[j].z, prec, i, j);
    BigFloat d = c.lines[i].phi - pj;
    BigFloat s = sin(d), co = cos(d);
    const Rational& mi = c.lines[i].mult;
    const BigFloat w = which == Which::First ? BigFloat(mi, prec) : BigFloat(Rational(mi * (mi + 1)), prec);
    const long e = which == Which::First ? 2 * k - 1 : 2 * k + 1;
    BigFloat t = pow(co, 2 * k - 1) / pow(s, e) * w;
    BigFloat bound = abs(w) / pow(abs(s), e);
    return std::pair{Complex(t), bound};
  });
}

}  // namespace baconf
