#pragma once

#include <optional>
#include <vector>

#include "baconf/config/configuration.hpp"
#include "baconf/exact/dense_poly.hpp"

namespace baconf {

/// Coefficient indices i of x^{d-i} y^i left free by the (0, 1) line of
/// multiplicity m: all i in [0, d] except odd i <= 2m - 1.
inline std::vector<long> free_indices(long d, long m) {
  std::vector<long> out;
  for (long i = 0; i <= d; ++i)
    if (!(i % 2 == 1 && i <= 2 * m - 1)) out.push_back(i);
  return out;
}

/// Derivative of x^{d-i} y^i along (1, a) restricted to the line (1, a)^perp,
/// divided by t^{d-1}: g_i(a) = (d-i)(-a)^{d-i-1} + i a (-a)^{d-i}.
inline RationalPoly line_functional(long d, long i) {
  std::vector<Rational> c(static_cast<std::size_t>(d - i + 2));
  if (i < d) c[static_cast<std::size_t>(d - i - 1)] = Rational((d - i) * (((d - i - 1) % 2) ? -1 : 1));
  c[static_cast<std::size_t>(d - i + 1)] = Rational(i * (((d - i) % 2) ? -1 : 1));
  return RationalPoly(std::move(c));
}

/// Structural data of a type (m, 1^n) arrangement in the slope chart.
struct TypeM1n {
  long m = 0;
  std::vector<std::size_t> simple;  // indices of the multiplicity-1 lines
};

inline TypeM1n type_m1n(const Configuration& c) {
  TypeM1n t;
  bool found = false;
  for (std::size_t j = 0; j < c.size(); ++j) {
    const Line& l = c.lines[j];
    if (l.alpha_infinite()) {
      require(!found, ErrorKind::InvalidArgument, "more than one line on phi = 0");
      require(mp::denominator(l.mult) == 1 && l.mult >= 1, ErrorKind::InvalidArgument,
              "the phi = 0 line needs a positive integer multiplicity");
      t.m = l.mult.convert_to<long>();
      found = true;
    } else {
      require(l.mult == 1, ErrorKind::InvalidArgument, "quasi-invariants need type (m, 1^n)");
      t.simple.push_back(j);
    }
  }
  require(found, ErrorKind::InvalidArgument, "no line on phi = 0; rotate the multiplicity-m line there first");
  return t;
}

/// Rank of a rational matrix by Gaussian elimination.
inline long rank_exact(std::vector<std::vector<Rational>> a) {
  if (a.empty()) return 0;
  const std::size_t rows = a.size(), cols = a[0].size();
  long rank = 0;
  std::size_t r = 0;
  for (std::size_t col = 0; col < cols && r < rows; ++col) {
    std::size_t p = r;
    while (p < rows && a[p][col].is_zero()) ++p;
    if (p == rows) continue;
    std::swap(a[r], a[p]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (a[i][col].is_zero()) continue;
      Rational f = a[i][col] / a[r][col];
      for (std::size_t j = col; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    ++r;
    ++rank;
  }
  return rank;
}

/// dim of degree-d quasi-invariants via the remainder map p -> g_p mod R over Q:
/// p satisfies every simple-line condition iff R divides g_p.
inline long qi_dimension_exact(const Configuration& c, long d) {
  require(d >= 0, ErrorKind::InvalidArgument, "degree must be >= 0");
  require(c.R.has_value(), ErrorKind::MissingExactData, "configuration carries no rational R(alpha)");
  const TypeM1n t = type_m1n(c);
  const RationalPoly& R = *c.R;
  require(R.degree() == static_cast<long>(t.simple.size()), ErrorKind::MissingExactData,
          "deg R does not match the number of simple lines");
  require(is_squarefree(R), ErrorKind::NonSquarefree, "R(alpha) has a repeated root");
  const std::vector<long> idx = free_indices(d, t.m);
  const std::size_t n = static_cast<std::size_t>(R.degree());
  if (n == 0) return static_cast<long>(idx.size());
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(idx.size()));
  for (std::size_t col = 0; col < idx.size(); ++col) {
    RationalPoly rem = line_functional(d, idx[col]) % R;
    for (std::size_t row = 0; row < n; ++row) a[row][col] = rem[row];
  }
  return static_cast<long>(idx.size()) - rank_exact(std::move(a));
}

/// Numeric rank with full pivoting; rows must come pre-scaled to unit magnitude.
/// Pivots below 2^pivot_threshold_log2 (default -precision/2) are discarded and
/// the smallest kept pivot must exceed the largest discarded one by 2^64.
inline long rank_numeric(std::vector<std::vector<BigFloat>> a, BigFloat::Bits precision,
                         std::optional<long> pivot_threshold_log2 = std::nullopt) {
  if (a.empty() || a[0].empty()) return 0;
  const std::size_t rows = a.size(), cols = a[0].size();
  const long tlog = pivot_threshold_log2.value_or(-static_cast<long>(precision) / 2);
  const BigFloat threshold = BigFloat::exp2(tlog, precision);
  const BigFloat margin = BigFloat::exp2(64, precision);

  long rank = 0;
  std::optional<BigFloat> last_kept;
  const std::size_t steps = std::min(rows, cols);
  for (std::size_t k = 0; k < steps; ++k) {
    std::size_t pi = k, pj = k;
    BigFloat best(precision);
    for (std::size_t i = k; i < rows; ++i)
      for (std::size_t j = k; j < cols; ++j) {
        BigFloat v = abs(a[i][j]);
        if (v > best) {
          best = v;
          pi = i;
          pj = j;
        }
      }
    if (best < threshold) {
      require(!last_kept || best.is_zero() || *last_kept > best * margin, ErrorKind::IllConditioned,
              "rank decision margin below 2^64");
      return rank;
    }
    std::swap(a[k], a[pi]);
    for (auto& row : a) std::swap(row[k], row[pj]);
    for (std::size_t i = k + 1; i < rows; ++i) {
      BigFloat f = a[i][k] / a[k][k];
      for (std::size_t j = k; j < cols; ++j) a[i][j] -= f * a[k][j];
    }
    ++rank;
    last_kept = best;
  }
  return rank;
}

/// dim of degree-d quasi-invariants from the numeric slopes of the simple lines.
inline long qi_dimension_numeric(const Configuration& c, long d, BigFloat::Bits precision = 256,
                                 std::optional<long> pivot_threshold_log2 = std::nullopt) {
  require(d >= 0, ErrorKind::InvalidArgument, "degree must be >= 0");
  const TypeM1n t = type_m1n(c);
  const std::vector<long> idx = free_indices(d, t.m);
  if (t.simple.empty()) return static_cast<long>(idx.size());
  std::vector<std::vector<BigFloat>> a;
  for (std::size_t j : t.simple) {
    const Line& l = c.lines[j];
    BigFloat alpha = l.alpha_exact ? BigFloat(*l.alpha_exact, precision) : BigFloat(*l.alpha, precision);
    // A priori scale max(1, |alpha|)^d; a row-max scale would inflate rounding noise
    // when every free entry of the row vanishes.
    const BigFloat scale = pow(max(BigFloat(1L, precision), abs(alpha)), d);
    std::vector<BigFloat> row;
    for (long i : idx) row.push_back(eval(line_functional(d, i), alpha) / scale);
    a.push_back(std::move(row));
  }
  return static_cast<long>(idx.size()) - rank_numeric(std::move(a), precision, pivot_threshold_log2);
}

// Membership of explicit polynomials.

/// Homogeneous bivariate polynomial: coeffs[i] multiplies x^{d-i} y^i.
using HomPoly = std::vector<BigFloat>;

inline HomPoly hom_multiply(const HomPoly& a, const HomPoly& b) {
  const auto prec = a[0].precision();
  HomPoly r(a.size() + b.size() - 1, BigFloat(prec));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

/// Largest relative defect of the conditions: for each line (cos phi, sin phi) of
/// multiplicity m_j, the coefficients of xi^k eta^{d-k}, k odd <= 2 m_j - 1, of
/// p(xi cos - eta sin, xi sin + eta cos) vanish. Returned as log2.
inline double quasi_invariance_defect_log2(const Configuration& c, const HomPoly& p) {
  const auto prec = p.at(0).precision();
  const std::size_t d = p.size() - 1;
  BigFloat pmax(prec);
  for (const auto& x : p) pmax = max(pmax, abs(x));
  double worst = -std::numeric_limits<double>::infinity();
  for (const auto& l : c.lines) {
    BigFloat co = cos(BigFloat(l.phi, prec)), si = sin(BigFloat(l.phi, prec));
    // Linear forms in (eta, xi): coeffs[k] multiplies eta^{1-k} xi^k.
    HomPoly x_form{-si, co}, y_form{co, si};
    HomPoly acc(d + 1, BigFloat(prec));
    std::vector<HomPoly> xp{HomPoly{BigFloat(1L, prec)}}, yp{HomPoly{BigFloat(1L, prec)}};
    for (std::size_t k = 1; k <= d; ++k) {
      xp.push_back(hom_multiply(xp.back(), x_form));
      yp.push_back(hom_multiply(yp.back(), y_form));
    }
    for (std::size_t i = 0; i <= d; ++i) {
      if (p[i].is_zero()) continue;
      HomPoly term = hom_multiply(xp[d - i], yp[i]);
      for (std::size_t k = 0; k <= d; ++k) acc[k] += p[i] * term[k];
    }
    const long mj = static_cast<long>(l.mult.convert_to<double>() + 0.5);
    for (long k = 1; k <= 2 * mj - 1 && k <= static_cast<long>(d); k += 2) {
      if (pmax.is_zero()) continue;
      worst = std::max(worst, (acc[static_cast<std::size_t>(k)] / pmax).log2_abs());
    }
  }
  return worst;
}

/// x^2 + y^2, raised to the power `power`.
inline HomPoly universal_radial(BigFloat::Bits prec, unsigned power = 1) {
  HomPoly r{BigFloat(1L, prec)};
  HomPoly base{BigFloat(1L, prec), BigFloat(prec), BigFloat(1L, prec)};
  for (unsigned i = 0; i < power; ++i) r = hom_multiply(r, base);
  return r;
}

/// prod_j (beta_j, x)^{2 m_j} with beta_j = (cos phi_j, sin phi_j).
inline HomPoly universal_product(const Configuration& c, BigFloat::Bits prec) {
  require(c.integral_multiplicities(), ErrorKind::InvalidArgument, "integer multiplicities required");
  HomPoly r{BigFloat(1L, prec)};
  for (const auto& l : c.lines) {
    HomPoly lin{cos(BigFloat(l.phi, prec)), sin(BigFloat(l.phi, prec))};
    for (long s = 0; s < 2 * l.mult.convert_to<long>(); ++s) r = hom_multiply(r, lin);
  }
  return r;
}

}  // namespace baconf
