#pragma once

#include <sstream>
#include <vector>

#include "baconf/config/configuration.hpp"

namespace baconf {

namespace detail {

/// F = sum_{i<j} m_i m_j log sin(psi_j - psi_i); -inf outside the ordered region.
struct LocusObjective {
  std::vector<BigFloat> mult;
  BigFloat::Bits prec;

  bool ordered(const std::vector<BigFloat>& psi) const {
    const BigFloat pi = BigFloat::pi(prec);
    for (std::size_t i = 0; i + 1 < psi.size(); ++i)
      if (!(psi[i] < psi[i + 1])) return false;
    return psi.back() < pi;
  }

  BigFloat value(const std::vector<BigFloat>& psi) const {
    BigFloat f(prec);
    for (std::size_t i = 0; i < psi.size(); ++i)
      for (std::size_t j = i + 1; j < psi.size(); ++j) f += mult[i] * mult[j] * log(sin(psi[j] - psi[i]));
    return f;
  }

  /// Gradient and Hessian in the free angles psi_1..psi_n.
  void derivatives(const std::vector<BigFloat>& psi, std::vector<BigFloat>& g, std::vector<std::vector<BigFloat>>& h) const {
    const std::size_t n = psi.size() - 1;
    g.assign(n, BigFloat(prec));
    h.assign(n, std::vector<BigFloat>(n, BigFloat(prec)));
    for (std::size_t k = 1; k <= n; ++k) {
      for (std::size_t i = 0; i < psi.size(); ++i) {
        if (i == k) continue;
        BigFloat d = psi[k] - psi[i];
        BigFloat s = sin(d);
        BigFloat w = mult[k] * mult[i];
        g[k - 1] += w * cos(d) / s;
        BigFloat csc2 = w / (s * s);
        h[k - 1][k - 1] -= csc2;
        if (i >= 1) h[k - 1][i - 1] += csc2;
      }
    }
  }
};

/// Solve A x = b by Gaussian elimination with partial pivoting.
inline std::vector<BigFloat> solve_dense(std::vector<std::vector<BigFloat>> a, std::vector<BigFloat> b) {
  const std::size_t n = b.size();
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    for (std::size_t i = k + 1; i < n; ++i)
      if (abs(a[i][k]) > abs(a[p][k])) p = i;
    std::swap(a[k], a[p]);
    std::swap(b[k], b[p]);
    require(!a[k][k].is_zero(), ErrorKind::NoConvergence, "singular Newton system");
    for (std::size_t i = k + 1; i < n; ++i) {
      BigFloat f = a[i][k] / a[k][k];
      for (std::size_t j = k; j < n; ++j) a[i][j] -= f * a[k][j];
      b[i] -= f * b[k];
    }
  }
  std::vector<BigFloat> x(n, BigFloat(b.empty() ? 64 : b[0].precision()));
  for (std::size_t k = n; k-- > 0;) {
    BigFloat s = b[k];
    for (std::size_t j = k + 1; j < n; ++j) s -= a[k][j] * x[j];
    x[k] = s / a[k][k];
  }
  return x;
}

inline BigFloat max_abs(const std::vector<BigFloat>& v, BigFloat::Bits prec) {
  BigFloat m(prec);
  for (const auto& x : v) m = max(m, abs(x));
  return m;
}

/// Golden-section ascent on one coordinate inside its ordered interval.
inline void golden_coordinate(const LocusObjective& obj, std::vector<BigFloat>& psi, std::size_t k) {
  const auto prec = obj.prec;
  BigFloat lo = psi[k - 1];
  BigFloat hi = k + 1 < psi.size() ? psi[k + 1] : BigFloat::pi(prec);
  const BigFloat ratio = (sqrt(BigFloat(5L, prec)) - 1L) / 2L;
  auto at = [&](const BigFloat& x) {
    std::vector<BigFloat> t = psi;
    t[k] = x;
    return obj.value(t);
  };
  BigFloat a = hi - ratio * (hi - lo), b = lo + ratio * (hi - lo);
  BigFloat fa = at(a), fb = at(b);
  for (int it = 0; it < 200; ++it) {
    if (fa < fb) {
      lo = a;
      a = b;
      fa = fb;
      b = lo + ratio * (hi - lo);
      fb = at(b);
    } else {
      hi = b;
      b = a;
      fb = fa;
      a = hi - ratio * (hi - lo);
      fa = at(a);
    }
  }
  psi[k] = (lo + hi) / 2L;
}

}  // namespace detail

/// Critical point of F = sum_{i<j} m_i m_j log sin(psi_j - psi_i) on the ordered region
/// 0 = psi_0 < psi_1 < ... < psi_n < pi. F is strictly concave there, so damped Newton
/// from equal spacing converges; a golden-section coordinate sweep takes over on stalls.
inline Configuration solve_general_locus(const std::vector<Rational>& mults, BigFloat::Bits precision = 256) {
  require(mults.size() >= 2, ErrorKind::InvalidArgument, "need at least two multiplicities");
  for (const auto& m : mults) require(m > 0, ErrorKind::InvalidArgument, "multiplicities must be positive");
  const BigFloat::Bits wp = precision + 32;
  detail::LocusObjective obj{{}, wp};
  for (const auto& m : mults) obj.mult.emplace_back(m, wp);
  const std::size_t total = mults.size();
  const BigFloat pi = BigFloat::pi(wp);
  std::vector<BigFloat> psi;
  for (std::size_t i = 0; i < total; ++i) psi.push_back(pi * static_cast<long>(i) / static_cast<long>(total));

  const BigFloat tol = BigFloat::exp2(-(static_cast<long>(precision) - 32), wp);
  std::vector<BigFloat> g;
  std::vector<std::vector<BigFloat>> h;
  BigFloat gnorm(wp);
  int stalls = 0;
  for (int iter = 0; iter < 500; ++iter) {
    obj.derivatives(psi, g, h);
    gnorm = detail::max_abs(g, wp);
    if (gnorm < tol) {
      Configuration c;
      c.kind = Kind::General;
      c.precision = precision;
      c.m = mults[0] == Rational(mults[0].convert_to<long>()) ? mults[0].convert_to<long>() : 0;
      c.n = static_cast<long>(total) - 1;
      for (std::size_t i = 0; i < total; ++i) c.lines.push_back(make_line(mults[i], BigFloat(psi[i], precision)));
      return c;
    }
    std::vector<BigFloat> rhs;
    for (const auto& x : g) rhs.push_back(-x);
    std::vector<BigFloat> step = detail::solve_dense(h, rhs);
    const BigFloat f0 = obj.value(psi);
    BigFloat t(1L, wp);
    bool accepted = false;
    for (int halving = 0; halving < 80; ++halving) {
      std::vector<BigFloat> trial = psi;
      for (std::size_t k = 1; k < total; ++k) trial[k] += t * step[k - 1];
      if (obj.ordered(trial)) {
        std::vector<BigFloat> gt;
        std::vector<std::vector<BigFloat>> ht;
        obj.derivatives(trial, gt, ht);
        if (obj.value(trial) >= f0 || detail::max_abs(gt, wp) < gnorm) {
          psi = std::move(trial);
          accepted = true;
          break;
        }
      }
      t /= 2L;
    }
    if (!accepted) {
      require(++stalls <= 20, ErrorKind::NoConvergence, "Newton stalled repeatedly");
      for (std::size_t k = 1; k < total; ++k) detail::golden_coordinate(obj, psi, k);
    }
  }
  std::ostringstream msg;
  msg << "gradient norm 2^" << gnorm.log2_abs() << " above 2^" << -(static_cast<long>(precision) - 32)
      << " after 500 iterations";
  fail(ErrorKind::NoConvergence, msg.str());
}

}  // namespace baconf
