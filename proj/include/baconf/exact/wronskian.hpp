#pragma once

#include <utility>
#include <vector>

#include "baconf/exact/trig_poly.hpp"

namespace baconf {

/// Determinant of a square TrigPoly matrix by fraction-free Bareiss elimination.
inline TrigPoly bareiss_determinant(std::vector<std::vector<TrigPoly>> a) {
  const std::size_t n = a.size();
  if (n == 0) return TrigPoly::constant(GaussianRational(1));
  bool negate = false;
  TrigPoly prev = TrigPoly::constant(GaussianRational(1));
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k].is_zero()) {
      std::size_t p = k + 1;
      while (p < n && a[p][k].is_zero()) ++p;
      if (p == n) return {};
      std::swap(a[k], a[p]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        a[i][j] = exact_divide(a[k][k] * a[i][j] - a[i][k] * a[k][j], prev);
      a[i][k] = TrigPoly();
    }
    prev = a[k][k];
  }
  return negate ? -a[n - 1][n - 1] : a[n - 1][n - 1];
}

/// W[f_1..f_m] = det[d^i f_j / dphi^i], i = 0..m-1.
inline TrigPoly wronskian(const std::vector<TrigPoly>& fs) {
  require(!fs.empty(), ErrorKind::InvalidArgument, "wronskian of an empty list");
  const std::size_t n = fs.size();
  std::vector<std::vector<TrigPoly>> a(n, std::vector<TrigPoly>(n));
  for (std::size_t j = 0; j < n; ++j) {
    TrigPoly d = fs[j];
    for (std::size_t i = 0; i < n; ++i) {
      a[i][j] = d;
      if (i + 1 < n) d = d.derivative();
    }
  }
  return bareiss_determinant(std::move(a));
}

}  // namespace baconf
