#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "baconf/config/configuration.hpp"

namespace baconf {

namespace detail {

/// Signed offset a - b reduced to [-pi/2, pi/2).
inline BigFloat signed_offset(const BigFloat& a, const BigFloat& b, const BigFloat& pi) {
  BigFloat d = reduce_mod(a - b + pi / 2L, pi);
  return d - pi / 2L;
}

using Marked = std::vector<std::pair<BigFloat, Rational>>;

inline Marked marked_angles(const Configuration& c, bool reflect, const BigFloat& shift, const BigFloat& pi) {
  Marked out;
  for (const auto& l : c.lines) {
    BigFloat phi = reflect ? -l.phi : l.phi;
    out.emplace_back(reduce_mod(phi + shift, pi), l.mult);
  }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  return out;
}

}  // namespace detail

/// Smallest max-deviation between the angle multisets of a and b over all rotations
/// and reflections; lines are only matched with lines of equal multiplicity.
/// Returns +inf (as a huge value) when the multiplicity patterns cannot match.
inline BigFloat angle_multiset_distance(const Configuration& a, const Configuration& b) {
  const auto prec = std::max(a.precision, b.precision);
  const BigFloat pi = BigFloat::pi(prec);
  BigFloat best = BigFloat::exp2(64, prec);
  if (a.size() != b.size() || a.size() == 0) return best;
  detail::Marked target = detail::marked_angles(b, false, BigFloat(prec), pi);
  for (bool reflect : {false, true}) {
    for (const auto& anchor : target) {
      if (anchor.second != a.lines[0].mult) continue;
      BigFloat phi0 = reflect ? -a.lines[0].phi : a.lines[0].phi;
      BigFloat shift = anchor.first - phi0;
      detail::Marked moved = detail::marked_angles(a, reflect, shift, pi);
      // Both lists are sorted on the circle; try every cyclic alignment.
      const std::size_t n = moved.size();
      for (std::size_t off = 0; off < n; ++off) {
        bool ok = true;
        std::vector<BigFloat> diffs;
        for (std::size_t i = 0; i < n && ok; ++i) {
          const auto& x = moved[(i + off) % n];
          const auto& y = target[i];
          if (x.second != y.second) ok = false;
          else diffs.push_back(detail::signed_offset(x.first, y.first, pi));
        }
        if (!ok) continue;
        // Refine: the rotation minimizing the max deviation centres the offset range.
        BigFloat lo = diffs[0], hi = diffs[0];
        for (const auto& d : diffs) {
          lo = min(lo, d);
          hi = max(hi, d);
        }
        BigFloat dist = (hi - lo) / 2L;
        if (dist < best) best = dist;
      }
    }
  }
  return best;
}

}  // namespace baconf
