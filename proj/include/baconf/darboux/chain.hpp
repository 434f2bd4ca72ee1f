#pragma once

#include <vector>

#include "baconf/error.hpp"
#include "baconf/exact/rational.hpp"
#include "baconf/exact/trig_poly.hpp"
#include "baconf/exact/wronskian.hpp"

namespace baconf {

/// Wronskian data sin(q k_1 phi), ..., sin(q k_m phi) attached to (m, mt, n).
struct DarbouxChain {
  long m = 0;
  long mtilde = 0;
  long n = 0;
  long q = 1;
  std::vector<long> levels;  // k_j before scaling by q
  std::vector<TrigPoly> chi;
  TrigPoly W;
};

/// k_j = j for j <= m - mt, then m - mt + 2j for j < mt, and k_m = mt + m + n.
/// With mt = 0 the list is [1, ..., m - 1, m + n]. Odd n is accepted only for mt = 0.
inline std::vector<long> darboux_levels(long m, long mt, long n) {
  require(mt >= 0 && n >= 0, ErrorKind::InvalidArgument, "multiplicities and n must be non-negative");
  if (m < mt) fail(ErrorKind::InvalidOrder, "m < mt: rotate by pi/2 so the larger multiplicity sits at phi = 0");
  require(mt == 0 || n % 2 == 0, ErrorKind::InvalidArgument, "two-multiplicity chains need even n");
  std::vector<long> k;
  if (m == 0) {
    require(n == 0, ErrorKind::InvalidArgument, "m = 0 is only the trivial chain with n = 0");
    return k;
  }
  if (mt == 0) {
    for (long j = 1; j < m; ++j) k.push_back(j);
  } else {
    for (long j = 1; j <= m - mt; ++j) k.push_back(j);
    for (long j = 1; j <= mt - 1; ++j) k.push_back(m - mt + 2 * j);
  }
  k.push_back(mt + m + n);
  for (std::size_t j = 1; j < k.size(); ++j)
    require(k[j] > k[j - 1], ErrorKind::InvalidArgument, "levels not strictly increasing");
  return k;
}

inline DarbouxChain build_chain(long m, long mt, long n, long q = 1) {
  require(q >= 1, ErrorKind::InvalidArgument, "q must be >= 1");
  DarbouxChain c{m, mt, n, q, darboux_levels(m, mt, n), {}, {}};
  for (long k : c.levels) c.chi.push_back(TrigPoly::sin(q * k));
  c.W = c.chi.empty() ? TrigPoly::constant(GaussianRational(1)) : wronskian(c.chi);
  return c;
}

/// 2^{-mt(mt+1)/2 - m(m-1)/2} (-1)^{m(m-1)/2} prod_{p>r} (K_p - K_r)^{-1} over the
/// actual frequencies K_j = q k_j.
inline Rational nu(const DarbouxChain& c) {
  const long m = c.m, mt = c.mtilde;
  Rational v = 1;
  for (long i = 0; i < mt * (mt + 1) / 2 + m * (m - 1) / 2; ++i) v /= 2;
  if ((m * (m - 1) / 2) % 2) v = -v;
  for (std::size_t p = 0; p < c.levels.size(); ++p)
    for (std::size_t r = 0; r < p; ++r) v /= Rational(c.q * (c.levels[p] - c.levels[r]));
  return v;
}

/// Sum of the frequencies q k_j; equals the top exponent of W.
inline long top_frequency(const DarbouxChain& c) {
  long s = 0;
  for (long k : c.levels) s += c.q * k;
  return s;
}

}  // namespace baconf
