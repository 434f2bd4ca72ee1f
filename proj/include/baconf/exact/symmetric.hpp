#pragma once

#include <vector>

#include "baconf/exact/dense_poly.hpp"
#include "baconf/exact/rational.hpp"

namespace baconf {

/// sum_{i=0}^n (-1)^i e_i w^{n-i} with e_0 = 1.
inline RationalPoly poly_from_elementary(const std::vector<Rational>& e, long n) {
  require(n >= 0 && static_cast<long>(e.size()) == n, ErrorKind::InvalidArgument,
          "poly_from_elementary needs exactly n values");
  std::vector<Rational> c(static_cast<std::size_t>(n) + 1);
  c[static_cast<std::size_t>(n)] = 1;
  for (long i = 1; i <= n; ++i) {
    Rational v = e[static_cast<std::size_t>(i - 1)];
    c[static_cast<std::size_t>(n - i)] = (i % 2) ? Rational(-v) : v;
  }
  return RationalPoly(std::move(c));
}

/// Elementary symmetric values e_1..e_k of a list of rationals.
inline std::vector<Rational> elementary_symmetric(const std::vector<Rational>& xs) {
  std::vector<Rational> e(xs.size() + 1);
  e[0] = 1;
  for (std::size_t j = 0; j < xs.size(); ++j)
    for (std::size_t k = j + 1; k >= 1; --k) e[k] += e[k - 1] * xs[j];
  return {e.begin() + 1, e.end()};
}

/// Monic polynomial with the given rational roots.
inline RationalPoly poly_from_roots(const std::vector<Rational>& roots) {
  return poly_from_elementary(elementary_symmetric(roots), static_cast<long>(roots.size()));
}

/// e_1..e_n of z_j = e^{2 i phi_j} from the elementary symmetric values f_i of
/// u_j = sin^2 phi_j over one representative of each conjugate pair. For odd n
/// the self-conjugate root z = -1 is appended.
inline std::vector<Rational> f_to_e(const std::vector<Rational>& f, long n) {
  require(n >= 0 && static_cast<long>(f.size()) == n / 2, ErrorKind::InvalidArgument,
          "f_to_e needs [n/2] values");
  const long even = n - (n % 2);
  const long half = even / 2;
  auto fi = [&](long i) { return i == 0 ? Rational(1) : f[static_cast<std::size_t>(i - 1)]; };
  std::vector<Rational> ev(static_cast<std::size_t>(even) + 1);
  for (long r = 0; r <= half; ++r) {
    Rational s = 0;
    Rational four_i = 1;
    for (long i = 0; i <= r; ++i) {
      Rational term = four_i * Rational(binomial(even - 2 * i, r - i)) * fi(i);
      s += (i % 2) ? Rational(-term) : term;
      four_i *= 4;
    }
    ev[static_cast<std::size_t>(r)] = s;
    ev[static_cast<std::size_t>(even - r)] = s;
  }
  if (n == even) return {ev.begin() + 1, ev.end()};
  std::vector<Rational> out(static_cast<std::size_t>(n));
  for (long r = 1; r <= n; ++r) {
    Rational a = r <= even ? ev[static_cast<std::size_t>(r)] : Rational(0);
    out[static_cast<std::size_t>(r - 1)] = a - ev[static_cast<std::size_t>(r - 1)];
  }
  return out;
}

/// hat e_r: elementary symmetric values of 1/u_j - 1 = cot^2 phi_j.
inline std::vector<Rational> f_to_ehat(const std::vector<Rational>& f) {
  const long half = static_cast<long>(f.size());
  if (half == 0) return {};
  require(!f.back().is_zero(), ErrorKind::DegenerateConfiguration, "f_[n/2] = 0: some u_j vanishes");
  // prod_j (x - u_j) at x = 1/(v + 1), cleared by (v + 1)^N, has roots v_j = 1/u_j - 1
  RationalPoly vp1({Rational(1), Rational(1)});
  std::vector<RationalPoly> powers{RationalPoly::constant(Rational(1))};
  for (long i = 1; i <= half; ++i) powers.push_back(powers.back() * vp1);
  RationalPoly acc;
  for (long i = 0; i <= half; ++i) {
    Rational fi = i == 0 ? Rational(1) : f[static_cast<std::size_t>(i - 1)];
    if (i % 2) fi = -fi;
    acc += powers[static_cast<std::size_t>(i)] * fi;
  }
  acc = acc.monic();
  std::vector<Rational> out(static_cast<std::size_t>(half));
  for (long r = 1; r <= half; ++r) {
    Rational c = acc[static_cast<std::size_t>(half - r)];
    out[static_cast<std::size_t>(r - 1)] = (r % 2) ? Rational(-c) : c;
  }
  return out;
}

/// R(alpha) = alpha^{n mod 2} sum_r (-1)^r hat e_r alpha^{2([n/2]-r)}.
inline RationalPoly r_from_ehat(const std::vector<Rational>& ehat, long n) {
  const long half = n / 2;
  require(static_cast<long>(ehat.size()) == half, ErrorKind::InvalidArgument, "r_from_ehat needs [n/2] values");
  std::vector<Rational> c(static_cast<std::size_t>(n) + 1);
  const long odd = n % 2;
  for (long r = 0; r <= half; ++r) {
    Rational v = r == 0 ? Rational(1) : ehat[static_cast<std::size_t>(r - 1)];
    c[static_cast<std::size_t>(odd + 2 * (half - r))] = (r % 2) ? Rational(-v) : v;
  }
  return RationalPoly(std::move(c));
}

// Closed forms for the (m, 1^n) arrangement.

inline Rational am1n_e(long m, long n, long k) {
  Rational v(binomial(n, k) * binomial(m + k - 1, k), binomial(m + n - 1, k));
  return (k % 2) ? Rational(-v) : v;
}

inline std::vector<Rational> am1n_e(long m, long n) {
  std::vector<Rational> e;
  for (long k = 1; k <= n; ++k) e.push_back(am1n_e(m, n, k));
  return e;
}

inline Rational am1n_ehat(long m, long n, long r) {
  const long half = n / 2, up = (n + 1) / 2;
  Rational v(binomial(half, r));
  for (long i = 1; i <= r; ++i) v *= make_rational(2 * up - 2 * i + 1, 2 * m + 2 * i - 1);
  return v;
}

inline std::vector<Rational> am1n_ehat(long m, long n) {
  std::vector<Rational> e;
  for (long r = 1; r <= n / 2; ++r) e.push_back(am1n_ehat(m, n, r));
  return e;
}

inline Rational am1n_f(long m, long n, long i) {
  const long half = n / 2;
  Rational v(binomial(half, i));
  v /= pow(Rational(2), static_cast<unsigned>(i));
  for (long s = 1; s <= i; ++s) v *= make_rational(2 * m + 2 * half - 2 * s + 1, m + n - s);
  return v;
}

inline std::vector<Rational> am1n_f(long m, long n) {
  std::vector<Rational> f;
  for (long i = 1; i <= n / 2; ++i) f.push_back(am1n_f(m, n, i));
  return f;
}

// Hypergeometric identities linking the charts.

/// Right side of the e_r(f) identity. binom(n/2, i) is the generalized binomial, so odd n works too.
inline Rational identity_a_rhs(long m, long n, long r) {
  Rational s = 0;
  Rational half_choose = 1;  // binom(n/2, i)
  for (long i = 0; i <= r; ++i) {
    if (i > 0) half_choose *= (make_rational(n, 2) - (i - 1)) / Rational(i);
    Rational t = pow(Rational(2), static_cast<unsigned>(i)) * Rational(binomial(n - 2 * i, r - i)) * half_choose;
    for (long k = 1; k <= i; ++k) t *= make_rational(2 * m + n - 2 * k + 1, m + n - k);
    s += (i % 2) ? Rational(-t) : t;
  }
  return s;
}

/// Left side of the hat-e identity: sum over i of the f-chain expansion.
inline Rational identity_b_lhs(long m, long n, long r) {
  const long half = n / 2, up = (n + 1) / 2;
  Rational s = 0;
  for (long i = 0; i <= r; ++i) {
    Rational t = pow(Rational(2), static_cast<unsigned>(i)) * Rational(binomial(half - i, r - i)) *
                 Rational(binomial(half, i));
    for (long k = 0; k < i; ++k) t *= make_rational(m + up + k, 2 * m + 2 * k + 1);
    s += ((r - i) % 2) ? Rational(-t) : t;
  }
  return s;
}

}  // namespace baconf
