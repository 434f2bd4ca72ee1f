#pragma once

#include <string>
#include <utility>
#include <vector>

#include "baconf/exact/rational.hpp"
#include "baconf/error.hpp"

namespace baconf {

/// Which structural hypotheses the configuration satisfies.
struct SegmentContext {
  bool symmetric = false;  // slopes closed under alpha -> -alpha
  bool am1n = false;       // the (m, 1^n) arrangement itself
};

struct SegmentPrediction {
  std::string source;
  long degree = 0;
  long value = 0;
};

using Predictions = std::vector<SegmentPrediction>;

namespace detail {

enum class Parity { Any, Even, Odd };

inline bool parity_ok(long i, Parity p) {
  return p == Parity::Any || (p == Parity::Even ? i % 2 == 0 : i % 2 != 0);
}

/// Coefficients of N(t) / (t^2 - 1)^2 on degrees [lo, hi] of the given parity.
inline Predictions series_segment(const std::string& source, const std::vector<std::pair<long, Rational>>& num,
                                  long lo, long hi, Parity parity) {
  Predictions out;
  for (long i = std::max(lo, 0L); i <= hi; ++i) {
    if (!parity_ok(i, parity)) continue;
    Rational v = 0;
    for (const auto& [e, c] : num) {
      const long gap = i - e;
      if (gap >= 0 && gap % 2 == 0) v += c * Rational(gap / 2 + 1);
    }
    require(mp::denominator(v) == 1, ErrorKind::OutOfRange, source + ": non-integral coefficient");
    out.push_back({source, i, v.convert_to<long>()});
  }
  return out;
}

using Terms = std::vector<std::pair<long, Rational>>;

inline Terms times(const Terms& a, const Terms& b) {
  Terms r;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) r.emplace_back(ea + eb, ca * cb);
  return r;
}

inline Rational q(long num, long den = 1) { return make_rational(num, den); }

}  // namespace detail

// Point formulas.

/// b_k = 1 for even k <= n and 0 for odd k <= n.
inline Predictions low_degree_parity(long m, long n) {
  (void)m;
  Predictions out;
  for (long k = 0; k <= n; ++k) out.push_back({"low-degree-parity", k, k % 2 == 0 ? 1 : 0});
  return out;
}

/// b_{2m+n-1} = m for even n, b_{2m+n-2} = m - 1 for odd n.
inline Predictions first_odd_plateau(long m, long n) {
  if (n % 2 == 0) return {{"first-odd-plateau", 2 * m + n - 1, m}};
  return {{"first-odd-plateau", 2 * m + n - 2, m - 1}};
}

/// b_i = i + 1 - m - n for odd i >= 2m + n - 1 up to D.
inline Predictions odd_tail(long m, long n, long D) {
  Predictions out;
  for (long i = 2 * m + n - 1; i <= D; ++i)
    if (i % 2) out.push_back({"odd-tail", i, i + 1 - m - n});
  return out;
}

/// b_i = i + 1 - m - n for i = 2(m + n + t), t >= 0, up to D.
inline Predictions even_tail(long m, long n, long D) {
  Predictions out;
  for (long i = 2 * (m + n); i <= D; i += 2) out.push_back({"even-tail", i, i + 1 - m - n});
  return out;
}

/// b_{2(m+n-1)} = m + n for the (m, 1^n) arrangement and m + n - 1 otherwise.
inline Predictions critical_coefficient(long m, long n, SegmentContext ctx) {
  return {{"critical-coefficient", 2 * (m + n - 1), ctx.am1n ? m + n : m + n - 1}};
}

/// (m, 1^n) only: b_i = i - m - n + 2 at i = 2(m + n - s), 1 <= s <= [n/2].
inline Predictions am1n_even_top(long m, long n, SegmentContext ctx) {
  if (!ctx.am1n) fail(ErrorKind::OutOfRange, "am1n-even-top needs the (m, 1^n) arrangement");
  Predictions out;
  for (long s = 1; s <= n / 2; ++s) {
    const long i = 2 * (m + n - s);
    out.push_back({"am1n-even-top", i, i - m - n + 2});
  }
  return out;
}

/// Symmetric slopes: b_i = i/2 - [n/2] + 1 at i = 2(m + n - s), [n/2] + 1 <= s <= min(n, m + [(n+1)/2]).
inline Predictions symmetric_even_middle(long m, long n, SegmentContext ctx) {
  if (!ctx.symmetric) fail(ErrorKind::OutOfRange, "symmetric-even-middle needs symmetric slopes");
  Predictions out;
  for (long s = n / 2 + 1; s <= std::min(n, m + (n + 1) / 2); ++s) {
    const long i = 2 * (m + n - s);
    out.push_back({"symmetric-even-middle", i, i / 2 - n / 2 + 1});
  }
  return out;
}

/// Symmetric slopes, n <= i <= 2m: (i+1)/2 - [(n+1)/2] for odd i, i/2 + 1 - [n/2] for even i.
inline Predictions symmetric_low(long m, long n, SegmentContext ctx) {
  if (!ctx.symmetric) fail(ErrorKind::OutOfRange, "symmetric-low needs symmetric slopes");
  Predictions out;
  for (long i = n; i <= 2 * m; ++i)
    out.push_back({"symmetric-low", i, i % 2 ? (i + 1) / 2 - (n + 1) / 2 : i / 2 + 1 - n / 2});
  return out;
}

/// Symmetric slopes, odd i with max(2m - 1, n - 1) <= i <= 2m + n - 1: (i+1)/2 - [(n+1)/2].
inline Predictions symmetric_odd(long m, long n, SegmentContext ctx) {
  if (!ctx.symmetric) fail(ErrorKind::OutOfRange, "symmetric-odd needs symmetric slopes");
  Predictions out;
  for (long i = std::max(2 * m - 1, n - 1); i <= 2 * m + n - 1; ++i)
    if (i % 2) out.push_back({"symmetric-odd", i, (i + 1) / 2 - (n + 1) / 2});
  return out;
}

// Series formulas over (t^2 - 1)^2.

/// P^{0,n} = (1 - t^{2[(n+2)/2]}) / (1 - t^2).
inline Predictions initial_series(long m, long n) {
  (void)m;
  using detail::q;
  detail::Terms num{{0, q(1)}, {2 * ((n + 2) / 2), q(-1)}};
  num = detail::times(num, {{0, q(1)}, {2, q(-1)}});
  return detail::series_segment("initial-series", num, 0, n, detail::Parity::Any);
}

/// Odd coefficients between the first plateau and the tail.
inline Predictions odd_middle_series(long m, long n) {
  using detail::q;
  if (n % 2 == 0)
    return detail::series_segment("odd-middle-series",
                                  {{2 * m + n + 1, q(m + 2)}, {2 * m + n + 3, q(-m)}, {2 * m + 2 * n - 1, q(-(m + n))},
                                   {2 * m + 2 * n + 1, q(m + n - 2)}},
                                  2 * m + n + 1, 2 * m + 2 * n - 3, detail::Parity::Odd);
  return detail::series_segment("odd-middle-series",
                                {{2 * m + n, q(m + 1)}, {2 * m + n + 2, q(-(m - 1))}, {2 * m + 2 * n - 1, q(-(m + n))},
                                 {2 * m + 2 * n + 1, q(m + n - 2)}},
                                2 * m + n, 2 * m + 2 * n - 3, detail::Parity::Odd);
}

/// P^{2m+2n-1, inf} = t^{2m+2n-1} (m + n - (m + n - 1) t) / (1 - t)^2, through degree D.
inline Predictions tail_series(long m, long n, long D) {
  using detail::q;
  const long s = 2 * m + 2 * n - 1;
  detail::Terms num{{s, q(m + n)}, {s + 1, q(-(m + n - 1))}};
  num = detail::times(num, {{0, q(1)}, {1, q(2)}, {2, q(1)}});
  return detail::series_segment("tail-series", num, s, D, detail::Parity::Any);
}

/// Odd coefficients in terms of r = #{distinct alpha_i^2}, valid for 2r <= m + n.
inline Predictions r_odd_series(long m, long n, long r) {
  using detail::q;
  if (2 * r > m + n) fail(ErrorKind::OutOfRange, "r-odd-series needs 2r <= m + n");
  if (n % 2 == 0)
    return detail::series_segment("r-odd-series",
                                  {{2 * r + 1, q(1)}, {2 * n + 2 * m - 2 * r + 1, q(1)}, {2 * m + n + 1, q(-(m + 2))},
                                   {2 * m + n + 3, q(m)}},
                                  n + 1, 2 * m + n - 1, detail::Parity::Odd);
  return detail::series_segment("r-odd-series",
                                {{2 * r + 1, q(1)}, {2 * n + 2 * m - 2 * r + 1, q(1)}, {2 * m + n, q(-(m + 1))},
                                 {2 * m + n + 2, q(m - 1)}},
                                n + 2, 2 * m + n - 2, detail::Parity::Odd);
}

/// (m, 1^n) only: even coefficients on [2m + n, 2m + 2n - 2].
inline Predictions am1n_even_series(long m, long n, SegmentContext ctx) {
  using detail::q;
  if (!ctx.am1n) fail(ErrorKind::OutOfRange, "am1n-even-series needs the (m, 1^n) arrangement");
  if (n % 2 == 0)
    return detail::series_segment("am1n-even-series",
                                  {{2 * m + n, q(m + 2)}, {2 * m + n + 2, q(-m)}, {2 * m + 2 * n, q(-(m + n + 2))},
                                   {2 * m + 2 * n + 2, q(m + n)}},
                                  2 * m + n, 2 * m + 2 * n - 2, detail::Parity::Even);
  return detail::series_segment("am1n-even-series",
                                {{2 * m + n + 1, q(m + 3)}, {2 * m + n + 3, q(-(m + 1))}, {2 * m + 2 * n, q(-(m + n + 2))},
                                 {2 * m + 2 * n + 2, q(m + n)}},
                                2 * m + n, 2 * m + 2 * n - 2, detail::Parity::Even);
}

/// Symmetric slopes: even coefficients below 2m + n.
inline Predictions symmetric_even_series(long m, long n, SegmentContext ctx) {
  using detail::q;
  if (!ctx.symmetric) fail(ErrorKind::OutOfRange, "symmetric-even-series needs symmetric slopes");
  Predictions out;
  const bool even = n % 2 == 0;
  if (n <= 2 * m + 1) {
    Predictions p = even ? detail::series_segment("symmetric-even-series",
                                                  {{2 * m + 2, q(2 * m - n + 4, 2)}, {2 * m + 4, q(-(2 * m - n + 2), 2)},
                                                   {2 * m + n, q(-(m + 1))}, {2 * m + n + 2, q(m)}},
                                                  2 * m + 2, 2 * m + n - 2, detail::Parity::Even)
                         : detail::series_segment("symmetric-even-series",
                                                  {{2 * m + 2, q(2 * m - n + 5, 2)}, {2 * m + 4, q(-(2 * m - n + 3), 2)},
                                                   {2 * m + n + 1, q(-(m + 2))}, {2 * m + n + 3, q(m + 1)}},
                                                  2 * m + 2, 2 * m + n - 1, detail::Parity::Even);
    out.insert(out.end(), p.begin(), p.end());
  }
  if (n >= 2 * m + 1) {
    Predictions p = even ? detail::series_segment("symmetric-even-series",
                                                  {{n + 2, q(2)}, {n + 4, q(-1)}, {2 * m + n, q(-(m + 1))},
                                                   {2 * m + n + 2, q(m)}},
                                                  n + 1, 2 * m + n - 2, detail::Parity::Even)
                         : detail::series_segment("symmetric-even-series",
                                                  {{n + 1, q(2)}, {n + 3, q(-1)}, {2 * m + n + 1, q(-(m + 2))},
                                                   {2 * m + n + 3, q(m + 1)}},
                                                  n + 1, 2 * m + n - 1, detail::Parity::Even);
    out.insert(out.end(), p.begin(), p.end());
  }
  return out;
}

/// Symmetric slopes with n <= 2m: all coefficients on [n + 1, 2m].
inline Predictions symmetric_low_series(long m, long n, SegmentContext ctx) {
  using detail::q;
  if (!ctx.symmetric) fail(ErrorKind::OutOfRange, "symmetric-low-series needs symmetric slopes");
  if (n > 2 * m) fail(ErrorKind::OutOfRange, "symmetric-low-series needs n <= 2m");
  if (n % 2 == 0) {
    const long h = n / 2;
    return detail::series_segment("symmetric-low-series",
                                  {{n + 1, q(1)}, {n + 2, q(2)}, {n + 4, q(-1)}, {2 * m + 1, q(-(m - h + 1))},
                                   {2 * m + 3, q(m - h)}, {2 * m + 2, q(-(m - h + 2))}, {2 * m + 4, q(m - h + 1)}},
                                  n + 1, 2 * m, detail::Parity::Any);
  }
  return detail::series_segment("symmetric-low-series",
                                {{n + 1, q(2)}, {n + 2, q(1)}, {n + 3, q(-1)}, {2 * m + 1, q(-(2 * m - n + 1), 2)},
                                 {2 * m + 3, q(2 * m - n - 1, 2)}, {2 * m + 2, q(-(2 * m - n + 5), 2)},
                                 {2 * m + 4, q(2 * m - n + 3, 2)}},
                                n + 1, 2 * m, detail::Parity::Any);
}

/// Symmetric slopes: odd coefficients from max(2m, n) + 1 to the first plateau.
inline Predictions symmetric_odd_series(long m, long n, SegmentContext ctx) {
  using detail::q;
  if (!ctx.symmetric) fail(ErrorKind::OutOfRange, "symmetric-odd-series needs symmetric slopes");
  Predictions out;
  const bool even = n % 2 == 0;
  if (2 * m >= n) {
    Predictions p = even ? detail::series_segment("symmetric-odd-series",
                                                  {{2 * m + 1, q(2 * m - n + 2, 2)}, {2 * m + 3, q(n - 2 * m, 2)},
                                                   {2 * m + n + 1, q(-(m + 1))}, {2 * m + n + 3, q(m)}},
                                                  2 * m + 1, 2 * m + n - 1, detail::Parity::Odd)
                         : detail::series_segment("symmetric-odd-series",
                                                  {{2 * m + 1, q(2 * m - n + 1, 2)}, {2 * m + 3, q(n + 1 - 2 * m, 2)},
                                                   {2 * m + n, q(-m)}, {2 * m + n + 2, q(m - 1)}},
                                                  2 * m + 1, 2 * m + n - 2, detail::Parity::Odd);
    out.insert(out.end(), p.begin(), p.end());
  }
  if (2 * m <= n) {
    Predictions p = even ? detail::series_segment("symmetric-odd-series",
                                                  {{n + 1, q(1)}, {2 * m + n + 1, q(-(m + 1))}, {2 * m + n + 3, q(m)}},
                                                  n + 1, 2 * m + n - 1, detail::Parity::Odd)
                         : detail::series_segment("symmetric-odd-series",
                                                  {{n + 2, q(1)}, {2 * m + n, q(-m)}, {2 * m + n + 2, q(m - 1)}},
                                                  n + 1, 2 * m + n - 2, detail::Parity::Odd);
    out.insert(out.end(), p.begin(), p.end());
  }
  return out;
}

/// Every prediction whose hypotheses hold for (m, n, r) in the given context, through degree D.
inline Predictions segment_oracles(long m, long n, long r, SegmentContext ctx, long D) {
  Predictions all;
  auto add = [&](auto&& producer) {
    try {
      Predictions p = producer();
      for (auto& x : p)
        if (x.degree <= D) all.push_back(std::move(x));
    } catch (const Error& err) {
      if (err.kind() != ErrorKind::OutOfRange) throw;
    }
  };
  add([&] { return low_degree_parity(m, n); });
  add([&] { return first_odd_plateau(m, n); });
  add([&] { return odd_tail(m, n, D); });
  add([&] { return even_tail(m, n, D); });
  add([&] { return critical_coefficient(m, n, ctx); });
  add([&] { return am1n_even_top(m, n, ctx); });
  add([&] { return symmetric_even_middle(m, n, ctx); });
  add([&] { return symmetric_low(m, n, ctx); });
  add([&] { return symmetric_odd(m, n, ctx); });
  add([&] { return initial_series(m, n); });
  add([&] { return odd_middle_series(m, n); });
  add([&] { return tail_series(m, n, D); });
  add([&] { return r_odd_series(m, n, r); });
  add([&] { return am1n_even_series(m, n, ctx); });
  add([&] { return symmetric_even_series(m, n, ctx); });
  add([&] { return symmetric_low_series(m, n, ctx); });
  add([&] { return symmetric_odd_series(m, n, ctx); });
  return all;
}

}  // namespace baconf
