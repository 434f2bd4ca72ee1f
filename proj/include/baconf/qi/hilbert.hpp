#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "baconf/config/json.hpp"
#include "baconf/qi/quasi_invariants.hpp"

namespace baconf {

enum class Route { Auto, Exact, Numeric };

/// Graded dimensions and the rational form N(t) / (t^2 - 1)^2.
struct HilbertSeries {
  long m = 0;
  long n = 0;
  std::vector<long> b;
  RationalPoly numerator;

  /// First `count` series coefficients regenerated from the numerator.
  std::vector<long> expand(std::size_t count) const {
    std::vector<long> out(count, 0);
    // 1 / (1 - t^2)^2 = sum (k + 1) t^{2k}
    for (std::size_t i = 0; i < numerator.coeffs().size(); ++i) {
      const long c = numerator.coeffs()[i].convert_to<long>();
      for (std::size_t k = 0; i + 2 * k < count; ++k) out[i + 2 * k] += c * static_cast<long>(k + 1);
    }
    return out;
  }
};

inline long tail_value(long i, long m, long n) { return i + 1 - m - n; }
inline long tail_start(long m, long n) { return 2 * m + 2 * n - 1; }
inline long default_cutoff(long m, long n) { return 2 * m + 2 * n + 4; }

/// b_0..b_D of the configuration.
inline std::vector<long> hilbert_coefficients(const Configuration& c, long D, Route route = Route::Auto,
                                              BigFloat::Bits precision = 256) {
  const TypeM1n t = type_m1n(c);
  const long n = static_cast<long>(t.simple.size());
  require(D >= 2 * t.m + 2 * n + 2, ErrorKind::InvalidArgument, "cutoff D must be at least 2m + 2n + 2");
  if (route == Route::Auto) route = c.R ? Route::Exact : Route::Numeric;
  std::vector<long> b;
  for (long d = 0; d <= D; ++d)
    b.push_back(route == Route::Exact ? qi_dimension_exact(c, d) : qi_dimension_numeric(c, d, precision));
  return b;
}

/// Splice the stored coefficients with the tail law b_i = i + 1 - m - n and
/// return N(t) = (1 - t^2)^2 sum b_i t^i.
inline HilbertSeries hilbert_rational_form(const std::vector<long>& coeffs, long m, long n) {
  const long top = 2 * m + 2 * n + 2;
  require(static_cast<long>(coeffs.size()) > top, ErrorKind::InvalidArgument,
          "need coefficients through degree 2m + 2n + 2");
  for (long i = tail_start(m, n); i < static_cast<long>(coeffs.size()); ++i)
    require(coeffs[static_cast<std::size_t>(i)] == tail_value(i, m, n), ErrorKind::TailMismatch,
            "b_" + std::to_string(i) + " = " + std::to_string(coeffs[static_cast<std::size_t>(i)]) +
                " violates the tail law");
  auto b = [&](long i) -> long {
    if (i < 0) return 0;
    if (i < static_cast<long>(coeffs.size())) return coeffs[static_cast<std::size_t>(i)];
    return tail_value(i, m, n);
  };
  std::vector<Rational> num;
  for (long k = 0; k <= top; ++k) num.emplace_back(b(k) - 2 * b(k - 2) + b(k - 4));
  HilbertSeries h{m, n, coeffs, RationalPoly(std::move(num))};
  return h;
}

struct GorensteinVerdict {
  bool gorenstein = false;
  std::optional<long> M;
};

/// P(1/t) = t^M P(t) holds iff N is an exact palindrome; then M = 4 - deg N.
inline GorensteinVerdict is_gorenstein(const HilbertSeries& h) {
  const auto& c = h.numerator.coeffs();
  if (c.empty()) return {};
  const std::size_t deg = c.size() - 1;
  for (std::size_t k = 0; k <= deg; ++k)
    if (c[k] != c[deg - k]) return {};
  return {true, 4 - static_cast<long>(deg)};
}

/// 1 - t^2 + t^{n+1} + t^{n+2} + t^{2m+n} + t^{2m+n+1} - t^{2m+2n} + t^{2m+2n+2}
inline RationalPoly closed_form_numerator(long m, long n) {
  std::vector<Rational> c(static_cast<std::size_t>(2 * m + 2 * n + 3));
  auto add = [&](long e, long v) { c[static_cast<std::size_t>(e)] += v; };
  add(0, 1);
  add(2, -1);
  add(n + 1, 1);
  add(n + 2, 1);
  add(2 * m + n, 1);
  add(2 * m + n + 1, 1);
  add(2 * m + 2 * n, -1);
  add(2 * m + 2 * n + 2, 1);
  return RationalPoly(std::move(c));
}

/// Number of distinct alpha_i^2 over the simple lines; exact for rational slopes.
inline long r_parameter(const Configuration& c) {
  const TypeM1n t = type_m1n(c);
  bool exact = true;
  for (std::size_t j : t.simple) exact = exact && c.lines[j].alpha_exact.has_value();
  if (exact) {
    std::set<Rational> sq;
    for (std::size_t j : t.simple) sq.insert(*c.lines[j].alpha_exact * *c.lines[j].alpha_exact);
    return static_cast<long>(sq.size());
  }
  std::vector<BigFloat> sq;
  for (std::size_t j : t.simple) sq.push_back(*c.lines[j].alpha * *c.lines[j].alpha);
  std::sort(sq.begin(), sq.end());
  const BigFloat tol = BigFloat::exp2(-static_cast<long>(c.precision) / 2, c.precision);
  long r = sq.empty() ? 0 : 1;
  for (std::size_t i = 1; i < sq.size(); ++i)
    if (sq[i] - sq[i - 1] > tol * max(BigFloat(1L, c.precision), abs(sq[i]))) ++r;
  return r;
}

/// Whether the slopes are closed under alpha -> -alpha (zero allowed once).
inline bool slope_symmetric(const Configuration& c) {
  const TypeM1n t = type_m1n(c);
  if (c.kind == Kind::Am1n) return true;
  std::multiset<Rational> s;
  for (std::size_t j : t.simple) {
    if (!c.lines[j].alpha_exact) return false;
    s.insert(*c.lines[j].alpha_exact);
  }
  for (const auto& a : s)
    if (s.count(a) != s.count(-a)) return false;
  return true;
}

inline Json to_json(const HilbertSeries& h) {
  Json j;
  j["m"] = h.m;
  j["n"] = h.n;
  j["coefficients"] = h.b;
  std::vector<long> num;
  for (const auto& x : h.numerator.coeffs()) num.push_back(x.convert_to<long>());
  j["numerator"] = num;
  GorensteinVerdict g = is_gorenstein(h);
  j["gorenstein"] = g.gorenstein;
  j["M"] = g.M ? Json(*g.M) : Json(nullptr);
  return j;
}

inline std::string to_csv(const HilbertSeries& h) {
  std::string out = "degree,b\n";
  for (std::size_t i = 0; i < h.b.size(); ++i) out += std::to_string(i) + "," + std::to_string(h.b[i]) + "\n";
  return out;
}

}  // namespace baconf
