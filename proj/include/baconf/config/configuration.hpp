#pragma once

#include <optional>
#include <string>
#include <vector>

#include "baconf/exact/bigfloat.hpp"
#include "baconf/exact/dense_poly.hpp"
#include "baconf/exact/rational.hpp"

namespace baconf {

enum class Kind { Am1n, TwoMult, QExpanded, General, Random };

inline std::string to_string(Kind k) {
  switch (k) {
    case Kind::Am1n: return "am1n";
    case Kind::TwoMult: return "twomult";
    case Kind::QExpanded: return "tq";
    case Kind::General: return "general";
    case Kind::Random: return "random";
  }
  return "unknown";
}

inline Kind parse_kind(const std::string& s) {
  if (s == "am1n") return Kind::Am1n;
  if (s == "twomult") return Kind::TwoMult;
  if (s == "tq") return Kind::QExpanded;
  if (s == "general") return Kind::General;
  if (s == "random") return Kind::Random;
  fail(ErrorKind::Parse, "unknown configuration kind '" + s + "'");
}

/// One line through the origin, spanned by (cos phi, sin phi).
struct Line {
  Rational mult;
  BigFloat phi;                        // in [0, pi)
  Complex z;                           // e^{2 i phi}
  std::optional<BigFloat> alpha;       // cot phi; empty on the phi = 0 line
  std::optional<Rational> alpha_exact; // when the slope is known to be rational

  bool alpha_infinite() const { return !alpha.has_value(); }
};

/// A planar arrangement with multiplicities in the angle, unit-circle, and slope
/// charts. The slope chart is the reflection (x, y) -> (y, x), which sends the
/// phi = 0 line to (0, 1) and the line at angle phi to (1, cot phi).
struct Configuration {
  Kind kind = Kind::General;
  long m = 0;
  std::optional<long> mtilde;
  long n = 0;
  std::optional<long> q;
  std::optional<Kind> base;            // source family of a q-expansion
  std::optional<unsigned long long> seed;
  BigFloat::Bits precision = 256;
  std::vector<Line> lines;

  std::optional<std::vector<Rational>> e;     // elementary symmetric values of the mult-1 block
  std::optional<std::vector<Rational>> ehat;  // elementary symmetric values of alpha_i^2
  std::optional<RationalPoly> P;              // prod (w - z_j) over the mult-1 block
  std::optional<RationalPoly> R;              // rational polynomial with the slopes as roots

  /// Which sign of e_{n-1} the two-multiplicity construction kept: +1 when
  /// e_{n-1} = (m - mt) n / (n + m + mt - 1), -1 for the opposite sign, 0 when m = mt.
  int branch = 0;

  std::size_t size() const { return lines.size(); }
  std::vector<Rational> multiplicities() const {
    std::vector<Rational> out;
    for (const auto& l : lines) out.push_back(l.mult);
    return out;
  }
  bool integral_multiplicities() const {
    for (const auto& l : lines)
      if (mp::denominator(l.mult) != 1) return false;
    return true;
  }
};

/// Line at angle phi (reduced to [0, pi)) in every chart.
inline Line make_line(const Rational& mult, const BigFloat& phi_in) {
  const auto prec = phi_in.precision();
  BigFloat phi = reduce_mod(phi_in, BigFloat::pi(prec));
  Line l{mult, phi, Complex::expi(phi * 2L), std::nullopt, std::nullopt};
  if (!phi.is_zero()) l.alpha = cot(phi);
  return l;
}

/// Line (1, alpha) of the slope chart with rational alpha.
inline Line make_line_from_alpha(const Rational& mult, const Rational& alpha, BigFloat::Bits prec) {
  BigFloat a(alpha, prec);
  Line l = make_line(mult, atan2(BigFloat(1L, prec), a));
  l.alpha = a;
  l.alpha_exact = alpha;
  return l;
}

/// Line from a point on the unit circle; phi = arg(z) / 2.
inline Line make_line_from_z(const Rational& mult, const Complex& z) {
  BigFloat phi = z.arg() / 2L;
  return make_line(mult, phi);
}

}  // namespace baconf
