#include <gtest/gtest.h>

#include <set>

#include "baconf/config/builders.hpp"
#include "baconf/config/equivalence.hpp"
#include "baconf/config/json.hpp"
#include "baconf/config/locus_solver.hpp"

using namespace baconf;

namespace {

Rational q(long a, long b = 1) { return make_rational(a, b); }

double log2_gap(const BigFloat& a, const BigFloat& b) { return (a - b).log2_abs(); }

BigFloat pi_frac(long num, long den, BigFloat::Bits prec = 256) { return BigFloat::pi(prec) * num / den; }

// True when the sorted angle list matches the expected one to within 2^bound.
void expect_angles(const Configuration& c, const std::vector<BigFloat>& expected, double bound = -220) {
  ASSERT_EQ(c.size(), expected.size());
  for (std::size_t i = 0; i < c.size(); ++i) EXPECT_LT(log2_gap(c.lines[i].phi, expected[i]), bound) << "line " << i;
}

}  // namespace

TEST(Am1n, TwoTwoElementaryValuesAndSlopes) {
  const auto c = build_am1n(2, 2);
  EXPECT_EQ(*c.e, (std::vector<Rational>{q(-4, 3), q(1)}));
  EXPECT_EQ(*c.ehat, (std::vector<Rational>{q(1, 5)}));
  ASSERT_EQ(c.size(), 3u);
  EXPECT_EQ(c.lines[0].mult, q(2));
  EXPECT_TRUE(c.lines[0].alpha_infinite());
  const BigFloat inv_sqrt5 = BigFloat(1L, 256) / sqrt(BigFloat(5L, 256));
  std::set<int> signs;
  for (std::size_t i = 1; i < 3; ++i) {
    EXPECT_EQ(c.lines[i].mult, q(1));
    EXPECT_LT(log2_gap(abs(*c.lines[i].alpha), inv_sqrt5), -240);
    EXPECT_LT((c.lines[i].z.abs() - BigFloat(1L, 256)).log2_abs(), -240);
    signs.insert(c.lines[i].alpha->sign());
  }
  EXPECT_EQ(signs, (std::set<int>{-1, 1}));
}

TEST(Am1n, OneTwoIsThreeEquallySpacedLines) {
  const auto c = build_am1n(1, 2);
  expect_angles(c, {BigFloat(256), pi_frac(1, 3), pi_frac(2, 3)});
}

TEST(Am1n, OneOneIsOrthogonalPair) {
  const auto c = build_am1n(1, 1);
  EXPECT_EQ(*c.e, std::vector<Rational>{q(-1)});
  expect_angles(c, {BigFloat(256), pi_frac(1, 2)});
}

TEST(Am1n, SlopePolynomialVanishesOnSlopes) {
  for (long m = 1; m <= 4; ++m)
    for (long n = 1; n <= 6; ++n) {
      const auto c = build_am1n(m, n);
      for (const auto& l : c.lines) {
        if (l.alpha_infinite()) continue;
        BigFloat v = eval(*c.R, *l.alpha);
        EXPECT_LT(v.log2_abs(), -200) << m << "," << n;
      }
    }
}

TEST(Am1n, SineSquaresReproduceF) {
  // f_i are the elementary symmetric values of sin^2 phi_j over pairs +-phi_j.
  const auto c = build_am1n(2, 4);
  std::vector<BigFloat> s2;
  for (const auto& l : c.lines)
    if (!l.alpha_infinite() && *l.alpha > BigFloat(256)) s2.push_back(pow(sin(l.phi), 2));
  ASSERT_EQ(s2.size(), 2u);
  const auto f = am1n_f(2, 4);
  EXPECT_LT(log2_gap(s2[0] + s2[1], BigFloat(f[0], 256)), -230);
  EXPECT_LT(log2_gap(s2[0] * s2[1], BigFloat(f[1], 256)), -230);
}

TEST(Am1n, RejectsNonPositiveParameters) {
  EXPECT_THROW(build_am1n(0, 2), Error);
  EXPECT_THROW(build_am1n(2, 0), Error);
}

TEST(TwoMult, OneOneTwoIsFourEquallySpacedLines) {
  const auto c = build_two_mult(1, 1, 2);
  EXPECT_EQ(*c.e, (std::vector<Rational>{q(0), q(1)}));
  expect_angles(c, {BigFloat(256), pi_frac(1, 4), pi_frac(1, 2), pi_frac(3, 4)});
  EXPECT_EQ(c.branch, 0);
}

TEST(TwoMult, ZeroSecondMultiplicityMatchesAm1n) {
  for (long m = 1; m <= 3; ++m)
    for (long n : {2, 4, 6}) {
      const auto a = build_two_mult(m, 0, n), b = build_am1n(m, n);
      EXPECT_LT(angle_multiset_distance(a, b).log2_abs(), -200) << m << "," << n;
    }
}

TEST(TwoMult, MultiplicityOneAtRightAngleMatchesAm1n) {
  // (2, 1, 2): the mt = 1 line is one of the three simple lines of am1n(2, 3).
  const auto a = build_two_mult(2, 1, 2), b = build_am1n(2, 3);
  EXPECT_LT(angle_multiset_distance(a, b).log2_abs(), -200);
}

TEST(TwoMult, KeepsNegativeBranch) {
  const auto c = build_two_mult(2, 1, 4);
  EXPECT_EQ(c.branch, -1);
  const Rational mag = q((2 - 1) * 4, 4 + 2 + 1 - 1);
  EXPECT_EQ((*c.e)[2], -mag);
}

TEST(TwoMult, AcceptsSecondMultiplicityAboveFirst) {
  const auto c = build_two_mult(1, 3, 4);
  EXPECT_EQ(c.size(), 6u);
  EXPECT_EQ(c.lines[0].mult, q(1));
}

TEST(TwoMult, RejectsOddN) {
  EXPECT_THROW(build_two_mult(2, 1, 3), Error);
}

TEST(QExpansion, SingleLineDoublesToRightAngle) {
  Configuration c;
  c.precision = 256;
  c.lines.push_back(make_line(q(1), BigFloat(256)));
  const auto r = t_q_expand(c, 2);
  expect_angles(r, {BigFloat(256), pi_frac(1, 2)});
  EXPECT_EQ(*r.q, 2);
}

TEST(QExpansion, QOneIsIdentity) {
  const auto c = build_am1n(2, 3);
  const auto r = t_q_expand(c, 1);
  EXPECT_EQ(digest(r), digest(c));
}

TEST(QExpansion, Am1nOneTwoAtQTwo) {
  const auto r = t_q_expand(build_am1n(1, 2), 2);
  std::vector<BigFloat> want;
  for (long k = 0; k < 6; ++k) want.push_back(pi_frac(k, 6));
  expect_angles(r, want);
  EXPECT_EQ(r.P->degree(), 4);
  EXPECT_EQ(*r.base, Kind::Am1n);
}

TEST(QExpansion, CoincidentLinesCollide) {
  // distinct angles stay distinct, so only a repeated input line collides
  Configuration c;
  c.precision = 256;
  c.lines.push_back(make_line(q(1), pi_frac(1, 3)));
  c.lines.push_back(make_line(q(2), pi_frac(1, 3)));
  EXPECT_THROW(
      {
        try {
          t_q_expand(c, 4);
        } catch (const Error& e) {
          EXPECT_EQ(e.kind(), ErrorKind::Collision);
          throw;
        }
      },
      Error);
}

TEST(QExpansion, NestedExpansionComposes) {
  const auto a = t_q_expand(t_q_expand(build_am1n(2, 2), 2), 3);
  const auto b = t_q_expand(build_am1n(2, 2), 6);
  EXPECT_EQ(*a.q, 6);
  EXPECT_LT(angle_multiset_distance(a, b).log2_abs(), -200);
}

TEST(Locus, OrthogonalPair) {
  const auto c = solve_general_locus({q(1), q(1)});
  ASSERT_EQ(c.size(), 2u);
  EXPECT_LT(log2_gap(c.lines[1].phi - c.lines[0].phi, pi_frac(1, 2)), -216);
}

TEST(Locus, ReproducesAm1n) {
  for (long m = 1; m <= 3; ++m)
    for (long n = 1; n <= 4; ++n) {
      std::vector<Rational> mults{q(m)};
      for (long i = 0; i < n; ++i) mults.push_back(q(1));
      const auto c = solve_general_locus(mults);
      EXPECT_LT(angle_multiset_distance(c, build_am1n(m, n)).log2_abs(), -216) << m << "," << n;
    }
}

TEST(Locus, FractionalMultiplicities) {
  const auto c = solve_general_locus({q(3, 2), q(1, 2), q(1, 2)});
  EXPECT_EQ(c.size(), 3u);
  EXPECT_FALSE(c.integral_multiplicities());
  // symmetric about the heavy line
  const BigFloat a = c.lines[1].phi - c.lines[0].phi, b = BigFloat::pi(256) - c.lines[2].phi + c.lines[0].phi;
  EXPECT_LT(log2_gap(a, b), -200);
}

TEST(Locus, MixedMultiplicitiesConverge) {
  const auto c = solve_general_locus({q(2), q(3), q(1), q(1)});
  EXPECT_EQ(c.size(), 4u);
}

TEST(Locus, RejectsBadInput) {
  EXPECT_THROW(solve_general_locus({q(1)}), Error);
  EXPECT_THROW(solve_general_locus({q(1), q(-1)}), Error);
}

TEST(RandomConfigs, DeterministicDistinctNonzero) {
  for (unsigned long long seed = 1; seed <= 20; ++seed) {
    const auto a = random_alphas(5, seed), b = random_alphas(5, seed);
    EXPECT_EQ(a, b);
    std::set<Rational> s(a.begin(), a.end());
    EXPECT_EQ(s.size(), a.size());
    EXPECT_EQ(s.count(q(0)), 0u);
  }
  EXPECT_NE(random_alphas(5, 1), random_alphas(5, 2));
  const auto c = random_type_m1n(2, 3, 7);
  EXPECT_EQ(*c.seed, 7u);
  EXPECT_EQ(c.size(), 4u);
}

TEST(RandomConfigs, FromAlphasRejectsDuplicates) {
  EXPECT_THROW(from_alphas(1, {q(1), q(1)}), Error);
}

TEST(Json, RoundTripEveryKind) {
  std::vector<Configuration> all{build_am1n(2, 3), build_two_mult(2, 1, 4), t_q_expand(build_am1n(1, 2), 3),
                                 random_type_m1n(2, 3, 5), solve_general_locus({q(3, 2), q(1), q(1)})};
  for (const auto& c : all) {
    const Json j = to_json(c);
    const auto back = configuration_from_json(j);
    EXPECT_EQ(to_json(back), j) << to_string(c.kind);
    EXPECT_EQ(digest(back), digest(c));
    EXPECT_LT(angle_multiset_distance(back, c).log2_abs(), -240);
  }
}

TEST(Json, MalformedInputIsParseError) {
  try {
    configuration_from_json(Json::parse(R"({"kind":"am1n","lines":[{"mult":"x"}]})"));
    FAIL() << "expected a parse error";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Parse);
  }
  EXPECT_THROW(parse_kind("nope"), Error);
}

TEST(Perturb, MovesOneLineAndDropsExactData) {
  const auto c = build_am1n(2, 2);
  const auto p = perturb_angle(c, 1, BigFloat(0.01, 256));
  EXPECT_EQ(p.kind, Kind::General);
  EXPECT_FALSE(p.e.has_value());
  EXPECT_FALSE(p.P.has_value());
  EXPECT_GT(angle_multiset_distance(p, c).log2_abs(), -8);
  EXPECT_THROW(perturb_angle(c, 9, BigFloat(0.01, 256)), Error);
}
