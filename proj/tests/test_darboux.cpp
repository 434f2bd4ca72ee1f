#include <gtest/gtest.h>

#include <functional>
#include <tuple>

#include "baconf/darboux/verify.hpp"

using namespace baconf;

namespace {

Rational q(long a, long b = 1) { return make_rational(a, b); }
GaussianRational gq(long a, long b = 1) { return GaussianRational(q(a, b)); }

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorKind::InvalidArgument;
}

}  // namespace

TEST(Levels, Examples) {
  EXPECT_EQ(darboux_levels(3, 2, 2), (std::vector<long>{1, 3, 7}));
  EXPECT_EQ(darboux_levels(1, 0, 2), (std::vector<long>{3}));
  EXPECT_EQ(darboux_levels(2, 0, 2), (std::vector<long>{1, 4}));
  EXPECT_EQ(darboux_levels(2, 0, 1), (std::vector<long>{1, 3}));
  EXPECT_EQ(darboux_levels(2, 2, 2), (std::vector<long>{2, 6}));
  EXPECT_TRUE(darboux_levels(0, 0, 0).empty());
}

TEST(Levels, Rejections) {
  EXPECT_EQ(kind_of([] { darboux_levels(1, 2, 2); }), ErrorKind::InvalidOrder);
  EXPECT_EQ(kind_of([] { darboux_levels(2, 1, 3); }), ErrorKind::InvalidArgument);
  EXPECT_EQ(kind_of([] { darboux_levels(0, 0, 2); }), ErrorKind::InvalidArgument);
}

TEST(Chain, WronskianExamples) {
  EXPECT_EQ(build_chain(1, 0, 2).W, TrigPoly::sin(3));
  EXPECT_EQ(build_chain(1, 1, 2).W, TrigPoly::sin(4));
  // W(sin phi, sin 4 phi) = 4 sin phi cos 4 phi - cos phi sin 4 phi
  TrigPoly a = TrigPoly::sin(1) * TrigPoly::cos(4);
  a *= gq(4);
  EXPECT_EQ(build_chain(2, 0, 2).W, a - TrigPoly::cos(1) * TrigPoly::sin(4));
  EXPECT_EQ(build_chain(0, 0, 0).W, TrigPoly::constant(gq(1)));
}

TEST(Chain, NuAndTopFrequency) {
  EXPECT_EQ(nu(build_chain(2, 0, 1)), q(-1, 4));
  EXPECT_EQ(nu(build_chain(1, 0, 2)), q(1));
  EXPECT_EQ(nu(build_chain(1, 1, 2)), q(1, 2));
  const auto c = build_chain(3, 2, 2, 2);
  EXPECT_EQ(top_frequency(c), 2 * (1 + 3 + 7));
  EXPECT_EQ(c.W.max_exponent(), top_frequency(c));
}

TEST(QPolynomial, SmallCases) {
  EXPECT_EQ(q_polynomial(build_am1n(1, 2)), TrigPoly::cos(2) * gq(2) + TrigPoly::constant(gq(1)));
  EXPECT_EQ(q_polynomial(build_two_mult(1, 1, 2)), TrigPoly::cos(2) * gq(2));
}

TEST(Factorization, OneTwoHasEpsilonMinusOne) {
  const auto ch = build_chain(1, 0, 2);
  const auto v = verify_factorization(ch, build_am1n(1, 2));
  // lines at pi/3, 2pi/3: e^{i (pi/3 + 2pi/3)} = -1
  EXPECT_EQ(v.epsilon, gq(-1));
}

TEST(Factorization, OneOneTwoIsSinFour) {
  // 2 cos 2phi * cos phi * sin phi = (1/2) sin 4phi
  const auto ch = build_chain(1, 1, 2);
  EXPECT_EQ(nu(ch), q(1, 2));
  EXPECT_EQ(verify_factorization(ch, build_two_mult(1, 1, 2)).sign, 1);
}

TEST(Identities, FullGrid) {
  for (long m = 1; m <= 4; ++m)
    for (long mt = 0; mt <= m; ++mt)
      for (long n : {2, 4, 6})
        for (long qq = 1; qq <= 3; ++qq) {
          const auto r = darboux_report(m, mt, n, qq);
          EXPECT_TRUE(all_pass(r)) << to_json(r).dump();
        }
}

TEST(Identities, SingleMultiplicityFamilyIncludingOddN) {
  for (long m = 1; m <= 4; ++m)
    for (long n = 1; n <= 8; ++n) EXPECT_TRUE(all_pass(darboux_report(m, 0, n))) << m << "," << n;
}

TEST(Identities, TrivialChain) {
  const auto r = darboux_report(0, 0, 0);
  EXPECT_TRUE(all_pass(r));
  EXPECT_EQ(r.nu, q(1));
  EXPECT_EQ(r.q_scaling, "n/a");
}

TEST(Identities, NumericPotentialSpotCheck) {
  const auto ch = build_chain(3, 2, 4);
  const auto c = darboux_configuration(ch);
  EXPECT_LT(potential_numeric_log2(ch, c, BigFloat(0.37, 256)), -200);
  const auto chq = build_chain(2, 1, 2, 3);
  EXPECT_LT(potential_numeric_log2(chq, darboux_configuration(chq), BigFloat(0.21, 256)), -200);
}

TEST(Identities, WrongQIsRejected) {
  const auto ch = build_chain(2, 0, 2);
  const TrigPoly bad = TrigPoly::cos(2) * gq(3) + TrigPoly::constant(gq(1));
  EXPECT_EQ(kind_of([&] { verify_potential(ch, bad); }), ErrorKind::IdentityFailed);
  EXPECT_EQ(kind_of([&] { verify_eigen(2, 0, 2, 1, bad); }), ErrorKind::IdentityFailed);
  EXPECT_EQ(kind_of([&] { verify_factorization(ch, bad, q(1), 2); }), ErrorKind::IdentityFailed);
  EXPECT_EQ(kind_of([&] { verify_factorization(ch, bad, q(-1), 2); }), ErrorKind::IdentityFailed);
}

TEST(Identities, MismatchedConfigurationIsRejected) {
  EXPECT_THROW(verify_potential(build_chain(2, 0, 2), build_am1n(2, 3)), Error);
}

TEST(QScaling, Examples) {
  const auto base = build_chain(2, 0, 2);
  const auto s = q_scaling_check(base, 2);
  EXPECT_EQ(s.q, 2);
  TrigPoly expect = base.W.scale_frequency(2);
  expect *= gq(2);
  EXPECT_EQ(s.W, expect);
  EXPECT_EQ(q_scaling_check(build_chain(1, 1, 2), 3).W, TrigPoly::sin(12));
  EXPECT_THROW(q_scaling_check(s, 2), Error);
}

TEST(Report, JsonFields) {
  const Json j = to_json(darboux_report(2, 1, 2, 2));
  EXPECT_EQ(j["levels"], (std::vector<long>{1, 5}));
  EXPECT_EQ(j["factorization"], "exact-pass");
  EXPECT_EQ(j["q_scaling"], "exact-pass");
  EXPECT_TRUE(j.contains("epsilon"));
  EXPECT_TRUE(j.contains("nu"));
}

TEST(Identities, QuotientVanishesOnSimpleLines) {
  // W / (sin^b cos^a) is nu^{-1} Q up to sign, and Q has the simple lines as its zero set
  for (auto [m, mt, n] : {std::tuple{2L, 0L, 3L}, std::tuple{3L, 2L, 4L}, std::tuple{2L, 1L, 6L}}) {
    const auto c = darboux_configuration(build_chain(m, mt, n));
    const TrigPoly Q = q_polynomial(c);
    const BigFloat half_pi = BigFloat::pi(256) / 2L;
    for (const auto& l : c.lines) {
      // the m line sits at 0 and the mt line at pi/2; only the block from P remains
      if (l.phi.is_zero() || (mt > 0 && (l.phi - half_pi).log2_abs() < -200)) continue;
      EXPECT_LT(Q.eval(l.phi).abs().log2_abs(), -200) << m << mt << n;
    }
  }
}
