#pragma once

#include <optional>
#include <sstream>
#include <string>

#include "baconf/config/builders.hpp"
#include "baconf/config/json.hpp"
#include "baconf/darboux/chain.hpp"

namespace baconf {

namespace detail {

inline std::string clip(const TrigPoly& p) {
  std::ostringstream os;
  os << p;
  std::string s = os.str();
  if (s.size() > 400) s = s.substr(0, 400) + " ...";
  return s;
}

inline void require_zero(const TrigPoly& diff, const std::string& what) {
  if (!diff.is_zero()) fail(ErrorKind::IdentityFailed, what + " identity fails; difference " + clip(diff));
}

inline GaussianRational g(long v) { return GaussianRational(Rational(v)); }

inline void check_compatible(const DarbouxChain& ch, const Configuration& c) {
  require(c.P.has_value(), ErrorKind::MissingExactData, "configuration carries no exact P(w)");
  require(c.m == ch.m && c.mtilde.value_or(0) == ch.mtilde && c.n == ch.n && c.q.value_or(1) == ch.q,
          ErrorKind::InvalidArgument, "configuration does not match the chain parameters");
  require(c.P->degree() == ch.q * ch.n, ErrorKind::InvalidArgument, "deg P differs from q n");
}

}  // namespace detail

/// Q(phi) = P(e^{2 i phi}) e^{-i N phi} with N = deg P.
inline TrigPoly q_polynomial(const Configuration& c) {
  require(c.P.has_value(), ErrorKind::MissingExactData, "configuration carries no exact P(w)");
  const long N = c.P->degree();
  TrigPoly Q;
  for (long i = 0; i <= N; ++i) {
    const Rational& a = (*c.P)[static_cast<std::size_t>(i)];
    if (!a.is_zero()) Q += TrigPoly::monomial(GaussianRational(a), 2 * i - N);
  }
  return Q;
}

/// The configuration the chain describes: (m, 1^n) for mt = 0, else (m, mt, 1^n), then expanded by q.
inline Configuration darboux_configuration(const DarbouxChain& ch, BigFloat::Bits precision = 256) {
  require(ch.m >= 1, ErrorKind::InvalidArgument, "the trivial chain has no configuration");
  Configuration c = ch.mtilde == 0 ? build_am1n(ch.m, ch.n, precision) : build_two_mult(ch.m, ch.mtilde, ch.n, precision);
  return t_q_expand(c, ch.q);
}

struct FactorizationVerdict {
  long sign = 1;             // Q sin^b cos^a = sign nu W
  GaussianRational epsilon;  // e^{i sum phi_j} implied by Q = epsilon (2i)^N prod sin(phi - phi_j)
};

/// Q(phi) (cos q phi)^{mt(mt+1)/2} (sin q phi)^{m(m+1)/2} = +- nu W. Only epsilon^2 = prod z_j is
/// constrained: with a real right side epsilon = +- i^{-N}, so prod z_j must equal (-1)^N.
inline FactorizationVerdict verify_factorization(const DarbouxChain& ch, const TrigPoly& Q, const Rational& prod_z,
                                                 long N) {
  if (prod_z != (N % 2 ? -1 : 1))
    fail(ErrorKind::IdentityFailed, "prod z_j = " + to_string(prod_z) + " cannot match a real Wronskian");
  const auto a = static_cast<unsigned>(ch.mtilde * (ch.mtilde + 1) / 2);
  const auto b = static_cast<unsigned>(ch.m * (ch.m + 1) / 2);
  const TrigPoly lhs = Q * TrigPoly::cos(ch.q).pow(a) * TrigPoly::sin(ch.q).pow(b);
  TrigPoly rhs = ch.W;
  rhs *= GaussianRational(nu(ch));
  long sign = 1;
  if (!(lhs - rhs).is_zero()) {
    detail::require_zero(lhs + rhs, "factorization");
    sign = -1;
  }
  // epsilon = sign * i^{-N}
  GaussianRational eps = detail::g(sign);
  for (long k = 0; k < ((4 - N % 4) % 4); ++k) eps *= GaussianRational::i();
  return {sign, eps};
}

inline FactorizationVerdict verify_factorization(const DarbouxChain& ch, const Configuration& c) {
  detail::check_compatible(ch, c);
  const long N = c.P->degree();
  const Rational p0 = (*c.P)[0] / c.P->leading();
  return verify_factorization(ch, q_polynomial(c), N % 2 ? Rational(-p0) : p0, N);
}

/// -2(W''W - W'^2) S^2 C^2 Q^2 = W^2 [q^2 m(m+1) C^2 Q^2 + q^2 mt(mt+1) S^2 Q^2 + 2 S^2 C^2 (Q'^2 - Q''Q)]
/// with S = sin q phi, C = cos q phi.
inline void verify_potential(const DarbouxChain& ch, const TrigPoly& Q) {
  const TrigPoly& W = ch.W;
  const TrigPoly W1 = W.derivative(), W2 = W1.derivative();
  const TrigPoly Q1 = Q.derivative(), Q2 = Q1.derivative();
  const TrigPoly S2 = TrigPoly::sin(ch.q).pow(2), C2 = TrigPoly::cos(ch.q).pow(2);
  const TrigPoly QQ = Q * Q, SC = S2 * C2;
  TrigPoly lhs = (W2 * W - W1 * W1) * SC * QQ;
  lhs *= detail::g(-2);
  TrigPoly a = C2 * QQ;
  a *= detail::g(ch.q * ch.q * ch.m * (ch.m + 1));
  TrigPoly b = S2 * QQ;
  b *= detail::g(ch.q * ch.q * ch.mtilde * (ch.mtilde + 1));
  TrigPoly s = SC * (Q1 * Q1 - Q2 * Q);
  s *= detail::g(2);
  detail::require_zero(lhs - W * W * (a + b + s), "potential");
}

inline void verify_potential(const DarbouxChain& ch, const Configuration& c) {
  detail::check_compatible(ch, c);
  verify_potential(ch, q_polynomial(c));
}

/// S C Q'' + 2q (m C^2 - mt S^2) Q' + q^2 n (2(m + mt) + n) S C Q = 0.
inline void verify_eigen(long m, long mt, long n, long q, const TrigPoly& Q) {
  const TrigPoly SC = TrigPoly::sin(q) * TrigPoly::cos(q);
  TrigPoly mc = TrigPoly::cos(q).pow(2);
  mc *= detail::g(m);
  TrigPoly ms = TrigPoly::sin(q).pow(2);
  ms *= detail::g(mt);
  TrigPoly mid = (mc - ms) * Q.derivative();
  mid *= detail::g(2 * q);
  TrigPoly last = SC * Q;
  last *= detail::g(q * q * n * (2 * (m + mt) + n));
  detail::require_zero(SC * Q.derivative(2) + mid + last, "eigenfunction");
}

inline void verify_eigen(const Configuration& c) {
  require(c.P.has_value(), ErrorKind::MissingExactData, "configuration carries no exact P(w)");
  verify_eigen(c.m, c.mtilde.value_or(0), c.n, c.q.value_or(1), q_polynomial(c));
}

/// W_q(phi) = q^{m(m-1)/2} W_1(q phi); returns the scaled chain.
inline DarbouxChain q_scaling_check(const DarbouxChain& base, long q) {
  require(base.q == 1, ErrorKind::InvalidArgument, "base chain must have q = 1");
  DarbouxChain scaled = build_chain(base.m, base.mtilde, base.n, q);
  TrigPoly expect = base.W.scale_frequency(q);
  expect *= GaussianRational(pow(Rational(q), static_cast<unsigned>(base.m * (base.m - 1) / 2)));
  detail::require_zero(scaled.W - expect, "q-scaling");
  return scaled;
}

/// log2 |(-2 (log W)'') - sum_lines mu (mu + 1) / sin^2(phi - phi_line)| relative to the sum, at one angle.
inline double potential_numeric_log2(const DarbouxChain& ch, const Configuration& c, const BigFloat& phi) {
  const auto prec = c.precision;
  const Complex w0 = ch.W.eval(phi), w1 = ch.W.derivative().eval(phi), w2 = ch.W.derivative(2).eval(phi);
  const Complex lhs = (w2 * w0 - w1 * w1) / (w0 * w0) * BigFloat(-2L, prec);
  BigFloat sum(prec);
  for (const auto& l : c.lines) {
    BigFloat mu(l.mult, prec);
    BigFloat s = sin(phi - l.phi);
    sum += mu * (mu + BigFloat(1L, prec)) / (s * s);
  }
  return ((lhs - Complex{sum, BigFloat(prec)}).abs() / sum).log2_abs();
}

struct DarbouxReport {
  DarbouxChain chain;
  Rational nu;
  std::optional<GaussianRational> epsilon;
  std::string factorization, potential, eigen, q_scaling;
};

namespace detail {

template <class F>
std::string verdict_of(F&& f) {
  try {
    f();
    return "exact-pass";
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::IdentityFailed) return "fail";
    throw;
  }
}

}  // namespace detail

/// Run every identity for (m, mt, n, q). The m = 0 chain is checked against Q = 1.
inline DarbouxReport darboux_report(long m, long mt, long n, long q = 1, BigFloat::Bits precision = 256) {
  DarbouxReport r{build_chain(m, mt, n, q), 0, std::nullopt, "", "", "", ""};
  r.nu = nu(r.chain);
  const DarbouxChain& ch = r.chain;
  TrigPoly Q = TrigPoly::constant(GaussianRational(1));
  Rational prod_z = 1;
  long N = 0;
  if (m >= 1) {
    Configuration c = darboux_configuration(ch, precision);
    detail::check_compatible(ch, c);
    Q = q_polynomial(c);
    const Rational p0 = (*c.P)[0] / c.P->leading();
    N = c.P->degree();
    prod_z = N % 2 ? Rational(-p0) : p0;
  }
  r.factorization = detail::verdict_of([&] { r.epsilon = verify_factorization(ch, Q, prod_z, N).epsilon; });
  r.potential = detail::verdict_of([&] { verify_potential(ch, Q); });
  r.eigen = detail::verdict_of([&] { verify_eigen(m, mt, n, q, Q); });
  r.q_scaling = q == 1 ? "n/a" : detail::verdict_of([&] { q_scaling_check(build_chain(m, mt, n, 1), q); });
  return r;
}

inline Json to_json(const DarbouxReport& r) {
  Json j;
  j["m"] = r.chain.m;
  j["mtilde"] = r.chain.mtilde;
  j["n"] = r.chain.n;
  j["q"] = r.chain.q;
  j["levels"] = r.chain.levels;
  j["nu"] = to_string(r.nu);
  if (r.epsilon) {
    std::ostringstream os;
    os << *r.epsilon;
    j["epsilon"] = os.str();
  }
  j["factorization"] = r.factorization;
  j["potential"] = r.potential;
  j["eigen"] = r.eigen;
  j["q_scaling"] = r.q_scaling;
  return j;
}

inline bool all_pass(const DarbouxReport& r) {
  auto ok = [](const std::string& s) { return s == "exact-pass" || s == "n/a"; };
  return ok(r.factorization) && ok(r.potential) && ok(r.eigen) && ok(r.q_scaling);
}

}  // namespace baconf
