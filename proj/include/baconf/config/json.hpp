#pragma once

#include <json.hpp>

#include <cstdint>
#include <string>

#include "baconf/config/configuration.hpp"
#include "baconf/exact/symmetric.hpp"

namespace baconf {

using Json = nlohmann::json;

namespace detail {

inline Json rational_list(const std::optional<std::vector<Rational>>& xs) {
  if (!xs) return nullptr;
  return Json(to_strings(*xs));
}

inline std::optional<std::vector<Rational>> parse_rational_list(const Json& j) {
  if (j.is_null()) return std::nullopt;
  return parse_rationals(j.get<std::vector<std::string>>());
}

inline Json multiplicity_json(const Rational& m) {
  if (mp::denominator(m) == 1) return Json(mp::numerator(m).convert_to<long long>());
  return Json(to_string(m));
}

inline Rational parse_multiplicity(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  fail(ErrorKind::Parse, "multiplicity must be an integer or a 'p/q' string");
}

}  // namespace detail

inline Json to_json(const Configuration& c) {
  Json j;
  j["kind"] = to_string(c.kind);
  j["m"] = c.m;
  j["mtilde"] = c.mtilde ? Json(*c.mtilde) : Json(nullptr);
  j["n"] = c.n;
  j["q"] = c.q ? Json(*c.q) : Json(nullptr);
  j["precision_bits"] = c.precision;
  j["e"] = detail::rational_list(c.e);
  j["ehat"] = detail::rational_list(c.ehat);
  Json lines = Json::array();
  for (const auto& l : c.lines) {
    Json lj;
    lj["mult"] = detail::multiplicity_json(l.mult);
    lj["phi_hex"] = l.phi.to_hex();
    if (l.alpha_exact) lj["alpha"] = to_string(*l.alpha_exact);
    else if (l.alpha_infinite()) lj["alpha"] = "inf";
    else lj["alpha"] = nullptr;
    lines.push_back(std::move(lj));
  }
  j["lines"] = std::move(lines);
  if (c.seed) j["seed"] = *c.seed;
  if (c.base) j["base"] = to_string(*c.base);
  if (c.kind == Kind::TwoMult || c.base == Kind::TwoMult) j["branch"] = c.branch;
  return j;
}

inline Configuration configuration_from_json(const Json& j) {
  try {
    Configuration c;
    c.kind = parse_kind(j.at("kind").get<std::string>());
    c.m = j.at("m").get<long>();
    if (!j.at("mtilde").is_null()) c.mtilde = j.at("mtilde").get<long>();
    c.n = j.at("n").get<long>();
    if (!j.at("q").is_null()) c.q = j.at("q").get<long>();
    c.precision = j.at("precision_bits").get<long>();
    require(c.precision >= BigFloat::kMinBits, ErrorKind::Parse, "precision_bits below 64");
    c.e = detail::parse_rational_list(j.at("e"));
    c.ehat = detail::parse_rational_list(j.at("ehat"));
    if (j.contains("seed")) c.seed = j.at("seed").get<unsigned long long>();
    if (j.contains("base")) c.base = parse_kind(j.at("base").get<std::string>());
    if (j.contains("branch")) c.branch = j.at("branch").get<int>();
    std::vector<Rational> exact_alphas;
    bool all_exact = true;
    for (const auto& lj : j.at("lines")) {
      Rational mult = detail::parse_multiplicity(lj.at("mult"));
      BigFloat phi = BigFloat::from_hex(lj.at("phi_hex").get<std::string>(), c.precision);
      Line l = make_line(mult, phi);
      const Json& a = lj.at("alpha");
      if (a.is_string() && a.get<std::string>() != "inf") {
        l.alpha_exact = parse_rational(a.get<std::string>());
        l.alpha = BigFloat(*l.alpha_exact, c.precision);
      }
      if (!l.alpha_infinite()) {
        if (l.alpha_exact) exact_alphas.push_back(*l.alpha_exact);
        else all_exact = false;
      }
      c.lines.push_back(std::move(l));
    }
    if (c.e) c.P = poly_from_elementary(*c.e, static_cast<long>(c.e->size()));
    if (c.ehat) c.R = r_from_ehat(*c.ehat, c.n);
    else if (all_exact && !exact_alphas.empty()) c.R = poly_from_roots(exact_alphas);
    return c;
  } catch (const nlohmann::json::exception& err) {
    fail(ErrorKind::Parse, std::string("configuration JSON: ") + err.what());
  }
}

/// 64-bit FNV-1a of a byte string, as 16 hex digits.
inline std::string fnv1a_hex(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : bytes) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i, h >>= 4) out[static_cast<std::size_t>(i)] = digits[h & 0xF];
  return out;
}

inline std::string digest(const Configuration& c) { return fnv1a_hex(to_json(c).dump()); }

}  // namespace baconf
