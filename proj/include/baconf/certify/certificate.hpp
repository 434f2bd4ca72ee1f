#pragma once

#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "baconf/certify/residuals.hpp"
#include "baconf/config/json.hpp"

namespace baconf {

struct BACertificate {
  std::string digest;
  double max_residual_log2 = -std::numeric_limits<double>::infinity();
  double threshold_log2 = 0;
  BigFloat::Bits precision = 0;
  bool pass = false;
  std::vector<ConditionResidual> residuals;
};

inline long default_threshold_log2(BigFloat::Bits precision) { return -(static_cast<long>(precision) - 32); }

/// Both polar families at every line j and every order k <= m_j; pass iff every
/// relative residual lies below 2^threshold_log2.
inline BACertificate certify_ba(const Configuration& c, double threshold_log2) {
  require(c.integral_multiplicities(), ErrorKind::InvalidArgument, "certification needs integer multiplicities");
  BACertificate cert;
  cert.digest = digest(c);
  cert.threshold_log2 = threshold_log2;
  cert.precision = c.precision;
  for (std::size_t j = 0; j < c.size(); ++j) {
    const long mj = c.lines[j].mult.convert_to<long>();
    for (long k = 1; k <= mj; ++k) {
      cert.residuals.push_back(first_condition_residual(c, j, k));
      cert.residuals.push_back(locus_condition_residual(c, j, k));
    }
  }
  for (const auto& r : cert.residuals) cert.max_residual_log2 = std::max(cert.max_residual_log2, r.relative_log2());
  cert.pass = cert.max_residual_log2 < threshold_log2;
  return cert;
}

inline BACertificate certify_ba(const Configuration& c) {
  return certify_ba(c, static_cast<double>(default_threshold_log2(c.precision)));
}

inline Json log2_json(double v) {
  if (std::isinf(v)) return v < 0 ? "-inf" : "inf";
  return v;
}

inline Json to_json(const BACertificate& cert) {
  Json j;
  j["digest"] = cert.digest;
  j["max_residual_log2"] = log2_json(cert.max_residual_log2);
  j["threshold_log2"] = cert.threshold_log2;
  j["precision_bits"] = cert.precision;
  j["verdict"] = cert.pass ? "pass" : "fail";
  Json per = Json::array();
  for (const auto& r : cert.residuals)
    per.push_back({{"j", r.j}, {"k", r.k}, {"form", to_string(r.form)}, {"residual_log2", log2_json(r.relative_log2())}});
  j["per_condition"] = std::move(per);
  return j;
}

}  // namespace baconf
