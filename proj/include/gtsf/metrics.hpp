#pragma once

#include <cmath>
#include <string>

#include "gtsf/core.hpp"

namespace gtsf {

/// Hamming-type deviation between two globular values:
///   1/2 ( 1/2 (|phi_a^t - phi_b^t| + |chi_a^t - chi_b^t| + |psi_a^t - psi_b^t|)
///         + |r_a - r_b| ).
/// Grade block and radius block each contribute at most 1/2 apiece, so
/// the result lies in [0, 1].
inline double hamming_element(const GTSFValue& a, const GTSFValue& b, const Params& p) {
  const double g = std::fabs(pow_t(a.center.phi, p.t) - pow_t(b.center.phi, p.t)) +
                   std::fabs(pow_t(a.center.chi, p.t) - pow_t(b.center.chi, p.t)) +
                   std::fabs(pow_t(a.center.psi, p.t) - pow_t(b.center.psi, p.t));
  return 0.5 * (0.5 * g + std::fabs(a.radius - b.radius));
}

/// Euclidean-type deviation; the radius difference stays linear, only
/// the grade block moves under the root:
///   1/2 ( |r_a - r_b|
///         + sqrt( 1/2 ((phi_a^t - phi_b^t)^2 + (chi_a^t - chi_b^t)^2 + (psi_a^t - psi_b^t)^2) ) ).
inline double euclidean_element(const GTSFValue& a, const GTSFValue& b, const Params& p) {
  const double dp = pow_t(a.center.phi, p.t) - pow_t(b.center.phi, p.t);
  const double dc = pow_t(a.center.chi, p.t) - pow_t(b.center.chi, p.t);
  const double dn = pow_t(a.center.psi, p.t) - pow_t(b.center.psi, p.t);
  return 0.5 * (std::fabs(a.radius - b.radius) +
                std::sqrt(0.5 * (dp * dp + dc * dc + dn * dn)));
}

/// Normalized Hamming distance between sets: mean of hamming_element
/// over the shared universe.
inline double hamming(const GTSFSet& a, const GTSFSet& b, const Params& p) {
  require_same_universe(a, b);
  if (a.empty()) throw EmptyUniverse("hamming: universe must contain at least one element");
  double sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    sum += hamming_element(a.entries()[i].second, b.entries()[i].second, p);
  return sum / static_cast<double>(a.size());
}

/// Normalized Euclidean distance between sets.  The radius block
/// averages linearly while the grade block pools all squared
/// differences under one root:
///   1/2 ( 1/n sum_i |r_i - s_i|
///         + sqrt( 1/(2n) sum_i ((dphi_i)^2 + (dchi_i)^2 + (dpsi_i)^2) ) )
/// with dphi_i = phi_a^t(x_i) - phi_b^t(x_i) and so on.
inline double euclidean(const GTSFSet& a, const GTSFSet& b, const Params& p) {
  require_same_universe(a, b);
  if (a.empty()) throw EmptyUniverse("euclidean: universe must contain at least one element");
  double rsum = 0.0, gsum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const GTSFValue& x = a.entries()[i].second;
    const GTSFValue& y = b.entries()[i].second;
    const double dp = pow_t(x.center.phi, p.t) - pow_t(y.center.phi, p.t);
    const double dc = pow_t(x.center.chi, p.t) - pow_t(y.center.chi, p.t);
    const double dn = pow_t(x.center.psi, p.t) - pow_t(y.center.psi, p.t);
    rsum += std::fabs(x.radius - y.radius);
    gsum += dp * dp + dc * dc + dn * dn;
  }
  const double n = static_cast<double>(a.size());
  return 0.5 * (rsum / n + std::sqrt(gsum / (2.0 * n)));
}

/// Cosine similarity between globular values:
///   1/2 ( cos(angle between the t-power grade vectors) + 1 - |r_a - r_b| ).
/// Lies in [0, 1].  Throws DegenerateValue when either grade vector is
/// all zero, since the angle is then undefined.
inline double cosine_sm(const GTSFValue& a, const GTSFValue& b, const Params& p) {
  const double ap = pow_t(a.center.phi, p.t), ac = pow_t(a.center.chi, p.t),
               an = pow_t(a.center.psi, p.t);
  const double bp = pow_t(b.center.phi, p.t), bc = pow_t(b.center.chi, p.t),
               bn = pow_t(b.center.psi, p.t);
  const double na = std::sqrt(ap * ap + ac * ac + an * an);
  const double nb = std::sqrt(bp * bp + bc * bc + bn * bn);
  if (na == 0.0)
    throw DegenerateValue("cosine_sm: first value has an all-zero grade vector");
  if (nb == 0.0)
    throw DegenerateValue("cosine_sm: second value has an all-zero grade vector");
  const double cosang = (ap * bp + ac * bc + an * bn) / (na * nb);
  return 0.5 * (cosang + 1.0 - std::fabs(a.radius - b.radius));
}

/// Mean cosine similarity of a set's elements to the ideal value
/// (1, 0, 0; 1).  Against the ideal the cosine term reduces to
/// phi^t / |grade vector| and the radius term to r itself.
inline double ideal_similarity(const GTSFSet& alt, const Params& p) {
  if (alt.empty())
    throw EmptyUniverse("ideal_similarity: set must contain at least one element");
  double sum = 0.0;
  for (const GTSFSet::Entry& e : alt.entries()) {
    const GTSFValue& v = e.second;
    const double vp = pow_t(v.center.phi, p.t), vc = pow_t(v.center.chi, p.t),
                 vn = pow_t(v.center.psi, p.t);
    const double norm = std::sqrt(vp * vp + vc * vc + vn * vn);
    if (norm == 0.0)
      throw DegenerateValue("ideal_similarity: element '" + e.first +
                            "' has an all-zero grade vector");
    sum += 0.5 * (vp / norm + 1.0 - std::fabs(v.radius - 1.0));
  }
  return sum / static_cast<double>(alt.size());
}

}  // namespace gtsf
