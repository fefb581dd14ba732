#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "gtsf/core.hpp"

namespace gtsf {

/// A finite family of T-spherical fuzzy evaluations of one object,
/// typically one value per expert.
using TSFVFamily = std::vector<TSFValue>;

/// First failing member, if any, with its index in the message.
inline ValidationResult validate_family(const TSFVFamily& family, const Params& p) {
  for (std::size_t i = 0; i < family.size(); ++i) {
    ValidationResult r = validate_tsfv(family[i], p);
    if (!r.ok()) {
      r.message = "member " + std::to_string(i) + ": " + r.message;
      return r;
    }
  }
  return ValidationResult::pass();
}

/// Componentwise t-power mean of the family:
///   phi = (sum phi_j^t / n)^(1/t),  likewise chi and psi.
inline TSFValue centroid(const TSFVFamily& family, const Params& p) {
  if (family.empty()) throw EmptyFamily("centroid: family must contain at least one value");
  double sp = 0.0, sc = 0.0, sn = 0.0;
  for (const TSFValue& v : family) {
    sp += pow_t(v.phi, p.t);
    sc += pow_t(v.chi, p.t);
    sn += pow_t(v.psi, p.t);
  }
  const double n = static_cast<double>(family.size());
  return {root_t(sp / n, p.t), root_t(sc / n, p.t), root_t(sn / n, p.t)};
}

/// Radius of the enclosing sphere around a given centre, in the space
/// of t-th powers of the grades:
///   min( max_j sqrt((phi^t - phi_j^t)^2 + (chi^t - chi_j^t)^2 + (psi^t - psi_j^t)^2), 1 ).
inline double radius(const TSFVFamily& family, const TSFValue& center, const Params& p) {
  if (family.empty()) throw EmptyFamily("radius: family must contain at least one value");
  const double cp = pow_t(center.phi, p.t);
  const double cc = pow_t(center.chi, p.t);
  const double cn = pow_t(center.psi, p.t);
  double worst = 0.0;
  for (const TSFValue& v : family) {
    const double dp = cp - pow_t(v.phi, p.t);
    const double dc = cc - pow_t(v.chi, p.t);
    const double dn = cn - pow_t(v.psi, p.t);
    const double d = std::sqrt(dp * dp + dc * dc + dn * dn);
    if (d > worst) worst = d;
  }
  return std::min(worst, 1.0);
}

/// Collapses a family into one globular value (centroid + radius).
/// Membership of the centroid in the valid region follows from the
/// members being valid; this function does not itself validate the
/// family, callers decide which t the members must satisfy.
inline GTSFValue make_gtsfv(const TSFVFamily& family, const Params& p) {
  const TSFValue c = centroid(family, p);
  return {c, radius(family, c, p)};
}

}  // namespace gtsf
