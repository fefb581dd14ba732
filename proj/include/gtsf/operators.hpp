#pragma once

#include <algorithm>
#include <cmath>

#include "gtsf/core.hpp"

namespace gtsf {

/// Unions and intersections come in two variants that differ only in
/// how the two radii combine.
enum class RadiusRule { Min, Max };

inline double combine_radius(double r, double s, RadiusRule rule) {
  return rule == RadiusRule::Min ? std::min(r, s) : std::max(r, s);
}

/// Non-strict containment: membership and radius may only grow,
/// indeterminacy and non-membership may only shrink, at every element.
///
/// Note the indeterminacy direction: chi_a >= chi_b.  This keeps
/// containment consistent with the union below (a is always contained
/// in a union of a with anything), which takes the smaller chi.
inline bool subset(const GTSFSet& a, const GTSFSet& b) {
  require_same_universe(a, b);
  for (std::size_t i = 0; i < a.size(); ++i) {
    const GTSFValue& x = a.entries()[i].second;
    const GTSFValue& y = b.entries()[i].second;
    if (!(x.center.phi <= y.center.phi && x.center.chi >= y.center.chi &&
          x.center.psi >= y.center.psi && x.radius <= y.radius))
      return false;
  }
  return true;
}

/// Swaps membership and non-membership at every element; indeterminacy
/// and radius are kept.  An involution.
inline GTSFSet complement(const GTSFSet& a) {
  GTSFSet out;
  for (const GTSFSet::Entry& e : a.entries()) {
    const GTSFValue& v = e.second;
    out.insert(e.first, {{v.center.psi, v.center.chi, v.center.phi}, v.radius});
  }
  return out;
}

/// Elementwise (max phi, min chi, min psi); radius per `rule`.
/// Both union variants take the smaller indeterminacy.
inline GTSFSet set_union(const GTSFSet& a, const GTSFSet& b, RadiusRule rule) {
  require_same_universe(a, b);
  GTSFSet out;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const GTSFValue& x = a.entries()[i].second;
    const GTSFValue& y = b.entries()[i].second;
    out.insert(a.entries()[i].first,
               {{std::max(x.center.phi, y.center.phi), std::min(x.center.chi, y.center.chi),
                 std::min(x.center.psi, y.center.psi)},
                combine_radius(x.radius, y.radius, rule)});
  }
  return out;
}

/// Elementwise (min phi, min chi, max psi); radius per `rule`.
inline GTSFSet set_intersection(const GTSFSet& a, const GTSFSet& b, RadiusRule rule) {
  require_same_universe(a, b);
  GTSFSet out;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const GTSFValue& x = a.entries()[i].second;
    const GTSFValue& y = b.entries()[i].second;
    out.insert(a.entries()[i].first,
               {{std::min(x.center.phi, y.center.phi), std::min(x.center.chi, y.center.chi),
                 std::max(x.center.psi, y.center.psi)},
                combine_radius(x.radius, y.radius, rule)});
  }
  return out;
}

/// Probabilistic-sum addition of centres:
///   phi = (phi_a^t + phi_b^t - phi_a^t phi_b^t)^(1/t),  chi = chi_a chi_b,
///   psi = psi_a psi_b;  radius per `rule`.
/// The phi term is computed as 1 - (1-phi_a^t)(1-phi_b^t) for stability
/// near 1.
inline GTSFValue add(const GTSFValue& a, const GTSFValue& b, const Params& p,
                     RadiusRule rule = RadiusRule::Min) {
  const double pa = pow_t(a.center.phi, p.t);
  const double pb = pow_t(b.center.phi, p.t);
  return {{root_t(1.0 - (1.0 - pa) * (1.0 - pb), p.t), a.center.chi * b.center.chi,
           a.center.psi * b.center.psi},
          combine_radius(a.radius, b.radius, rule)};
}

/// Dual of add under a membership/non-membership swap; indeterminacy
/// multiplies in both:
///   phi = phi_a phi_b,  chi = chi_a chi_b,
///   psi = (psi_a^t + psi_b^t - psi_a^t psi_b^t)^(1/t);  radius per `rule`.
inline GTSFValue mul(const GTSFValue& a, const GTSFValue& b, const Params& p,
                     RadiusRule rule = RadiusRule::Min) {
  const double na = pow_t(a.center.psi, p.t);
  const double nb = pow_t(b.center.psi, p.t);
  return {{a.center.phi * b.center.phi, a.center.chi * b.center.chi,
           root_t(1.0 - (1.0 - na) * (1.0 - nb), p.t)},
          combine_radius(a.radius, b.radius, rule)};
}

/// Scalar multiple (repeated addition extended to real w >= 0):
///   phi = (1 - (1-phi^t)^w)^(1/t),  chi = chi^w,  psi = psi^w,  r = r^w.
/// At w = 0 the result is (0, 1, 1; 1), which fails validate_gtsfv for
/// every t; callers that need a meaningful value should keep w > 0.
inline GTSFValue scalar_mul(double w, const GTSFValue& a, const Params& p) {
  if (w < 0.0) throw std::invalid_argument("scalar_mul: w must be non-negative");
  return {{root_t(1.0 - std::pow(1.0 - pow_t(a.center.phi, p.t), w), p.t),
           std::pow(a.center.chi, w), std::pow(a.center.psi, w)},
          std::pow(a.radius, w)};
}

/// Scalar power (repeated multiplication), dual of scalar_mul:
///   phi = phi^w,  chi = chi^w,  psi = (1 - (1-psi^t)^w)^(1/t),  r = r^w.
inline GTSFValue scalar_pow(const GTSFValue& a, double w, const Params& p) {
  if (w < 0.0) throw std::invalid_argument("scalar_pow: w must be non-negative");
  return {{std::pow(a.center.phi, w), std::pow(a.center.chi, w),
           root_t(1.0 - std::pow(1.0 - pow_t(a.center.psi, p.t), w), p.t)},
          std::pow(a.radius, w)};
}

}  // namespace gtsf
