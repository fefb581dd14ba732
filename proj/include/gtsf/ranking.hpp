#pragma once

#include <cassert>
#include <cmath>

#include "gtsf/core.hpp"

namespace gtsf {

/// Score differences at or below this magnitude are treated as ties
/// and passed on to the accuracy comparison.
inline constexpr double kScoreTieTolerance = 1e-9;

/// Score of a globular value:
///   1/2 (phi^t - chi^t - psi^t + r (2 sigma - 1)).
/// sigma = 0.5 ignores the radius; larger sigma rewards it.  Lies in
/// [-1, 1] for valid inputs.
inline double score(const GTSFValue& a, const Params& p) {
  const double s = 0.5 * (pow_t(a.center.phi, p.t) - pow_t(a.center.chi, p.t) -
                          pow_t(a.center.psi, p.t) + a.radius * (2.0 * p.sigma - 1.0));
  assert(s >= -1.0 - 1e-12 && s <= 1.0 + 1e-12);
  return s;
}

/// Accuracy (total commitment) of a globular value: phi^t + chi^t + psi^t.
/// Lies in [0, 1] for valid inputs.
inline double accuracy(const GTSFValue& a, const Params& p) {
  const double h = power_sum(a.center, p);
  assert(h >= 0.0 && h <= 1.0 + kConstraintTolerance + 1e-12);
  return h;
}

enum class Relation { Less, Greater, Equivalent };
enum class DecidedBy { Score, Accuracy, Exhausted };

/// Result of comparing two values: how a relates to b and which stage
/// settled it.  Equivalent only ever pairs with Exhausted.
struct Ordering {
  Relation relation;
  DecidedBy decided_by;
};

/// Lexicographic comparison: by score, then by accuracy on score ties,
/// declaring equivalence when both tie.
inline Ordering compare(const GTSFValue& a, const GTSFValue& b, const Params& p) {
  const double ds = score(a, p) - score(b, p);
  if (std::fabs(ds) > kScoreTieTolerance)
    return {ds < 0.0 ? Relation::Less : Relation::Greater, DecidedBy::Score};
  const double dh = accuracy(a, p) - accuracy(b, p);
  if (std::fabs(dh) > kScoreTieTolerance)
    return {dh < 0.0 ? Relation::Less : Relation::Greater, DecidedBy::Accuracy};
  return {Relation::Equivalent, DecidedBy::Exhausted};
}

}  // namespace gtsf
