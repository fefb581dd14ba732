#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "gtsf/core.hpp"

namespace gtsf {

/// Normalized importance weights: strictly positive, summing to 1
/// within 1e-9.  Zero weights are rejected rather than treated as
/// "ignore this input", because w = 0 turns the weighted products into
/// constraint-breaking limits.
class WeightVector {
 public:
  explicit WeightVector(std::vector<double> w) : w_(std::move(w)) {
    if (w_.empty()) throw InvalidWeights("weights: at least one weight required");
    double sum = 0.0;
    for (std::size_t i = 0; i < w_.size(); ++i) {
      if (!(w_[i] > 0.0))
        throw InvalidWeights("weights: weight " + std::to_string(i) +
                             " must be strictly positive");
      sum += w_[i];
    }
    if (std::fabs(sum - 1.0) > 1e-9)
      throw InvalidWeights("weights: sum is " + std::to_string(sum) + ", expected 1");
  }

  static WeightVector uniform(std::size_t n) {
    if (n == 0) throw InvalidWeights("weights: at least one weight required");
    return WeightVector(std::vector<double>(n, 1.0 / static_cast<double>(n)));
  }

  const std::vector<double>& values() const { return w_; }
  std::size_t size() const { return w_.size(); }
  double operator[](std::size_t i) const { return w_[i]; }

 private:
  std::vector<double> w_;
};

/// Weighted arithmetic-averaging aggregation:
///   phi = (1 - prod (1-phi_i^t)^{w_i})^{1/t},
///   chi = prod chi_i^{w_i},  psi = prod psi_i^{w_i},  r = prod r_i^{w_i}.
/// Equals the fold of scalar_mul and add over the inputs.
inline GTSFValue gtsfwaa(std::span<const GTSFValue> values, const WeightVector& w,
                         const Params& p) {
  if (values.empty()) throw EmptyFamily("gtsfwaa: at least one value required");
  if (values.size() != w.size())
    throw LengthMismatch("gtsfwaa: " + std::to_string(values.size()) + " values but " +
                         std::to_string(w.size()) + " weights");
  double qp = 1.0, qc = 1.0, qn = 1.0, qr = 1.0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    const GTSFValue& v = values[i];
    qp *= std::pow(1.0 - pow_t(v.center.phi, p.t), w[i]);
    qc *= std::pow(v.center.chi, w[i]);
    qn *= std::pow(v.center.psi, w[i]);
    qr *= std::pow(v.radius, w[i]);
  }
  return {{root_t(1.0 - qp, p.t), qc, qn}, qr};
}

/// Weighted geometric aggregation, the dual of gtsfwaa under a
/// membership/non-membership swap (indeterminacy multiplies in both):
///   phi = prod phi_i^{w_i},  chi = prod chi_i^{w_i},
///   psi = (1 - prod (1-psi_i^t)^{w_i})^{1/t},  r = prod r_i^{w_i}.
inline GTSFValue gtsfwga(std::span<const GTSFValue> values, const WeightVector& w,
                         const Params& p) {
  if (values.empty()) throw EmptyFamily("gtsfwga: at least one value required");
  if (values.size() != w.size())
    throw LengthMismatch("gtsfwga: " + std::to_string(values.size()) + " values but " +
                         std::to_string(w.size()) + " weights");
  double qp = 1.0, qc = 1.0, qn = 1.0, qr = 1.0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    const GTSFValue& v = values[i];
    qp *= std::pow(v.center.phi, w[i]);
    qc *= std::pow(v.center.chi, w[i]);
    qn *= std::pow(1.0 - pow_t(v.center.psi, p.t), w[i]);
    qr *= std::pow(v.radius, w[i]);
  }
  return {{qp, qc, root_t(1.0 - qn, p.t)}, qr};
}

inline GTSFValue gtsfwaa(const std::vector<GTSFValue>& values, const WeightVector& w,
                         const Params& p) {
  return gtsfwaa(std::span<const GTSFValue>(values.data(), values.size()), w, p);
}

inline GTSFValue gtsfwga(const std::vector<GTSFValue>& values, const WeightVector& w,
                         const Params& p) {
  return gtsfwga(std::span<const GTSFValue>(values.data(), values.size()), w, p);
}

}  // namespace gtsf
