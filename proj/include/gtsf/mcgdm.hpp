#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "gtsf/aggregate.hpp"
#include "gtsf/construct.hpp"
#include "gtsf/core.hpp"
#include "gtsf/metrics.hpp"

namespace gtsf {

/// Similarity differences at or below this are reported as ties.
inline constexpr double kRankTieTolerance = 1e-12;

/// A multi-expert, multi-criteria evaluation problem.
///
/// `evaluations` is a complete tensor indexed [expert][alternative][criterion].
/// `params.t` governs validity and the similarity stage;
/// `averaging_exponent` governs only the centroid/radius construction
/// (the two stages commonly run at different exponents).
/// `matrix_decimals`, when set, rounds every aggregated matrix cell to
/// that many decimals (centres rounded, radius recomputed from the
/// rounded centre, then rounded).  Intended for reproducing published
/// worked examples that tabulate intermediate values; leave unset for
/// full precision.
struct DecisionProblem {
  std::vector<std::string> experts;
  std::vector<std::string> alternatives;
  std::vector<std::string> criteria;
  std::vector<std::vector<std::vector<TSFValue>>> evaluations;
  Params params{};
  int averaging_exponent = 1;
  std::optional<int> matrix_decimals;
  std::optional<std::vector<double>> criterion_weights;

  /// Shape, label and domain checks; throws ValidationError with the
  /// offending cell named as expert/alternative/criterion.
  void validate() const;
};

/// Aggregated problem: one globular value per (alternative, criterion).
struct GTSFDecisionMatrix {
  std::vector<std::string> alternatives;
  std::vector<std::string> criteria;
  std::vector<std::vector<GTSFValue>> entries;  // [alternative][criterion]

  /// One alternative's evaluations as a set over the criteria labels.
  GTSFSet row(std::size_t alt_index) const {
    GTSFSet out;
    for (std::size_t q = 0; q < criteria.size(); ++q)
      out.insert(criteria[q], entries.at(alt_index)[q]);
    return out;
  }
};

/// Ranking outcome.  `alternatives`/`similarities` follow input order;
/// `order` lists labels best first (ties broken by input position);
/// `ties` lists any groups whose similarities coincide within
/// kRankTieTolerance.
struct RankingReport {
  std::vector<std::string> alternatives;
  std::vector<double> similarities;
  std::vector<std::string> order;
  std::vector<std::vector<std::string>> ties;
};

namespace detail {

inline void require_labels(const std::vector<std::string>& labels, const std::string& what) {
  if (labels.empty()) throw ValidationError(what + ": at least one label required");
  std::unordered_set<std::string> seen;
  for (const std::string& s : labels) {
    if (s.empty()) throw ValidationError(what + ": empty label");
    if (!seen.insert(s).second) throw ValidationError(what + ": duplicate label '" + s + "'");
  }
}

inline double round_to(double x, int decimals) {
  const double f = std::pow(10.0, decimals);
  // the small nudge keeps values that print as .xx5 from flooring
  return std::floor(x * f + 0.5 + 1e-9) / f;
}

}  // namespace detail

inline void DecisionProblem::validate() const {
  detail::require_labels(experts, "experts");
  detail::require_labels(alternatives, "alternatives");
  detail::require_labels(criteria, "criteria");
  if (averaging_exponent < 1)
    throw ValidationError("averaging exponent must be a positive integer");
  if (matrix_decimals && *matrix_decimals < 0)
    throw ValidationError("matrix decimals must be non-negative");
  if (criterion_weights) WeightVector check(*criterion_weights);
  if (criterion_weights && criterion_weights->size() != criteria.size())
    throw ValidationError("criterion weights: expected one weight per criterion");
  if (evaluations.size() != experts.size())
    throw ValidationError("evaluations: expected one block per expert");
  for (std::size_t e = 0; e < experts.size(); ++e) {
    if (evaluations[e].size() != alternatives.size())
      throw ValidationError("evaluations for " + experts[e] +
                            ": expected one row per alternative");
    for (std::size_t a = 0; a < alternatives.size(); ++a) {
      if (evaluations[e][a].size() != criteria.size())
        throw ValidationError("evaluations for " + experts[e] + "/" + alternatives[a] +
                              ": expected one value per criterion");
      for (std::size_t q = 0; q < criteria.size(); ++q)
        require_valid(evaluations[e][a][q], params,
                      experts[e] + "/" + alternatives[a] + "/" + criteria[q]);
    }
  }
}

/// Collapses the expert dimension: for every (alternative, criterion)
/// the experts' values form a family that becomes one globular value
/// under the averaging exponent.
inline GTSFDecisionMatrix build_gtsf_matrix(const DecisionProblem& problem) {
  problem.validate();
  const Params avg(problem.averaging_exponent, problem.params.sigma);
  GTSFDecisionMatrix m;
  m.alternatives = problem.alternatives;
  m.criteria = problem.criteria;
  m.entries.resize(problem.alternatives.size());
  for (std::size_t a = 0; a < problem.alternatives.size(); ++a) {
    m.entries[a].reserve(problem.criteria.size());
    for (std::size_t q = 0; q < problem.criteria.size(); ++q) {
      TSFVFamily family;
      family.reserve(problem.experts.size());
      for (std::size_t e = 0; e < problem.experts.size(); ++e)
        family.push_back(problem.evaluations[e][a][q]);
      GTSFValue cell = make_gtsfv(family, avg);
      if (problem.matrix_decimals) {
        const int d = *problem.matrix_decimals;
        cell.center.phi = detail::round_to(cell.center.phi, d);
        cell.center.chi = detail::round_to(cell.center.chi, d);
        cell.center.psi = detail::round_to(cell.center.psi, d);
        cell.radius = detail::round_to(radius(family, cell.center, avg), d);
      }
      m.entries[a].push_back(cell);
    }
  }
  return m;
}

/// The ideal alternative: full membership, no hesitation, full radius
/// at every criterion.
inline GTSFSet ideal_alternative(const std::vector<std::string>& criteria) {
  if (criteria.empty())
    throw EmptyUniverse("ideal_alternative: at least one criterion required");
  GTSFSet out;
  for (const std::string& q : criteria) out.insert(q, {{1.0, 0.0, 0.0}, 1.0});
  return out;
}

inline GTSFSet ideal_alternative(std::size_t criteria_count) {
  std::vector<std::string> labels;
  labels.reserve(criteria_count);
  for (std::size_t i = 0; i < criteria_count; ++i) labels.push_back("c" + std::to_string(i + 1));
  return ideal_alternative(labels);
}

/// Ranks the matrix rows by cosine similarity to the ideal alternative,
/// optionally weighting criteria (unweighted = plain mean).
inline RankingReport rank(const GTSFDecisionMatrix& m, const Params& p,
                          const std::optional<std::vector<double>>& criterion_weights =
                              std::nullopt) {
  if (m.alternatives.empty())
    throw ValidationError("rank: at least one alternative required");
  std::optional<WeightVector> w;
  if (criterion_weights) {
    w.emplace(*criterion_weights);
    if (w->size() != m.criteria.size())
      throw LengthMismatch("rank: expected one weight per criterion");
  }
  const GTSFValue ideal{{1.0, 0.0, 0.0}, 1.0};

  RankingReport report;
  report.alternatives = m.alternatives;
  report.similarities.reserve(m.alternatives.size());
  for (std::size_t a = 0; a < m.alternatives.size(); ++a) {
    if (!w) {
      report.similarities.push_back(ideal_similarity(m.row(a), p));
    } else {
      double s = 0.0;
      for (std::size_t q = 0; q < m.criteria.size(); ++q)
        s += (*w)[q] * cosine_sm(m.entries[a][q], ideal, p);
      report.similarities.push_back(s);
    }
  }

  std::vector<std::size_t> idx(m.alternatives.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t i, std::size_t j) {
    return report.similarities[i] > report.similarities[j];
  });

  // group adjacent near-equal similarities, input order inside a group
  std::size_t i = 0;
  while (i < idx.size()) {
    std::size_t j = i + 1;
    while (j < idx.size() && std::fabs(report.similarities[idx[j]] -
                                       report.similarities[idx[j - 1]]) <= kRankTieTolerance)
      ++j;
    std::sort(idx.begin() + static_cast<std::ptrdiff_t>(i),
              idx.begin() + static_cast<std::ptrdiff_t>(j));
    if (j - i > 1) {
      std::vector<std::string> group;
      for (std::size_t k = i; k < j; ++k) group.push_back(m.alternatives[idx[k]]);
      report.ties.push_back(std::move(group));
    }
    i = j;
  }
  for (std::size_t k : idx) report.order.push_back(m.alternatives[k]);
  return report;
}

/// End-to-end pipeline: validate, aggregate experts, rank.
inline RankingReport solve(const DecisionProblem& problem) {
  return rank(build_gtsf_matrix(problem), problem.params, problem.criterion_weights);
}

}  // namespace gtsf
