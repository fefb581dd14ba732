#pragma once

#include <algorithm>
#include <cassert>
#include <cmath>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

/// Globular T-spherical fuzzy calculus.
///
/// A T-spherical fuzzy value carries three grades (membership phi,
/// indeterminacy chi, non-membership psi) constrained by
/// phi^t + chi^t + psi^t <= 1.  A globular value wraps such a grade
/// triple as the centre of a sphere of radius r in [0, 1], so that a
/// whole cluster of expert opinions can travel as one object.
namespace gtsf {

/// Slack allowed on the power-sum constraint when validating.
inline constexpr double kConstraintTolerance = 1e-9;

/// Componentwise tolerance used by value/set equality.
inline constexpr double kEqualityTolerance = 1e-9;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A value or document failed a domain constraint (grade range,
/// power-sum bound, radius range, weight rules, ...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Two sets were combined but are not defined over the same ordered
/// universe of labels.
class UniverseMismatch : public Error {
 public:
  using Error::Error;
};

class EmptyFamily : public Error {
 public:
  using Error::Error;
};

class EmptyUniverse : public Error {
 public:
  using Error::Error;
};

/// An operation hit a value it cannot assign meaning to, e.g. a cosine
/// similarity against an all-zero centre.
class DegenerateValue : public Error {
 public:
  using Error::Error;
};

class LengthMismatch : public Error {
 public:
  using Error::Error;
};

class InvalidWeights : public Error {
 public:
  using Error::Error;
};

/// Evaluation parameters shared by most operations.
///
/// `t` is the power exponent of the constraint (t = 1 picture fuzzy,
/// t = 2 spherical, larger t admits bolder grades).  `sigma` weighs the
/// radius inside the score function; 0.5 is neutral.
struct Params {
  int t = 3;
  double sigma = 0.5;

  Params() = default;

  explicit Params(int t_, double sigma_ = 0.5) : t(t_), sigma(sigma_) {
    if (t < 1) throw std::invalid_argument("Params: t must be a positive integer");
    if (!(sigma >= 0.0 && sigma <= 1.0))
      throw std::invalid_argument("Params: sigma must lie in [0, 1]");
  }
};

/// Grade triple of a T-spherical fuzzy value.  Plain aggregate: the
/// power-sum constraint is t-dependent, so checking is explicit via
/// validate_tsfv / require_valid rather than baked into construction.
struct TSFValue {
  double phi = 0.0;  ///< membership
  double chi = 0.0;  ///< indeterminacy
  double psi = 0.0;  ///< non-membership
};

/// Globular T-spherical fuzzy value: a centre plus a sphere radius.
struct GTSFValue {
  TSFValue center;
  double radius = 0.0;
};

/// x^n for small non-negative integer n, by squaring.
inline double pow_t(double x, int n) {
  assert(n >= 0);
  double r = 1.0;
  while (n > 0) {
    if (n & 1) r *= x;
    x *= x;
    n >>= 1;
  }
  return r;
}

/// t-th root with clamping of tiny negative arguments that arise from
/// cancellation in expressions like 1 - (1-phi^t).
inline double root_t(double x, int t) {
  if (x < 0.0) x = 0.0;
  if (t == 1) return x;
  if (t == 2) return std::sqrt(x);
  return std::pow(x, 1.0 / static_cast<double>(t));
}

/// phi^t + chi^t + psi^t.
inline double power_sum(const TSFValue& v, const Params& p) {
  return pow_t(v.phi, p.t) + pow_t(v.chi, p.t) + pow_t(v.psi, p.t);
}

enum class ValidationIssue {
  ComponentOutOfRange,  ///< a grade or the radius left [0, 1]
  ConstraintViolated,   ///< power sum exceeds 1 beyond tolerance
};

/// Outcome of a validation check.  Evaluates truthy when the value is
/// acceptable; otherwise carries the first issue found and a message
/// naming the offending component.
struct ValidationResult {
  std::optional<ValidationIssue> issue;
  std::string message;

  bool ok() const { return !issue.has_value(); }
  explicit operator bool() const { return ok(); }

  static ValidationResult pass() { return {}; }
  static ValidationResult fail(ValidationIssue i, std::string msg) {
    return {i, std::move(msg)};
  }
};

namespace detail {

inline bool in_unit(double x) { return x >= 0.0 && x <= 1.0; }

inline std::string fmt(double x) {
  std::string s = std::to_string(x);
  return s;
}

}  // namespace detail

/// Checks grade ranges and the power-sum constraint under p.t.
inline ValidationResult validate_tsfv(const TSFValue& v, const Params& p) {
  if (!detail::in_unit(v.phi))
    return ValidationResult::fail(ValidationIssue::ComponentOutOfRange,
                                  "membership grade " + detail::fmt(v.phi) + " outside [0, 1]");
  if (!detail::in_unit(v.chi))
    return ValidationResult::fail(ValidationIssue::ComponentOutOfRange,
                                  "indeterminacy grade " + detail::fmt(v.chi) + " outside [0, 1]");
  if (!detail::in_unit(v.psi))
    return ValidationResult::fail(ValidationIssue::ComponentOutOfRange,
                                  "non-membership grade " + detail::fmt(v.psi) + " outside [0, 1]");
  const double s = power_sum(v, p);
  if (s > 1.0 + kConstraintTolerance)
    return ValidationResult::fail(ValidationIssue::ConstraintViolated,
                                  "power sum " + detail::fmt(s) + " exceeds 1 at t = " +
                                      std::to_string(p.t));
  return ValidationResult::pass();
}

/// Validates the centre and additionally the radius range.
inline ValidationResult validate_gtsfv(const GTSFValue& v, const Params& p) {
  ValidationResult c = validate_tsfv(v.center, p);
  if (!c.ok()) return c;
  if (!detail::in_unit(v.radius))
    return ValidationResult::fail(ValidationIssue::ComponentOutOfRange,
                                  "radius " + detail::fmt(v.radius) + " outside [0, 1]");
  return ValidationResult::pass();
}

/// Throwing forms for call sites that treat invalid data as fatal.
/// `context` is prefixed to the message (e.g. a document path).
inline void require_valid(const TSFValue& v, const Params& p, const std::string& context = "") {
  ValidationResult r = validate_tsfv(v, p);
  if (!r.ok()) throw ValidationError(context.empty() ? r.message : context + ": " + r.message);
}

inline void require_valid(const GTSFValue& v, const Params& p, const std::string& context = "") {
  ValidationResult r = validate_gtsfv(v, p);
  if (!r.ok()) throw ValidationError(context.empty() ? r.message : context + ": " + r.message);
}

inline bool approx_equal(const GTSFValue& a, const GTSFValue& b,
                         double tol = kEqualityTolerance) {
  return std::fabs(a.center.phi - b.center.phi) <= tol &&
         std::fabs(a.center.chi - b.center.chi) <= tol &&
         std::fabs(a.center.psi - b.center.psi) <= tol &&
         std::fabs(a.radius - b.radius) <= tol;
}

/// Ordered mapping from element labels to globular values.
///
/// Iteration order is insertion order and is significant: two sets
/// interoperate only when their label sequences are identical.  The
/// container itself does not enforce the power-sum constraint (that
/// needs a t); parsers and pipelines validate explicitly.
class GTSFSet {
 public:
  using Entry = std::pair<std::string, GTSFValue>;

  GTSFSet() = default;

  void insert(std::string label, const GTSFValue& v) {
    if (find(label) != nullptr)
      throw Error("GTSFSet: duplicate label '" + label + "'");
    entries_.emplace_back(std::move(label), v);
  }

  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  const std::vector<Entry>& entries() const { return entries_; }

  const GTSFValue* find(std::string_view label) const {
    for (const Entry& e : entries_)
      if (e.first == label) return &e.second;
    return nullptr;
  }

  const GTSFValue& at(std::string_view label) const {
    const GTSFValue* v = find(label);
    if (v == nullptr) throw Error("GTSFSet: no element labelled '" + std::string(label) + "'");
    return *v;
  }

  /// True when both sets run over the same labels in the same order.
  bool same_universe(const GTSFSet& other) const {
    if (entries_.size() != other.entries_.size()) return false;
    for (std::size_t i = 0; i < entries_.size(); ++i)
      if (entries_[i].first != other.entries_[i].first) return false;
    return true;
  }

  std::vector<std::string> labels() const {
    std::vector<std::string> out;
    out.reserve(entries_.size());
    for (const Entry& e : entries_) out.push_back(e.first);
    return out;
  }

 private:
  std::vector<Entry> entries_;
};

inline void require_same_universe(const GTSFSet& a, const GTSFSet& b) {
  if (!a.same_universe(b))
    throw UniverseMismatch("sets are not defined over the same ordered universe");
}

/// Componentwise equality of sets at kEqualityTolerance; requires a
/// shared universe.
inline bool equal(const GTSFSet& a, const GTSFSet& b) {
  require_same_universe(a, b);
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!approx_equal(a.entries()[i].second, b.entries()[i].second)) return false;
  return true;
}

}  // namespace gtsf
