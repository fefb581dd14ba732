#pragma once

#include <cmath>
#include <iomanip>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "gtsf/core.hpp"
#include "gtsf/construct.hpp"
#include "gtsf/mcgdm.hpp"

/// Document formats.
///
/// All JSON documents are versioned ("schema_version": "1") and parsed
/// strictly: unknown keys, missing cells and type mismatches are
/// schema errors rather than silently ignored, so that a typo in a
/// grade name cannot change a ranking.  Domain violations (grades out
/// of range, power-sum breaches) surface as gtsf::ValidationError with
/// the offending cell path in the message.
namespace gtsf::io {

using json = nlohmann::ordered_json;

/// Input is not syntactically valid (JSON syntax, CSV shape, number
/// format).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Input is well-formed but does not match the document schema.
class SchemaError : public Error {
 public:
  using Error::Error;
};

namespace detail {

inline json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

inline void expect_object(const json& j, const std::string& path) {
  if (!j.is_object()) throw SchemaError(path + ": expected an object");
}

inline void reject_unknown_keys(const json& obj, const std::string& path,
                                std::initializer_list<const char*> allowed) {
  for (const auto& item : obj.items()) {
    bool known = false;
    for (const char* k : allowed)
      if (item.key() == k) known = true;
    if (!known) throw SchemaError(path + ": unknown key '" + item.key() + "'");
  }
}

inline void check_version(const json& doc, const std::string& path) {
  if (!doc.contains("schema_version"))
    throw SchemaError(path + ": missing schema_version");
  if (!doc["schema_version"].is_string() || doc["schema_version"] != "1")
    throw SchemaError(path + ": unsupported schema_version (expected \"1\")");
}

inline double get_number(const json& j, const std::string& path) {
  if (!j.is_number()) throw SchemaError(path + ": expected a number");
  return j.get<double>();
}

inline int get_int(const json& j, const std::string& path) {
  if (!j.is_number_integer()) throw SchemaError(path + ": expected an integer");
  return j.get<int>();
}

inline std::vector<std::string> get_labels(const json& j, const std::string& path) {
  if (!j.is_array()) throw SchemaError(path + ": expected an array of strings");
  std::vector<std::string> out;
  for (const auto& e : j) {
    if (!e.is_string()) throw SchemaError(path + ": expected an array of strings");
    out.push_back(e.get<std::string>());
  }
  return out;
}

inline TSFValue get_grades(const json& j, const std::string& path) {
  if (!j.is_array() || j.size() != 3)
    throw SchemaError(path + ": expected [membership, indeterminacy, non-membership]");
  return {get_number(j[0], path), get_number(j[1], path), get_number(j[2], path)};
}

inline GTSFValue get_gtsfv(const json& j, const std::string& path) {
  if (!j.is_array() || j.size() != 4)
    throw SchemaError(path +
                      ": expected [membership, indeterminacy, non-membership, radius]");
  return {{get_number(j[0], path), get_number(j[1], path), get_number(j[2], path)},
          get_number(j[3], path)};
}

inline void ignore_notes(const json& doc) {
  if (doc.contains("notes") && !doc["notes"].is_array())
    throw SchemaError("notes: expected an array");
}

}  // namespace detail

/// Parses a decision-problem document:
///
///   {
///     "schema_version": "1",
///     "t": 3, "avg_t": 1, "sigma": 0.5,           // optional
///     "matrix_decimals": 2,                       // optional
///     "criterion_weights": [...],                 // optional
///     "experts": [...], "alternatives": [...], "criteria": [...],
///     "evaluations": { expert: { alt: { crit: [phi, chi, psi] } } },
///     "notes": [...]                              // optional, ignored
///   }
///
/// The evaluations tensor must be complete and is validated under t.
inline DecisionProblem parse_problem(const std::string& text) {
  const json doc = detail::parse_json(text);
  detail::expect_object(doc, "document");
  detail::check_version(doc, "document");
  detail::reject_unknown_keys(doc, "document",
                              {"schema_version", "t", "avg_t", "sigma", "matrix_decimals",
                               "criterion_weights", "experts", "alternatives", "criteria",
                               "evaluations", "notes"});
  detail::ignore_notes(doc);

  DecisionProblem p;
  int t = doc.contains("t") ? detail::get_int(doc["t"], "t") : 3;
  double sigma = doc.contains("sigma") ? detail::get_number(doc["sigma"], "sigma") : 0.5;
  try {
    p.params = Params(t, sigma);
  } catch (const std::invalid_argument& e) {
    throw ValidationError(e.what());
  }
  p.averaging_exponent = doc.contains("avg_t") ? detail::get_int(doc["avg_t"], "avg_t") : 1;
  if (doc.contains("matrix_decimals"))
    p.matrix_decimals = detail::get_int(doc["matrix_decimals"], "matrix_decimals");
  if (doc.contains("criterion_weights")) {
    if (!doc["criterion_weights"].is_array())
      throw SchemaError("criterion_weights: expected an array of numbers");
    std::vector<double> w;
    for (const auto& e : doc["criterion_weights"])
      w.push_back(detail::get_number(e, "criterion_weights"));
    p.criterion_weights = std::move(w);
  }

  for (const char* key : {"experts", "alternatives", "criteria", "evaluations"})
    if (!doc.contains(key)) throw SchemaError(std::string("document: missing '") + key + "'");
  p.experts = detail::get_labels(doc["experts"], "experts");
  p.alternatives = detail::get_labels(doc["alternatives"], "alternatives");
  p.criteria = detail::get_labels(doc["criteria"], "criteria");

  const json& evals = doc["evaluations"];
  detail::expect_object(evals, "evaluations");
  for (const auto& item : evals.items()) {
    bool known = false;
    for (const std::string& e : p.experts)
      if (item.key() == e) known = true;
    if (!known) throw SchemaError("evaluations: unknown expert '" + item.key() + "'");
  }
  p.evaluations.reserve(p.experts.size());
  for (const std::string& e : p.experts) {
    if (!evals.contains(e)) throw SchemaError("evaluations: missing expert '" + e + "'");
    const json& by_alt = evals[e];
    detail::expect_object(by_alt, "evaluations." + e);
    for (const auto& item : by_alt.items()) {
      bool known = false;
      for (const std::string& a : p.alternatives)
        if (item.key() == a) known = true;
      if (!known)
        throw SchemaError("evaluations." + e + ": unknown alternative '" + item.key() + "'");
    }
    std::vector<std::vector<TSFValue>> rows;
    rows.reserve(p.alternatives.size());
    for (const std::string& a : p.alternatives) {
      if (!by_alt.contains(a))
        throw SchemaError("evaluations." + e + ": missing alternative '" + a + "'");
      const json& by_crit = by_alt[a];
      detail::expect_object(by_crit, "evaluations." + e + "." + a);
      for (const auto& item : by_crit.items()) {
        bool known = false;
        for (const std::string& q : p.criteria)
          if (item.key() == q) known = true;
        if (!known)
          throw SchemaError("evaluations." + e + "." + a + ": unknown criterion '" +
                            item.key() + "'");
      }
      std::vector<TSFValue> row;
      row.reserve(p.criteria.size());
      for (const std::string& q : p.criteria) {
        if (!by_crit.contains(q))
          throw SchemaError("evaluations." + e + "." + a + ": missing criterion '" + q + "'");
        row.push_back(detail::get_grades(by_crit[q], "evaluations." + e + "." + a + "." + q));
      }
      rows.push_back(std::move(row));
    }
    p.evaluations.push_back(std::move(rows));
  }
  p.validate();
  return p;
}

/// Parses the CSV tensor form, one row per evaluation:
///
///   expert,alternative,criterion,phi,chi,psi
///
/// Labels take the order of first appearance.  Parameters are not part
/// of the CSV; the returned problem carries defaults for the caller to
/// override before use.
inline DecisionProblem parse_problem_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  auto split = [](const std::string& s) {
    std::vector<std::string> out;
    std::string field;
    std::istringstream fs(s);
    while (std::getline(fs, field, ',')) {
      const auto b = field.find_first_not_of(" \t");
      const auto e = field.find_last_not_of(" \t\r");
      out.push_back(b == std::string::npos ? "" : field.substr(b, e - b + 1));
    }
    return out;
  };

  if (!std::getline(in, line)) throw ParseError("csv: empty input");
  const std::vector<std::string> header = split(line);
  const std::vector<std::string> expected = {"expert", "alternative", "criterion",
                                             "phi",    "chi",         "psi"};
  if (header != expected)
    throw SchemaError("csv: header must be 'expert,alternative,criterion,phi,chi,psi'");

  DecisionProblem p;
  auto index_of = [](std::vector<std::string>& labels, const std::string& s) {
    for (std::size_t i = 0; i < labels.size(); ++i)
      if (labels[i] == s) return i;
    labels.push_back(s);
    return labels.size() - 1;
  };
  struct Cell {
    std::size_t e, a, q;
    TSFValue v;
  };
  std::vector<Cell> cells;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line == "\r") continue;
    const std::vector<std::string> f = split(line);
    if (f.size() != 6)
      throw SchemaError("csv line " + std::to_string(lineno) + ": expected 6 fields");
    for (std::size_t i = 0; i < 3; ++i)
      if (f[i].empty())
        throw SchemaError("csv line " + std::to_string(lineno) + ": empty label");
    TSFValue v;
    try {
      v = {std::stod(f[3]), std::stod(f[4]), std::stod(f[5])};
    } catch (const std::exception&) {
      throw ParseError("csv line " + std::to_string(lineno) + ": malformed number");
    }
    cells.push_back({index_of(p.experts, f[0]), index_of(p.alternatives, f[1]),
                     index_of(p.criteria, f[2]), v});
  }
  if (cells.empty()) throw SchemaError("csv: no evaluation rows");

  p.evaluations.assign(
      p.experts.size(),
      std::vector<std::vector<TSFValue>>(p.alternatives.size(),
                                         std::vector<TSFValue>(p.criteria.size())));
  std::vector<std::vector<std::vector<bool>>> seen(
      p.experts.size(), std::vector<std::vector<bool>>(p.alternatives.size(),
                                                       std::vector<bool>(p.criteria.size())));
  for (const Cell& c : cells) {
    if (seen[c.e][c.a][c.q])
      throw SchemaError("csv: duplicate evaluation for " + p.experts[c.e] + "/" +
                        p.alternatives[c.a] + "/" + p.criteria[c.q]);
    seen[c.e][c.a][c.q] = true;
    p.evaluations[c.e][c.a][c.q] = c.v;
  }
  for (std::size_t e = 0; e < p.experts.size(); ++e)
    for (std::size_t a = 0; a < p.alternatives.size(); ++a)
      for (std::size_t q = 0; q < p.criteria.size(); ++q)
        if (!seen[e][a][q])
          throw SchemaError("csv: missing evaluation for " + p.experts[e] + "/" +
                            p.alternatives[a] + "/" + p.criteria[q]);
  return p;
}

/// Named globular sets over a shared universe:
///
///   {
///     "schema_version": "1",
///     "t": 3,                                     // optional
///     "universe": [...],
///     "sets": { name: { label: [phi, chi, psi, radius] } },
///     "notes": [...]                              // optional, ignored
///   }
struct SetsDocument {
  Params params{};
  std::vector<std::pair<std::string, GTSFSet>> sets;

  const GTSFSet& at(const std::string& name) const {
    for (const auto& [n, s] : sets)
      if (n == name) return s;
    throw Error("sets document: no set named '" + name + "'");
  }
};

inline SetsDocument parse_sets(const std::string& text) {
  const json doc = detail::parse_json(text);
  detail::expect_object(doc, "document");
  detail::check_version(doc, "document");
  detail::reject_unknown_keys(doc, "document",
                              {"schema_version", "t", "sigma", "universe", "sets", "notes"});
  detail::ignore_notes(doc);

  SetsDocument out;
  int t = doc.contains("t") ? detail::get_int(doc["t"], "t") : 3;
  double sigma = doc.contains("sigma") ? detail::get_number(doc["sigma"], "sigma") : 0.5;
  try {
    out.params = Params(t, sigma);
  } catch (const std::invalid_argument& e) {
    throw ValidationError(e.what());
  }
  if (!doc.contains("universe")) throw SchemaError("document: missing 'universe'");
  if (!doc.contains("sets")) throw SchemaError("document: missing 'sets'");
  const std::vector<std::string> universe = detail::get_labels(doc["universe"], "universe");
  if (universe.empty()) throw SchemaError("universe: at least one element required");

  const json& sets = doc["sets"];
  detail::expect_object(sets, "sets");
  if (sets.empty()) throw SchemaError("sets: at least one set required");
  for (const auto& item : sets.items()) {
    const std::string path = "sets." + item.key();
    detail::expect_object(item.value(), path);
    for (const auto& el : item.value().items()) {
      bool known = false;
      for (const std::string& u : universe)
        if (el.key() == u) known = true;
      if (!known) throw SchemaError(path + ": unknown element '" + el.key() + "'");
    }
    GTSFSet set;
    for (const std::string& u : universe) {
      if (!item.value().contains(u))
        throw SchemaError(path + ": missing element '" + u + "'");
      const GTSFValue v = detail::get_gtsfv(item.value()[u], path + "." + u);
      require_valid(v, out.params, path + "." + u);
      set.insert(u, v);
    }
    out.sets.emplace_back(item.key(), std::move(set));
  }
  return out;
}

/// Named evaluation families for globular construction:
///
///   {
///     "schema_version": "1",
///     "t": 1,                                     // construction exponent
///     "families": { name: [[phi, chi, psi], ...] },
///     "notes": [...]                              // optional, ignored
///   }
///
/// Grades are range-checked only; families may deliberately violate
/// the power-sum constraint at the construction exponent (evaluations
/// tied to a larger t are still averaged at a smaller one), so
/// constraint checks are left to validate_family under whichever
/// parameters the caller treats as active.
struct FamiliesDocument {
  Params params{};
  std::vector<std::pair<std::string, TSFVFamily>> families;

  const TSFVFamily& at(const std::string& name) const {
    for (const auto& [n, f] : families)
      if (n == name) return f;
    throw Error("families document: no family named '" + name + "'");
  }
};

inline FamiliesDocument parse_families(const std::string& text) {
  const json doc = detail::parse_json(text);
  detail::expect_object(doc, "document");
  detail::check_version(doc, "document");
  detail::reject_unknown_keys(doc, "document", {"schema_version", "t", "families", "notes"});
  detail::ignore_notes(doc);

  FamiliesDocument out;
  int t = doc.contains("t") ? detail::get_int(doc["t"], "t") : 3;
  try {
    out.params = Params(t);
  } catch (const std::invalid_argument& e) {
    throw ValidationError(e.what());
  }
  if (!doc.contains("families")) throw SchemaError("document: missing 'families'");
  const json& fams = doc["families"];
  detail::expect_object(fams, "families");
  if (fams.empty()) throw SchemaError("families: at least one family required");
  for (const auto& item : fams.items()) {
    const std::string path = "families." + item.key();
    if (!item.value().is_array() || item.value().empty())
      throw SchemaError(path + ": expected a non-empty array of grade triples");
    TSFVFamily fam;
    for (std::size_t i = 0; i < item.value().size(); ++i) {
      const TSFValue v =
          detail::get_grades(item.value()[i], path + "[" + std::to_string(i) + "]");
      for (double g : {v.phi, v.chi, v.psi})
        if (!(g >= 0.0 && g <= 1.0))
          throw ValidationError(path + "[" + std::to_string(i) + "]: grade outside [0, 1]");
      fam.push_back(v);
    }
    out.families.emplace_back(item.key(), std::move(fam));
  }
  return out;
}

inline std::string emit_problem(const DecisionProblem& p) {
  json doc;
  doc["schema_version"] = "1";
  doc["t"] = p.params.t;
  doc["avg_t"] = p.averaging_exponent;
  doc["sigma"] = p.params.sigma;
  if (p.matrix_decimals) doc["matrix_decimals"] = *p.matrix_decimals;
  if (p.criterion_weights) doc["criterion_weights"] = *p.criterion_weights;
  doc["experts"] = p.experts;
  doc["alternatives"] = p.alternatives;
  doc["criteria"] = p.criteria;
  json evals = json::object();
  for (std::size_t e = 0; e < p.experts.size(); ++e) {
    json by_alt = json::object();
    for (std::size_t a = 0; a < p.alternatives.size(); ++a) {
      json by_crit = json::object();
      for (std::size_t q = 0; q < p.criteria.size(); ++q) {
        const TSFValue& v = p.evaluations[e][a][q];
        by_crit[p.criteria[q]] = {v.phi, v.chi, v.psi};
      }
      by_alt[p.alternatives[a]] = std::move(by_crit);
    }
    evals[p.experts[e]] = std::move(by_alt);
  }
  doc["evaluations"] = std::move(evals);
  return doc.dump(2) + "\n";
}

namespace detail {

inline json value_json(const GTSFValue& v) {
  json j;
  j["phi"] = v.center.phi;
  j["chi"] = v.center.chi;
  j["psi"] = v.center.psi;
  j["radius"] = v.radius;
  return j;
}

inline json matrix_json(const GTSFDecisionMatrix& m) {
  json out = json::object();
  for (std::size_t a = 0; a < m.alternatives.size(); ++a) {
    json row = json::object();
    for (std::size_t q = 0; q < m.criteria.size(); ++q)
      row[m.criteria[q]] = value_json(m.entries[a][q]);
    out[m.alternatives[a]] = std::move(row);
  }
  return out;
}

inline std::string fmt_value(const GTSFValue& v, int decimals) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(decimals);
  os << "(" << v.center.phi << ", " << v.center.chi << ", " << v.center.psi << "; " << v.radius
     << ")";
  return os.str();
}

}  // namespace detail

inline std::string emit_matrix_json(const GTSFDecisionMatrix& m) {
  json doc;
  doc["schema_version"] = "1";
  doc["alternatives"] = m.alternatives;
  doc["criteria"] = m.criteria;
  doc["matrix"] = detail::matrix_json(m);
  return doc.dump(2) + "\n";
}

/// Human-oriented table; values shown at `decimals` places, underlying
/// data keeps full precision (use the json format for that).
inline std::string emit_matrix_table(const GTSFDecisionMatrix& m, int decimals = 4) {
  std::size_t label_w = 0;
  for (const std::string& a : m.alternatives) label_w = std::max(label_w, a.size());
  const std::size_t cell_w = static_cast<std::size_t>(4 * (decimals + 3) + 8);
  std::ostringstream os;
  os << std::left << std::setw(static_cast<int>(label_w + 2)) << "";
  for (const std::string& q : m.criteria)
    os << std::setw(static_cast<int>(cell_w)) << q;
  os << "\n";
  for (std::size_t a = 0; a < m.alternatives.size(); ++a) {
    os << std::setw(static_cast<int>(label_w + 2)) << m.alternatives[a];
    for (std::size_t q = 0; q < m.criteria.size(); ++q)
      os << std::setw(static_cast<int>(cell_w)) << detail::fmt_value(m.entries[a][q], decimals);
    os << "\n";
  }
  return os.str();
}

inline std::string emit_report_json(const RankingReport& r, const GTSFDecisionMatrix& m) {
  json doc;
  doc["schema_version"] = "1";
  doc["alternatives"] = r.alternatives;
  doc["criteria"] = m.criteria;
  doc["matrix"] = detail::matrix_json(m);
  json sims = json::object();
  for (std::size_t i = 0; i < r.alternatives.size(); ++i)
    sims[r.alternatives[i]] = r.similarities[i];
  doc["similarities"] = std::move(sims);
  doc["order"] = r.order;
  doc["ties"] = r.ties;
  return doc.dump(2) + "\n";
}

inline std::string emit_report_table(const RankingReport& r, const GTSFDecisionMatrix& m,
                                     int decimals = 4) {
  std::ostringstream os;
  os << "aggregated matrix (alternatives x criteria)\n";
  os << emit_matrix_table(m, decimals);
  os << "\nsimilarity to ideal alternative\n";
  std::size_t label_w = 0;
  for (const std::string& a : r.alternatives) label_w = std::max(label_w, a.size());
  os << std::fixed << std::setprecision(decimals);
  for (std::size_t i = 0; i < r.alternatives.size(); ++i)
    os << "  " << std::left << std::setw(static_cast<int>(label_w + 2)) << r.alternatives[i]
       << r.similarities[i] << "\n";
  os << "\nranking: ";
  for (std::size_t i = 0; i < r.order.size(); ++i)
    os << (i ? " > " : "") << r.order[i];
  os << "\n";
  for (const std::vector<std::string>& g : r.ties) {
    os << "tie: {";
    for (std::size_t i = 0; i < g.size(); ++i) os << (i ? ", " : "") << g[i];
    os << "}\n";
  }
  return os.str();
}

}  // namespace gtsf::io
