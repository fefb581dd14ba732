#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gtsf/gtsf.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;       // unreadable/malformed/unschematic input
constexpr int kExitValidation = 3;  // well-formed input violating domain rules

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw gtsf::io::ParseError("cannot open input file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::vector<double> parse_numbers(const std::string& s, const std::string& what) {
  std::vector<double> out;
  std::string field;
  std::istringstream fs(s);
  while (std::getline(fs, field, ',')) {
    try {
      std::size_t pos = 0;
      out.push_back(std::stod(field, &pos));
      while (pos < field.size() && std::isspace(static_cast<unsigned char>(field[pos]))) ++pos;
      if (pos != field.size()) throw std::invalid_argument(field);
    } catch (const std::exception&) {
      throw gtsf::io::ParseError(what + ": malformed number '" + field + "'");
    }
  }
  return out;
}

gtsf::GTSFValue parse_value(const std::string& s) {
  const std::vector<double> n = parse_numbers(s, "--value");
  if (n.size() != 4)
    throw gtsf::io::ParseError(
        "--value: expected 'membership,indeterminacy,non-membership,radius'");
  return {{n[0], n[1], n[2]}, n[3]};
}

std::string fmt_value(const gtsf::GTSFValue& v) {
  std::ostringstream os;
  os.precision(17);
  os << "(" << v.center.phi << ", " << v.center.chi << ", " << v.center.psi << "; " << v.radius
     << ")";
  return os.str();
}

int run_guarded(const std::function<void()>& action) {
  try {
    action();
    return kExitOk;
  } catch (const gtsf::io::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const gtsf::io::SchemaError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const gtsf::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
}

struct ProblemFlags {
  std::string input;
  bool csv = false;
  std::string format = "table";
  std::optional<int> t;
  std::optional<int> avg_t;
  std::optional<double> sigma;
  std::optional<int> matrix_decimals;
  std::string weights;
};

void add_problem_flags(CLI::App* cmd, ProblemFlags& f) {
  cmd->add_option("input", f.input, "problem document path, or - for stdin")->required();
  cmd->add_flag("--csv", f.csv, "input is the CSV tensor form");
  cmd->add_option("--format", f.format, "output format")
      ->check(CLI::IsMember({"table", "json"}));
  cmd->add_option("--t", f.t, "constraint/similarity exponent (overrides the document)")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--avg-t", f.avg_t, "averaging exponent (overrides the document)")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--sigma", f.sigma, "radius weight in the score function")
      ->check(CLI::Range(0.0, 1.0));
  cmd->add_option("--matrix-decimals", f.matrix_decimals,
                  "round aggregated matrix cells to this many decimals")
      ->check(CLI::NonNegativeNumber);
  cmd->add_option("--weights", f.weights, "comma-separated criterion weights");
}

gtsf::DecisionProblem load_problem(const ProblemFlags& f) {
  const std::string text = read_input(f.input);
  gtsf::DecisionProblem p =
      f.csv ? gtsf::io::parse_problem_csv(text) : gtsf::io::parse_problem(text);
  int t = f.t.value_or(p.params.t);
  double sigma = f.sigma.value_or(p.params.sigma);
  p.params = gtsf::Params(t, sigma);
  // --t realigns both stages unless --avg-t pins the averaging side
  if (f.avg_t)
    p.averaging_exponent = *f.avg_t;
  else if (f.t)
    p.averaging_exponent = *f.t;
  if (f.matrix_decimals) p.matrix_decimals = f.matrix_decimals;
  if (!f.weights.empty()) p.criterion_weights = parse_numbers(f.weights, "--weights");
  return p;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"globular T-spherical fuzzy decision calculus"};
  app.require_subcommand(1);

  ProblemFlags solve_flags;
  CLI::App* solve_cmd =
      app.add_subcommand("solve", "aggregate experts, rank alternatives against the ideal");
  add_problem_flags(solve_cmd, solve_flags);

  ProblemFlags matrix_flags;
  CLI::App* matrix_cmd =
      app.add_subcommand("matrix", "aggregate experts and print the globular matrix");
  add_problem_flags(matrix_cmd, matrix_flags);

  std::string dist_input, dist_a, dist_b, dist_measure = "hamming", dist_element,
                          dist_format = "plain";
  std::optional<int> dist_t;
  CLI::App* dist_cmd =
      app.add_subcommand("distance", "distance between two sets from a sets document");
  dist_cmd->add_option("input", dist_input, "sets document path, or - for stdin")->required();
  dist_cmd->add_option("--a", dist_a, "first set name")->required();
  dist_cmd->add_option("--b", dist_b, "second set name")->required();
  dist_cmd->add_option("--measure", dist_measure, "distance measure")
      ->check(CLI::IsMember({"hamming", "euclidean"}));
  dist_cmd->add_option("--element", dist_element,
                       "report the single-element distance at this label");
  dist_cmd->add_option("--t", dist_t, "exponent (overrides the document)")
      ->check(CLI::PositiveNumber);
  dist_cmd->add_option("--format", dist_format, "output format")
      ->check(CLI::IsMember({"plain", "json"}));

  std::vector<std::string> sim_values;
  bool sim_ideal = false;
  int sim_t = 3;
  std::string sim_format = "plain";
  CLI::App* sim_cmd = app.add_subcommand("similarity", "cosine similarity between values");
  sim_cmd->add_option("--value", sim_values,
                      "globular value as 'phi,chi,psi,radius' (give two, or one with --ideal)");
  sim_cmd->add_flag("--ideal", sim_ideal, "compare a single value against the ideal (1,0,0;1)");
  sim_cmd->add_option("--t", sim_t, "exponent")->check(CLI::PositiveNumber);
  sim_cmd->add_option("--format", sim_format, "output format")
      ->check(CLI::IsMember({"plain", "json"}));

  std::vector<std::string> agg_values;
  std::string agg_op = "waa", agg_weights, agg_format = "plain";
  int agg_t = 3;
  CLI::App* agg_cmd = app.add_subcommand("aggregate", "weighted aggregation of values");
  agg_cmd->add_option("--value", agg_values, "globular value as 'phi,chi,psi,radius'")
      ->required();
  agg_cmd->add_option("--op", agg_op, "aggregation operator")
      ->check(CLI::IsMember({"waa", "wga"}));
  agg_cmd->add_option("--weights", agg_weights,
                      "comma-separated weights (default: uniform)");
  agg_cmd->add_option("--t", agg_t, "exponent")->check(CLI::PositiveNumber);
  agg_cmd->add_option("--format", agg_format, "output format")
      ->check(CLI::IsMember({"plain", "json"}));

  std::string score_value, score_format = "plain";
  int score_t = 3;
  double score_sigma = 0.5;
  CLI::App* score_cmd = app.add_subcommand("score", "score and accuracy of a value");
  score_cmd->add_option("--value", score_value, "globular value as 'phi,chi,psi,radius'")
      ->required();
  score_cmd->add_option("--t", score_t, "exponent")->check(CLI::PositiveNumber);
  score_cmd->add_option("--sigma", score_sigma, "radius weight in the score")
      ->check(CLI::Range(0.0, 1.0));
  score_cmd->add_option("--format", score_format, "output format")
      ->check(CLI::IsMember({"plain", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  if (solve_cmd->parsed()) {
    return run_guarded([&] {
      const gtsf::DecisionProblem p = load_problem(solve_flags);
      const gtsf::GTSFDecisionMatrix m = gtsf::build_gtsf_matrix(p);
      const gtsf::RankingReport r = gtsf::rank(m, p.params, p.criterion_weights);
      std::cout << (solve_flags.format == "json" ? gtsf::io::emit_report_json(r, m)
                                                 : gtsf::io::emit_report_table(r, m));
    });
  }

  if (matrix_cmd->parsed()) {
    return run_guarded([&] {
      const gtsf::DecisionProblem p = load_problem(matrix_flags);
      const gtsf::GTSFDecisionMatrix m = gtsf::build_gtsf_matrix(p);
      std::cout << (matrix_flags.format == "json" ? gtsf::io::emit_matrix_json(m)
                                                  : gtsf::io::emit_matrix_table(m));
    });
  }

  if (dist_cmd->parsed()) {
    return run_guarded([&] {
      gtsf::io::SetsDocument doc = gtsf::io::parse_sets(read_input(dist_input));
      const gtsf::Params p(dist_t.value_or(doc.params.t), doc.params.sigma);
      const gtsf::GTSFSet& a = doc.at(dist_a);
      const gtsf::GTSFSet& b = doc.at(dist_b);
      double d = 0.0;
      if (!dist_element.empty()) {
        const gtsf::GTSFValue& va = a.at(dist_element);
        const gtsf::GTSFValue& vb = b.at(dist_element);
        d = dist_measure == "hamming" ? gtsf::hamming_element(va, vb, p)
                                      : gtsf::euclidean_element(va, vb, p);
      } else {
        d = dist_measure == "hamming" ? gtsf::hamming(a, b, p) : gtsf::euclidean(a, b, p);
      }
      if (dist_format == "json") {
        gtsf::io::json out;
        out["measure"] = dist_measure;
        out["a"] = dist_a;
        out["b"] = dist_b;
        if (!dist_element.empty()) out["element"] = dist_element;
        out["value"] = d;
        std::cout << out.dump(2) << "\n";
      } else {
        std::cout.precision(17);
        std::cout << d << "\n";
      }
    });
  }

  if (sim_cmd->parsed()) {
    return run_guarded([&] {
      const gtsf::Params p(sim_t);
      const std::size_t expected = sim_ideal ? 1 : 2;
      if (sim_values.size() != expected)
        throw gtsf::io::ParseError("similarity: expected " + std::to_string(expected) +
                                   " --value option(s)");
      std::vector<gtsf::GTSFValue> vals;
      for (const std::string& s : sim_values) {
        gtsf::GTSFValue v = parse_value(s);
        gtsf::require_valid(v, p, "--value");
        vals.push_back(v);
      }
      const gtsf::GTSFValue ideal{{1.0, 0.0, 0.0}, 1.0};
      const double s = sim_ideal ? gtsf::cosine_sm(vals[0], ideal, p)
                                 : gtsf::cosine_sm(vals[0], vals[1], p);
      if (sim_format == "json") {
        gtsf::io::json out;
        out["value"] = s;
        std::cout << out.dump(2) << "\n";
      } else {
        std::cout.precision(17);
        std::cout << s << "\n";
      }
    });
  }

  if (agg_cmd->parsed()) {
    return run_guarded([&] {
      const gtsf::Params p(agg_t);
      std::vector<gtsf::GTSFValue> vals;
      for (const std::string& s : agg_values) {
        gtsf::GTSFValue v = parse_value(s);
        gtsf::require_valid(v, p, "--value");
        vals.push_back(v);
      }
      const gtsf::WeightVector w =
          agg_weights.empty() ? gtsf::WeightVector::uniform(vals.size())
                              : gtsf::WeightVector(parse_numbers(agg_weights, "--weights"));
      const gtsf::GTSFValue out =
          agg_op == "waa" ? gtsf::gtsfwaa(vals, w, p) : gtsf::gtsfwga(vals, w, p);
      if (agg_format == "json") {
        gtsf::io::json j;
        j["phi"] = out.center.phi;
        j["chi"] = out.center.chi;
        j["psi"] = out.center.psi;
        j["radius"] = out.radius;
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << fmt_value(out) << "\n";
      }
    });
  }

  if (score_cmd->parsed()) {
    return run_guarded([&] {
      const gtsf::Params p(score_t, score_sigma);
      gtsf::GTSFValue v = parse_value(score_value);
      gtsf::require_valid(v, p, "--value");
      const double sc = gtsf::score(v, p);
      const double acc = gtsf::accuracy(v, p);
      if (score_format == "json") {
        gtsf::io::json j;
        j["score"] = sc;
        j["accuracy"] = acc;
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout.precision(17);
        std::cout << "score " << sc << "\n";
        std::cout << "accuracy " << acc << "\n";
      }
    });
  }

  return kExitInput;
}
