#include <catch2/catch_amalgamated.hpp>

#include <fstream>
#include <sstream>
#include <string>

#include "gtsf/io.hpp"

using Catch::Matchers::ContainsSubstring;
using namespace gtsf;

namespace {

std::string fixture(const std::string& name) {
  const std::string path = std::string(GTSF_FIXTURE_DIR) + "/" + name;
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

const char* kTinyProblem = R"({
  "schema_version": "1",
  "t": 3,
  "avg_t": 1,
  "experts": ["E1", "E2"],
  "alternatives": ["A", "B"],
  "criteria": ["c1", "c2"],
  "evaluations": {
    "E1": {
      "A": {"c1": [0.8, 0.1, 0.1], "c2": [0.6, 0.2, 0.3]},
      "B": {"c1": [0.3, 0.4, 0.5], "c2": [0.4, 0.3, 0.3]}
    },
    "E2": {
      "A": {"c1": [0.7, 0.2, 0.2], "c2": [0.7, 0.3, 0.2]},
      "B": {"c1": [0.4, 0.5, 0.4], "c2": [0.5, 0.2, 0.4]}
    }
  }
})";

std::string patched(const std::string& from, const std::string& to) {
  std::string s = kTinyProblem;
  const auto pos = s.find(from);
  REQUIRE(pos != std::string::npos);
  s.replace(pos, from.size(), to);
  return s;
}

}  // namespace

TEST_CASE("problem documents parse") {
  const DecisionProblem p = io::parse_problem(kTinyProblem);
  CHECK(p.experts == std::vector<std::string>{"E1", "E2"});
  CHECK(p.alternatives == std::vector<std::string>{"A", "B"});
  CHECK(p.criteria == std::vector<std::string>{"c1", "c2"});
  CHECK(p.params.t == 3);
  CHECK(p.params.sigma == 0.5);
  CHECK(p.averaging_exponent == 1);
  CHECK_FALSE(p.matrix_decimals);
  CHECK_FALSE(p.criterion_weights);
  CHECK(p.evaluations[1][0][1].phi == 0.7);
  CHECK(p.evaluations[0][1][0].psi == 0.5);
}

TEST_CASE("problem documents round-trip through the emitter") {
  const DecisionProblem p = io::parse_problem(kTinyProblem);
  const DecisionProblem q = io::parse_problem(io::emit_problem(p));
  CHECK(q.experts == p.experts);
  CHECK(q.alternatives == p.alternatives);
  CHECK(q.criteria == p.criteria);
  CHECK(q.params.t == p.params.t);
  CHECK(q.averaging_exponent == p.averaging_exponent);
  for (std::size_t e = 0; e < p.experts.size(); ++e)
    for (std::size_t a = 0; a < p.alternatives.size(); ++a)
      for (std::size_t c = 0; c < p.criteria.size(); ++c) {
        CHECK(q.evaluations[e][a][c].phi == p.evaluations[e][a][c].phi);
        CHECK(q.evaluations[e][a][c].chi == p.evaluations[e][a][c].chi);
        CHECK(q.evaluations[e][a][c].psi == p.evaluations[e][a][c].psi);
      }
}

TEST_CASE("omitted parameters fall back to defaults") {
  const std::string no_params = patched("\"t\": 3,\n  \"avg_t\": 1,\n  ", "");
  const DecisionProblem p = io::parse_problem(no_params);
  CHECK(p.params.t == 3);
  CHECK(p.params.sigma == 0.5);
  CHECK(p.averaging_exponent == 1);
}

TEST_CASE("problem schema violations are rejected") {
  CHECK_THROWS_AS(io::parse_problem("nonsense"), io::ParseError);
  CHECK_THROWS_AS(io::parse_problem("[1, 2]"), io::SchemaError);
  CHECK_THROWS_AS(io::parse_problem("{}"), io::SchemaError);
  CHECK_THROWS_WITH(io::parse_problem(patched("\"schema_version\": \"1\"",
                                              "\"schema_version\": \"2\"")),
                    ContainsSubstring("schema_version"));
  CHECK_THROWS_WITH(io::parse_problem(patched("\"t\": 3", "\"tee\": 3")),
                    ContainsSubstring("unknown key 'tee'"));
  CHECK_THROWS_WITH(io::parse_problem(patched("\"t\": 3", "\"t\": 2.5")),
                    ContainsSubstring("expected an integer"));
  CHECK_THROWS_WITH(io::parse_problem(patched("\"E2\": {", "\"E3\": {")),
                    ContainsSubstring("E3"));
  CHECK_THROWS_WITH(io::parse_problem(patched("\"B\": {\"c1\": [0.4, 0.5, 0.4]",
                                              "\"B\": {\"c9\": [0.4, 0.5, 0.4]")),
                    ContainsSubstring("c9"));
  CHECK_THROWS_WITH(io::parse_problem(patched("[0.7, 0.3, 0.2]", "[0.7, 0.3]")),
                    ContainsSubstring("expected [membership"));
  CHECK_THROWS_WITH(io::parse_problem(patched("[0.7, 0.3, 0.2]", "[0.7, 0.3, \"x\"]")),
                    ContainsSubstring("expected a number"));
}

TEST_CASE("problem domain violations are validation errors") {
  CHECK_THROWS_AS(io::parse_problem(patched("[0.7, 0.3, 0.2]", "[0.9, 0.9, 0.9]")),
                  ValidationError);
  CHECK_THROWS_WITH(io::parse_problem(patched("[0.7, 0.3, 0.2]", "[0.9, 0.9, 0.9]")),
                    ContainsSubstring("E2/A/c2"));
  CHECK_THROWS_AS(io::parse_problem(patched("\"t\": 3", "\"t\": 0")), ValidationError);
  CHECK_THROWS_AS(io::parse_problem(patched("\"avg_t\": 1", "\"avg_t\": -1")),
                  ValidationError);
  CHECK_THROWS_AS(io::parse_problem(patched("\"t\": 3,", "\"t\": 3, \"sigma\": 1.5,")),
                  ValidationError);
}

TEST_CASE("the csv tensor form parses to the same problem") {
  const std::string csv =
      "expert,alternative,criterion,phi,chi,psi\n"
      "E1,A,c1,0.8,0.1,0.1\n"
      "E1,A,c2,0.6,0.2,0.3\n"
      "E1,B,c1,0.3,0.4,0.5\n"
      "E1,B,c2,0.4,0.3,0.3\n"
      "E2,A,c1,0.7,0.2,0.2\n"
      "E2,A,c2,0.7,0.3,0.2\n"
      "E2,B,c1,0.4,0.5,0.4\n"
      "E2,B,c2,0.5,0.2,0.4\n";
  const DecisionProblem p = io::parse_problem_csv(csv);
  const DecisionProblem q = io::parse_problem(kTinyProblem);
  CHECK(p.experts == q.experts);
  CHECK(p.alternatives == q.alternatives);
  CHECK(p.criteria == q.criteria);
  for (std::size_t e = 0; e < q.experts.size(); ++e)
    for (std::size_t a = 0; a < q.alternatives.size(); ++a)
      for (std::size_t c = 0; c < q.criteria.size(); ++c) {
        CHECK(p.evaluations[e][a][c].phi == q.evaluations[e][a][c].phi);
        CHECK(p.evaluations[e][a][c].chi == q.evaluations[e][a][c].chi);
        CHECK(p.evaluations[e][a][c].psi == q.evaluations[e][a][c].psi);
      }
}

TEST_CASE("csv shape problems are rejected") {
  const std::string header = "expert,alternative,criterion,phi,chi,psi\n";
  CHECK_THROWS_AS(io::parse_problem_csv(""), io::ParseError);
  CHECK_THROWS_AS(io::parse_problem_csv("a,b,c\n"), io::SchemaError);
  CHECK_THROWS_AS(io::parse_problem_csv(header), io::SchemaError);
  CHECK_THROWS_AS(io::parse_problem_csv(header + "E1,A,c1,0.5,0.3\n"), io::SchemaError);
  CHECK_THROWS_AS(io::parse_problem_csv(header + "E1,A,c1,0.5,0.3,zebra\n"), io::ParseError);
  CHECK_THROWS_WITH(
      io::parse_problem_csv(header + "E1,A,c1,0.5,0.3,0.2\nE1,A,c1,0.5,0.3,0.2\n"),
      ContainsSubstring("duplicate"));
  CHECK_THROWS_WITH(
      io::parse_problem_csv(header + "E1,A,c1,0.5,0.3,0.2\nE1,B,c2,0.5,0.3,0.2\n"),
      ContainsSubstring("missing"));
}

TEST_CASE("csv labels keep first-appearance order and tolerate blank lines") {
  const std::string csv =
      "expert,alternative,criterion,phi,chi,psi\n"
      "\n"
      "Z, beta ,q2,0.5,0.3,0.2\n"
      "Z,alpha,q2,0.5,0.3,0.2\n"
      "\n"
      "A,beta,q1,0.5,0.3,0.2\n"
      "A,alpha,q1,0.5,0.3,0.2\n"
      "Z,beta,q1,0.5,0.3,0.2\n"
      "Z,alpha,q1,0.5,0.3,0.2\n"
      "A,beta,q2,0.5,0.3,0.2\n"
      "A,alpha,q2,0.5,0.3,0.2\n";
  const DecisionProblem p = io::parse_problem_csv(csv);
  CHECK(p.experts == std::vector<std::string>{"Z", "A"});
  CHECK(p.alternatives == std::vector<std::string>{"beta", "alpha"});
  CHECK(p.criteria == std::vector<std::string>{"q2", "q1"});
}

TEST_CASE("sets documents parse and validate") {
  const io::SetsDocument doc = io::parse_sets(fixture("example2.json"));
  CHECK(doc.params.t == 3);
  CHECK(doc.sets.size() == 2);
  const GTSFSet& m = doc.at("M");
  CHECK(m.labels() == std::vector<std::string>{"x1", "x2", "x3"});
  CHECK(m.at("x2").center.chi == 0.7);
  CHECK(m.at("x2").radius == 0.3);
  CHECK_THROWS_AS(doc.at("nope"), Error);

  const char* bad_value = R"({
    "schema_version": "1", "t": 2,
    "universe": ["x1"],
    "sets": {"S": {"x1": [0.9, 0.7, 0.6, 0.1]}}
  })";
  CHECK_THROWS_WITH(io::parse_sets(bad_value), ContainsSubstring("sets.S.x1"));
  const char* bad_radius = R"({
    "schema_version": "1",
    "universe": ["x1"],
    "sets": {"S": {"x1": [0.5, 0.3, 0.2, 1.2]}}
  })";
  CHECK_THROWS_AS(io::parse_sets(bad_radius), ValidationError);
  const char* missing_element = R"({
    "schema_version": "1",
    "universe": ["x1", "x2"],
    "sets": {"S": {"x1": [0.5, 0.3, 0.2, 0.1]}}
  })";
  CHECK_THROWS_WITH(io::parse_sets(missing_element), ContainsSubstring("missing element"));
  const char* foreign_element = R"({
    "schema_version": "1",
    "universe": ["x1"],
    "sets": {"S": {"x1": [0.5, 0.3, 0.2, 0.1], "y9": [0.5, 0.3, 0.2, 0.1]}}
  })";
  CHECK_THROWS_WITH(io::parse_sets(foreign_element), ContainsSubstring("y9"));
}

TEST_CASE("families documents range-check without enforcing the power bound") {
  const io::FamiliesDocument doc = io::parse_families(fixture("example1.json"));
  CHECK(doc.params.t == 1);
  CHECK(doc.families.size() == 3);
  CHECK(doc.at("g1").size() == 4);
  CHECK(doc.at("g3")[1].phi == 0.78);
  // deliberately breaks the bound at the document exponent
  CHECK_FALSE(validate_family(doc.at("g1"), doc.params).ok());

  const char* out_of_range = R"({
    "schema_version": "1", "t": 1,
    "families": {"g": [[0.5, 0.3, 1.2]]}
  })";
  CHECK_THROWS_AS(io::parse_families(out_of_range), ValidationError);
  const char* empty_family = R"({
    "schema_version": "1", "t": 1,
    "families": {"g": []}
  })";
  CHECK_THROWS_AS(io::parse_families(empty_family), io::SchemaError);
}

TEST_CASE("the large fixture parses in both forms identically") {
  const DecisionProblem a = io::parse_problem(fixture("example4.json"));
  DecisionProblem b = io::parse_problem_csv(fixture("example4.csv"));
  CHECK(a.experts == b.experts);
  CHECK(a.alternatives == b.alternatives);
  CHECK(a.criteria == b.criteria);
  CHECK(a.params.t == 3);
  CHECK(a.averaging_exponent == 1);
  REQUIRE(a.matrix_decimals);
  CHECK(*a.matrix_decimals == 2);
  for (std::size_t e = 0; e < a.experts.size(); ++e)
    for (std::size_t v = 0; v < a.alternatives.size(); ++v)
      for (std::size_t c = 0; c < a.criteria.size(); ++c) {
        CHECK(a.evaluations[e][v][c].phi == b.evaluations[e][v][c].phi);
        CHECK(a.evaluations[e][v][c].chi == b.evaluations[e][v][c].chi);
        CHECK(a.evaluations[e][v][c].psi == b.evaluations[e][v][c].psi);
      }
  // the CSV form carries no parameters; the caller sets them
  b.params = a.params;
  b.averaging_exponent = a.averaging_exponent;
  b.matrix_decimals = a.matrix_decimals;
  const RankingReport ra = solve(a);
  const RankingReport rb = solve(b);
  CHECK(ra.similarities == rb.similarities);
  CHECK(ra.order == rb.order);
}

TEST_CASE("report json carries the full-precision results") {
  const DecisionProblem p = io::parse_problem(kTinyProblem);
  const GTSFDecisionMatrix m = build_gtsf_matrix(p);
  const RankingReport r = rank(m, p.params, p.criterion_weights);
  const io::json doc = io::json::parse(io::emit_report_json(r, m));
  CHECK(doc["schema_version"] == "1");
  CHECK(doc["order"].get<std::vector<std::string>>() == r.order);
  CHECK(doc["similarities"]["A"].get<double>() == r.similarities[0]);
  CHECK(doc["similarities"]["B"].get<double>() == r.similarities[1]);
  CHECK(doc["matrix"]["A"]["c1"]["phi"].get<double>() == m.entries[0][0].center.phi);
  CHECK(doc["matrix"]["B"]["c2"]["radius"].get<double>() == m.entries[1][1].radius);
  CHECK(doc["ties"].is_array());

  const io::json mj = io::json::parse(io::emit_matrix_json(m));
  CHECK(mj["matrix"]["A"]["c2"]["psi"].get<double>() == m.entries[0][1].center.psi);
}

TEST_CASE("tables render the ranking for people") {
  const DecisionProblem p = io::parse_problem(kTinyProblem);
  const GTSFDecisionMatrix m = build_gtsf_matrix(p);
  const RankingReport r = rank(m, p.params, p.criterion_weights);
  const std::string table = io::emit_report_table(r, m);
  CHECK_THAT(table, ContainsSubstring("ranking: A > B"));
  CHECK_THAT(table, ContainsSubstring("similarity"));
  const std::string grid = io::emit_matrix_table(m);
  CHECK_THAT(grid, ContainsSubstring("c1"));
  CHECK_THAT(grid, ContainsSubstring("B"));
  CHECK_THAT(grid, ContainsSubstring("(0.7500, 0.1500, 0.1500; 0.0866)"));
}
