#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "oracle/symmetric_oracle.hpp"
#include "spencer/error.hpp"
#include "spencer/io.hpp"
#include "spencer/report.hpp"
#include "spencer/selftest.hpp"

using namespace spencer;
using nlohmann::json;

namespace {

const std::filesystem::path kData = SPENCER_TEST_DATA_DIR;

std::string pointer_of(const json& doc) {
  try {
    parse_input(doc);
  } catch (const ValidationError& e) {
    return e.pointer();
  }
  return "<accepted>";
}

json base_doc() { return json::parse(R"({"base": {"projective": 2}, "bundle": {"builtin": "psu2"}})"); }

struct CliResult {
  int code;
  std::string out, err;
};

CliResult run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "spencer-rr");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

Rational value_at(const std::string& text, long a) { return ParamPoly::parse(text).evaluate(Rational(a)); }

}  // namespace

TEST(InputSchema, ErrorsCarryPointers) {
  EXPECT_EQ(pointer_of(json::parse(R"({"bundle": {"builtin": "psu2"}})")), "/base");
  auto d = base_doc();
  d["extra"] = 1;
  EXPECT_EQ(pointer_of(d), "/extra");
  d = base_doc();
  d["base"]["projective"] = 9;
  EXPECT_EQ(pointer_of(d), "/base/projective");
  d = base_doc();
  d["bundle"] = json::parse(R"({"rank": 2, "chern": ["H", "1.5"]})");
  EXPECT_EQ(pointer_of(d), "/bundle/chern/1");
  d = base_doc();
  d["bundle"] = json::parse(R"({"rank": 1, "chern": ["H", "H^2"]})");
  EXPECT_EQ(pointer_of(d), "/bundle/chern/1");
  d = base_doc();
  d["bundle"]["a"] = 0.5;
  EXPECT_EQ(pointer_of(d), "/bundle/a");
  d = base_doc();
  d["checks"] = {"nilpotency"};
  EXPECT_EQ(pointer_of(d), "/checks/0");
  d = base_doc();
  d["lambda"] = {1, 0, 0};
  d["checks"] = {"mirror", "mirror"};
  EXPECT_EQ(pointer_of(d), "/checks/1");
  d = base_doc();
  d["lambda"] = {1, 0};
  EXPECT_EQ(pointer_of(d), "/lambda");
  d = base_doc();
  d["max_degree"] = 0;
  EXPECT_EQ(pointer_of(d), "/max_degree");
  EXPECT_EQ(pointer_of(base_doc()), "<accepted>");
}

TEST(InputSchema, LieDocuments) {
  LieAlgebraData su2 = parse_lie_document(load_document(kData / "su2_brackets.json"));
  su2.compact_flag = su2.trivial_center_flag = true;
  EXPECT_EQ(su2, LieAlgebraData::su2());
  EXPECT_EQ(parse_lie_document(json::parse(R"({"builtin": "su2"})")), LieAlgebraData::su2());
  try {
    parse_lie_document(json::parse(R"({"dim": 3, "brackets": [[1, 2, 1, 1], [1, 3, 2, 1]]})"), "/lie");
    FAIL() << "Jacobi violation accepted";
  } catch (const ValidationError& e) {
    EXPECT_EQ(e.pointer(), "/lie/brackets");
  }
  EXPECT_THROW(parse_lie_document(json::parse(R"({"dim": 2, "brackets": [[1, 3, 1, 1]]})")), ValidationError);
  EXPECT_THROW(parse_lie_document(json::parse(R"({"dim": 2, "brackets": [[1, 2, 1, 1], [1, 2, 1, 2]]})")),
               ValidationError);
}

TEST(InputSchema, TomlAndJsonAgree) {
  const InputSpec toml = parse_input(load_document(kData / "psu2_p2.toml"));
  auto doc = base_doc();
  doc["bundle"]["a"] = 1;
  doc["checks"] = {"mirror"};
  const InputSpec js = parse_input(doc);
  EXPECT_EQ(toml.bundle, js.bundle);
  EXPECT_EQ(run_compute(toml).total, ParamPoly(7));
  EXPECT_EQ(run_compute(toml), run_compute(js));
}

TEST(InputSchema, MaxDegreeCapFromEnvironment) {
  ::setenv("SPENCER_RR_MAX_DEGREE", "3", 1);
  EXPECT_EQ(max_degree_cap(), 3u);
  auto d = base_doc();
  d["max_degree"] = 4;
  EXPECT_EQ(pointer_of(d), "/max_degree");
  ::setenv("SPENCER_RR_MAX_DEGREE", "zero", 1);
  EXPECT_THROW(max_degree_cap(), ValidationError);
  ::unsetenv("SPENCER_RR_MAX_DEGREE");
  EXPECT_EQ(max_degree_cap(), 4u);
}

TEST(Compute, SymbolicReport) {
  const OutputReport r = run_compute(parse_input(load_document(kData / "psu2_p2.json")));
  ASSERT_EQ(r.per_degree.size(), 3u);
  EXPECT_EQ(r.per_degree[1], ParamPoly::parse("-3 - 2a"));
  EXPECT_EQ(r.total, ParamPoly::parse("10 - 3a"));
  EXPECT_EQ(r.weight, Rational(3, 2));
  EXPECT_TRUE(r.mirror_equal);
  ASSERT_EQ(r.checks.size(), 5u);
  std::map<std::string, bool> holds;
  for (const auto& c : r.checks) holds[c.name] = c.holds;
  EXPECT_TRUE(holds.at("mirror"));
  EXPECT_FALSE(holds.at("nilpotency"));
  EXPECT_TRUE(holds.at("obstruction"));
  EXPECT_TRUE(holds.at("operator_difference"));
  EXPECT_TRUE(holds.at("perturbation"));
  EXPECT_EQ(r.paper_diff.size(), 13u);
  EXPECT_EQ(r.exit_status, 0);
}

TEST(Compute, ExplicitBundleHasNoReferenceRows) {
  const OutputReport r = run_compute(parse_input(load_document(kData / "explicit_p3.json")));
  EXPECT_EQ(r.per_degree.size(), 4u);
  EXPECT_TRUE(r.paper_diff.empty());
  EXPECT_FALSE(r.weight.has_value());
}

TEST(Compute, DeterministicAndRoundTrips) {
  const InputSpec in = parse_input(load_document(kData / "psu2_p2.json"));
  const OutputReport a = run_compute(in), b = run_compute(in);
  EXPECT_EQ(dump_json(a.to_json()), dump_json(b.to_json()));
  EXPECT_EQ(OutputReport::from_json(a.to_json()), a);
  EXPECT_EQ(OutputReport::from_json(json::parse(dump_json(a.to_json()))), a);
}

TEST(VerifyPaper, ComputedColumnMatchesOracle) {
  const PaperDiff symbolic = verify_paper();
  ASSERT_EQ(symbolic.rows.size(), 13u);
  EXPECT_EQ(symbolic.matches(), 5u);
  EXPECT_EQ(ParamPoly::parse(symbolic.rows[3].computed_value), ParamPoly(oracle::todd_projective(2)[2]));
  const auto omega2 = oracle::ch_forms(2, 2);
  EXPECT_EQ(symbolic.rows[6].computed_value, GradedElement(RingDescriptor{2}, {ParamPoly(omega2[0]), ParamPoly(omega2[1]),
                                                                               ParamPoly(omega2[2])})
                                                 .to_string());
  for (long a = -3; a <= 3; ++a) {
    Rational total(0);
    for (int k = 0; k <= 2; ++k) {
      const Rational chi = oracle::spencer_chi(k, Rational(a));
      ASSERT_EQ(value_at(symbolic.rows[8 + static_cast<std::size_t>(k)].computed_value, a), chi);
      total += k % 2 == 0 ? chi : -chi;
    }
    ASSERT_EQ(value_at(symbolic.rows[11].computed_value, a), oracle::spencer_chi(2, Rational(a)));
    ASSERT_EQ(value_at(symbolic.rows[12].computed_value, a), total);
  }
}

TEST(VerifyPaper, SpecializedParameter) {
  const PaperDiff at_zero = verify_paper(ParamPoly(0));
  // with a = 0 the symbolic disagreements in ch(Sym^2 G) and chi^1 disappear
  EXPECT_TRUE(at_zero.rows[5].match);
  EXPECT_FALSE(at_zero.rows[9].match);
  EXPECT_EQ(at_zero.rows[9].paper_value, "0");
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run_cli({"compute", "--input", (kData / "psu2_p2.json").string()}).code, 0);
  EXPECT_EQ(run_cli({"compute", "--input", (kData / "missing_base.json").string()}).code, 2);
  EXPECT_EQ(run_cli({"compute", "--input", (kData / "nope.json").string()}).code, 2);
  EXPECT_EQ(run_cli({"compute"}).code, 2);
  EXPECT_EQ(run_cli({"bogus"}).code, 2);
  EXPECT_EQ(run_cli({"verify-paper"}).code, 0);
  EXPECT_EQ(run_cli({"lie", "--algebra", "su2", "--lambda", "1,0"}).code, 2);
  EXPECT_EQ(run_cli({"lie", "--algebra", "su2", "--lambda", "1,0,0", "--max-degree", "9"}).code, 2);
  EXPECT_EQ(run_cli({"--help"}).code, 0);
}

TEST(Cli, ComputeOutputs) {
  const auto text = run_cli({"compute", "--input", (kData / "psu2_p2.json").string()});
  EXPECT_NE(text.out.find("10 - 3*a"), std::string::npos);
  const auto js = run_cli({"compute", "--input", (kData / "psu2_p2.json").string(), "--format", "json"});
  EXPECT_EQ(json::parse(js.out).at("euler").at("total"), "10 - 3*a");

  const auto path = std::filesystem::temp_directory_path() / "spencer_rr_cli_test.json";
  const auto to_file = run_cli({"compute", "--input", (kData / "psu2_p2.json").string(), "--output", path.string(),
                            "--format", "json"});
  EXPECT_EQ(to_file.code, 0);
  EXPECT_TRUE(to_file.out.empty());
  std::ifstream f(path);
  std::stringstream body;
  body << f.rdbuf();
  EXPECT_EQ(body.str(), js.out);
  std::filesystem::remove(path);
}

TEST(Cli, LieReport) {
  const auto r = run_cli({"lie", "--algebra", "su2", "--lambda", "1,0,0", "--max-degree", "3", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const json j = json::parse(r.out);
  EXPECT_EQ(j.at("weight"), "3/2");
  EXPECT_EQ(j.at("delta_on_generators").at("e1"), "-e2^2 - e3^2");
  const auto doc = run_cli({"lie", "--algebra", (kData / "su2_brackets.json").string(), "--lambda", "1,0,0",
                        "--max-degree", "3", "--format", "json"});
  EXPECT_EQ(doc.out, r.out);
}

TEST(Cli, VerifyPaperJson) {
  const auto r = run_cli({"verify-paper", "--format", "json"});
  const json j = json::parse(r.out);
  EXPECT_EQ(j.at("rows").size(), 13u);
  EXPECT_EQ(j.at("matches"), 5);
}

TEST(Selftest, PassesAndNegativeControlFails) {
  EXPECT_TRUE(all_passed(run_selftest()));
  EXPECT_FALSE(all_passed(run_selftest({SelftestOptions{}.seed, true})));
  EXPECT_EQ(run_cli({"selftest"}).code, 0);
  EXPECT_EQ(run_cli({"selftest", "--corrupt-newton"}).code, 1);
}
