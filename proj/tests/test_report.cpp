#include <gtest/gtest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include "difflab/category_kernel.hpp"
#include "difflab/report.hpp"

using namespace difflab;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string fixture(const std::string& name) { return std::string(DIFFLAB_FIXTURES) + "/" + name; }

int run_cli(const std::string& args, std::string* out = nullptr) {
  const std::string capture = ::testing::TempDir() + "difflab_cli_out.txt";
  const std::string cmd = std::string(DIFFLAB_CLI) + " " + args + " > " + capture + " 2>/dev/null";
  const int status = std::system(cmd.c_str());
  if (out) *out = slurp(capture);
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

}  // namespace

TEST(Documents, ParsesEveryKind) {
  const auto space = parse_document(slurp(fixture("s1.json")));
  ASSERT_EQ(space.kind, DocumentKind::MeasureSpace);
  EXPECT_EQ(space.space->weights, (std::vector<Rational>{1, 1, 0}));
  EXPECT_FALSE(space.space->transform.has_value());

  const auto magma = parse_document(slurp(fixture("nat_subtraction.json")));
  ASSERT_EQ(magma.kind, DocumentKind::PartialMagma);
  EXPECT_EQ(magma.magma->pm, truncated_subtraction(3));

  const auto cat = parse_document(slurp(fixture("three.json")));
  ASSERT_EQ(cat.kind, DocumentKind::Category);
  EXPECT_TRUE(cat.magma->check_regular);
  EXPECT_EQ(cat.magma->pm, example_library().at("3"));
  EXPECT_TRUE(cat.magma->target.has_value());

  const auto scenario = parse_document(slurp(fixture("yoneda.json")));
  ASSERT_EQ(scenario.kind, DocumentKind::Scenario);
  EXPECT_EQ(scenario.scenario->params["z"], 2);
}

TEST(Documents, RejectsMalformedInput) {
  for (const char* bad : {"", "{", "[]", R"({"kind": "space"})", R"({"kind": "measure_space"})",
                          R"({"kind": "measure_space", "weights": []})",
                          R"({"kind": "measure_space", "weights": ["x"]})",
                          R"({"kind": "measure_space", "weights": [0.5]})",
                          R"({"kind": "partial_magma", "n": 2, "table": [[0, 1]]})",
                          R"({"kind": "partial_magma", "n": 2, "table": [[0, 2], [0, 1]]})",
                          R"({"kind": "partial_magma", "n": 1, "table": [["0"]]})",
                          R"({"kind": "scenario"})"}) {
    EXPECT_THROW(parse_document(bad), InputError) << bad;
  }
}

TEST(Documents, WeightLiterals) {
  EXPECT_EQ(parse_weight(Json("3/6")), Rational(1, 2));
  EXPECT_EQ(parse_weight(Json("0.25")), Rational(1, 4));
  EXPECT_EQ(parse_weight(Json(4)), Rational(4));
  EXPECT_THROW(parse_weight(Json(0.5)), InputError);
  EXPECT_THROW(parse_weight(Json(true)), InputError);
}

TEST(Runners, Theorem1OnS1) {
  const auto r = run_space_theorem1(SpaceDocument{{1, 1, 0}, std::nullopt}, RunOptions{});
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(r.data["liftings"], 2);
  EXPECT_EQ(exit_code(r), ExitCode::Ok);
}

TEST(Runners, SpaceCheckNeedsTransformAndRespectsCaps) {
  EXPECT_THROW(run_space_check(SpaceDocument{{1, 1, 0}, std::nullopt}, RunOptions{}), InputError);
  const std::vector<std::uint32_t> short_table{0, 1};
  EXPECT_THROW(run_space_check(SpaceDocument{{1, 1, 0}, short_table}, RunOptions{}), InputError);
  RunOptions tight;
  tight.max_atoms = 2;
  EXPECT_THROW(run_space_liftings(SpaceDocument{{1, 1, 0}, std::nullopt}, tight), InputError);
  RunOptions few;
  few.max_elems = 3;
  EXPECT_THROW(run_pm_classify(MagmaDocument{truncated_subtraction(3), false, std::nullopt}, few), InputError);
}

TEST(Runners, ClassifyReportsNonAssociativity) {
  const auto r = run_pm_classify(MagmaDocument{truncated_subtraction(3), false, std::nullopt}, RunOptions{});
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(r.data["associative"], false);
  EXPECT_NE(r.data["verdict"].get<std::string>().find("non-associative"), std::string::npos);
  const auto strict = run_pm_classify(MagmaDocument{truncated_subtraction(3), true, std::nullopt}, RunOptions{});
  EXPECT_FALSE(strict.passed());
}

TEST(Runners, CategoryChecks) {
  const auto three = example_library().at("3");
  EXPECT_TRUE(run_cat_twin(MagmaDocument{three, true, std::nullopt}, RunOptions{}).passed());
  const auto nat = run_cat_natequiv(MagmaDocument{example_library().at("2"), true, three}, RunOptions{});
  EXPECT_TRUE(nat.passed());
  EXPECT_EQ(nat.data["nat_homs"], 20);
  EXPECT_EQ(nat.data["nat_transformations"], 20);
  EXPECT_FALSE(run_cat_twin(MagmaDocument{truncated_subtraction(3), true, std::nullopt}, RunOptions{}).passed());
}

TEST(Runners, YonedaScenarioValidation) {
  EXPECT_TRUE(run_yoneda_roundtrip(ScenarioDocument{"y", Json{{"z", 2}, {"x", 1}}}, RunOptions{}).passed());
  EXPECT_THROW(run_yoneda_roundtrip(ScenarioDocument{"y", Json{{"z", 9}}}, RunOptions{}), InputError);
}

TEST(Rendering, TextAndJson) {
  Report r;
  r.command = "demo";
  r.data["count"] = 2;
  r.add("first", true);
  r.add("second", false, "witness {0}");
  EXPECT_EQ(render(r, "text"),
            "command: demo\ncount: 2\nPASS first\nFAIL second: witness {0}\nresult: FAIL (1/2 checks)\n");
  const auto j = Json::parse(render(r, "json"));
  EXPECT_EQ(j["command"], "demo");
  EXPECT_EQ(j["checks"].size(), 2u);
  EXPECT_EQ(j["passed"], false);
  EXPECT_EQ(exit_code(r), ExitCode::CheckFailed);
}

TEST(Rendering, FullReportIsDeterministic) {
  RunOptions opts;
  opts.seed = 42;
  const auto a = render(run_full_report(opts), "json");
  opts.parallel = 3;
  const auto b = render(run_full_report(opts), "json");
  EXPECT_EQ(a, b);
  opts.seed = 43;
  EXPECT_NE(render(run_full_report(opts), "json"), a);
}

TEST(Cli, ExitCodes) {
  std::string out;
  EXPECT_EQ(run_cli("space theorem1 " + fixture("s1.json"), &out), 0);
  EXPECT_NE(out.find("liftings: 2"), std::string::npos);
  EXPECT_NE(out.find("PASS round trip returns each lifting"), std::string::npos);
  EXPECT_EQ(run_cli("space check " + fixture("s1_lifting.json")), 0);
  EXPECT_EQ(run_cli("space check " + fixture("s1_drop_null.json")), 1);
  EXPECT_EQ(run_cli("space liftings " + fixture("bad_weight.json")), 2);
  EXPECT_EQ(run_cli("space liftings " + fixture("float_weight.json")), 2);
  EXPECT_EQ(run_cli("space liftings " + fixture("missing.json")), 2);
  EXPECT_EQ(run_cli("space liftings " + fixture("two.json")), 2);
  EXPECT_EQ(run_cli("pm classify " + fixture("nat_subtraction.json"), &out), 0);
  EXPECT_NE(out.find("non-associative"), std::string::npos);
  EXPECT_EQ(run_cli("cat twin " + fixture("nat_subtraction.json")), 1);
  EXPECT_EQ(run_cli("cat natequiv " + fixture("three.json")), 0);
  EXPECT_EQ(run_cli("--max-elems 4 cat twin " + fixture("three.json")), 2);
  EXPECT_EQ(run_cli("yoneda roundtrip " + fixture("yoneda.json")), 0);
  EXPECT_EQ(run_cli("bogus"), 2);
  EXPECT_EQ(run_cli("--format yaml report"), 2);
}

TEST(Cli, StdinAndJsonFormat) {
  std::string out;
  EXPECT_EQ(run_cli("--format json space liftings - < " + fixture("s2.json"), &out), 0);
  const auto j = Json::parse(out);
  EXPECT_EQ(j["data"]["liftings"], 4);
  EXPECT_EQ(j["passed"], true);
}
