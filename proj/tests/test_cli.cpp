#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "kanforge/cli.hpp"

using namespace kanforge;

namespace {

struct Outcome {
  int code;
  std::string out, err;
};

Outcome kf(std::vector<std::string> args) {
  args.insert(args.begin(), "kanforge");
  std::vector<const char*> argv;
  for (auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir = std::filesystem::temp_directory_path() / ("kanforge_cli_" + std::to_string(::getpid()));
    std::filesystem::create_directories(dir);
  }
  void TearDown() override { std::filesystem::remove_all(dir); }

  std::string write(const std::string& name, const std::string& text) {
    auto p = dir / name;
    std::ofstream(p) << text;
    return p.string();
  }
  std::string canned(const std::string& id) { return write(id + ".json", canonical(corpus::find(id)->build())); }

  std::filesystem::path dir;
};

}  // namespace

TEST_F(Cli, UnknownVerbIsRejectedBeforeReading) {
  auto r = kf({"frobnicate", "/nonexistent/file.json"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("unknown verb 'frobnicate'"), std::string::npos);
  EXPECT_EQ(r.err.find("nonexistent"), std::string::npos);
}

TEST_F(Cli, MissingArgumentIsUsageError) {
  EXPECT_EQ(kf({"kan"}).code, 2);
  EXPECT_EQ(kf({}).code, 2);
}

TEST_F(Cli, MissingFileIsUsageError) {
  auto r = kf({"validate", (dir / "absent.json").string()});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("cannot open"), std::string::npos);
}

TEST_F(Cli, KanOnDeltaOneNamesTheOuterHorn) {
  auto r = kf({"kan", "--dim", "1", canned("delta1")});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("Lambda^{2,0}: NOT fillable"), std::string::npos);
  EXPECT_NE(r.out.find("unfilled horn (00, 01)"), std::string::npos);
}

TEST_F(Cli, KanOnGroupNerveSucceeds) {
  auto r = kf({"kan", "--dim", "2", "--strict", canned("nerve_z3")});
  EXPECT_EQ(r.code, 0);
}

TEST_F(Cli, VerifyGrhoPrintsTables) {
  auto r = kf({"verify", "grho", canned("twogroup_oneobj_z2")});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("pi_1(G) (order 2)"), std::string::npos);
  EXPECT_NE(r.out.find("pi_2(N G) (order 2)"), std::string::npos);
  EXPECT_NE(r.out.find("PASS grho"), std::string::npos);
}

TEST_F(Cli, VerifyRejectsNonTwoGroup) {
  auto r = kf({"verify", "grho", canned("monoid_max")});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("not a 2-group"), std::string::npos);
}

TEST_F(Cli, VerifyUnknownCheck) { EXPECT_EQ(kf({"verify", "nonsense"}).code, 2); }

TEST_F(Cli, VerifyListNamesEveryCheck) {
  auto r = kf({"verify", "list"});
  EXPECT_EQ(r.code, 0);
  for (auto& n : verify::acceptance()) EXPECT_NE(r.out.find(n.name), std::string::npos);
}

TEST_F(Cli, ExamplesListAndShow) {
  auto r = kf({"examples", "list"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("delta1"), std::string::npos);
  EXPECT_NE(r.out.find("twogroup_oneobj_z2"), std::string::npos);
  auto s = kf({"examples", "show", "z3"});
  EXPECT_EQ(s.code, 0);
  EXPECT_EQ(s.out, canonical(to_json(cyclic_group(3))));
  EXPECT_EQ(kf({"examples", "show", "nope"}).code, 2);
}

TEST_F(Cli, ExamplesExportWritesEveryEntry) {
  auto out = dir / "export";
  EXPECT_EQ(kf({"examples", "export", out.string()}).code, 0);
  for (auto& e : corpus::entries()) EXPECT_TRUE(std::filesystem::exists(out / (e.id + ".json"))) << e.id;
}

TEST_F(Cli, AddPrintsResultJson) {
  auto r = kf({"add", canned("circle"), canned("z3")});
  EXPECT_EQ(r.code, 0);
  auto j = json::parse(r.out);
  EXPECT_EQ(j["count"], 3);
  EXPECT_EQ(j["oracle_count"], 3);
  EXPECT_EQ(j["bijection_verified"], true);
  EXPECT_EQ(j["items"].size(), 3u);
  EXPECT_EQ(r.out.back(), '\n');
}

TEST_F(Cli, DetWithPi0) {
  auto r = kf({"det", "--pi0", "@simplex_mod_vertices", "@twogroup_oneobj_z3"});
  EXPECT_EQ(r.code, 0) << r.err;
  auto j = json::parse(r.out);
  EXPECT_EQ(j["count"], 3);
  EXPECT_EQ(j["pi0"]["classes"], 1);
  EXPECT_EQ(j["pi0"]["agree"], true);
}

TEST_F(Cli, SegalDetOnBisimplicialInput) {
  auto r = kf({"det", "@segal_circle", "@twogroup_disc_z2"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(json::parse(r.out)["count"], 2);
}

TEST_F(Cli, BudgetIsAUsageError) {
  auto r = kf({"--budget", "3", "add", "@prism_quotient", "@s3"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("budget"), std::string::npos);
  // the environment is restored afterwards
  EXPECT_EQ(kf({"add", "@prism_quotient", "@s3"}).code, 0);
}

TEST_F(Cli, EnvironmentBudget) {
  setenv("KANFORGE_BUDGET", "3", 1);
  auto r = kf({"add", "@prism_quotient", "@s3"});
  unsetenv("KANFORGE_BUDGET");
  EXPECT_EQ(r.code, 2);
}

TEST_F(Cli, ValidateRoundTripAndUnknownKey) {
  auto ok = kf({"validate", "--roundtrip", canned("twogroup_twisted_z2")});
  EXPECT_EQ(ok.code, 0);
  EXPECT_NE(ok.out.find("two_group: yes"), std::string::npos);
  json j = corpus::find("delta1")->build();
  j["extra"] = 1;
  auto bad = kf({"validate", write("bad.json", j.dump())});
  EXPECT_EQ(bad.code, 2);
  EXPECT_NE(bad.err.find("extra"), std::string::npos);
}

TEST_F(Cli, ValidateReportsBrokenAxioms) {
  json j = to_json(cyclic_group(3));
  j["mul"][1][1] = "0";
  auto r = kf({"validate", write("broken.json", j.dump())});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("invalid"), std::string::npos);
}

TEST_F(Cli, NerveOutputsParseBack) {
  auto r = kf({"nerve", "--dim", "3", "@twogroup_oneobj_z2"});
  ASSERT_EQ(r.code, 0);
  auto X = sset_from_json(json::parse(r.out));
  EXPECT_EQ(X.size(3), 8u);
  auto g = kf({"nerve", "--dim", "2", "@z3"});
  ASSERT_EQ(g.code, 0);
  EXPECT_EQ(sset_from_json(json::parse(g.out)).size(2), 9u);
}

TEST_F(Cli, NerveRejectsSimplicialInput) { EXPECT_EQ(kf({"nerve", "@delta1"}).code, 2); }

TEST_F(Cli, SegalNerveAndCosq) {
  auto r = kf({"segal-nerve", "-P", "1", "-Q", "2", "@twogroup_disc_z2"});
  ASSERT_EQ(r.code, 0);
  EXPECT_TRUE(validate(biset_from_json(json::parse(r.out))).ok());
  auto c = kf({"cosq", "--prime", "1", "@nerve_z2"});
  ASSERT_EQ(c.code, 0);
  EXPECT_TRUE(validate(sset_from_json(json::parse(c.out))).ok());
  EXPECT_EQ(kf({"cosq", "@nerve_z2"}).code, 2);
}

TEST_F(Cli, PiAndLoop) {
  auto r = kf({"pi", "-m", "1", "@nerve_z3"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("(order 3)"), std::string::npos);
  auto l = kf({"loop", "--variant", "reduced", "@nerve_z2"});
  EXPECT_EQ(l.code, 0) << l.err;
  EXPECT_EQ(kf({"loop", "--variant", "sideways", "@nerve_z2"}).code, 2);
  // pi needs a Kan complex
  EXPECT_EQ(kf({"pi", "-m", "1", "@delta1"}).code, 1);
}

TEST_F(Cli, ClassifyReportsFlags) {
  auto r = kf({"--json", "classify", "-n", "1", "@nerve_z2"});
  ASSERT_EQ(r.code, 0);
  auto j = json::parse(r.out);
  EXPECT_EQ(j["n_kan_groupoid"], true);
}
