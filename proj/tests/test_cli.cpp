#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>

#include "fdes/cli.hpp"
#include "support/fixtures.hpp"

using namespace fdes;
using namespace fdes::testing;

namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_command(args, out, err);
  return {code, out.str(), err.str()};
}

std::string sample(const std::string& name) { return samples_dir() + "/" + name; }

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("fdes_test_" + name)).string();
}

}  // namespace

TEST(Cli, Validate) {
  const CliRun r = run({"validate", sample("toy_plant.fdl"), sample("medical.fdl")});
  EXPECT_EQ(r.code, kExitHolds);
  EXPECT_NE(r.out.find("toy_plant.fdl: ok (2 languages"), std::string::npos);
}

TEST(Cli, CheckExitCodes) {
  const std::string toy = sample("toy_plant.fdl");
  EXPECT_EQ(run({"check", "--property", "observable", "--plant", toy + "#L", "--spec", toy + "#K"}).code, kExitHolds);
  EXPECT_EQ(run({"check", "--property", "controllable", "--plant", toy + "#L", "--spec", toy + "#K"}).code, kExitHolds);
  const CliRun normal = run({"check", "--property", "normal", "--plant", toy + "#L", "--spec", toy + "#K"});
  EXPECT_EQ(normal.code, kExitFails);
  EXPECT_NE(normal.out.find("normal: fails"), std::string::npos);
  EXPECT_NE(normal.out.find("NORMALITY"), std::string::npos);
}

TEST(Cli, CheckJsonWitness) {
  const std::string f = sample("union_not_observable.fdl");
  const CliRun r = run({"check", "--property", "observable", "--plant", f + "#L", "--spec", f + "#K12", "--json"});
  EXPECT_EQ(r.code, kExitFails);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["holds"], false);
  EXPECT_EQ(j["witnesses"][0]["kind"], "OBSERVABILITY");
  EXPECT_EQ(j["witnesses"][0]["event"], "b");
  EXPECT_EQ(j["witnesses"][0]["rhs"], "0.7");
}

TEST(Cli, SynthesizeAndClosedLoop) {
  const std::string toy = sample("toy_plant.fdl");
  const std::string out = temp_path("toy_sup.fdl");
  ASSERT_EQ(run({"synthesize", "--plant", toy + "#L", "--spec", toy + "#K", "--out", out}).code, kExitHolds);
  const FdlDocument doc = parse_fdl_file(out);
  EXPECT_EQ(doc.supervisors.at("S").enable(str("eps"), ev("a")), gr("0.7"));
  const CliRun cl = run({"closed-loop", "--plant", toy + "#L", "--supervisor", out, "--spec", toy + "#K"});
  EXPECT_EQ(cl.code, kExitHolds);
  EXPECT_NE(cl.out.find("# equals spec: yes"), std::string::npos);
  EXPECT_EQ(parse_fdl(cl.out).languages.at("CL"), toy_spec());
  std::filesystem::remove(out);
}

TEST(Cli, SynthesizeRefusal) {
  const std::string f = sample("union_not_observable.fdl");
  const CliRun r = run({"synthesize", "--plant", f + "#L", "--spec", f + "#K12"});
  EXPECT_EQ(r.code, kExitFails);
  EXPECT_NE(r.out.find("not observable"), std::string::npos);
}

TEST(Cli, Decentralized) {
  const std::string m = sample("medical.fdl");
  const CliRun r = run({"synthesize", "--mode", "decentralized", "--plant", m, "--spec", m});
  ASSERT_EQ(r.code, kExitHolds) << r.err;
  const FdlDocument doc = parse_fdl(r.out);
  EXPECT_EQ(doc.supervisors.at("S1").enable(str("a1"), ev("a2")), gr("0.8"));
  EXPECT_EQ(run({"check", "--property", "coobservable", "--plant", m, "--spec", m}).code, kExitHolds);
}

TEST(Cli, Extremal) {
  const std::string toy = sample("toy_plant.fdl");
  const CliRun sup = run({"supremal-cn", "--plant", toy + "#L", "--spec", toy + "#K"});
  ASSERT_EQ(sup.code, kExitHolds);
  EXPECT_EQ(parse_fdl(sup.out).languages.at("K_sup").grade(str("a")), gr("0.4"));
  const std::string u = sample("union_not_observable.fdl");
  const CliRun inf = run({"infimal-co", "--plant", u + "#L", "--spec", u + "#K12"});
  ASSERT_EQ(inf.code, kExitHolds);
  EXPECT_EQ(parse_fdl(inf.out).languages.at("K_inf").grade(str("a.b")), gr("0.7"));
  const CliRun oracle = run({"oracle", "--op", "infimal-co", "--plant", u + "#L", "--spec", u + "#K12"});
  EXPECT_EQ(parse_fdl(oracle.out).languages.at("K_inf"), parse_fdl(inf.out).languages.at("K_inf"));
  EXPECT_EQ(run({"oracle", "--op", "supervisor-exists", "--plant", u + "#L", "--spec", u + "#K12"}).code, kExitFails);
}

TEST(Cli, Scp) {
  const std::string u = sample("union_not_observable.fdl");
  EXPECT_EQ(run({"scp", "--min", u + "#K12", "--max", u + "#L", "--plant", u + "#L"}).code, kExitHolds);
  const CliRun no = run({"scp", "--min", u + "#K12", "--max", u + "#K12", "--plant", u + "#L"});
  EXPECT_EQ(no.code, kExitFails);
  EXPECT_NE(no.out.find("a.b 0.7 > 0"), std::string::npos);
}

TEST(Cli, LangAndGen) {
  const std::string u = sample("union_not_observable.fdl");
  const CliRun uni = run({"lang", "--op", "union", "--in", u + "#K1", "--in", u + "#K2"});
  ASSERT_EQ(uni.code, kExitHolds);
  EXPECT_EQ(parse_fdl(uni.out).languages.at("result"), language_union(union_k1(), union_k2()));
  EXPECT_EQ(run({"lang", "--op", "contains", "--in", u + "#K1", "--in", u + "#L"}).code, kExitHolds);
  EXPECT_EQ(run({"lang", "--op", "equal", "--in", u + "#K1", "--in", u + "#L"}).code, kExitFails);
  const CliRun proj = run({"lang", "--op", "project", "--in", u + "#L"});
  EXPECT_EQ(parse_fdl(proj.out).languages.at("result").grade(str("b")), gr("0.8"));

  const CliRun gen = run({"gen", "--automaton", sample("two_step.fdl"), "--horizon", "2"});
  ASSERT_EQ(gen.code, kExitHolds);
  EXPECT_EQ(parse_fdl(gen.out).languages.at("L").grade(str("a.b")), gr("0.8"));
  const CliRun tree = run({"gen", "--language", u + "#L"});
  ASSERT_EQ(tree.code, kExitHolds);
  EXPECT_EQ(parse_fdl(tree.out).automata.at("G").generated_language(4), union_plant());
}

TEST(Cli, InvalidInput) {
  const CliRun missing = run({"check", "--property", "observable"});
  EXPECT_EQ(missing.code, kExitInvalid);
  const CliRun bad = run({"check", "--property", "nonsense", "--plant", "x", "--spec", "y"});
  EXPECT_EQ(bad.code, kExitInvalid);
  const CliRun nofile = run({"validate", temp_path("does_not_exist.fdl")});
  EXPECT_EQ(nofile.code, kExitInvalid);
  EXPECT_NE(nofile.err.find("error: "), std::string::npos);
  const CliRun ambiguous = run({"check", "--property", "observable", "--plant", sample("toy_plant.fdl"), "--spec",
                             sample("toy_plant.fdl")});
  EXPECT_EQ(ambiguous.code, kExitInvalid);
  EXPECT_EQ(run({"--help"}).code, kExitHolds);
}
