#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <sstream>

#include "fixtures.hpp"
#include "hqg/cli.hpp"

using namespace hqg;
namespace fs = std::filesystem;

namespace {

std::string data(const std::string& name) { return std::string(HQG_DATA_DIR) + "/" + name; }

struct Outcome {
  int code;
  std::string out, err;
  io::json report() const { return io::json::parse(out); }
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(std::move(args), out, err);
  return {code, out.str(), err.str()};
}

std::string first_failing_tag(const io::json& report) {
  for (const auto& e : report["equations"])
    if (!e["pass"].get<bool>()) return e["tag"];
  return "";
}

/// Scratch directory removed at the end of each test.
class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("hqg-cli-" + std::to_string(::getpid()) + "-" +
                                         ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
    ::unsetenv("HQG_FIELD");
  }
  void TearDown() override {
    fs::remove_all(dir_);
    ::unsetenv("HQG_FIELD");
  }
  std::string tmp(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

/// Runs the installed binary through the shell; returns (exit status, stdout).
std::pair<int, std::string> shell(const std::string& args) {
  std::string cmd = std::string(HQG_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* p = ::popen(cmd.c_str(), "r");
  if (!p) return {-1, ""};
  std::string out;
  char buf[4096];
  while (std::size_t n = std::fread(buf, 1, sizeof buf, p)) out.append(buf, n);
  int status = ::pclose(p);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

}  // namespace

// ---------------------------------------------------------------------------
// check

TEST_F(Cli, CheckPassingStructure) {
  Outcome r = run({"check", data("taft4.json")});
  EXPECT_EQ(r.code, 0) << r.out << r.err;
  io::json j = r.report();
  EXPECT_EQ(j["command"], "check");
  EXPECT_TRUE(j["pass"].get<bool>());
  EXPECT_EQ(j["flags"]["cocommutative"], false);
}

TEST_F(Cli, CheckFlagsReportsWitnesses) {
  Outcome r = run({"check", data("taft4.json"), "--axioms", "flags"});
  EXPECT_EQ(r.code, 1);
  io::json t = r.report();
  EXPECT_EQ(first_failing_tag(t), "comm");  // xy = w, yx = -w
  EXPECT_EQ(t["equations"][3]["tag"], "cocomm");
  EXPECT_EQ(t["equations"][3]["witness"]["input"], (io::json{"y"}));
  Outcome fl = run({"check", data("loopalg-ms32.json"), "--axioms", "flags"});
  EXPECT_EQ(fl.code, 1);
  io::json j = fl.report();
  EXPECT_EQ(first_failing_tag(j), "assoc");
  EXPECT_EQ(j["equations"][0]["witness"]["input"].size(), 3u);
}

TEST_F(Cli, CheckSingleLevels) {
  for (const char* level : {"magma", "comonoid", "bimonoid", "hopf", "antipode"})
    EXPECT_EQ(run({"check", data("loopalg-ms32.json"), "--axioms", level}).code, 0) << level;
  EXPECT_EQ(run({"check", data("taft4-gf3.json")}).code, 0);
}

TEST_F(Cli, CheckLoops) {
  Outcome bad = run({"check", data("nonip5.json")});
  EXPECT_EQ(bad.code, 1);
  io::json j = bad.report();
  EXPECT_EQ(j["equations"][0]["tag"], "ip");
  EXPECT_FALSE(j["equations"][0]["witness"]["input"].empty());
  EXPECT_EQ(run({"check", data("chein-s3.json"), "--axioms", "ip"}).code, 0);
  Outcome all = run({"check", data("chein-s3.json")});
  EXPECT_EQ(all.code, 0);
  EXPECT_EQ(all.report()["flags"]["moufang"], true);
  EXPECT_EQ(run({"check", data("chein-s3.json"), "--axioms", "flags"}).code, 1);
  EXPECT_EQ(run({"check", data("chein-s3.json"), "--axioms", "hopf"}).code, 2);
  EXPECT_EQ(run({"check", data("taft4.json"), "--axioms", "ip"}).code, 2);
}

TEST_F(Cli, CheckMalformed) {
  Outcome z = run({"check", data("bad-zero-denominator.json")});
  EXPECT_EQ(z.code, 2);
  EXPECT_NE(z.err.find("malformed input"), std::string::npos) << z.err;
  EXPECT_TRUE(z.out.empty());
  EXPECT_EQ(run({"check", data("no-such-file.json")}).code, 2);
  EXPECT_EQ(run({"check", data("taft4.json"), "--axioms", "everything"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}

// ---------------------------------------------------------------------------
// distlaw

TEST_F(Cli, DistlawPsiTau) {
  Outcome r = run({"distlaw", "--a", data("loopalg-ms32.json"), "--h", data("taft4.json"), "--psi", data("psi-tau.json")});
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_EQ(r.report()["equations"].size(), 10u);
  Outcome s = run({"distlaw", "--a", data("loopalg-ms32.json"), "--h", data("taft4.json"), "--psi", data("psi-tau.json"),
               "--level", "strong"});
  EXPECT_EQ(s.code, 0);
  EXPECT_EQ(s.report()["flags"]["lambda_A invertible"], true);
}

TEST_F(Cli, DistlawPerturbedNamesTheFirstFailingTag) {
  Outcome r = run({"distlaw", "--a", data("loopalg-ms32.json"), "--h", data("taft4.json"), "--psi",
               data("psi-tau-perturbed.json")});
  EXPECT_EQ(r.code, 1);
  DistLaw d(fx::h4(), fx::fl(), io::load_map(data("psi-tau-perturbed.json")));
  AxiomReport direct = check_all_levels(d);
  const EquationResult* want = direct.first_failure();
  ASSERT_NE(want, nullptr);
  EXPECT_EQ(first_failing_tag(r.report()), want->tag);
}

TEST_F(Cli, DistlawFlipAndShapeErrors) {
  EXPECT_EQ(run({"distlaw", "--a", data("kc3.json"), "--h", data("kc2.json"), "--psi", "flip"}).code, 0);
  Outcome bad = run({"distlaw", "--a", data("kc3.json"), "--h", data("kc2.json"), "--psi", data("psi-tau.json")});
  EXPECT_EQ(bad.code, 2);
  EXPECT_NE(bad.err.find("distributive law must map"), std::string::npos) << bad.err;
  EXPECT_EQ(run({"distlaw", "--a", data("kc3.json"), "--psi", "flip"}).code, 2);
}

// ---------------------------------------------------------------------------
// construct

TEST_F(Cli, ConstructReproducesTheGoldenFiles) {
  EXPECT_EQ(run({"construct", "taft4", "-o", tmp("t.json")}).code, 0);
  EXPECT_EQ(io::read_file(tmp("t.json")), io::read_file(data("taft4.json")));
  Outcome p = run({"construct", "psi-skew", "--a", data("loopalg-ms32.json"), "--h", data("taft4.json"), "--tau",
               data("tau.json"), "--check", "-o", tmp("psi.json")});
  EXPECT_EQ(p.code, 0);
  EXPECT_EQ(io::read_file(tmp("psi.json")), io::read_file(data("psi-tau.json")));
}

TEST_F(Cli, WreathOfFlipIsTheKleinGroupAlgebra) {
  Outcome w = run({"construct", "wreath", "--a", data("kc2.json"), "--h", data("kc2.json"), "--psi", "flip", "--check",
               "-o", tmp("w.json")});
  EXPECT_EQ(w.code, 0);
  HopfQuasigroupData got = io::load_structure(tmp("w.json"));
  HopfQuasigroupData v = group_algebra(direct_product(cyclic_group(2), cyclic_group(2)), fx::Q(), "KV");
  EXPECT_TRUE(transport(v, got.obj(), {0, 1, 2, 3}) == got);
}

TEST_F(Cli, WreathOfPsiTau) {
  Outcome w = run({"construct", "wreath", "--a", data("loopalg-ms32.json"), "--h", data("taft4.json"), "--psi",
               data("psi-tau.json"), "-o", tmp("w.json")});
  ASSERT_EQ(w.code, 0);
  EXPECT_TRUE(w.out.empty());
  EXPECT_EQ(io::load_structure(tmp("w.json")).obj().dim(), 48u);
  EXPECT_EQ(run({"check", tmp("w.json"), "--axioms", "hopf"}).code, 0);
}

TEST_F(Cli, ConstructSmashAndGamma) {
  ASSERT_EQ(run({"construct", "inversion-action", "--h", data("kc2.json"), "--a", data("kc3.json"), "-o",
                 tmp("inv.json")}).code,
            0);
  EXPECT_EQ(io::read_file(tmp("inv.json")), io::read_file(data("inv-c2-c3.json")));
  EXPECT_EQ(run({"construct", "psi-smash", "--h", data("kc2.json"), "--a", data("kc3.json"), "--action",
                 tmp("inv.json"), "--check", "-o", tmp("s.json")}).code,
            0);
  EXPECT_EQ(run({"construct", "gamma", "--h", data("kc2.json"), "--a", data("kc3.json"), "--action", tmp("inv.json"),
                 "--action-hat", tmp("inv.json"), "--check", "-o", tmp("g.json")}).code,
            0);
  EXPECT_EQ(io::load_map(tmp("g.json")), flip_law(fx::c2(), fx::c3()).psi);
  ASSERT_EQ(run({"construct", "inversion-action", "--h", data("kc2.json"), "--a", data("kc3.json"), "--side", "right",
                 "-o", tmp("invr.json")}).code,
            0);
  EXPECT_EQ(run({"construct", "twisted-smash", "--h", data("kc2.json"), "--a", data("kc3.json"), "--action",
                 tmp("inv.json"), "--right-action", tmp("invr.json"), "--check", "-o", tmp("tw.json")}).code,
            0);
  EXPECT_EQ(run({"construct", "psi-smash", "--h", data("kc2.json"), "--a", data("kc3.json"), "-o", tmp("x.json")}).code,
            2);
}

TEST_F(Cli, ConstructLoops) {
  ASSERT_EQ(run({"construct", "group-table", "--preset", "s3", "-o", tmp("s3.json")}).code, 0);
  ASSERT_EQ(run({"construct", "chein", "--group", tmp("s3.json"), "-o", tmp("m.json")}).code, 0);
  EXPECT_EQ(io::read_file(tmp("m.json")), io::read_file(data("chein-s3.json")));
  EXPECT_EQ(run({"construct", "group-algebra", "--group", tmp("m.json"), "-o", tmp("g.json")}).code, 2);
  EXPECT_EQ(run({"construct", "loop-algebra", "--loop", data("nonip5.json"), "-o", tmp("l.json")}).code, 2);
  EXPECT_EQ(run({"construct", "chein", "--group", tmp("m.json"), "-o", tmp("mm.json")}).code, 2);
  EXPECT_EQ(run({"construct", "group-table", "--preset", "d4", "-o", tmp("d.json")}).code, 2);
}

TEST_F(Cli, FieldFromEnvironment) {
  ::setenv("HQG_FIELD", "GF:5", 1);
  ASSERT_EQ(run({"construct", "taft4", "-o", tmp("t5.json")}).code, 0);
  EXPECT_EQ(io::load_structure(tmp("t5.json")).field(), FieldSpec::prime(5));
  ASSERT_EQ(run({"construct", "taft4", "--field", "Q", "-o", tmp("tq.json")}).code, 0);
  EXPECT_TRUE(io::load_structure(tmp("tq.json")).field().is_rational());
  ::setenv("HQG_FIELD", "GF:2", 1);
  Outcome two = run({"construct", "taft4", "-o", tmp("t2.json")});
  EXPECT_EQ(two.code, 2);
  EXPECT_FALSE(fs::exists(tmp("t2.json")));
  ::setenv("HQG_FIELD", "R", 1);
  EXPECT_EQ(run({"construct", "taft4", "-o", tmp("tr.json")}).code, 2);
}

// ---------------------------------------------------------------------------
// eval

TEST_F(Cli, EvalPrintsMaps) {
  Outcome r = run({"eval", "--expr", "lam[H]", "--ctx", "H=" + data("taft4.json")});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, io::map_text(fx::h4().lambda_map()));
  Outcome k = run({"eval", "--expr", "eps[H] . eta[H]", "--ctx", "H=" + data("taft4.json")});
  EXPECT_EQ(k.out, "I -> I\n  1 |-> 1\n");
}

TEST_F(Cli, EvalCompare) {
  std::string ctx = "H=" + data("loopalg-ms32.json");
  Outcome r = run({"eval", "--expr", "mu[H] . (mu[H] # id[H])", "--compare", "mu[H] . (id[H] # mu[H])", "--ctx", ctx});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.report()["equations"][0]["tag"], "compare");
  EXPECT_EQ(run({"eval", "--equation", "lH.1", "--ctx", ctx}).code, 0);
  EXPECT_EQ(run({"eval", "--equation", "structure:rH.2", "--ctx", ctx}).code, 0);
  Outcome a = run({"eval", "--equation", "assoc", "--ctx", ctx});
  EXPECT_EQ(a.code, 1);
  EXPECT_EQ(a.report()["equations"][0]["tag"], "assoc");
}

TEST_F(Cli, EvalWithLawBindings) {
  std::string bind = "H=" + data("taft4.json") + ",A=" + data("loopalg-ms32.json") + ",PSI=" + data("psi-tau.json");
  for (const char* tag : {"dl1", "dl2", "cdl1", "adl1", "adl4"}) EXPECT_EQ(run({"eval", "--equation", tag, "--ctx", bind}).code, 0) << tag;
  std::string bad = "H=" + data("taft4.json") + ",A=" + data("loopalg-ms32.json") + ",PSI=" + data("psi-tau-perturbed.json");
  DistLaw d(fx::h4(), fx::fl(), io::load_map(data("psi-tau-perturbed.json")));
  std::string tag = check_all_levels(d).first_failure()->tag;
  EXPECT_EQ(run({"eval", "--equation", tag, "--ctx", bad}).code, 1);
}

TEST_F(Cli, EvalFromFile) {
  io::write_file(tmp("e.txt"), "-- counit then unit\neta[H] . eps[H]\n");
  Outcome r = run({"eval", "--expr", "@" + tmp("e.txt"), "--compare", "mu[H] . (lam[H] # id[H]) . delta[H]", "--ctx",
               "H=" + data("kc3.json")});
  EXPECT_EQ(r.code, 0) << r.err;
}

TEST_F(Cli, EvalErrors) {
  std::string ctx = "H=" + data("taft4.json");
  Outcome u = run({"eval", "--expr", "mu[X]", "--ctx", ctx});
  EXPECT_EQ(u.code, 2);
  EXPECT_NE(u.err.find("unbound name X"), std::string::npos) << u.err;
  Outcome p = run({"eval", "--expr", "mu[H", "--ctx", ctx});
  EXPECT_EQ(p.code, 2);
  EXPECT_NE(p.err.find("1:5"), std::string::npos) << p.err;
  EXPECT_EQ(run({"eval", "--expr", "mu[H] . mu[H]", "--ctx", ctx}).code, 2);
  EXPECT_EQ(run({"eval", "--expr", "nu[H]", "--ctx", ctx}).code, 2);
  EXPECT_EQ(run({"eval", "--equation", "uq", "--ctx", ctx}).code, 2);  // left and right share the tag
  EXPECT_EQ(run({"eval", "--equation", "no-such-tag", "--ctx", ctx}).code, 2);
  EXPECT_EQ(run({"eval", "--ctx", ctx}).code, 2);
  EXPECT_EQ(run({"eval", "--expr", "id[H]", "--ctx", "H"}).code, 2);
  EXPECT_EQ(run({"eval", "--expr", "id[H]", "--ctx", "H=" + data("c2-table.json")}).code, 2);
  EXPECT_EQ(run({"eval", "--expr", "id[H]", "--ctx", ctx + ",H=" + data("kc2.json")}).code, 2);
}

// ---------------------------------------------------------------------------
// the binary

TEST(Binary, ExitCodesAndOutput) {
  auto [c0, o0] = shell("check " + data("taft4.json"));
  EXPECT_EQ(c0, 0);
  EXPECT_TRUE(io::json::parse(o0)["pass"].get<bool>());
  auto [c1, o1] = shell("check " + data("nonip5.json"));
  EXPECT_EQ(c1, 1);
  EXPECT_NE(o1.find("\"tag\": \"ip\""), std::string::npos);
  auto [c2, o2] = shell("check " + data("bad-zero-denominator.json"));
  EXPECT_EQ(c2, 2);
  EXPECT_TRUE(o2.empty());
}

TEST(Binary, FieldEnvironmentVariable) {
  fs::path out = fs::temp_directory_path() / ("hqg-bin-" + std::to_string(::getpid()) + ".json");
  std::string cmd = HQG_CLI_PATH;
  EXPECT_EQ(std::system(("HQG_FIELD=GF:7 " + cmd + " construct taft4 -o " + out.string()).c_str()), 0);
  EXPECT_EQ(io::load_structure(out.string()).field(), FieldSpec::prime(7));
  auto [code, _] = shell("check " + out.string());
  EXPECT_EQ(code, 0);
  fs::remove(out);
}
