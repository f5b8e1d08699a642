#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "hopfcheck/cli.hpp"
#include "hopfcheck/hopf72.hpp"
#include "json.hpp"

using namespace hopfcheck;
using cli::run;

namespace {

std::string write_temp(const std::string& name, const std::string& content) {
  auto path = std::filesystem::temp_directory_path() / ("hopfcheck_test_" + name);
  std::ofstream(path) << content;
  return path.string();
}

bool contains(const std::string& s, const std::string& needle) { return s.find(needle) != std::string::npos; }

}  // namespace

TEST(Cli, VerifyDiamondSymbolic) {
  auto r = run({"verify", "diamond", "--symbolic"});
  EXPECT_EQ(r.exit_code, 0) << r.out << r.err;
  EXPECT_TRUE(contains(r.out, "ambiguities: 23 checked, 23 resolved")) << r.out;
  EXPECT_TRUE(contains(r.out, "basis: 12 words")) << r.out;
}

TEST(Cli, VerifyNichols) {
  auto r = run({"verify", "nichols"});
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_TRUE(contains(r.out, "dim B(V_3) = 12, Hilbert (1,3,4,3,1)")) << r.out;
}

TEST(Cli, VerifyHopfAtPoint) {
  auto r = run({"verify", "hopf", "--a1", "1", "--a2", "2"});
  EXPECT_EQ(r.exit_code, 0) << r.out << r.err;
  EXPECT_TRUE(contains(r.out, "a1 = 1, a2 = 2"));
  EXPECT_TRUE(contains(r.out, "result: 5 passed, 0 failed")) << r.out;
}

// The literal piecewise antipode statement fails for non-central degrees, so
// the lemmas scope reports a failure.
TEST(Cli, VerifyLemmasReportsAntipodeFailure) {
  auto r = run({"verify", "lemmas", "--no-timing"});
  EXPECT_EQ(r.exit_code, 1);
  EXPECT_TRUE(contains(r.out, "FAIL isotypic_filtration"));
  EXPECT_TRUE(contains(r.out, "antipode_classes_held=15"));
  EXPECT_TRUE(contains(r.out, "PASS skew_primitive"));
  EXPECT_TRUE(contains(r.out, "PASS yetter_drinfeld"));
}

TEST(Cli, VerifyIsDeterministicWithoutTiming) {
  auto a = run({"verify", "classify", "--no-timing", "--seed", "7"});
  auto b = run({"verify", "classify", "--no-timing", "--seed", "7"});
  EXPECT_EQ(a.exit_code, 0);
  EXPECT_EQ(a.out, b.out);
  auto c = run({"verify", "diamond", "--json", "--no-timing", "--a1", "1/2", "--a2", "-3"});
  auto d = run({"verify", "diamond", "--json", "--no-timing", "--a1", "1/2", "--a2", "-3"});
  EXPECT_EQ(c.out, d.out);
}

TEST(Cli, JsonSchema) {
  auto r = run({"verify", "diamond", "--json", "--no-timing"});
  ASSERT_EQ(r.exit_code, 0);
  auto doc = nlohmann::ordered_json::parse(r.out);
  ASSERT_EQ(doc["reports"].size(), 3u);
  for (const auto& rep : doc["reports"]) {
    std::vector<std::string> keys;
    for (const auto& [k, v] : rep.items()) keys.push_back(k);
    EXPECT_EQ(keys, (std::vector<std::string>{"check", "status", "counts", "details", "ms"}));
    EXPECT_EQ(rep["status"], "pass");
    EXPECT_EQ(rep["ms"], 0.0);
  }
  EXPECT_EQ(doc["reports"][0]["counts"]["checked"], 23);
  EXPECT_EQ(doc["failed"], 0);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).exit_code, 2);
  EXPECT_EQ(run({"frobnicate"}).exit_code, 2);
  EXPECT_EQ(run({"verify", "everything"}).exit_code, 2);
  EXPECT_EQ(run({"verify", "--bogus"}).exit_code, 2);
  EXPECT_EQ(run({"verify", "hopf", "--a1", "1"}).exit_code, 2);
  EXPECT_EQ(run({"verify", "hopf", "--a1", "1", "--a2", "2", "--symbolic"}).exit_code, 2);
  EXPECT_EQ(run({"verify", "hopf", "--a1", "x", "--a2", "2"}).exit_code, 2);
  EXPECT_EQ(run({"verify", "hopf", "--a1", "1/0", "--a2", "2"}).exit_code, 2);
  EXPECT_EQ(run({"verify", "--seed", "abc"}).exit_code, 2);
  EXPECT_EQ(run({"classify"}).exit_code, 2);
  auto h = run({"--help"});
  EXPECT_EQ(h.exit_code, 0);
  EXPECT_TRUE(contains(h.out, "verify"));
}

TEST(Cli, ClassifyExample) {
  auto path = write_temp("pairs.txt", "1, 0\n0, 1\n1, 1\n1, 2\n");
  auto r = run({"classify", path});
  EXPECT_EQ(r.exit_code, 0) << r.err;
  EXPECT_TRUE(contains(r.out, "orbits: 2\n"));
  EXPECT_TRUE(contains(r.out, ": lines 1, 2, 3\n"));
  EXPECT_TRUE(contains(r.out, ": line 4\n"));
  auto j = run({"classify", path, "--json"});
  auto doc = nlohmann::ordered_json::parse(j.out);
  ASSERT_EQ(doc["orbits"].size(), 2u);
  EXPECT_EQ(doc["orbits"][0]["lines"], nlohmann::ordered_json({1, 2, 3}));
  EXPECT_EQ(doc["orbits"][1]["lines"], nlohmann::ordered_json({4}));
}

TEST(Cli, ClassifyZeroAndEmpty) {
  auto zero = run({"classify", write_temp("zero.txt", "0, 0\n")});
  EXPECT_EQ(zero.exit_code, 0);
  EXPECT_TRUE(contains(zero.out, "line 1: (0, 0) -> (0, 0)"));
  auto empty = run({"classify", write_temp("empty.txt", "")});
  EXPECT_EQ(empty.exit_code, 0);
  EXPECT_EQ(empty.out, "orbits: 0\n");
}

TEST(Cli, ClassifyErrors) {
  auto bad = run({"classify", write_temp("bad.txt", "# header\n1, 0\n\n1/0, 2\n")});
  EXPECT_EQ(bad.exit_code, 2);
  EXPECT_TRUE(contains(bad.err, "line 4")) << bad.err;
  auto missing = run({"classify", "/nonexistent/pairs.txt"});
  EXPECT_EQ(missing.exit_code, 2);
}

TEST(Cli, DumpIsDeterministic) {
  auto a = run({"dump", "--a1", "0", "--a2", "0"});
  auto b = run({"dump", "--a1", "0", "--a2", "0"});
  EXPECT_EQ(a.exit_code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_TRUE(contains(a.out, "[antipode]"));
}

TEST(Cli, DumpSymbolicHasPolynomialEntries) {
  auto r = run({"dump", "--symbolic"});
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_TRUE(contains(r.out, "a1 - a2"));
}

TEST(Cli, DumpAtPointEqualsSpecializedSymbolic) {
  auto vars = MultiPoly::make_context({"a1", "a2"});
  auto sym = Hopf72<MultiPoly>::build(MultiPoly::variable(vars, 0), MultiPoly::variable(vars, 1));
  std::vector<Rational> pt{Rational(1), Rational(1)};
  auto spec = sym.map<Rational>([&](const MultiPoly& p) { return p.eval(pt); });
  auto r = run({"dump", "--a1", "1", "--a2", "1"});
  EXPECT_EQ(r.out, dump_text(spec));
  auto j = run({"dump", "--a1", "1", "--a2", "1", "--json"});
  auto doc = nlohmann::ordered_json::parse(j.out);
  EXPECT_EQ(doc["basis"].size(), 72u);
  EXPECT_EQ(doc["a1"], "1");
}
