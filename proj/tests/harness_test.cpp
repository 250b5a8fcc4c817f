#include <gtest/gtest.h>

#include "siltlab/error.hpp"
#include "siltlab/harness.hpp"

namespace siltlab {
namespace {

const std::string kData = SILTLAB_DATA_DIR;

Workbench bench_of(const std::string& file)
{
  const Session s = load_session(kData + "/" + file);
  return Workbench(enumerate_indecomposables(s.algebra, default_strategy(s.spec.family)));
}

std::vector<std::string> tilting_in(const std::vector<Json>& lines)
{
  for (const auto& j : lines)
    if (j["kind"] == "classification")
      return j["tilting_modules"].get<std::vector<std::string>>();
  return {};
}

TEST(Classify, A2TwoSummands)
{
  const Workbench w = bench_of("a2.alg");
  const std::vector<Json> lines = classify(w, 2);
  // S1 is P1
  EXPECT_EQ(tilting_in(lines), (std::vector<std::string>{"S2+P2", "S1+P2"}));
  int rows = 0;
  for (const auto& j : lines)
    if (j["kind"] == "candidate") {
      ++rows;
      EXPECT_EQ(j["routes_agree"], true) << j.dump();
    }
  EXPECT_EQ(rows, 7);
}

TEST(Classify, A2OneSummandHasNoTilting)
{
  EXPECT_TRUE(tilting_in(classify(bench_of("a2.alg"), 1)).empty());
}

TEST(Classify, RegularModuleIsTilting)
{
  for (const char* f : {"a2.alg", "a3.alg", "nakayama_a3.alg", "cyclic2_rad2.alg"}) {
    const Workbench w = bench_of(f);
    const int n = w.algebra()->vertex_count();
    std::string regular;
    for (int v = 1; v <= n; ++v)
      regular += (v > 1 ? "+P" : "P") + std::to_string(v);
    EXPECT_TRUE(w.tilting(w.parse(regular)).holds()) << f;
  }
}

TEST(Banner, CarriesSchemaAndCompleteness)
{
  const Workbench w = bench_of("a3.alg");
  const Json b = banner("classify", "a3.alg", &w.corpus());
  EXPECT_EQ(b["schema_version"], kSchemaVersion);
  EXPECT_EQ(b["semantics"], kSemantics);
  EXPECT_EQ(b["corpus"]["completeness"], "certified-by-classification");
  EXPECT_EQ(b["corpus"]["size"], 6);
  EXPECT_EQ(banner("algebra info", "a3.alg", nullptr).count("corpus"), 0u);
}

TEST(VerifyTheorems, A2)
{
  const Workbench w = bench_of("a2.alg");
  const TheoremReport r = verify_theorems(w, "a2.alg");
  EXPECT_EQ(r.failed(), 0);
  EXPECT_EQ(r.skipped(), 0);
  EXPECT_EQ(r.instances.size(), 8u);
  bool seen = false;
  for (const auto& row : r.instances)
    if (row["module"] == "P2") {
      seen = true;
      EXPECT_EQ(row["results"]["sincere-pretilting-iff-gen-perp12"], "passed");
    }
  EXPECT_TRUE(seen);
  EXPECT_TRUE(w.pretilting(w.parse("P2")).holds());
  EXPECT_FALSE(w.tilting(w.parse("P2")).holds());
  const std::vector<Json> lines = r.lines(w.corpus());
  EXPECT_EQ(lines.back()["kind"], "summary");
  EXPECT_EQ(lines.back()["scope"], "certified-by-classification");
  EXPECT_THROW((void)r.tally("nope"), InputError);
}

TEST(VerifyTheorems, NakayamaExercisesExtTwo)
{
  const TheoremReport r = verify_theorems(bench_of("nakayama_a3.alg"), "nakayama_a3.alg");
  EXPECT_EQ(r.failed(), 0);
  EXPECT_GT(r.tally("tilting-iff-vanishing-gen-perp12").nonzero_ext2, 0);
  EXPECT_GT(r.tally("finite-pd-sincere-silting-self-orthogonal-iff-tilting").passed, 0);
}

TEST(VerifyTheorems, CyclicSkipsUndecidedDimension)
{
  const TheoremReport r = verify_theorems(bench_of("cyclic2_rad2.alg"), "cyclic2_rad2.alg");
  EXPECT_EQ(r.failed(), 0);
  const TheoremTally& t = r.tally("finite-pd-sincere-silting-self-orthogonal-iff-tilting");
  EXPECT_GT(t.skipped, 0);
  int reasons = 0;
  for (const auto& row : r.instances)
    if (row.contains("skipped") && row["skipped"].contains(t.id)) {
      ++reasons;
      EXPECT_NE(row["skipped"][t.id].get<std::string>().find("resolution bound"), std::string::npos);
    }
  EXPECT_EQ(reasons, t.skipped);
}

TEST(ReproduceExample, MatchesOverTwoFields)
{
  const ExampleReport two = reproduce_example(2);
  const ExampleReport three = reproduce_example(3);
  EXPECT_TRUE(two.matches);
  EXPECT_TRUE(three.matches);
  ASSERT_EQ(two.lines.size(), three.lines.size());
  // only the banner differs
  for (std::size_t i = 1; i < two.lines.size(); ++i)
    EXPECT_EQ(two.lines[i], three.lines[i]) << i;
  EXPECT_EQ(render_jsonl(two.lines), render_jsonl(reproduce_example(2).lines));
}

TEST(Render, TableAndJsonl)
{
  const std::vector<Json> lines{{{"kind", "a"}, {"x", 1}}, {{"kind", "a"}, {"x", 22}}};
  EXPECT_EQ(render_jsonl(lines), "{\"kind\":\"a\",\"x\":1}\n{\"kind\":\"a\",\"x\":22}\n");
  const std::string table = render_table(lines);
  EXPECT_NE(table.find("22"), std::string::npos);
}

TEST(Session, Strategies)
{
  EXPECT_EQ(default_strategy(FamilyHint::generic), CorpusStrategy::brute);
  EXPECT_EQ(default_strategy(FamilyHint::nakayama), CorpusStrategy::classified);
  EXPECT_EQ(parse_strategy("brute"), CorpusStrategy::brute);
  EXPECT_THROW((void)parse_strategy("magic"), InputError);
  EXPECT_THROW((void)load_session(kData + "/missing.alg"), InputError);
}

}  // namespace
}  // namespace siltlab
