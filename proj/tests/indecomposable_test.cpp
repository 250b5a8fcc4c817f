#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "siltlab/error.hpp"
#include "siltlab/indecomposable.hpp"
#include "siltlab/standard_modules.hpp"

namespace siltlab {
namespace {

using fixtures::a2;
using fixtures::a3_rad;
using fixtures::cyclic2;
using fixtures::linear_a;

// Every member of `a` is isomorphic to exactly one member of `b`.
void expect_same_corpus(const Corpus& a, const Corpus& b)
{
  ASSERT_EQ(a.size(), b.size());
  for (const auto& m : a.members()) {
    int hits = 0;
    for (const auto& n : b.members())
      hits += is_isomorphic(m, n).isomorphic ? 1 : 0;
    EXPECT_EQ(hits, 1);
  }
}

TEST(Corpus, A2Classified)
{
  auto c = enumerate_indecomposables(a2(), CorpusStrategy::classified);
  ASSERT_EQ(c.size(), 3);
  EXPECT_TRUE(c.certified());
  std::vector<std::string> loewy;
  for (int i = 0; i < c.size(); ++i)
    loewy.push_back(c.loewy(i));
  std::sort(loewy.begin(), loewy.end());
  EXPECT_EQ(loewy, (std::vector<std::string>{"1", "2", "[2;1]"}));
  EXPECT_EQ(c.find("P1"), c.find("S1"));
  EXPECT_EQ(c.find("I1"), c.find("P2"));
  EXPECT_EQ(c.find("I2"), c.find("S2"));
  EXPECT_FALSE(c.find("Q7").has_value());
}

TEST(Corpus, IntervalsMatchUniserialsAndBrute)
{
  for (int n = 1; n <= 4; ++n) {
    auto alg = linear_a(n);
    auto c = enumerate_indecomposables(alg, CorpusStrategy::classified);
    EXPECT_EQ(c.size(), n * (n + 1) / 2);
    BruteOptions opts;
    opts.dim_bound = n;
    expect_same_corpus(c, enumerate_indecomposables(alg, CorpusStrategy::brute, opts));
  }
}

TEST(Corpus, NakayamaRadicalSquareZero)
{
  auto alg = a3_rad();
  auto c = enumerate_indecomposables(alg, CorpusStrategy::classified);
  ASSERT_EQ(c.size(), 5);
  for (const char* name : {"S1", "S2", "S3", "P2", "P3"})
    EXPECT_TRUE(c.find(name).has_value()) << name;
  BruteOptions opts;
  opts.dim_bound = 4;
  expect_same_corpus(c, enumerate_indecomposables(alg, CorpusStrategy::brute, opts));
}

TEST(Corpus, CyclicNakayama)
{
  auto alg = cyclic2();
  auto c = enumerate_indecomposables(alg, CorpusStrategy::classified);
  ASSERT_EQ(c.size(), 4);
  BruteOptions opts;
  opts.dim_bound = 5;
  auto b = enumerate_indecomposables(alg, CorpusStrategy::brute, opts);
  EXPECT_FALSE(b.certified());
  EXPECT_EQ(b.completeness_label(), "brute-force-up-to-dim-5");
  expect_same_corpus(c, b);
}

TEST(Corpus, MembersAreIndecomposableAndValid)
{
  for (auto alg : {a2(), linear_a(4), a3_rad(), cyclic2(), a2(3)}) {
    auto c = enumerate_indecomposables(alg, CorpusStrategy::classified);
    for (const auto& m : c.members()) {
      EXPECT_TRUE(validate(m).empty());
      EXPECT_TRUE(is_indecomposable(m));
    }
  }
}

TEST(Indecomposable, Examples)
{
  auto alg = a2();
  EXPECT_TRUE(is_indecomposable(simple_module(alg, 0)));
  EXPECT_TRUE(is_indecomposable(projective_module(alg, 1)));
  EXPECT_FALSE(is_indecomposable(direct_sum(alg, {simple_module(alg, 0), simple_module(alg, 1)}).sum));
  EXPECT_FALSE(is_indecomposable(Representation(alg)));
  auto s = simple_module(alg, 0);
  EXPECT_FALSE(is_indecomposable(direct_sum(alg, {s}, {3}).sum));
}

TEST(Decompose, Examples)
{
  auto alg = a2();
  auto c = enumerate_indecomposables(alg, CorpusStrategy::classified);
  const int p2 = *c.find("P2");
  const int s1 = *c.find("S1");
  std::vector<int> expect(3, 0);
  expect[static_cast<std::size_t>(p2)] = 1;
  EXPECT_EQ(decompose(projective_module(alg, 1), c), expect);
  expect[static_cast<std::size_t>(p2)] = 2;
  EXPECT_EQ(decompose(direct_sum(alg, {projective_module(alg, 1)}, {2}).sum, c), expect);
  expect[static_cast<std::size_t>(p2)] = 1;
  expect[static_cast<std::size_t>(s1)] = 1;
  EXPECT_EQ(decompose(regular_module(alg), c), expect);
  EXPECT_EQ(decompose(Representation(alg), c), std::vector<int>(3, 0));
}

TEST(Decompose, OutsideBoundedCorpusIsACompletenessError)
{
  auto alg = linear_a(3);
  BruteOptions opts;
  opts.dim_bound = 2;
  auto c = enumerate_indecomposables(alg, CorpusStrategy::brute, opts);
  EXPECT_EQ(c.size(), 5);
  EXPECT_THROW((void)decompose(projective_module(alg, 2), c), CompletenessError);
}

TEST(Decompose, ReassemblesCorpusSums)
{
  auto alg = a3_rad();
  auto c = enumerate_indecomposables(alg, CorpusStrategy::classified);
  std::vector<int> mult{1, 0, 2, 0, 1};
  auto sum = direct_sum(alg, c.members(), mult).sum;
  EXPECT_EQ(decompose(sum, c), mult);
}

TEST(Corpus, ClassifiedRejectsOtherAlgebras)
{
  // Kronecker quiver: two arrows 1 -> 2.
  Quiver q({"1", "2"}, {{"a", 0, 1}, {"b", 0, 1}});
  auto alg = build_algebra(q, {}, Prime(2));
  EXPECT_THROW((void)enumerate_indecomposables(alg, CorpusStrategy::classified), InputError);
}

}  // namespace
}  // namespace siltlab
