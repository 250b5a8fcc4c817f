#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "siltlab/error.hpp"
#include "siltlab/homological.hpp"
#include "siltlab/indecomposable.hpp"

namespace siltlab {
namespace {

using fixtures::a2;
using fixtures::a3_rad;
using fixtures::cyclic2;

TEST(ProjectiveCover, SimpleTopOverA2)
{
  auto alg = a2();
  auto c = projective_cover(simple_module(alg, 1));
  EXPECT_EQ(c.projective.vertices, std::vector<int>{1});
  EXPECT_TRUE(c.epi.is_epi());
  EXPECT_TRUE(c.epi.is_natural());
  auto k = kernel(c.epi);
  EXPECT_TRUE(is_isomorphic(k.object, simple_module(alg, 0)).isomorphic);
}

TEST(ProjectiveCover, ZeroModule)
{
  auto alg = a2();
  auto c = projective_cover(Representation(alg));
  EXPECT_EQ(c.projective.summands(), 0);
  EXPECT_TRUE(c.projective.module.is_zero());
}

TEST(ProjectiveCover, ProjectiveIsItsOwnCover)
{
  auto alg = a3_rad();
  for (int v = 0; v < 3; ++v) {
    auto c = projective_cover(projective_module(alg, v));
    EXPECT_EQ(c.projective.vertices, std::vector<int>{v});
    EXPECT_TRUE(c.epi.is_iso());
  }
}

TEST(MinimalPresentation, SimpleTwoOverA2)
{
  auto alg = a2();
  auto pres = minimal_presentation(simple_module(alg, 1));
  EXPECT_EQ(pres.p1.vertices, std::vector<int>{0});
  EXPECT_EQ(pres.p0.vertices, std::vector<int>{1});
  EXPECT_TRUE(pres.sigma.is_mono());
  EXPECT_TRUE(compose(pres.cok_projection, pres.sigma).is_zero());
}

TEST(MinimalPresentation, SimpleThreeOverNakayama)
{
  auto alg = a3_rad();
  auto pres = minimal_presentation(simple_module(alg, 2));
  EXPECT_EQ(pres.p1.vertices, std::vector<int>{1});
  EXPECT_EQ(pres.p0.vertices, std::vector<int>{2});
}

TEST(MinimalPresentation, ProjectiveHasZeroDomain)
{
  auto alg = a2();
  auto pres = minimal_presentation(projective_module(alg, 1));
  EXPECT_EQ(pres.p1.summands(), 0);
  EXPECT_TRUE(d_sigma_contains(pres, simple_module(alg, 0)));
}

TEST(Resolution, SimpleThreeOverNakayama)
{
  auto alg = a3_rad();
  auto res = minimal_resolution(simple_module(alg, 2), 10);
  ASSERT_EQ(res.status, ResolutionStatus::terminated);
  ASSERT_EQ(res.length(), 2);
  EXPECT_EQ(res.terms[0].vertices, std::vector<int>{2});
  EXPECT_EQ(res.terms[1].vertices, std::vector<int>{1});
  EXPECT_EQ(res.terms[2].vertices, std::vector<int>{0});
  for (std::size_t i = 0; i + 1 < res.differentials.size(); ++i)
    EXPECT_TRUE(compose(res.differentials[i], res.differentials[i + 1]).is_zero());
  EXPECT_TRUE(compose(res.augmentation, res.differentials[0]).is_zero());
}

TEST(Resolution, PeriodicOverCyclicNakayama)
{
  auto alg = cyclic2();
  for (int bound : {0, 1, 4, 9}) {
    auto res = minimal_resolution(simple_module(alg, 0), bound);
    EXPECT_EQ(res.status, ResolutionStatus::bound_exceeded);
    EXPECT_EQ(res.length(), bound);
  }
  EXPECT_FALSE(projective_dimension(simple_module(alg, 0)).decided());
}

TEST(ProjectiveDimension, Examples)
{
  auto alg = a2();
  EXPECT_EQ(projective_dimension(projective_module(alg, 1)).value, 0);
  EXPECT_EQ(projective_dimension(simple_module(alg, 1)).value, 1);
  EXPECT_EQ(projective_dimension(simple_module(a3_rad(), 2)).value, 2);
  EXPECT_EQ(projective_dimension(Representation(alg)).value, 0);
}

TEST(Ext, Examples)
{
  auto alg = a2();
  EXPECT_EQ(ext_dim(1, simple_module(alg, 1), simple_module(alg, 0)), 1);
  EXPECT_EQ(ext_dim(1, projective_module(alg, 1), projective_module(alg, 1)), 0);
  auto n = a3_rad();
  EXPECT_EQ(ext_dim(2, simple_module(n, 2), simple_module(n, 0)), 1);
  EXPECT_EQ(ext_dim(1, simple_module(n, 2), simple_module(n, 0)), 0);
  EXPECT_EQ(ext_dim(1, simple_module(n, 2), simple_module(n, 1)), 1);
}

TEST(Ext, BoundExceededIsReported)
{
  auto alg = cyclic2();
  auto res = minimal_resolution(simple_module(alg, 0), 1);
  EXPECT_NO_THROW((void)ext_dim(0, res, simple_module(alg, 1)));
  EXPECT_THROW((void)ext_dim(1, res, simple_module(alg, 1)), UndecidableAtBound);
  // S1 and S2 swap syzygies, so Ext^i(S1, -) alternates between S2 and S1.
  EXPECT_EQ(ext_dim(1, simple_module(alg, 0), simple_module(alg, 1)), 1);
  EXPECT_EQ(ext_dim(2, simple_module(alg, 0), simple_module(alg, 0)), 1);
  EXPECT_EQ(ext_dim(2, simple_module(alg, 0), simple_module(alg, 1)), 0);
}

TEST(DSigma, Examples)
{
  auto alg = a2();
  auto pres = minimal_presentation(simple_module(alg, 1));
  EXPECT_FALSE(d_sigma_contains(pres, simple_module(alg, 0)));
  EXPECT_TRUE(d_sigma_contains(pres, projective_module(alg, 1)));
  EXPECT_TRUE(d_sigma_contains(pres, simple_module(alg, 1)));
}

TEST(InjectiveEnvelope, Examples)
{
  auto alg = a2();
  auto e1 = injective_envelope(simple_module(alg, 0));
  EXPECT_EQ(e1.vertices, std::vector<int>{0});
  EXPECT_TRUE(is_isomorphic(e1.injective, projective_module(alg, 1)).isomorphic);
  EXPECT_TRUE(e1.mono.is_natural());
  EXPECT_TRUE(is_essential_mono(e1.mono));
  auto e2 = injective_envelope(simple_module(alg, 1));
  EXPECT_TRUE(is_isomorphic(e2.injective, simple_module(alg, 1)).isomorphic);
  auto ei = injective_envelope(injective_module(alg, 0));
  EXPECT_TRUE(ei.mono.is_iso());
}

TEST(InjectiveEnvelope, NotEssentialWhenSplitOff)
{
  auto alg = a2();
  auto s1 = simple_module(alg, 0);
  auto sum = direct_sum(alg, {projective_module(alg, 1), s1});
  EXPECT_TRUE(sum.injections[0].is_mono());
  EXPECT_FALSE(is_essential_mono(sum.injections[0]));
}

TEST(Extensions, NonsplitMiddleTermOverA2)
{
  auto alg = a2();
  auto cls = extension_classes(simple_module(alg, 1), simple_module(alg, 0));
  ASSERT_EQ(cls.dimension, 1);
  ASSERT_EQ(cls.middles.size(), 1U);
  EXPECT_TRUE(validate(cls.middles[0]).empty());
  EXPECT_TRUE(is_isomorphic(cls.middles[0], projective_module(alg, 1)).isomorphic);
  EXPECT_EQ(extension_classes(simple_module(alg, 0), simple_module(alg, 1)).dimension, 0);
}

TEST(HomViaPresentation, AgreesWithNaturality)
{
  auto alg = a3_rad();
  std::vector<Representation> mods;
  for (int v = 0; v < 3; ++v) {
    mods.push_back(simple_module(alg, v));
    mods.push_back(projective_module(alg, v));
    mods.push_back(injective_module(alg, v));
  }
  for (const auto& x : mods) {
    auto pres = minimal_presentation(x);
    for (const auto& y : mods) {
      EXPECT_EQ(hom_dimension_via(pres, y), hom_dimension(x, y));
      EXPECT_EQ(ext_dim(0, x, y), hom_dimension(x, y));
    }
  }
}

TEST(Ext, CommutesWithFiniteSums)
{
  for (auto alg : {a3_rad(), cyclic2()}) {
    const Corpus c = enumerate_indecomposables(alg, CorpusStrategy::classified);
    for (const auto& t : c.members())
      for (int copies = 1; copies <= 3; ++copies) {
        const Representation tj = direct_sum(alg, {t}, {copies}).sum;
        for (int i = 1; i <= 2; ++i)
          EXPECT_EQ(ext_dim(i, t, tj), copies * ext_dim(i, t, t)) << "i = " << i << ", |J| = " << copies;
      }
  }
}

}  // namespace
}  // namespace siltlab
