#pragma once

#include "siltlab/algebra.hpp"

namespace siltlab::fixtures {

// 1 <-alpha- 2
inline AlgebraPtr a2(std::int64_t p = 2)
{
  Quiver q({"1", "2"}, {{"alpha", 1, 0}});
  return build_algebra(q, {}, Prime(p));
}

// 1 <- 2 <- ... <- n
inline AlgebraPtr linear_a(int n, std::int64_t p = 2)
{
  std::vector<std::string> vs;
  std::vector<Arrow> as;
  for (int i = 0; i < n; ++i)
    vs.push_back(std::to_string(i + 1));
  for (int i = 1; i < n; ++i)
    as.push_back({"a" + std::to_string(i), i, i - 1});
  return build_algebra(Quiver(vs, as), {}, Prime(p));
}

// 1 <-alpha- 2 <-beta- 3 with alpha*beta = 0
inline AlgebraPtr a3_rad(std::int64_t p = 2)
{
  Quiver q({"1", "2", "3"}, {{"alpha", 1, 0}, {"beta", 2, 1}});
  RelationSet r;
  r.relations.push_back({{{1, {1, 0}}}});
  return build_algebra(q, r, Prime(p));
}

// 1 -a-> 2 -b-> 1 with ab = ba = 0
inline AlgebraPtr cyclic2(std::int64_t p = 2)
{
  Quiver q({"1", "2"}, {{"a", 0, 1}, {"b", 1, 0}});
  RelationSet r;
  r.relations.push_back({{{1, {0, 1}}}});
  r.relations.push_back({{{1, {1, 0}}}});
  return build_algebra(q, r, Prime(p));
}

}  // namespace siltlab::fixtures
