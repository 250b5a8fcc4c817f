#pragma once

// Simple, indecomposable projective and indecomposable injective modules, and
// direct sums of projectives that remember their generators.

#include <utility>
#include <vector>

#include "siltlab/representation.hpp"

namespace siltlab {

enum class ModuleKind { simple, projective, injective };

/// S(v): one-dimensional at v, zero elsewhere.
[[nodiscard]] Representation simple_module(const AlgebraPtr& algebra, int v);
/// P(v) = R e_v; at vertex w the basis is the path classes v -> w.
[[nodiscard]] Representation projective_module(const AlgebraPtr& algebra, int v);
/// I(v) = D(e_v R); at vertex w the basis is dual to the path classes w -> v.
[[nodiscard]] Representation injective_module(const AlgebraPtr& algebra, int v);
/// Throws InputError for an unknown vertex.
[[nodiscard]] Representation standard_module(const AlgebraPtr& algebra, int v, ModuleKind kind);
/// R as a left module, the sum of all P(v) in vertex order.
[[nodiscard]] Representation regular_module(const AlgebraPtr& algebra);

/// ⊕_k P(vertices[k]), laid out as direct_sum lays out its parts.
struct ProjectiveSum {
  Representation module;
  std::vector<int> vertices;
  /// Per total-space coordinate: (summand, algebra basis index of the path).
  std::vector<std::pair<int, int>> coordinates;
  /// Total-space coordinate of e_{v_k} in summand k.
  std::vector<Index> generators;

  [[nodiscard]] int summands() const noexcept { return static_cast<int>(vertices.size()); }
};

[[nodiscard]] ProjectiveSum projective_sum(const AlgebraPtr& algebra, std::vector<int> vertices);

/// The morphism P -> M sending the generator of summand k to images[k], a
/// column vector of M at vertex vertices[k].
[[nodiscard]] Morphism morphism_from_generators(const ProjectiveSum& p, const Representation& target,
                                                const std::vector<FpMatrix>& images);

}  // namespace siltlab
