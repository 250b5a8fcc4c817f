#include "siltlab/standard_modules.hpp"

#include <algorithm>

#include "siltlab/error.hpp"

namespace siltlab {

namespace {

void check_vertex(const Algebra& alg, int v)
{
  if (v < 0 || v >= alg.vertex_count())
    throw InputError("unknown vertex index " + std::to_string(v));
}

// Position of a basis index inside an ordered list of basis indices.
Index position(const std::vector<int>& list, int idx)
{
  const auto it = std::find(list.begin(), list.end(), idx);
  return it == list.end() ? Index{-1} : static_cast<Index>(it - list.begin());
}

std::vector<int> with_arrow(const Path& p, int a)
{
  std::vector<int> out = p.arrows;
  out.push_back(a);
  return out;
}

std::vector<int> arrow_then(int a, const Path& p)
{
  std::vector<int> out{a};
  out.insert(out.end(), p.arrows.begin(), p.arrows.end());
  return out;
}

}  // namespace

Representation simple_module(const AlgebraPtr& algebra, int v)
{
  check_vertex(*algebra, v);
  const Quiver& q = algebra->quiver();
  std::vector<int> dims(static_cast<std::size_t>(algebra->vertex_count()), 0);
  dims[static_cast<std::size_t>(v)] = 1;
  std::vector<FpMatrix> maps;
  for (const auto& arr : q.arrows())
    maps.emplace_back(dims[static_cast<std::size_t>(arr.target)], dims[static_cast<std::size_t>(arr.source)],
                      algebra->modulus());
  return {algebra, dims, std::move(maps)};
}

Representation projective_module(const AlgebraPtr& algebra, int v)
{
  check_vertex(*algebra, v);
  const Algebra& alg = *algebra;
  const Quiver& q = alg.quiver();
  std::vector<std::vector<int>> at;
  std::vector<int> dims;
  for (int w = 0; w < alg.vertex_count(); ++w) {
    at.push_back(alg.basis_between(v, w));
    dims.push_back(static_cast<int>(at.back().size()));
  }
  std::vector<FpMatrix> maps;
  for (int a = 0; a < q.arrow_count(); ++a) {
    const Arrow& arr = q.arrow(a);
    const auto& src = at[static_cast<std::size_t>(arr.source)];
    const auto& tgt = at[static_cast<std::size_t>(arr.target)];
    FpMatrix m(static_cast<Index>(tgt.size()), static_cast<Index>(src.size()), alg.modulus());
    for (std::size_t j = 0; j < src.size(); ++j)
      for (const auto& [idx, c] : alg.reduce(v, with_arrow(alg.basis_path(src[j]), a)))
        m.set(position(tgt, idx), static_cast<Index>(j), c);
    maps.push_back(std::move(m));
  }
  return {algebra, dims, std::move(maps)};
}

Representation injective_module(const AlgebraPtr& algebra, int v)
{
  check_vertex(*algebra, v);
  const Algebra& alg = *algebra;
  const Quiver& q = alg.quiver();
  std::vector<std::vector<int>> at;
  std::vector<int> dims;
  for (int w = 0; w < alg.vertex_count(); ++w) {
    at.push_back(alg.basis_between(w, v));
    dims.push_back(static_cast<int>(at.back().size()));
  }
  std::vector<FpMatrix> maps;
  for (int a = 0; a < q.arrow_count(); ++a) {
    const Arrow& arr = q.arrow(a);
    const auto& src = at[static_cast<std::size_t>(arr.source)];  // paths u -> v
    const auto& tgt = at[static_cast<std::size_t>(arr.target)];  // paths w -> v
    FpMatrix m(static_cast<Index>(tgt.size()), static_cast<Index>(src.size()), alg.modulus());
    // (a.phi)(q) = phi(q a)
    for (std::size_t i = 0; i < tgt.size(); ++i)
      for (const auto& [idx, c] : alg.reduce(arr.source, arrow_then(a, alg.basis_path(tgt[i]))))
        m.set(static_cast<Index>(i), position(src, idx), c);
    maps.push_back(std::move(m));
  }
  return {algebra, dims, std::move(maps)};
}

Representation standard_module(const AlgebraPtr& algebra, int v, ModuleKind kind)
{
  switch (kind) {
    case ModuleKind::simple: return simple_module(algebra, v);
    case ModuleKind::projective: return projective_module(algebra, v);
    case ModuleKind::injective: return injective_module(algebra, v);
  }
  throw InputError("standard_module: unknown kind");
}

Representation regular_module(const AlgebraPtr& algebra)
{
  std::vector<int> all(static_cast<std::size_t>(algebra->vertex_count()));
  for (int v = 0; v < algebra->vertex_count(); ++v)
    all[static_cast<std::size_t>(v)] = v;
  return projective_sum(algebra, all).module;
}

ProjectiveSum projective_sum(const AlgebraPtr& algebra, std::vector<int> vertices)
{
  const Algebra& alg = *algebra;
  std::vector<Representation> parts;
  for (int v : vertices)
    parts.push_back(projective_module(algebra, v));
  Representation sum = direct_sum(algebra, parts).sum;
  std::vector<std::pair<int, int>> coords;
  std::vector<Index> gens(vertices.size(), -1);
  for (int w = 0; w < alg.vertex_count(); ++w)
    for (std::size_t k = 0; k < vertices.size(); ++k)
      for (int idx : alg.basis_between(vertices[k], w)) {
        if (idx == alg.trivial_path(vertices[k]))
          gens[k] = static_cast<Index>(coords.size());
        coords.emplace_back(static_cast<int>(k), idx);
      }
  return {std::move(sum), std::move(vertices), std::move(coords), std::move(gens)};
}

Morphism morphism_from_generators(const ProjectiveSum& p, const Representation& target,
                                  const std::vector<FpMatrix>& images)
{
  const Algebra& alg = *target.algebra();
  if (images.size() != p.vertices.size())
    throw InputError("morphism_from_generators: one image per summand required");
  for (std::size_t k = 0; k < images.size(); ++k)
    if (images[k].rows() != target.dim(p.vertices[k]) || images[k].cols() != 1)
      throw InputError("morphism_from_generators: image is not a vector at the summand's vertex");
  std::vector<FpMatrix> maps;
  Index c = 0;
  for (int w = 0; w < alg.vertex_count(); ++w) {
    FpMatrix f(target.dim(w), p.module.dim(w), alg.modulus());
    for (Index j = 0; j < f.cols(); ++j, ++c) {
      const auto [k, idx] = p.coordinates[static_cast<std::size_t>(c)];
      const Path& path = alg.basis_path(idx);
      f.set_block(0, j, target.path_action(path.source, path.arrows) * images[static_cast<std::size_t>(k)]);
    }
    maps.push_back(std::move(f));
  }
  return {p.module, target, std::move(maps)};
}

}  // namespace siltlab
