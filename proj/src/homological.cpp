#include "siltlab/homological.hpp"

#include "siltlab/error.hpp"

namespace siltlab {

ProjectiveCover projective_cover(const Representation& m)
{
  const AlgebraPtr& alg = m.algebra();
  const std::vector<FpMatrix> rad = radical_subspaces(m);
  std::vector<int> vertices;
  std::vector<FpMatrix> images;
  for (int v = 0; v < alg->vertex_count(); ++v) {
    const FpMatrix top = complement_basis(rad[static_cast<std::size_t>(v)], m.dim(v));
    for (Index j = 0; j < top.cols(); ++j) {
      vertices.push_back(v);
      images.push_back(top.col(j));
    }
  }
  ProjectiveSum p = projective_sum(alg, std::move(vertices));
  Morphism epi = morphism_from_generators(p, m, images);
  return {std::move(p), std::move(epi)};
}

ProjectivePresentation minimal_presentation(const Representation& m)
{
  ProjectiveCover c0 = projective_cover(m);
  SubObject k = kernel(c0.epi);
  ProjectiveCover c1 = projective_cover(k.object);
  Morphism sigma = compose(k.inclusion, c1.epi);
  return {std::move(c1.projective), std::move(c0.projective), std::move(sigma), m, std::move(c0.epi), true};
}

Resolution minimal_resolution(const Representation& m, int max_length)
{
  if (max_length < 0)
    throw InputError("minimal_resolution: negative length bound");
  ProjectiveCover c0 = projective_cover(m);
  SubObject syz = kernel(c0.epi);
  Resolution res{{c0.projective}, {}, c0.epi, m, ResolutionStatus::terminated, std::nullopt};
  for (int i = 1; !syz.object.is_zero(); ++i) {
    if (i > max_length) {
      res.status = ResolutionStatus::bound_exceeded;
      res.open_syzygy = syz.object;
      break;
    }
    ProjectiveCover ci = projective_cover(syz.object);
    res.differentials.push_back(compose(syz.inclusion, ci.epi));
    res.terms.push_back(ci.projective);
    syz = kernel(ci.epi);
  }
  return res;
}

int default_resolution_bound(const Algebra& algebra) { return 2 * algebra.dimension() + 4; }

ProjectiveDimension projective_dimension(const Representation& m, int max_length)
{
  const Resolution res = minimal_resolution(m, max_length);
  if (res.status == ResolutionStatus::bound_exceeded)
    return {std::nullopt, max_length};
  return {res.length(), max_length};
}

ProjectiveDimension projective_dimension(const Representation& m)
{
  return projective_dimension(m, default_resolution_bound(*m.algebra()));
}

int yoneda_dimension(const ProjectiveSum& p, const Representation& n)
{
  int d = 0;
  for (int v : p.vertices)
    d += n.dim(v);
  return d;
}

FpMatrix induced_hom_map(const ProjectiveSum& p1, const ProjectiveSum& p0, const Morphism& sigma,
                         const Representation& n)
{
  const Algebra& alg = *n.algebra();
  std::vector<Index> row_off{0}, col_off{0};
  for (int u : p1.vertices)
    row_off.push_back(row_off.back() + n.dim(u));
  for (int v : p0.vertices)
    col_off.push_back(col_off.back() + n.dim(v));
  FpMatrix out(row_off.back(), col_off.back(), alg.modulus());
  for (int l = 0; l < p1.summands(); ++l) {
    const int u = p1.vertices[static_cast<std::size_t>(l)];
    const Index local = p1.generators[static_cast<std::size_t>(l)] - p1.module.offset(u);
    const FpMatrix& s = sigma.at(u);
    const Index base = p0.module.offset(u);
    for (Index r = 0; r < s.rows(); ++r) {
      const std::int64_t c = s(r, local);
      if (c == 0)
        continue;
      const auto [k, idx] = p0.coordinates[static_cast<std::size_t>(base + r)];
      const Path& path = alg.basis_path(idx);
      const FpMatrix act = c * n.path_action(path.source, path.arrows);
      const Index r0 = row_off[static_cast<std::size_t>(l)];
      const Index c0 = col_off[static_cast<std::size_t>(k)];
      out.set_block(r0, c0, out.block(r0, c0, act.rows(), act.cols()) + act);
    }
  }
  return out;
}

int ext_dim(int i, const Resolution& res, const Representation& n)
{
  if (i < 0)
    throw InputError("ext_dim: negative degree");
  const int len = res.length();
  if (res.status == ResolutionStatus::bound_exceeded && len < i + 1)
    throw UndecidableAtBound("ext_dim: resolution stops at P_" + std::to_string(len) + ", degree " +
                             std::to_string(i) + " needs P_" + std::to_string(i + 1));
  if (i > len)
    return 0;
  auto delta_rank = [&](int j) -> Index {
    // δ_j = Hom(d_{j+1}, N)
    if (j < 0 || j + 1 > len)
      return 0;
    return rank(induced_hom_map(res.terms[static_cast<std::size_t>(j) + 1], res.terms[static_cast<std::size_t>(j)],
                                res.differentials[static_cast<std::size_t>(j)], n));
  };
  const int h = yoneda_dimension(res.terms[static_cast<std::size_t>(i)], n);
  return static_cast<int>(h - delta_rank(i) - delta_rank(i - 1));
}

int ext_dim(int i, const Representation& m, const Representation& n)
{
  if (i < 0)
    throw InputError("ext_dim: negative degree");
  if (m.algebra() != n.algebra())
    throw InputError("ext_dim: representations over different algebras");
  return ext_dim(i, minimal_resolution(m, i + 1), n);
}

int hom_dimension_via(const ProjectivePresentation& pres, const Representation& n)
{
  return static_cast<int>(yoneda_dimension(pres.p0, n) - rank(induced_hom_map(pres.p1, pres.p0, pres.sigma, n)));
}

bool d_sigma_contains(const ProjectivePresentation& sigma, const Representation& x)
{
  if (sigma.p0.module.algebra() != x.algebra())
    throw InputError("d_sigma_contains: representations over different algebras");
  return rank(induced_hom_map(sigma.p1, sigma.p0, sigma.sigma, x)) == yoneda_dimension(sigma.p1, x);
}

InjectiveEnvelope injective_envelope(const Representation& m)
{
  const AlgebraPtr& algp = m.algebra();
  const Algebra& alg = *algp;
  const Prime p = alg.modulus();
  const std::vector<FpMatrix> soc = socle_subspaces(m);
  std::vector<int> vertices;
  std::vector<FpMatrix> functionals;  // 1 x dim M_v rows restricting to a dual basis of the socle
  for (int v = 0; v < alg.vertex_count(); ++v) {
    const FpMatrix& s = soc[static_cast<std::size_t>(v)];
    if (s.cols() == 0)
      continue;
    const FpMatrix phi = solve_linear(s.transpose(), FpMatrix::identity(s.cols(), p))->particular.transpose();
    for (Index j = 0; j < phi.rows(); ++j) {
      vertices.push_back(v);
      functionals.push_back(phi.block(j, 0, 1, phi.cols()));
    }
  }
  std::vector<Representation> parts;
  for (int v : vertices)
    parts.push_back(injective_module(algp, v));
  Representation e = direct_sum(algp, parts).sum;
  std::vector<FpMatrix> maps;
  for (int w = 0; w < alg.vertex_count(); ++w) {
    std::vector<FpMatrix> rows;
    for (std::size_t k = 0; k < vertices.size(); ++k)
      for (int idx : alg.basis_between(w, vertices[k])) {
        const Path& q = alg.basis_path(idx);
        rows.push_back(functionals[k] * m.path_action(w, q.arrows));
      }
    maps.push_back(vstack(rows, m.dim(w), p));
  }
  Morphism mono(m, e, std::move(maps));
  return {std::move(e), std::move(vertices), std::move(mono)};
}

bool is_essential_mono(const Morphism& f)
{
  if (!f.is_mono())
    return false;
  const std::vector<FpMatrix> soc = socle_subspaces(f.target());
  for (int v = 0; v < f.source().algebra()->vertex_count(); ++v)
    if (!in_column_space(f.at(v), soc[static_cast<std::size_t>(v)]))
      return false;
  return true;
}

ExtensionClasses extension_classes(const Representation& z, const Representation& x)
{
  if (z.algebra() != x.algebra())
    throw InputError("extension_classes: representations over different algebras");
  const AlgebraPtr& algp = z.algebra();
  const Algebra& alg = *algp;
  const Prime p = alg.modulus();
  ProjectiveCover cover = projective_cover(z);
  SubObject omega = kernel(cover.epi);
  ExtensionClasses out;
  if (omega.object.is_zero())
    return out;
  const std::vector<Morphism> hom = hom_space(omega.object, x);
  if (hom.empty())
    return out;
  std::vector<FpMatrix> flat;
  for (const auto& h : hom)
    flat.push_back(h.flatten());
  const Index flat_len = flat.front().rows();
  const FpMatrix h_basis = hstack(flat, flat_len, p);

  // Restrictions g∘ι for g running over a Yoneda basis of Hom(P0, X).
  const ProjectiveSum& p0 = cover.projective;
  std::vector<FpMatrix> restricted;
  for (int k = 0; k < p0.summands(); ++k) {
    const int v = p0.vertices[static_cast<std::size_t>(k)];
    for (Index e = 0; e < x.dim(v); ++e) {
      std::vector<FpMatrix> images;
      for (int l = 0; l < p0.summands(); ++l)
        images.emplace_back(x.dim(p0.vertices[static_cast<std::size_t>(l)]), 1, p);
      images[static_cast<std::size_t>(k)].set(e, 0, 1);
      restricted.push_back(compose(morphism_from_generators(p0, x, images), omega.inclusion).flatten());
    }
  }
  const FpMatrix coords = coordinates_in(h_basis, hstack(restricted, flat_len, p));
  const FpMatrix classes = complement_basis(column_space_basis(coords), h_basis.cols());
  out.dimension = static_cast<int>(classes.cols());

  const DirectSum xp = direct_sum(algp, {x, p0.module});
  for (Index c = 0; c < classes.cols(); ++c) {
    Morphism h = Morphism::zero(omega.object, x);
    for (Index i = 0; i < classes.rows(); ++i)
      if (classes(i, c) != 0)
        h = h + classes(i, c) * hom[static_cast<std::size_t>(i)];
    std::vector<FpMatrix> maps;
    for (int v = 0; v < alg.vertex_count(); ++v)
      maps.push_back(vstack({h.at(v), -omega.inclusion.at(v)}, omega.object.dim(v), p));
    out.middles.push_back(cokernel(Morphism(omega.object, xp.sum, std::move(maps))).object);
  }
  return out;
}

}  // namespace siltlab
