#include "siltlab/representation.hpp"

#include <numeric>
#include <random>

#include "siltlab/error.hpp"

namespace siltlab {

namespace {

void require_same_algebra(const Representation& a, const Representation& b, const char* what)
{
  if (a.algebra() != b.algebra())
    throw InputError(std::string(what) + ": representations over different algebras");
}

std::vector<FpMatrix> span_per_vertex(const Representation& m, const std::vector<FpMatrix>& parts)
{
  std::vector<FpMatrix> out;
  out.reserve(parts.size());
  for (const auto& b : parts)
    out.push_back(column_space_basis(b));
  (void)m;
  return out;
}

constexpr std::int64_t kExhaustiveIsoLimit = 6561;  // 3^8
constexpr int kIsoSamples = 4096;

}  // namespace

Representation::Representation(AlgebraPtr algebra, std::vector<int> dims, std::vector<FpMatrix> arrow_maps)
    : algebra_(std::move(algebra)), dims_(std::move(dims)), maps_(std::move(arrow_maps))
{
  if (!algebra_)
    throw InputError("representation: null algebra");
  if (static_cast<int>(dims_.size()) != algebra_->vertex_count())
    throw InputError("representation: dimension vector has " + std::to_string(dims_.size()) + " entries for " +
                     std::to_string(algebra_->vertex_count()) + " vertices");
  if (static_cast<int>(maps_.size()) != algebra_->quiver().arrow_count())
    throw InputError("representation: expected one matrix per arrow");
  for (int d : dims_)
    if (d < 0)
      throw InputError("representation: negative dimension");
}

Representation::Representation(AlgebraPtr algebra) : algebra_(std::move(algebra))
{
  if (!algebra_)
    throw InputError("representation: null algebra");
  dims_.assign(static_cast<std::size_t>(algebra_->vertex_count()), 0);
  for (int a = 0; a < algebra_->quiver().arrow_count(); ++a)
    maps_.emplace_back(0, 0, algebra_->modulus());
}

int Representation::total_dimension() const noexcept { return std::accumulate(dims_.begin(), dims_.end(), 0); }

int Representation::offset(int v) const
{
  int off = 0;
  for (int u = 0; u < v; ++u)
    off += dims_.at(static_cast<std::size_t>(u));
  return off;
}

FpMatrix Representation::path_action(int source, const std::vector<int>& arrows) const
{
  FpMatrix acc = FpMatrix::identity(dim(source), modulus());
  int at = source;
  for (int a : arrows) {
    const Arrow& arr = algebra_->quiver().arrow(a);
    if (arr.source != at)
      throw InputError("path_action: arrows do not compose");
    acc = maps_.at(static_cast<std::size_t>(a)) * acc;
    at = arr.target;
  }
  return acc;
}

FpMatrix Representation::basis_action(int i) const
{
  const Path& b = algebra_->basis_path(i);
  return path_action(b.source, b.arrows);
}

std::vector<std::string> validate(const Representation& m)
{
  std::vector<std::string> issues;
  const Algebra& alg = *m.algebra();
  const Quiver& q = alg.quiver();
  for (int a = 0; a < q.arrow_count(); ++a) {
    const Arrow& arr = q.arrow(a);
    const FpMatrix& mat = m.arrow_map(a);
    if (mat.modulus() != alg.modulus())
      issues.push_back("arrow " + arr.name + ": matrix over the wrong field");
    if (mat.rows() != m.dim(arr.target) || mat.cols() != m.dim(arr.source))
      issues.push_back("arrow " + arr.name + ": matrix is " + std::to_string(mat.rows()) + "x" +
                       std::to_string(mat.cols()) + ", expected " + std::to_string(m.dim(arr.target)) + "x" +
                       std::to_string(m.dim(arr.source)));
  }
  if (!issues.empty())
    return issues;
  const auto& rels = alg.relations().relations;
  for (std::size_t r = 0; r < rels.size(); ++r) {
    const auto& terms = rels[r].terms;
    if (terms.empty())
      continue;
    const int s = q.arrow(terms.front().arrows.front()).source;
    const int t = q.arrow(terms.front().arrows.back()).target;
    FpMatrix acc(m.dim(t), m.dim(s), alg.modulus());
    for (const auto& term : terms)
      acc = acc + term.coefficient * m.path_action(s, term.arrows);
    if (!acc.is_zero())
      issues.push_back("relation " + std::to_string(r + 1) + " does not act as zero");
  }
  return issues;
}

Morphism::Morphism(Representation source, Representation target, std::vector<FpMatrix> vertex_maps)
    : source_(std::move(source)), target_(std::move(target)), maps_(std::move(vertex_maps))
{
  require_same_algebra(source_, target_, "morphism");
  if (static_cast<int>(maps_.size()) != source_.algebra()->vertex_count())
    throw InputError("morphism: expected one matrix per vertex");
  for (int v = 0; v < source_.algebra()->vertex_count(); ++v) {
    const FpMatrix& f = maps_[static_cast<std::size_t>(v)];
    if (f.rows() != target_.dim(v) || f.cols() != source_.dim(v))
      throw InputError("morphism: vertex map at " + source_.algebra()->quiver().vertex_name(v) + " has wrong shape");
  }
}

Morphism Morphism::zero(const Representation& source, const Representation& target)
{
  std::vector<FpMatrix> maps;
  for (int v = 0; v < source.algebra()->vertex_count(); ++v)
    maps.emplace_back(target.dim(v), source.dim(v), source.modulus());
  return {source, target, std::move(maps)};
}

Morphism Morphism::identity(const Representation& m)
{
  std::vector<FpMatrix> maps;
  for (int v = 0; v < m.algebra()->vertex_count(); ++v)
    maps.push_back(FpMatrix::identity(m.dim(v), m.modulus()));
  return {m, m, std::move(maps)};
}

Morphism Morphism::from_flat(const Representation& source, const Representation& target, const FpMatrix& column)
{
  std::vector<FpMatrix> maps;
  Index k = 0;
  for (int v = 0; v < source.algebra()->vertex_count(); ++v) {
    FpMatrix f(target.dim(v), source.dim(v), source.modulus());
    for (Index i = 0; i < f.rows(); ++i)
      for (Index j = 0; j < f.cols(); ++j)
        f.set(i, j, column(k++, 0));
    maps.push_back(std::move(f));
  }
  if (k != column.rows())
    throw InputError("from_flat: coordinate vector has the wrong length");
  return {source, target, std::move(maps)};
}

bool Morphism::is_natural() const
{
  const Quiver& q = source_.algebra()->quiver();
  for (int a = 0; a < q.arrow_count(); ++a) {
    const Arrow& arr = q.arrow(a);
    if (!(target_.arrow_map(a) * at(arr.source) == at(arr.target) * source_.arrow_map(a)))
      return false;
  }
  return true;
}

bool Morphism::is_zero() const
{
  for (const auto& f : maps_)
    if (!f.is_zero())
      return false;
  return true;
}

bool Morphism::is_mono() const
{
  for (const auto& f : maps_)
    if (rank(f) != f.cols())
      return false;
  return true;
}

bool Morphism::is_epi() const
{
  for (const auto& f : maps_)
    if (rank(f) != f.rows())
      return false;
  return true;
}

bool Morphism::is_iso() const
{
  for (const auto& f : maps_)
    if (!is_invertible(f))
      return false;
  return true;
}

FpMatrix Morphism::flatten() const
{
  Index n = 0;
  for (const auto& f : maps_)
    n += f.rows() * f.cols();
  FpMatrix out(n, 1, source_.modulus());
  Index k = 0;
  for (const auto& f : maps_)
    for (Index i = 0; i < f.rows(); ++i)
      for (Index j = 0; j < f.cols(); ++j)
        out.set(k++, 0, f(i, j));
  return out;
}

FpMatrix Morphism::total_matrix() const { return block_diagonal(maps_, source_.modulus()); }

Morphism operator+(const Morphism& f, const Morphism& g)
{
  if (!same_shape(f.source_, g.source_) || !same_shape(f.target_, g.target_))
    throw InputError("morphism sum: mismatched source or target");
  std::vector<FpMatrix> maps;
  for (std::size_t v = 0; v < f.maps_.size(); ++v)
    maps.push_back(f.maps_[v] + g.maps_[v]);
  return {f.source_, f.target_, std::move(maps)};
}

Morphism operator*(std::int64_t s, const Morphism& f)
{
  std::vector<FpMatrix> maps;
  for (const auto& m : f.maps_)
    maps.push_back(s * m);
  return {f.source_, f.target_, std::move(maps)};
}

Morphism compose(const Morphism& g, const Morphism& f)
{
  if (!same_shape(g.source(), f.target()))
    throw InputError("compose: target of f is not the source of g");
  std::vector<FpMatrix> maps;
  for (int v = 0; v < f.source().algebra()->vertex_count(); ++v)
    maps.push_back(g.at(v) * f.at(v));
  return {f.source(), g.target(), std::move(maps)};
}

namespace {

// Naturality system for Hom(M, N): one unknown per entry of each f_v.
FpMatrix naturality_system(const Representation& m, const Representation& n)
{
  const Algebra& alg = *m.algebra();
  const Quiver& q = alg.quiver();
  const int nv = alg.vertex_count();
  std::vector<Index> var_off(static_cast<std::size_t>(nv) + 1, 0);
  for (int v = 0; v < nv; ++v)
    var_off[static_cast<std::size_t>(v) + 1] = var_off[static_cast<std::size_t>(v)] + Index{n.dim(v)} * m.dim(v);
  Index eq_count = 0;
  for (const auto& arr : q.arrows())
    eq_count += Index{n.dim(arr.target)} * m.dim(arr.source);
  FpMatrix sys(eq_count, var_off.back(), alg.modulus());
  Index row = 0;
  for (int a = 0; a < q.arrow_count(); ++a) {
    const Arrow& arr = q.arrow(a);
    const int u = arr.source;
    const int w = arr.target;
    const FpMatrix& na = n.arrow_map(a);
    const FpMatrix& ma = m.arrow_map(a);
    const Index mu = m.dim(u), mw = m.dim(w), nu = n.dim(u), nw = n.dim(w);
    for (Index i = 0; i < nw; ++i) {
      for (Index j = 0; j < mu; ++j) {
        // (N(a) f_u)[i][j] - (f_w M(a))[i][j]
        for (Index k = 0; k < nu; ++k)
          if (na(i, k) != 0) {
            const Index var = var_off[static_cast<std::size_t>(u)] + k * mu + j;
            sys.set(row, var, sys(row, var) + na(i, k));
          }
        for (Index k = 0; k < mw; ++k)
          if (ma(k, j) != 0) {
            const Index var = var_off[static_cast<std::size_t>(w)] + i * mw + k;
            sys.set(row, var, sys(row, var) - ma(k, j));
          }
        ++row;
      }
    }
  }
  return sys;
}

}  // namespace

std::vector<Morphism> hom_space(const Representation& m, const Representation& n)
{
  require_same_algebra(m, n, "hom_space");
  const FpMatrix sys = naturality_system(m, n);
  const FpMatrix k = kernel_basis(sys);
  std::vector<Morphism> out;
  out.reserve(static_cast<std::size_t>(k.cols()));
  for (Index c = 0; c < k.cols(); ++c)
    out.push_back(Morphism::from_flat(m, n, k.col(c)));
  return out;
}

int hom_dimension(const Representation& m, const Representation& n)
{
  require_same_algebra(m, n, "hom_dimension");
  const FpMatrix sys = naturality_system(m, n);
  return static_cast<int>(sys.cols() - rank(sys));
}

SubObject subrepresentation(const Representation& m, const std::vector<FpMatrix>& subspaces)
{
  const Algebra& alg = *m.algebra();
  const Quiver& q = alg.quiver();
  if (static_cast<int>(subspaces.size()) != alg.vertex_count())
    throw InputError("subrepresentation: expected one subspace per vertex");
  std::vector<FpMatrix> basis = span_per_vertex(m, subspaces);
  std::vector<int> dims;
  for (int v = 0; v < alg.vertex_count(); ++v) {
    if (basis[static_cast<std::size_t>(v)].rows() != m.dim(v))
      throw InputError("subrepresentation: subspace vectors have the wrong length");
    dims.push_back(static_cast<int>(basis[static_cast<std::size_t>(v)].cols()));
  }
  std::vector<FpMatrix> maps;
  for (int a = 0; a < q.arrow_count(); ++a) {
    const Arrow& arr = q.arrow(a);
    const FpMatrix image = m.arrow_map(a) * basis[static_cast<std::size_t>(arr.source)];
    auto sol = solve_linear(basis[static_cast<std::size_t>(arr.target)], image);
    if (!sol)
      throw InputError("subrepresentation: subspaces are not stable under arrow " + arr.name);
    maps.push_back(std::move(sol->particular));
  }
  Representation sub(m.algebra(), dims, std::move(maps));
  Morphism inc(sub, m, std::move(basis));
  return {std::move(sub), std::move(inc)};
}

QuotientObject quotient(const Representation& m, const std::vector<FpMatrix>& subspaces)
{
  const SubObject s = subrepresentation(m, subspaces);
  return cokernel(s.inclusion);
}

SubObject kernel(const Morphism& f)
{
  std::vector<FpMatrix> ks;
  for (int v = 0; v < f.source().algebra()->vertex_count(); ++v)
    ks.push_back(kernel_basis(f.at(v)));
  return subrepresentation(f.source(), ks);
}

QuotientObject cokernel(const Morphism& f)
{
  const Representation& n = f.target();
  const Algebra& alg = *n.algebra();
  const Quiver& q = alg.quiver();
  std::vector<FpMatrix> proj;
  std::vector<FpMatrix> section;
  std::vector<int> dims;
  for (int v = 0; v < alg.vertex_count(); ++v) {
    // rows of Q_v span the annihilator of im f_v
    FpMatrix qv = kernel_basis(f.at(v).transpose()).transpose();
    dims.push_back(static_cast<int>(qv.rows()));
    auto sol = solve_linear(qv, FpMatrix::identity(qv.rows(), alg.modulus()));
    section.push_back(std::move(sol->particular));
    proj.push_back(std::move(qv));
  }
  std::vector<FpMatrix> maps;
  for (int a = 0; a < q.arrow_count(); ++a) {
    const Arrow& arr = q.arrow(a);
    maps.push_back(proj[static_cast<std::size_t>(arr.target)] * n.arrow_map(a) *
                   section[static_cast<std::size_t>(arr.source)]);
  }
  Representation cok(n.algebra(), dims, std::move(maps));
  Morphism pi(n, cok, std::move(proj));
  return {std::move(cok), std::move(pi)};
}

Factorization factorize(const Morphism& f)
{
  const Algebra& alg = *f.source().algebra();
  std::vector<FpMatrix> images;
  for (int v = 0; v < alg.vertex_count(); ++v)
    images.push_back(column_space_basis(f.at(v)));
  SubObject image = subrepresentation(f.target(), images);
  std::vector<FpMatrix> coimage;
  for (int v = 0; v < alg.vertex_count(); ++v)
    coimage.push_back(coordinates_in(image.inclusion.at(v), f.at(v)));
  Morphism coimage_map(f.source(), image.object, std::move(coimage));
  return Factorization{kernel(f), image.object, std::move(coimage_map), image.inclusion, cokernel(f)};
}

DirectSum direct_sum(const AlgebraPtr& algebra, const std::vector<Representation>& modules,
                     const std::vector<int>& multiplicities)
{
  if (modules.size() != multiplicities.size())
    throw InputError("direct_sum: one multiplicity per module required");
  std::vector<Representation> parts;
  for (std::size_t i = 0; i < modules.size(); ++i) {
    if (modules[i].algebra() != algebra)
      throw InputError("direct_sum: module over a different algebra");
    if (multiplicities[i] < 0)
      throw InputError("direct_sum: negative multiplicity");
    for (int k = 0; k < multiplicities[i]; ++k)
      parts.push_back(modules[i]);
  }
  const Prime p = algebra->modulus();
  const int nv = algebra->vertex_count();
  const Quiver& q = algebra->quiver();
  std::vector<int> dims(static_cast<std::size_t>(nv), 0);
  for (const auto& m : parts)
    for (int v = 0; v < nv; ++v)
      dims[static_cast<std::size_t>(v)] += m.dim(v);
  std::vector<FpMatrix> maps;
  for (int a = 0; a < q.arrow_count(); ++a) {
    std::vector<FpMatrix> blocks;
    for (const auto& m : parts)
      blocks.push_back(m.arrow_map(a));
    maps.push_back(block_diagonal(blocks, p));
  }
  Representation sum(algebra, dims, std::move(maps));
  DirectSum out{sum, {}, {}};
  std::vector<int> at(static_cast<std::size_t>(nv), 0);
  for (const auto& m : parts) {
    std::vector<FpMatrix> inj, proj;
    for (int v = 0; v < nv; ++v) {
      FpMatrix i(sum.dim(v), m.dim(v), p);
      i.set_block(at[static_cast<std::size_t>(v)], 0, FpMatrix::identity(m.dim(v), p));
      proj.push_back(i.transpose());
      inj.push_back(std::move(i));
      at[static_cast<std::size_t>(v)] += m.dim(v);
    }
    out.injections.emplace_back(m, sum, std::move(inj));
    out.projections.emplace_back(sum, m, std::move(proj));
  }
  return out;
}

DirectSum direct_sum(const AlgebraPtr& algebra, const std::vector<Representation>& modules)
{
  return direct_sum(algebra, modules, std::vector<int>(modules.size(), 1));
}

IsomorphismResult is_isomorphic(const Representation& m, const Representation& n)
{
  require_same_algebra(m, n, "is_isomorphic");
  if (m.dims() != n.dims())
    return {};
  if (m.is_zero())
    return {true, Morphism::zero(m, n)};
  const Quiver& q = m.algebra()->quiver();
  for (int a = 0; a < q.arrow_count(); ++a)
    if (rank(m.arrow_map(a)) != rank(n.arrow_map(a)))
      return {};
  const std::vector<Morphism> basis = hom_space(m, n);
  const auto d = static_cast<int>(basis.size());
  if (d == 0 || d != hom_dimension(m, m) || d != hom_dimension(n, n))
    return {};

  const std::int64_t p = m.modulus().value();
  auto combine = [&](const std::vector<std::int64_t>& coeffs) {
    Morphism f = Morphism::zero(m, n);
    for (int i = 0; i < d; ++i)
      if (coeffs[static_cast<std::size_t>(i)] != 0)
        f = f + coeffs[static_cast<std::size_t>(i)] * basis[static_cast<std::size_t>(i)];
    return f;
  };

  std::int64_t space = 1;
  bool small = true;
  for (int i = 0; i < d; ++i) {
    space *= p;
    if (space > kExhaustiveIsoLimit) {
      small = false;
      break;
    }
  }
  if (d == 1) {
    Morphism f = basis.front();
    if (f.is_iso())
      return {true, std::move(f)};
    return {};
  }
  if (small) {
    std::vector<std::int64_t> coeffs(static_cast<std::size_t>(d), 0);
    for (std::int64_t code = 1; code < space; ++code) {
      std::int64_t c = code;
      for (int i = 0; i < d; ++i) {
        coeffs[static_cast<std::size_t>(i)] = c % p;
        c /= p;
      }
      Morphism f = combine(coeffs);
      if (f.is_iso())
        return {true, std::move(f)};
    }
    return {};
  }
  std::mt19937_64 rng(0x5117AB5EEDULL);
  std::uniform_int_distribution<std::int64_t> dist(0, p - 1);
  std::vector<std::int64_t> coeffs(static_cast<std::size_t>(d));
  for (int s = 0; s < kIsoSamples; ++s) {
    for (auto& c : coeffs)
      c = dist(rng);
    Morphism f = combine(coeffs);
    if (f.is_iso())
      return {true, std::move(f)};
  }
  throw InfeasibleError("is_isomorphic: no invertible morphism among " + std::to_string(kIsoSamples) +
                        " samples of a " + std::to_string(d) + "-dimensional Hom space; verdict refused");
}

std::vector<FpMatrix> radical_subspaces(const Representation& m)
{
  const Algebra& alg = *m.algebra();
  const Quiver& q = alg.quiver();
  std::vector<FpMatrix> out;
  for (int w = 0; w < alg.vertex_count(); ++w) {
    std::vector<FpMatrix> parts;
    for (int a : q.arrows_into(w))
      parts.push_back(m.arrow_map(a));
    out.push_back(column_space_basis(hstack(parts, m.dim(w), alg.modulus())));
  }
  return out;
}

std::vector<FpMatrix> socle_subspaces(const Representation& m)
{
  const Algebra& alg = *m.algebra();
  const Quiver& q = alg.quiver();
  std::vector<FpMatrix> out;
  for (int u = 0; u < alg.vertex_count(); ++u) {
    std::vector<FpMatrix> parts;
    for (int a : q.arrows_from(u))
      parts.push_back(m.arrow_map(a));
    out.push_back(kernel_basis(vstack(parts, m.dim(u), alg.modulus())));
  }
  return out;
}

Layers top_socle_radical(const Representation& m)
{
  SubObject rad = subrepresentation(m, radical_subspaces(m));
  QuotientObject top = cokernel(rad.inclusion);
  return {std::move(rad), std::move(top), subrepresentation(m, socle_subspaces(m))};
}

std::vector<int> composition_factors(const Representation& m) { return m.dims(); }

std::vector<FpMatrix> generated_subspaces(const Representation& m, std::vector<FpMatrix> seeds)
{
  const Algebra& alg = *m.algebra();
  const Quiver& q = alg.quiver();
  for (auto& s : seeds)
    s = column_space_basis(s);
  bool changed = true;
  while (changed) {
    changed = false;
    for (int a = 0; a < q.arrow_count(); ++a) {
      const Arrow& arr = q.arrow(a);
      auto& tgt = seeds[static_cast<std::size_t>(arr.target)];
      const FpMatrix img = m.arrow_map(a) * seeds[static_cast<std::size_t>(arr.source)];
      FpMatrix merged = column_space_basis(hstack({tgt, img}, m.dim(arr.target), alg.modulus()));
      if (merged.cols() != tgt.cols()) {
        tgt = std::move(merged);
        changed = true;
      }
    }
  }
  return seeds;
}

SubQuotient sub_quotient(const Representation& m, const std::vector<FpMatrix>& generators, SubQuotientMode mode)
{
  const Algebra& alg = *m.algebra();
  const Prime p = alg.modulus();
  std::vector<FpMatrix> seeds;
  for (int v = 0; v < alg.vertex_count(); ++v)
    seeds.emplace_back(m.dim(v), 0, p);
  for (const auto& g : generators) {
    if (g.cols() != 1 || g.rows() != m.total_dimension() || g.modulus() != p)
      throw InputError("sub_quotient: generator is not a vector of the total space");
    // e_v·g is the vertex component; each lands in the submodule
    for (int v = 0; v < alg.vertex_count(); ++v) {
      FpMatrix comp = g.block(m.offset(v), 0, m.dim(v), 1);
      if (!comp.is_zero())
        seeds[static_cast<std::size_t>(v)] = hstack({seeds[static_cast<std::size_t>(v)], comp}, m.dim(v), p);
    }
  }
  std::vector<FpMatrix> gen = generated_subspaces(m, std::move(seeds));
  if (mode == SubQuotientMode::submodule) {
    SubObject s = subrepresentation(m, gen);
    return {std::move(s.object), std::move(s.inclusion), std::move(gen)};
  }
  QuotientObject qo = quotient(m, gen);
  return {std::move(qo.object), std::move(qo.projection), std::move(gen)};
}

bool same_shape(const Representation& a, const Representation& b)
{
  return a.algebra() == b.algebra() && a.dims() == b.dims();
}

bool operator==(const Representation& a, const Representation& b)
{
  if (!same_shape(a, b))
    return false;
  for (std::size_t i = 0; i < a.arrow_maps().size(); ++i)
    if (!(a.arrow_maps()[i] == b.arrow_maps()[i]))
      return false;
  return true;
}

}  // namespace siltlab
