#include "siltlab/classes.hpp"

#include <algorithm>
#include <numeric>

#include "siltlab/error.hpp"
#include "siltlab/homological.hpp"

namespace siltlab {

namespace {

Morphism evaluation_map(const Representation& t, const Representation& m, const std::vector<Morphism>& maps)
{
  const Algebra& alg = *m.algebra();
  const DirectSum sum = direct_sum(m.algebra(), {t}, {static_cast<int>(maps.size())});
  std::vector<FpMatrix> vertex_maps;
  for (int v = 0; v < alg.vertex_count(); ++v) {
    std::vector<FpMatrix> parts;
    for (const auto& f : maps)
      parts.push_back(f.at(v));
    vertex_maps.push_back(hstack(parts, m.dim(v), alg.modulus()));
  }
  return {sum.sum, m, std::move(vertex_maps)};
}

bool kernel_generated(const Representation& t, const Morphism& epi)
{
  return trace_and_gen(t, kernel(epi).object).gen_member;
}

}  // namespace

const char* to_string(Verdict v) noexcept
{
  switch (v) {
    case Verdict::no: return "no";
    case Verdict::yes: return "yes";
    case Verdict::undecided: return "undecided";
  }
  return "undecided";
}

std::vector<FpMatrix> trace_subspaces(const Representation& t, const Representation& m)
{
  const Algebra& alg = *m.algebra();
  const std::vector<Morphism> basis = hom_space(t, m);
  std::vector<FpMatrix> out;
  for (int v = 0; v < alg.vertex_count(); ++v) {
    std::vector<FpMatrix> parts;
    for (const auto& f : basis)
      parts.push_back(f.at(v));
    out.push_back(column_space_basis(hstack(parts, m.dim(v), alg.modulus())));
  }
  return out;
}

TraceResult trace_and_gen(const Representation& t, const Representation& m)
{
  std::vector<FpMatrix> sub = trace_subspaces(t, m);
  bool full = true;
  for (int v = 0; v < m.algebra()->vertex_count(); ++v)
    full = full && sub[static_cast<std::size_t>(v)].cols() == m.dim(v);
  return {subrepresentation(m, sub), full};
}

MembershipWitness pres_contains(const Representation& t, const Representation& m, const PresOptions& options)
{
  if (t.algebra() != m.algebra())
    throw InputError("pres_contains: representations over different algebras");
  if (m.is_zero())
    return {Verdict::yes, "zero module", std::nullopt, std::nullopt};
  const std::vector<Morphism> basis = hom_space(t, m);
  const Morphism eval = evaluation_map(t, m, basis);
  if (!eval.is_epi())
    return {Verdict::no, "not T-generated", std::nullopt, std::nullopt};
  if (kernel_generated(t, eval))
    return {Verdict::yes, "kernel of the evaluation map is T-generated", std::nullopt, eval};
  if (options.gen_extension_closed)
    return {Verdict::no, "kernel of the evaluation map is not T-generated", std::nullopt, std::nullopt};

  // Precomposing with scalar automorphisms of T^n acts on the coefficient
  // matrix of a tuple in Hom(T, M)^n by row operations, and zero rows only add
  // T summands to the kernel. So only the row space matters: search the proper
  // nonzero subspaces of Hom(T, M), each by its reduced echelon basis.
  const auto d = static_cast<int>(basis.size());
  const std::int64_t p = m.modulus().value();
  std::int64_t tried = 0;
  for (int r = 1; r < d; ++r) {
    std::vector<int> pivots(static_cast<std::size_t>(r));
    std::iota(pivots.begin(), pivots.end(), 0);
    for (;;) {
      // free slots: (row i, column j) with j > pivots[i] and j not a pivot
      std::vector<std::pair<int, int>> slots;
      for (int i = 0; i < r; ++i)
        for (int j = pivots[static_cast<std::size_t>(i)] + 1; j < d; ++j)
          if (!std::binary_search(pivots.begin(), pivots.end(), j))
            slots.emplace_back(i, j);
      std::int64_t space = 1;
      for (std::size_t k = 0; k < slots.size() && space <= options.fallback_cap; ++k)
        space *= p;
      for (std::int64_t code = 0; code < space; ++code) {
        if (++tried > options.fallback_cap)
          return {Verdict::undecided,
                  "subspace search stopped after " + std::to_string(options.fallback_cap) + " subspaces of Hom(T, M)",
                  std::nullopt, std::nullopt};
        std::vector<Morphism> maps;
        for (int i = 0; i < r; ++i)
          maps.push_back(basis[static_cast<std::size_t>(pivots[static_cast<std::size_t>(i)])]);
        std::int64_t k = code;
        for (const auto& [i, j] : slots) {
          const std::int64_t c = k % p;
          k /= p;
          if (c != 0)
            maps[static_cast<std::size_t>(i)] = maps[static_cast<std::size_t>(i)] + c * basis[static_cast<std::size_t>(j)];
        }
        const Morphism pi = evaluation_map(t, m, maps);
        if (pi.is_epi() && kernel_generated(t, pi))
          return {Verdict::yes, "T^" + std::to_string(r) + " ->> M with T-generated kernel", std::nullopt, pi};
      }
      int i = r - 1;
      while (i >= 0 && pivots[static_cast<std::size_t>(i)] == d - r + i)
        --i;
      if (i < 0)
        break;
      ++pivots[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < r; ++j)
        pivots[static_cast<std::size_t>(j)] = pivots[static_cast<std::size_t>(j) - 1] + 1;
    }
  }
  return {Verdict::no, "no subspace of Hom(T, M) gives an epimorphism with T-generated kernel", std::nullopt,
          std::nullopt};
}

bool add_contains(const Representation& t, const Representation& m, const Corpus& corpus)
{
  const std::vector<int> mt = decompose(t, corpus);
  const std::vector<int> mm = decompose(m, corpus);
  for (std::size_t i = 0; i < mm.size(); ++i)
    if (mm[i] > 0 && mt[i] == 0)
      return false;
  return true;
}

MembershipWitness perp_contains(const ClassQuery& query, const Representation& m)
{
  if (query.degrees.empty())
    throw InputError("perp_contains: empty degree set");
  const int top = *std::max_element(query.degrees.begin(), query.degrees.end());
  if (*std::min_element(query.degrees.begin(), query.degrees.end()) < 0)
    throw InputError("perp_contains: negative degree");
  const bool right = query.side == PerpSide::right;
  const Representation& resolved = right ? query.anchor : m;
  const Representation& other = right ? m : query.anchor;
  const Resolution res = minimal_resolution(resolved, top + 1);
  std::vector<int> degrees = query.degrees;
  std::sort(degrees.begin(), degrees.end());
  for (int i : degrees) {
    const int e = ext_dim(i, res, other);
    if (e != 0) {
      const std::string pair = right ? "(T, M)" : "(M, T)";
      return {Verdict::no, "Ext^" + std::to_string(i) + pair + " has dimension " + std::to_string(e), i,
              std::nullopt};
    }
  }
  return {Verdict::yes, "", std::nullopt, std::nullopt};
}

std::vector<int> left_perp0_of_gen(const Representation& t, const Corpus& corpus)
{
  std::vector<int> gen;
  for (int j = 0; j < corpus.size(); ++j)
    if (trace_and_gen(t, corpus.member(j)).gen_member)
      gen.push_back(j);
  std::vector<int> out;
  for (int k = 0; k < corpus.size(); ++k)
    if (std::all_of(gen.begin(), gen.end(), [&](int j) { return corpus.hom(k, j) == 0; }))
      out.push_back(k);
  return out;
}

TorsionDecomposition torsion_decompose(const Representation& t, const Representation& m, const Corpus* corpus)
{
  TraceResult tr = trace_and_gen(t, m);
  QuotientObject q = cokernel(tr.trace.inclusion);
  const bool perp0 = hom_dimension(t, q.object) == 0;
  std::string warning;
  if (corpus == nullptr) {
    warning = "presilting precondition not checked";
  } else {
    const Resolution res = minimal_resolution(t, 2);
    for (const auto& g : corpus->members())
      if (trace_and_gen(t, g).gen_member && ext_dim(1, res, g) != 0) {
        warning = "T is not presilting; (Gen T, T^perp0) need not be a torsion pair";
        break;
      }
  }
  return {std::move(tr.trace), std::move(q), perp0, std::move(warning)};
}

SubfacFacsub subfac_facsub(const Representation& t, const Representation& s)
{
  const Algebra& alg = *t.algebra();
  const Quiver& q = alg.quiver();
  if (s.algebra() != t.algebra())
    throw InputError("subfac_facsub: representations over different algebras");
  if (s.total_dimension() != 1)
    throw InputError("subfac_facsub: second argument is not simple");
  int v = 0;
  while (s.dim(v) == 0)
    ++v;
  SubfacFacsub out;
  out.composition_factor = t.dim(v) > 0;
  for (Index c = 0; c < t.dim(v) && !(out.in_subfac && out.in_facsub); ++c) {
    FpMatrix x(t.total_dimension(), 1, alg.modulus());
    x.set(t.offset(v) + c, 0, 1);
    if (!out.in_subfac) {
      // Y = T / R(Jx): the image of x is killed by every arrow.
      std::vector<FpMatrix> jx;
      for (int a : q.arrows_from(v)) {
        const int w = q.arrow(a).target;
        FpMatrix g(t.total_dimension(), 1, alg.modulus());
        g.set_block(t.offset(w), 0, t.arrow_map(a).col(c));
        jx.push_back(std::move(g));
      }
      SubQuotient y = sub_quotient(t, jx, SubQuotientMode::quotient);
      const FpMatrix xbar = y.structural_map.at(v).col(c);
      if (!xbar.is_zero() && in_column_space(socle_subspaces(y.object)[static_cast<std::size_t>(v)], xbar)) {
        out.in_subfac = true;
        out.subfac_witness = std::move(y.object);
      }
    }
    if (!out.in_facsub) {
      SubQuotient n = sub_quotient(t, {x}, SubQuotientMode::submodule);
      if (top_socle_radical(n.object).top.object.dim(v) > 0) {
        out.in_facsub = true;
        out.facsub_witness = std::move(n.object);
      }
    }
  }
  return out;
}

}  // namespace siltlab
