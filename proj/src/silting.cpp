#include "siltlab/silting.hpp"

#include <algorithm>
#include <sstream>

#include "siltlab/error.hpp"
#include "siltlab/standard_modules.hpp"

namespace siltlab {

namespace {

RouteVerdict route(std::string name, bool ok, std::string witness = "")
{
  return {std::move(name), ok ? Verdict::yes : Verdict::no, ok ? std::string() : std::move(witness)};
}

std::string trim(const std::string& s)
{
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos)
    return "";
  const auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

}  // namespace

Workbench::Workbench(Corpus corpus, WorkbenchOptions options)
    : corpus_(std::move(corpus)), options_(options)
{
  const AlgebraPtr& alg = corpus_.algebra();
  bound_ = options_.resolution_bound < 0 ? default_resolution_bound(*alg) : options_.resolution_bound;
  const int n = corpus_.size();
  const int nv = alg->vertex_count();
  for (const auto& m : corpus_.members()) {
    presentations_.push_back(minimal_presentation(m));
    resolutions_.push_back(minimal_resolution(m, bound_));
    const Resolution& r = resolutions_.back();
    pd_.push_back(r.status == ResolutionStatus::terminated ? ProjectiveDimension{r.length(), bound_}
                                                           : ProjectiveDimension{std::nullopt, bound_});
  }
  trace_.resize(static_cast<std::size_t>(n));
  dsigma_.assign(static_cast<std::size_t>(n), std::vector<bool>(static_cast<std::size_t>(n), false));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      trace_[static_cast<std::size_t>(i)].push_back(trace_subspaces(corpus_.member(i), corpus_.member(j)));
      dsigma_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          d_sigma_contains(presentations_[static_cast<std::size_t>(i)], corpus_.member(j));
    }
  hom_projective_.assign(static_cast<std::size_t>(nv), std::vector<int>(static_cast<std::size_t>(n), 0));
  hom_injective_.assign(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(nv), 0));
  for (int v = 0; v < nv; ++v) {
    const Representation p = projective_module(alg, v);
    const Representation q = injective_module(alg, v);
    for (int j = 0; j < n; ++j) {
      hom_projective_[static_cast<std::size_t>(v)][static_cast<std::size_t>(j)] = hom_dimension(p, corpus_.member(j));
      hom_injective_[static_cast<std::size_t>(j)][static_cast<std::size_t>(v)] = hom_dimension(corpus_.member(j), q);
    }
  }
}

std::vector<Candidate> Workbench::candidates(int max_summands) const
{
  const int n = corpus_.size();
  std::vector<Candidate> out;
  const int top = std::min(max_summands, n);
  for (int k = 0; k <= top; ++k) {
    // lexicographic k-subsets of {0..n-1}
    Candidate c(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i)
      c[static_cast<std::size_t>(i)] = i;
    for (;;) {
      out.push_back(c);
      int i = k - 1;
      while (i >= 0 && c[static_cast<std::size_t>(i)] == n - k + i)
        --i;
      if (i < 0)
        break;
      ++c[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < k; ++j)
        c[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(j) - 1] + 1;
    }
  }
  return out;
}

Representation Workbench::module(const Candidate& c) const
{
  std::vector<Representation> parts;
  for (int i : c)
    parts.push_back(corpus_.member(i));
  return direct_sum(algebra(), parts).sum;
}

std::string Workbench::id(const Candidate& c) const
{
  if (c.empty())
    return "0";
  std::string out;
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (k > 0)
      out += '+';
    out += corpus_.name(c[k]);
  }
  return out;
}

Candidate Workbench::parse(const std::string& expression) const
{
  const std::string expr = trim(expression);
  if (expr.empty())
    throw InputError("empty module expression");
  if (expr == "0")
    return {};
  Candidate out;
  std::stringstream in(expr);
  std::string tok;
  while (std::getline(in, tok, '+')) {
    tok = trim(tok);
    const auto idx = corpus_.find(tok);
    if (!idx)
      throw InputError("unknown module name '" + tok + "' in expression '" + expr + "'");
    out.push_back(*idx);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Candidate Workbench::candidate_of(const Representation& t) const
{
  const std::vector<int> mult = decompose(t, corpus_);
  Candidate out;
  for (std::size_t i = 0; i < mult.size(); ++i)
    if (mult[i] > 0)
      out.push_back(static_cast<int>(i));
  return out;
}

int Workbench::ext(int degree, int i, int j) const
{
  const auto key = std::make_tuple(degree, i, j);
  const auto it = ext_cache_.find(key);
  if (it != ext_cache_.end())
    return it->second;
  ++work_;
  const int e = ext_dim(degree, resolutions_.at(static_cast<std::size_t>(i)), corpus_.member(j));
  ext_cache_.emplace(key, e);
  return e;
}

int Workbench::hom_to(const Candidate& c, int j) const
{
  int d = 0;
  for (int i : c)
    d += corpus_.hom(i, j);
  work_ += static_cast<std::int64_t>(c.size());
  return d;
}

int Workbench::ext_to(int degree, const Candidate& c, int j) const
{
  if (degree == 0)
    return hom_to(c, j);
  int d = 0;
  for (int i : c)
    d += ext(degree, i, j);
  work_ += static_cast<std::int64_t>(c.size());
  return d;
}

std::optional<int> Workbench::projective_dimension(const Candidate& c) const
{
  int pd = 0;
  for (int i : c) {
    const auto& p = pd_[static_cast<std::size_t>(i)];
    if (!p.decided())
      return std::nullopt;
    pd = std::max(pd, *p.value);
  }
  return pd;
}

ClassMask Workbench::gen(const Candidate& c) const
{
  const Algebra& alg = *algebra();
  ClassMask out(static_cast<std::size_t>(corpus_.size()), false);
  for (int j = 0; j < corpus_.size(); ++j) {
    const Representation& x = corpus_.member(j);
    bool full = !c.empty();
    for (int v = 0; v < alg.vertex_count() && full; ++v) {
      std::vector<FpMatrix> parts;
      for (int i : c)
        parts.push_back(trace_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)][static_cast<std::size_t>(v)]);
      full = rank(hstack(parts, x.dim(v), alg.modulus())) == x.dim(v);
    }
    work_ += static_cast<std::int64_t>(c.size());
    out[static_cast<std::size_t>(j)] = full;
  }
  return out;
}

ClassMask Workbench::d_sigma(const Candidate& c) const
{
  ClassMask out(static_cast<std::size_t>(corpus_.size()), true);
  for (int j = 0; j < corpus_.size(); ++j)
    for (int i : c)
      out[static_cast<std::size_t>(j)] = out[static_cast<std::size_t>(j)] && d_sigma_member(i, j);
  work_ += static_cast<std::int64_t>(c.size()) * corpus_.size();
  return out;
}

ClassMask Workbench::right_perp(const Candidate& c, const std::vector<int>& degrees) const
{
  ClassMask out(static_cast<std::size_t>(corpus_.size()), true);
  for (int j = 0; j < corpus_.size(); ++j)
    for (int d : degrees)
      if (ext_to(d, c, j) != 0) {
        out[static_cast<std::size_t>(j)] = false;
        break;
      }
  return out;
}

ClassMask Workbench::left_perp0_of_gen(const Candidate& c) const
{
  const ClassMask g = gen(c);
  ClassMask out(static_cast<std::size_t>(corpus_.size()), true);
  for (int k = 0; k < corpus_.size(); ++k)
    for (int j = 0; j < corpus_.size(); ++j)
      if (g[static_cast<std::size_t>(j)] && corpus_.hom(k, j) != 0) {
        out[static_cast<std::size_t>(k)] = false;
        break;
      }
  work_ += static_cast<std::int64_t>(corpus_.size()) * corpus_.size();
  return out;
}

std::string Workbench::names_of(const ClassMask& mask) const
{
  std::string out;
  for (int j = 0; j < corpus_.size(); ++j)
    if (mask[static_cast<std::size_t>(j)]) {
      if (!out.empty())
        out += ',';
      out += corpus_.name(j);
    }
  return "{" + out + "}";
}

PredicateReport Workbench::report(const Candidate& c, const std::string& predicate, std::vector<RouteVerdict> routes,
                                  std::int64_t start) const
{
  PredicateReport r;
  r.module_id = id(c);
  r.predicate = predicate;
  r.verdict = routes.front().verdict;
  r.routes_agree = std::all_of(routes.begin(), routes.end(),
                               [&](const RouteVerdict& rv) { return rv.verdict == routes.front().verdict; });
  r.routes = std::move(routes);
  r.cost = work_ - start;
  return r;
}

PredicateReport Workbench::sincere(const Candidate& c) const
{
  const std::int64_t start = work_;
  const Quiver& q = algebra()->quiver();
  std::vector<RouteVerdict> routes;
  {
    std::string miss;
    for (int v = 0; v < q.vertex_count() && miss.empty(); ++v) {
      int h = 0;
      for (int i : c)
        h += hom_projective_[static_cast<std::size_t>(v)][static_cast<std::size_t>(i)];
      work_ += static_cast<std::int64_t>(c.size());
      if (h == 0)
        miss = "Hom(P" + q.vertex_name(v) + ", T) = 0";
    }
    routes.push_back(route("projective-hom", miss.empty(), miss));
  }
  {
    std::string miss;
    for (int v = 0; v < q.vertex_count() && miss.empty(); ++v) {
      int d = 0;
      for (int i : c)
        d += corpus_.member(i).dim(v);
      if (d == 0)
        miss = "S" + q.vertex_name(v) + " is not a composition factor";
    }
    routes.push_back(route("composition-factors", miss.empty(), miss));
  }
  {
    const ClassMask lp = left_perp0_of_gen(c);
    const bool empty = std::none_of(lp.begin(), lp.end(), [](bool b) { return b; });
    routes.push_back(route("left-perp-gen", empty, "left perpendicular of Gen T contains " + names_of(lp)));
  }
  return report(c, "sincere", std::move(routes), start);
}

PredicateReport Workbench::cosincere(const Candidate& c) const
{
  const std::int64_t start = work_;
  const Quiver& q = algebra()->quiver();
  std::string miss;
  for (int v = 0; v < q.vertex_count() && miss.empty(); ++v) {
    int h = 0;
    for (int i : c)
      h += hom_injective_[static_cast<std::size_t>(i)][static_cast<std::size_t>(v)];
    work_ += static_cast<std::int64_t>(c.size());
    if (h == 0)
      miss = "Hom(T, I" + q.vertex_name(v) + ") = 0";
  }
  return report(c, "cosincere", {route("injective-hom", miss.empty(), miss)}, start);
}

PredicateReport Workbench::satisfies_ts(const Candidate& c) const
{
  const std::int64_t start = work_;
  const Quiver& q = algebra()->quiver();
  const Representation t = module(c);
  std::string miss_search, miss_factor;
  for (int v = 0; v < q.vertex_count(); ++v) {
    const SubfacFacsub r = subfac_facsub(t, simple_module(algebra(), v));
    ++work_;
    if (!r.in_subfac && miss_search.empty())
      miss_search = "no quotient of T has S" + q.vertex_name(v) + " in its socle";
    if (!r.composition_factor && miss_factor.empty())
      miss_factor = "S" + q.vertex_name(v) + " is not a composition factor";
  }
  return report(c, "TS",
                {route("subfac-search", miss_search.empty(), miss_search),
                 route("composition-factors", miss_factor.empty(), miss_factor)},
                start);
}

PredicateReport Workbench::satisfies_st(const Candidate& c) const
{
  const std::int64_t start = work_;
  const Quiver& q = algebra()->quiver();
  const Representation t = module(c);
  std::string miss_search, miss_factor;
  for (int v = 0; v < q.vertex_count(); ++v) {
    const SubfacFacsub r = subfac_facsub(t, simple_module(algebra(), v));
    ++work_;
    if (!r.in_facsub && miss_search.empty())
      miss_search = "no submodule of T has S" + q.vertex_name(v) + " in its top";
    if (!r.composition_factor && miss_factor.empty())
      miss_factor = "S" + q.vertex_name(v) + " is not a composition factor";
  }
  return report(c, "ST",
                {route("facsub-search", miss_search.empty(), miss_search),
                 route("composition-factors", miss_factor.empty(), miss_factor)},
                start);
}

PredicateReport Workbench::presilting(const Candidate& c) const
{
  const std::int64_t start = work_;
  const ClassMask g = gen(c);
  const ClassMask ds = d_sigma(c);
  std::string w_perp, w_sigma;
  for (int j = 0; j < corpus_.size(); ++j) {
    if (!g[static_cast<std::size_t>(j)])
      continue;
    if (w_perp.empty()) {
      const int e = ext_to(1, c, j);
      if (e != 0)
        w_perp = "Ext^1(T, " + corpus_.name(j) + ") has dimension " + std::to_string(e) + " with " +
                 corpus_.name(j) + " in Gen T";
    }
    if (w_sigma.empty() && !ds[static_cast<std::size_t>(j)])
      w_sigma = corpus_.name(j) + " is in Gen T but not in D_sigma";
  }
  return report(c, "presilting",
                {route("gen-perp1", w_perp.empty(), w_perp), route("d-sigma", w_sigma.empty(), w_sigma)}, start);
}

PredicateReport Workbench::silting(const Candidate& c) const
{
  const std::int64_t start = work_;
  const ClassMask g = gen(c);
  const ClassMask ds = d_sigma(c);
  std::string w;
  for (int j = 0; j < corpus_.size() && w.empty(); ++j) {
    if (g[static_cast<std::size_t>(j)] && !ds[static_cast<std::size_t>(j)])
      w = corpus_.name(j) + " is in Gen T but not in D_sigma";
    else if (!g[static_cast<std::size_t>(j)] && ds[static_cast<std::size_t>(j)])
      w = corpus_.name(j) + " is in D_sigma but not in Gen T";
  }
  return report(c, "silting", {route("d-sigma-minimal", w.empty(), w)}, start);
}

PredicateReport Workbench::pretilting(const Candidate& c) const
{
  const std::int64_t start = work_;
  std::string w;
  const auto pd = projective_dimension(c);
  if (!pd)
    w = "pd T exceeds " + std::to_string(bound_);
  else if (*pd > 1)
    w = "pd T = " + std::to_string(*pd);
  for (std::size_t a = 0; a < c.size() && w.empty(); ++a)
    for (std::size_t b = 0; b < c.size() && w.empty(); ++b)
      if (const int e = ext(1, c[a], c[b]); e != 0)
        w = "Ext^1(" + corpus_.name(c[a]) + ", " + corpus_.name(c[b]) + ") has dimension " + std::to_string(e);
  return report(c, "pretilting", {route("pd-ext1", w.empty(), w)}, start);
}

PredicateReport Workbench::vanishing(const Candidate& c) const
{
  const std::int64_t start = work_;
  std::string w;
  for (int j = 0; j < corpus_.size() && w.empty(); ++j)
    if (hom_to(c, j) == 0 && ext_to(1, c, j) == 0)
      w = corpus_.name(j) + " lies in T^perp{0,1}";
  return report(c, "vanishing", {route("corpus-scan", w.empty(), w)}, start);
}

PredicateReport Workbench::tilting(const Candidate& c, const std::vector<std::string>& routes) const
{
  static const std::vector<std::string> all{"definition", "T123", "vanishing"};
  const std::vector<std::string>& wanted = routes.empty() ? all : routes;
  const std::int64_t start = work_;
  std::vector<RouteVerdict> out;
  for (const auto& r : wanted) {
    if (r == "definition") {
      const ClassMask g = gen(c);
      const ClassMask p1 = right_perp(c, {1});
      std::string w;
      for (int j = 0; j < corpus_.size() && w.empty(); ++j)
        if (g[static_cast<std::size_t>(j)] != p1[static_cast<std::size_t>(j)])
          w = corpus_.name(j) + (g[static_cast<std::size_t>(j)] ? " is in Gen T but not in T^perp1"
                                                                : " is in T^perp1 but not in Gen T");
      out.push_back(route("definition", w.empty(), w));
    } else if (r == "T123") {
      const PredicateReport pre = pretilting(c);
      if (!pre.holds()) {
        out.push_back(route("T123", false, pre.witness()));
        continue;
      }
      // Canonical map R -> T^h, h = dim Hom(R, T), from a Yoneda basis of Hom(R, T).
      const Algebra& alg = *algebra();
      const Representation t = module(c);
      std::vector<int> all_vertices;
      for (int v = 0; v < alg.vertex_count(); ++v)
        all_vertices.push_back(v);
      const ProjectiveSum reg = projective_sum(algebra(), all_vertices);
      std::vector<Morphism> basis;
      for (int k = 0; k < reg.summands(); ++k)
        for (Index e = 0; e < t.dim(k); ++e) {
          std::vector<FpMatrix> images;
          for (int l = 0; l < reg.summands(); ++l)
            images.emplace_back(t.dim(l), 1, alg.modulus());
          images[static_cast<std::size_t>(k)].set(e, 0, 1);
          basis.push_back(morphism_from_generators(reg, t, images));
        }
      const auto h = static_cast<int>(basis.size());
      const Representation th = direct_sum(algebra(), {t}, {h}).sum;
      std::vector<FpMatrix> maps;
      for (int v = 0; v < alg.vertex_count(); ++v) {
        std::vector<FpMatrix> rows;
        for (const auto& f : basis)
          rows.push_back(f.at(v));
        maps.push_back(vstack(rows, reg.module.dim(v), alg.modulus()));
      }
      const Morphism u(reg.module, th, std::move(maps));
      work_ += 1 + h;
      if (!u.is_mono()) {
        out.push_back(route("T123", false, "R -> T^" + std::to_string(h) + " is not monic"));
        continue;
      }
      const Representation cok = cokernel(u).object;
      std::vector<int> mult;
      try {
        mult = decompose(cok, corpus_);
      } catch (const CompletenessError& e) {
        out.push_back({"T123", Verdict::undecided, e.what()});
        continue;
      }
      std::string w;
      for (int j = 0; j < corpus_.size() && w.empty(); ++j)
        if (mult[static_cast<std::size_t>(j)] > 0 && !std::binary_search(c.begin(), c.end(), j))
          w = "cokernel of R -> T^" + std::to_string(h) + " has summand " + corpus_.name(j) + " outside Add T";
      out.push_back(route("T123", w.empty(), w));
    } else if (r == "vanishing") {
      const PredicateReport pre = pretilting(c);
      const PredicateReport van = vanishing(c);
      out.push_back(route("vanishing", pre.holds() && van.holds(), pre.holds() ? van.witness() : pre.witness()));
    } else {
      throw InputError("unknown tilting route '" + r + "'");
    }
  }
  return report(c, "tilting", std::move(out), start);
}

PredicateReport Workbench::self_orthogonal(const Candidate& c) const
{
  const std::int64_t start = work_;
  const auto pd = projective_dimension(c);
  if (!pd)
    return report(c, "self-orthogonal",
                  {{"ext-up-to-pd", Verdict::undecided, "pd T exceeds " + std::to_string(bound_)}}, start);
  std::string w;
  for (int k = 1; k <= *pd && w.empty(); ++k)
    for (std::size_t a = 0; a < c.size() && w.empty(); ++a)
      for (std::size_t b = 0; b < c.size() && w.empty(); ++b)
        if (const int e = ext(k, c[a], c[b]); e != 0)
          w = "Ext^" + std::to_string(k) + "(" + corpus_.name(c[a]) + ", " + corpus_.name(c[b]) +
              ") has dimension " + std::to_string(e);
  return report(c, "self-orthogonal", {route("ext-up-to-pd", w.empty(), w)}, start);
}

PredicateReport Workbench::gen_in_perp(const Candidate& c, const std::vector<int>& degrees) const
{
  const std::int64_t start = work_;
  const ClassMask g = gen(c);
  std::string w;
  for (int j = 0; j < corpus_.size() && w.empty(); ++j) {
    if (!g[static_cast<std::size_t>(j)])
      continue;
    for (int d : degrees)
      if (const int e = ext_to(d, c, j); e != 0) {
        w = "Ext^" + std::to_string(d) + "(T, " + corpus_.name(j) + ") has dimension " + std::to_string(e) + " with " +
            corpus_.name(j) + " in Gen T";
        break;
      }
  }
  std::string name = "gen-perp";
  for (int d : degrees)
    name += std::to_string(d);
  return report(c, name, {route("corpus-scan", w.empty(), w)}, start);
}

PredicateReport Workbench::gen_equals_pres(const Candidate& c) const
{
  const std::int64_t start = work_;
  auto it = gen_pres_cache_.find(c);
  if (it == gen_pres_cache_.end()) {
    const bool closed = presilting(c).holds();
    const ClassMask g = gen(c);
    const Representation t = module(c);
    PresOptions opts;
    opts.gen_extension_closed = closed;
    opts.fallback_cap = options_.pres_fallback_cap;
    RouteVerdict rv{"canonical-kernel", Verdict::yes, ""};
    for (int j = 0; j < corpus_.size(); ++j) {
      if (!g[static_cast<std::size_t>(j)])
        continue;
      ++work_;
      const MembershipWitness mw = pres_contains(t, corpus_.member(j), opts);
      if (mw.verdict == Verdict::no) {
        rv = {"canonical-kernel", Verdict::no, corpus_.name(j) + " is in Gen T but not in Pres T (" + mw.detail + ")"};
        break;
      }
      if (mw.verdict == Verdict::undecided && rv.verdict == Verdict::yes)
        rv = {"canonical-kernel", Verdict::undecided, corpus_.name(j) + ": " + mw.detail};
    }
    it = gen_pres_cache_.emplace(c, rv).first;
  }
  return report(c, "gen-eq-pres", {it->second}, start);
}

PredicateReport Workbench::d_sigma_in_perp1(const Candidate& c) const
{
  const std::int64_t start = work_;
  const ClassMask ds = d_sigma(c);
  std::string w;
  for (int j = 0; j < corpus_.size() && w.empty(); ++j)
    if (ds[static_cast<std::size_t>(j)] && ext_to(1, c, j) != 0)
      w = corpus_.name(j) + " is in D_sigma but Ext^1(T, " + corpus_.name(j) + ") != 0";
  return report(c, "dsigma-perp1", {route("corpus-scan", w.empty(), w)}, start);
}

const std::vector<std::string>& Workbench::predicate_names()
{
  static const std::vector<std::string> names{
      "sincere",    "cosincere",  "TS",        "ST",          "presilting",  "silting",     "pretilting",
      "tilting",    "vanishing",  "self-orthogonal", "gen-perp12", "gen-perp2", "gen-eq-pres", "dsigma-perp1"};
  return names;
}

PredicateReport Workbench::evaluate(const Candidate& c, const std::string& predicate, const std::string& route_name) const
{
  if (predicate == "tilting")
    return tilting(c, route_name.empty() ? std::vector<std::string>{} : std::vector<std::string>{route_name});
  PredicateReport r;
  if (predicate == "sincere")
    r = sincere(c);
  else if (predicate == "cosincere")
    r = cosincere(c);
  else if (predicate == "TS")
    r = satisfies_ts(c);
  else if (predicate == "ST")
    r = satisfies_st(c);
  else if (predicate == "presilting")
    r = presilting(c);
  else if (predicate == "silting")
    r = silting(c);
  else if (predicate == "pretilting")
    r = pretilting(c);
  else if (predicate == "vanishing")
    r = vanishing(c);
  else if (predicate == "self-orthogonal")
    r = self_orthogonal(c);
  else if (predicate == "gen-perp12")
    r = gen_in_perp(c, {1, 2});
  else if (predicate == "gen-perp2")
    r = gen_in_perp(c, {2});
  else if (predicate == "gen-eq-pres")
    r = gen_equals_pres(c);
  else if (predicate == "dsigma-perp1")
    r = d_sigma_in_perp1(c);
  else
    throw InputError("unknown predicate '" + predicate + "'");
  if (route_name.empty())
    return r;
  const auto it = std::find_if(r.routes.begin(), r.routes.end(),
                               [&](const RouteVerdict& rv) { return rv.route == route_name; });
  if (it == r.routes.end())
    throw InputError("predicate '" + predicate + "' has no route '" + route_name + "'");
  RouteVerdict only = *it;
  r.routes = {only};
  r.verdict = only.verdict;
  r.routes_agree = true;
  return r;
}

}  // namespace siltlab
