#include "siltlab/indecomposable.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <random>

#include "siltlab/error.hpp"
#include "siltlab/standard_modules.hpp"

namespace siltlab {

namespace {

constexpr std::int64_t kExhaustiveEndLimit = std::int64_t{1} << 16;
constexpr int kQuickFittingSamples = 8;
constexpr int kFittingSamples = 256;
constexpr std::int64_t kDecomposePrime = 65521;

// p^e, or -1 once it passes `cap`.
std::int64_t bounded_power(std::int64_t p, std::int64_t e, std::int64_t cap)
{
  std::int64_t r = 1;
  for (std::int64_t i = 0; i < e; ++i) {
    if (r > cap / p)
      return -1;
    r *= p;
  }
  return r;
}

FpMatrix matrix_power(FpMatrix a, int e)
{
  FpMatrix r = FpMatrix::identity(a.rows(), a.modulus());
  while (e > 0) {
    if (e & 1)
      r = r * a;
    a = a * a;
    e >>= 1;
  }
  return r;
}

enum class FittingKind { nilpotent, invertible, splits };

FittingKind fitting_kind(const Morphism& f, int n)
{
  bool all_zero = true;
  bool all_inv = true;
  for (const auto& fv : f.vertex_maps()) {
    if (fv.rows() == 0)
      continue;
    const FpMatrix pw = matrix_power(fv, n);
    all_zero = all_zero && pw.is_zero();
    all_inv = all_inv && is_invertible(pw);
  }
  if (all_zero)
    return FittingKind::nilpotent;
  if (all_inv)
    return FittingKind::invertible;
  return FittingKind::splits;
}

Morphism combination(const Representation& m, const std::vector<Morphism>& basis, const std::vector<std::int64_t>& c)
{
  Morphism f = Morphism::zero(m, m);
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (c[i] != 0)
      f = f + c[i] * basis[i];
  return f;
}

bool satisfies_relations(const Representation& m)
{
  const Algebra& alg = *m.algebra();
  const Quiver& q = alg.quiver();
  for (const auto& rel : alg.relations().relations) {
    if (rel.terms.empty())
      continue;
    const int s = q.arrow(rel.terms.front().arrows.front()).source;
    const int t = q.arrow(rel.terms.front().arrows.back()).target;
    FpMatrix acc(m.dim(t), m.dim(s), alg.modulus());
    for (const auto& term : rel.terms)
      acc = acc + term.coefficient * m.path_action(s, term.arrows);
    if (!acc.is_zero())
      return false;
  }
  return true;
}

// Per-vertex bases of J^k M for k = 0, 1, ... until zero.
std::vector<std::vector<FpMatrix>> radical_series(const Representation& m)
{
  const Algebra& alg = *m.algebra();
  const Quiver& q = alg.quiver();
  std::vector<std::vector<FpMatrix>> series;
  std::vector<FpMatrix> cur;
  for (int v = 0; v < alg.vertex_count(); ++v)
    cur.push_back(FpMatrix::identity(m.dim(v), alg.modulus()));
  for (;;) {
    series.push_back(cur);
    bool zero = true;
    std::vector<FpMatrix> next;
    for (int w = 0; w < alg.vertex_count(); ++w) {
      std::vector<FpMatrix> parts;
      for (int a : q.arrows_into(w))
        parts.push_back(m.arrow_map(a) * cur[static_cast<std::size_t>(q.arrow(a).source)]);
      next.push_back(column_space_basis(hstack(parts, m.dim(w), alg.modulus())));
      zero = zero && next.back().cols() == 0;
    }
    if (zero)
      break;
    cur = std::move(next);
  }
  return series;
}

bool connected_support(const Algebra& alg, const std::vector<int>& dims)
{
  const Quiver& q = alg.quiver();
  std::vector<int> support;
  for (int v = 0; v < alg.vertex_count(); ++v)
    if (dims[static_cast<std::size_t>(v)] > 0)
      support.push_back(v);
  if (support.empty())
    return false;
  std::vector<bool> seen(static_cast<std::size_t>(alg.vertex_count()), false);
  std::vector<int> stack{support.front()};
  seen[static_cast<std::size_t>(support.front())] = true;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (const auto& arr : q.arrows()) {
      int other = -1;
      if (arr.source == v)
        other = arr.target;
      else if (arr.target == v)
        other = arr.source;
      if (other >= 0 && dims[static_cast<std::size_t>(other)] > 0 && !seen[static_cast<std::size_t>(other)]) {
        seen[static_cast<std::size_t>(other)] = true;
        stack.push_back(other);
      }
    }
  }
  return std::all_of(support.begin(), support.end(), [&](int v) { return seen[static_cast<std::size_t>(v)]; });
}

std::vector<Representation> interval_modules(const AlgebraPtr& algebra)
{
  const Algebra& alg = *algebra;
  const Quiver& q = alg.quiver();
  const int n = alg.vertex_count();
  // walk the underlying path from an endpoint
  std::vector<int> degree(static_cast<std::size_t>(n), 0);
  for (const auto& arr : q.arrows()) {
    ++degree[static_cast<std::size_t>(arr.source)];
    ++degree[static_cast<std::size_t>(arr.target)];
  }
  int start = 0;
  while (start < n && degree[static_cast<std::size_t>(start)] > 1)
    ++start;
  std::vector<int> order{start};
  std::vector<bool> used(static_cast<std::size_t>(q.arrow_count()), false);
  while (static_cast<int>(order.size()) < n) {
    const int v = order.back();
    for (int a = 0; a < q.arrow_count(); ++a) {
      const Arrow& arr = q.arrow(a);
      if (used[static_cast<std::size_t>(a)] || (arr.source != v && arr.target != v))
        continue;
      used[static_cast<std::size_t>(a)] = true;
      order.push_back(arr.source == v ? arr.target : arr.source);
      break;
    }
  }
  std::vector<Representation> out;
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      std::vector<int> dims(static_cast<std::size_t>(n), 0);
      for (int k = i; k <= j; ++k)
        dims[static_cast<std::size_t>(order[static_cast<std::size_t>(k)])] = 1;
      std::vector<FpMatrix> maps;
      for (const auto& arr : q.arrows()) {
        FpMatrix mat(dims[static_cast<std::size_t>(arr.target)], dims[static_cast<std::size_t>(arr.source)],
                     alg.modulus());
        if (mat.rows() == 1 && mat.cols() == 1)
          mat.set(0, 0, 1);
        maps.push_back(std::move(mat));
      }
      out.emplace_back(algebra, dims, std::move(maps));
    }
  return out;
}

std::vector<Representation> uniserial_modules(const AlgebraPtr& algebra)
{
  std::vector<Representation> out;
  for (int v = 0; v < algebra->vertex_count(); ++v) {
    const Representation p = projective_module(algebra, v);
    const auto series = radical_series(p);
    for (std::size_t k = 1; k <= series.size(); ++k) {
      if (k == series.size()) {
        out.push_back(p);
        break;
      }
      out.push_back(quotient(p, series[k]).object);
    }
  }
  return out;
}

struct CandidateOrder {
  bool operator()(const Representation& a, const Representation& b) const
  {
    if (a.dims() != b.dims())
      return a.dims() < b.dims();
    return canonical_entries(a) < canonical_entries(b);
  }
};

std::vector<Representation> brute_indecomposables(const AlgebraPtr& algebra, const BruteOptions& opts)
{
  const Algebra& alg = *algebra;
  const Quiver& q = alg.quiver();
  const int n = alg.vertex_count();
  const std::int64_t p = alg.modulus().value();
  std::vector<Representation> found;
  std::map<std::pair<std::vector<int>, std::vector<Index>>, std::vector<std::size_t>> buckets;

  std::vector<int> dims(static_cast<std::size_t>(n), 0);
  // Enumerate dimension vectors in lexicographic order.
  auto next_dims = [&]() {
    for (int v = n - 1; v >= 0; --v) {
      ++dims[static_cast<std::size_t>(v)];
      int total = 0;
      for (int d : dims)
        total += d;
      if (total <= opts.dim_bound)
        return true;
      dims[static_cast<std::size_t>(v)] = 0;
    }
    return false;
  };
  while (next_dims()) {
    if (!connected_support(alg, dims))
      continue;
    // An arrow between distinct vertices can be brought to rank normal form.
    int normal_arrow = -1;
    for (int a = 0; a < q.arrow_count() && normal_arrow < 0; ++a) {
      const Arrow& arr = q.arrow(a);
      if (arr.source != arr.target && dims[static_cast<std::size_t>(arr.source)] > 0 &&
          dims[static_cast<std::size_t>(arr.target)] > 0)
        normal_arrow = a;
    }
    std::int64_t free_entries = 0;
    int rank_choices = 1;
    for (int a = 0; a < q.arrow_count(); ++a) {
      const Arrow& arr = q.arrow(a);
      const int r = dims[static_cast<std::size_t>(arr.target)];
      const int c = dims[static_cast<std::size_t>(arr.source)];
      if (a == normal_arrow)
        rank_choices = std::min(r, c) + 1;
      else
        free_entries += std::int64_t{r} * c;
    }
    const std::int64_t tuples = bounded_power(p, free_entries, opts.tuple_cap);
    if (tuples < 0 || tuples * rank_choices > opts.tuple_cap)
      throw InfeasibleError("brute enumeration: dimension vector needs more than " + std::to_string(opts.tuple_cap) +
                            " arrow-matrix tuples; lower the dimension bound");
    std::vector<std::int64_t> entries(static_cast<std::size_t>(free_entries), 0);
    for (int r = 0; r < rank_choices; ++r) {
      for (std::int64_t code = 0; code < tuples; ++code) {
        std::int64_t c = code;
        for (auto& e : entries) {
          e = c % p;
          c /= p;
        }
        std::size_t at = 0;
        std::vector<FpMatrix> maps;
        for (int a = 0; a < q.arrow_count(); ++a) {
          const Arrow& arr = q.arrow(a);
          FpMatrix mat(dims[static_cast<std::size_t>(arr.target)], dims[static_cast<std::size_t>(arr.source)],
                       alg.modulus());
          if (a == normal_arrow) {
            for (int i = 0; i < r; ++i)
              mat.set(i, i, 1);
          } else {
            for (Index i = 0; i < mat.rows(); ++i)
              for (Index j = 0; j < mat.cols(); ++j)
                mat.set(i, j, entries[at++]);
          }
          maps.push_back(std::move(mat));
        }
        Representation cand(algebra, dims, std::move(maps));
        if (!satisfies_relations(cand) || !is_indecomposable(cand))
          continue;
        std::vector<Index> ranks;
        for (const auto& mat : cand.arrow_maps())
          ranks.push_back(rank(mat));
        auto& bucket = buckets[{dims, ranks}];
        const bool seen = std::any_of(bucket.begin(), bucket.end(),
                                      [&](std::size_t i) { return is_isomorphic(found[i], cand).isomorphic; });
        if (!seen) {
          bucket.push_back(found.size());
          found.push_back(std::move(cand));
        }
      }
    }
  }
  return found;
}

std::string join(const std::vector<std::string>& parts, const char* sep)
{
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0)
      out += sep;
    out += parts[i];
  }
  return out;
}

}  // namespace

BruteOptions brute_options_from_environment()
{
  BruteOptions opts;
  if (const char* env = std::getenv("SILTLAB_MAX_DIM")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || v < 1 || v > 64)
      throw InputError("SILTLAB_MAX_DIM must be an integer in [1, 64]");
    opts.dim_bound = static_cast<int>(v);
  }
  return opts;
}

Corpus::Corpus(AlgebraPtr algebra, std::vector<Representation> members, CorpusStrategy strategy,
               Completeness completeness, int dim_bound)
    : algebra_(std::move(algebra)),
      members_(std::move(members)),
      strategy_(strategy),
      completeness_(completeness),
      dim_bound_(dim_bound)
{
  std::sort(members_.begin(), members_.end(), CandidateOrder{});
  const int n = algebra_->vertex_count();
  std::vector<Representation> simples, projs, injs;
  for (int v = 0; v < n; ++v) {
    simples.push_back(simple_module(algebra_, v));
    projs.push_back(projective_module(algebra_, v));
    injs.push_back(injective_module(algebra_, v));
  }
  for (int i = 0; i < size(); ++i) {
    const Representation& m = members_[static_cast<std::size_t>(i)];
    std::vector<std::string> names;
    const std::pair<const char*, const std::vector<Representation>*> kinds[] = {
        {"S", &simples}, {"P", &projs}, {"I", &injs}};
    for (const auto& [prefix, list] : kinds)
      for (int v = 0; v < n; ++v)
        if ((*list)[static_cast<std::size_t>(v)].dims() == m.dims() &&
            is_isomorphic((*list)[static_cast<std::size_t>(v)], m).isomorphic)
          names.push_back(prefix + algebra_->quiver().vertex_name(v));
    if (names.empty())
      names.push_back("M" + std::to_string(i + 1));
    names_.push_back(names.front());
    aliases_.push_back(std::move(names));
    loewy_.push_back(loewy_notation(m));
  }
  hom_.assign(members_.size(), std::vector<int>(members_.size(), 0));
  for (std::size_t i = 0; i < members_.size(); ++i)
    for (std::size_t j = 0; j < members_.size(); ++j)
      hom_[i][j] = hom_dimension(members_[i], members_[j]);
}

std::string Corpus::completeness_label() const
{
  if (certified())
    return "certified-by-classification";
  return "brute-force-up-to-dim-" + std::to_string(dim_bound_);
}

std::optional<int> Corpus::find(const std::string& name) const
{
  for (int i = 0; i < size(); ++i)
    for (const auto& a : aliases_[static_cast<std::size_t>(i)])
      if (a == name)
        return i;
  return std::nullopt;
}

bool has_nakayama_shape(const Algebra& algebra)
{
  const Quiver& q = algebra.quiver();
  for (int v = 0; v < algebra.vertex_count(); ++v)
    if (q.arrows_from(v).size() > 1 || q.arrows_into(v).size() > 1)
      return false;
  return true;
}

bool is_hereditary_an(const Algebra& algebra)
{
  const Quiver& q = algebra.quiver();
  const int n = algebra.vertex_count();
  if (!algebra.relations().relations.empty() || q.arrow_count() != n - 1)
    return false;
  std::vector<int> degree(static_cast<std::size_t>(n), 0);
  for (const auto& arr : q.arrows()) {
    if (arr.source == arr.target)
      return false;
    ++degree[static_cast<std::size_t>(arr.source)];
    ++degree[static_cast<std::size_t>(arr.target)];
  }
  if (std::any_of(degree.begin(), degree.end(), [](int d) { return d > 2; }))
    return false;
  // n - 1 edges, max degree 2 and connected means a path
  std::vector<int> all(static_cast<std::size_t>(n), 1);
  return connected_support(algebra, all);
}

Corpus enumerate_indecomposables(const AlgebraPtr& algebra, CorpusStrategy strategy, const BruteOptions& options)
{
  if (strategy == CorpusStrategy::brute)
    return {algebra, brute_indecomposables(algebra, options), strategy, Completeness::brute_force_up_to_dim,
            options.dim_bound};
  if (is_hereditary_an(*algebra))
    return {algebra, interval_modules(algebra), strategy, Completeness::certified_by_classification, 0};
  if (has_nakayama_shape(*algebra))
    return {algebra, uniserial_modules(algebra), strategy, Completeness::certified_by_classification, 0};
  throw InputError("classified enumeration supports hereditary A_n and Nakayama algebras only");
}

bool is_indecomposable(const Representation& m)
{
  if (m.is_zero())
    return false;
  const std::vector<Morphism> end = hom_space(m, m);
  const auto d = static_cast<std::int64_t>(end.size());
  if (d == 1)
    return true;
  const int n = m.total_dimension();
  const std::int64_t p = m.modulus().value();
  std::mt19937_64 rng(0xFA7AB1E5ULL + static_cast<std::uint64_t>(n));
  std::uniform_int_distribution<std::int64_t> dist(0, p - 1);
  std::vector<std::int64_t> c(static_cast<std::size_t>(d));
  auto random_splits = [&](int samples) {
    for (int s = 0; s < samples; ++s) {
      for (auto& x : c)
        x = dist(rng);
      if (fitting_kind(combination(m, end, c), n) == FittingKind::splits)
        return true;
    }
    return false;
  };
  if (random_splits(kQuickFittingSamples))
    return false;

  const std::int64_t space = bounded_power(p, d, kExhaustiveEndLimit);
  if (space > 0) {
    const Morphism id = Morphism::identity(m);
    for (std::int64_t code = 1; code < space; ++code) {
      std::int64_t k = code;
      for (auto& x : c) {
        x = k % p;
        k /= p;
      }
      const Morphism e = combination(m, end, c);
      if (e.is_zero() || e.vertex_maps() == id.vertex_maps())
        continue;
      if (compose(e, e).vertex_maps() == e.vertex_maps())
        return false;
    }
    return true;
  }
  if (random_splits(kFittingSamples))
    return false;
  throw InfeasibleError("is_indecomposable: End has dimension " + std::to_string(d) +
                        ", too large for exhaustive search, and no splitting endomorphism was sampled");
}

std::vector<int> decompose(const Representation& m, const Corpus& corpus)
{
  if (m.algebra() != corpus.algebra())
    throw InputError("decompose: module and corpus over different algebras");
  const int k = corpus.size();
  std::vector<int> mult(static_cast<std::size_t>(k), 0);
  if (m.is_zero())
    return mult;
  if (k == 0)
    throw CompletenessError("decompose: empty corpus");
  // Auslander: M is determined by the numbers dim Hom(X_i, M).
  const Prime big(kDecomposePrime);
  FpMatrix h(k, k, big);
  FpMatrix rhs(k, 1, big);
  std::vector<int> target(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j)
      h.set(i, j, corpus.hom(i, j));
    target[static_cast<std::size_t>(i)] = hom_dimension(corpus.member(i), m);
    rhs.set(i, 0, target[static_cast<std::size_t>(i)]);
  }
  const auto sol = solve_linear(h, rhs);
  if (!sol || sol->kernel_basis.cols() != 0)
    throw CompletenessError("decompose: Hom-dimension system is not uniquely solvable over the corpus");
  for (int j = 0; j < k; ++j) {
    std::int64_t r = sol->particular(j, 0);
    if (r > kDecomposePrime / 2)
      r -= kDecomposePrime;
    if (r < 0)
      throw CompletenessError("decompose: module is not a sum of corpus members");
    mult[static_cast<std::size_t>(j)] = static_cast<int>(r);
  }
  std::vector<int> dims(static_cast<std::size_t>(m.algebra()->vertex_count()), 0);
  for (int i = 0; i < k; ++i) {
    std::int64_t lhs = 0;
    std::int64_t dual = 0;
    for (int j = 0; j < k; ++j) {
      lhs += std::int64_t{corpus.hom(i, j)} * mult[static_cast<std::size_t>(j)];
      dual += std::int64_t{corpus.hom(j, i)} * mult[static_cast<std::size_t>(j)];
    }
    if (lhs != target[static_cast<std::size_t>(i)] || dual != hom_dimension(m, corpus.member(i)))
      throw CompletenessError("decompose: module is not a sum of corpus members");
    for (std::size_t v = 0; v < dims.size(); ++v)
      dims[v] += mult[static_cast<std::size_t>(i)] * corpus.member(i).dim(static_cast<int>(v));
  }
  if (dims != m.dims())
    throw CompletenessError("decompose: module is not a sum of corpus members");
  if (!corpus.certified()) {
    const Representation sum = direct_sum(m.algebra(), corpus.members(), mult).sum;
    if (!is_isomorphic(sum, m).isomorphic)
      throw CompletenessError("decompose: module is not a sum of corpus members");
  }
  return mult;
}

std::string loewy_notation(const Representation& m)
{
  if (m.is_zero())
    return "0";
  const Quiver& q = m.algebra()->quiver();
  const auto series = radical_series(m);
  std::vector<std::string> layers;
  std::size_t atoms = 0;
  for (std::size_t k = 0; k < series.size(); ++k) {
    std::vector<std::string> parts;
    for (int v = 0; v < m.algebra()->vertex_count(); ++v) {
      const Index here = series[k][static_cast<std::size_t>(v)].cols();
      const Index below = k + 1 < series.size() ? series[k + 1][static_cast<std::size_t>(v)].cols() : 0;
      for (Index c = below; c < here; ++c)
        parts.push_back(q.vertex_name(v));
    }
    atoms += parts.size();
    layers.push_back(join(parts, ","));
  }
  if (atoms == 1)
    return layers.front();
  return "[" + join(layers, ";") + "]";
}

std::vector<std::int64_t> canonical_entries(const Representation& m)
{
  std::vector<std::int64_t> out;
  for (const auto& mat : m.arrow_maps())
    for (Index i = 0; i < mat.rows(); ++i)
      for (Index j = 0; j < mat.cols(); ++j)
        out.push_back(mat(i, j));
  return out;
}

}  // namespace siltlab
