#include "siltlab/algebra.hpp"

#include <algorithm>
#include <set>

#include "siltlab/error.hpp"

namespace siltlab {

namespace {

constexpr int kMaxDetectedBound = 64;
constexpr std::size_t kMaxPathsPerLevel = 200000;

void add_into(BasisVector& acc, const BasisVector& v, std::int64_t scale, Prime p)
{
  std::map<int, std::int64_t> m(acc.begin(), acc.end());
  for (const auto& [i, c] : v)
    m[i] = p.reduce(m[i] + scale * c);
  acc.clear();
  for (const auto& [i, c] : m)
    if (c != 0)
      acc.emplace_back(i, c);
}

}  // namespace

Quiver::Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows)
    : vertices_(std::move(vertices)), arrows_(std::move(arrows))
{
  std::set<std::string> seen;
  for (const auto& v : vertices_) {
    if (v.empty())
      throw InputError("quiver: empty vertex identifier");
    if (!seen.insert(v).second)
      throw InputError("quiver: duplicate vertex '" + v + "'");
  }
  std::set<std::string> names;
  for (const auto& a : arrows_) {
    if (a.name.empty())
      throw InputError("quiver: empty arrow name");
    if (!names.insert(a.name).second)
      throw InputError("quiver: duplicate arrow '" + a.name + "'");
    if (a.source < 0 || a.source >= vertex_count() || a.target < 0 || a.target >= vertex_count())
      throw InputError("quiver: arrow '" + a.name + "' has an undeclared endpoint");
  }
}

int Quiver::vertex_index(const std::string& name) const
{
  const auto it = std::find(vertices_.begin(), vertices_.end(), name);
  if (it == vertices_.end())
    throw InputError("unknown vertex '" + name + "'");
  return static_cast<int>(it - vertices_.begin());
}

int Quiver::arrow_index(const std::string& name) const
{
  for (std::size_t i = 0; i < arrows_.size(); ++i)
    if (arrows_[i].name == name)
      return static_cast<int>(i);
  throw InputError("unknown arrow '" + name + "'");
}

std::vector<int> Quiver::arrows_from(int v) const
{
  std::vector<int> out;
  for (std::size_t i = 0; i < arrows_.size(); ++i)
    if (arrows_[i].source == v)
      out.push_back(static_cast<int>(i));
  return out;
}

std::vector<int> Quiver::arrows_into(int v) const
{
  std::vector<int> out;
  for (std::size_t i = 0; i < arrows_.size(); ++i)
    if (arrows_[i].target == v)
      out.push_back(static_cast<int>(i));
  return out;
}

std::shared_ptr<const Algebra> build_algebra(Quiver q, RelationSet rels, Prime p)
{
  // Normalize relations: merge repeated paths, drop zero coefficients.
  struct Normalized {
    int source, target, length;
    std::map<std::vector<int>, std::int64_t> terms;
  };
  std::vector<Normalized> normalized;
  for (std::size_t ri = 0; ri < rels.relations.size(); ++ri) {
    const Relation& r = rels.relations[ri];
    Normalized n{-1, -1, -1, {}};
    for (const auto& term : r.terms) {
      if (term.arrows.size() < 2)
        throw AlgebraError("relation " + std::to_string(ri + 1) + " contains a path of length < 2");
      for (int a : term.arrows)
        if (a < 0 || a >= q.arrow_count())
          throw AlgebraError("relation " + std::to_string(ri + 1) + " uses an unknown arrow");
      for (std::size_t k = 1; k < term.arrows.size(); ++k)
        if (q.arrow(term.arrows[k - 1]).target != q.arrow(term.arrows[k]).source)
          throw AlgebraError("relation " + std::to_string(ri + 1) + " contains a non-composable word");
      const int s = q.arrow(term.arrows.front()).source;
      const int t = q.arrow(term.arrows.back()).target;
      const int len = static_cast<int>(term.arrows.size());
      if (n.length < 0) {
        n.source = s;
        n.target = t;
        n.length = len;
      } else if (n.source != s || n.target != t) {
        throw AlgebraError("relation " + std::to_string(ri + 1) + " combines non-parallel paths");
      } else if (n.length != len) {
        throw AlgebraError("relation " + std::to_string(ri + 1) + " mixes path lengths; only length-homogeneous relations are supported");
      }
      n.terms[term.arrows] = p.reduce(n.terms[term.arrows] + term.coefficient);
    }
    std::erase_if(n.terms, [](const auto& kv) { return kv.second == 0; });
    if (!n.terms.empty())
      normalized.push_back(std::move(n));
  }
  if (rels.nilpotency_bound && *rels.nilpotency_bound < 1)
    throw AlgebraError("nilpotency bound must be at least 1");

  auto alg = std::shared_ptr<Algebra>(new Algebra(q, rels, p));
  using Key = std::tuple<int, int, int>;

  struct Level {
    std::map<std::pair<int, int>, std::vector<std::vector<int>>> paths;
    // ideal rows in reduced echelon form, and pivot columns, per cell
    std::map<std::pair<int, int>, FpMatrix> ideal;
    std::map<std::pair<int, int>, std::vector<Index>> pivots;
  };

  std::vector<Level> levels;
  {
    Level l0;
    for (int v = 0; v < q.vertex_count(); ++v)
      l0.paths[{v, v}].push_back({});
    levels.push_back(std::move(l0));
  }

  auto cell_full = [](const Level& lvl) {
    for (const auto& [st, ps] : lvl.paths) {
      const auto it = lvl.pivots.find(st);
      const std::size_t r = it == lvl.pivots.end() ? 0 : it->second.size();
      if (r != ps.size())
        return false;
    }
    return true;
  };

  const int declared = rels.nilpotency_bound.value_or(-1);
  int bound = -1;
  for (int len = 1;; ++len) {
    const Level& prev = levels.back();
    Level cur;
    std::size_t total = 0;
    for (const auto& [st, ps] : prev.paths) {
      for (const auto& path : ps) {
        const int end = path.empty() ? st.first : q.arrow(path.back()).target;
        for (int a : q.arrows_from(end)) {
          auto ext = path;
          ext.push_back(a);
          cur.paths[{st.first, q.arrow(a).target}].push_back(std::move(ext));
          ++total;
        }
      }
    }
    if (total > kMaxPathsPerLevel)
      throw AlgebraError("path enumeration exceeded " + std::to_string(kMaxPathsPerLevel) + " paths at length " +
                         std::to_string(len) + "; the relations are not admissible within reach");
    for (auto& [st, ps] : cur.paths)
      std::sort(ps.begin(), ps.end());

    // ideal component at this length: relations, plus arrow multiples of the previous component
    for (const auto& [st, ps] : cur.paths) {
      std::map<std::vector<int>, Index> col;
      for (std::size_t i = 0; i < ps.size(); ++i)
        col[ps[i]] = static_cast<Index>(i);
      std::vector<std::vector<std::int64_t>> rows;
      auto emit = [&](const std::map<std::vector<int>, std::int64_t>& combo) {
        std::vector<std::int64_t> row(ps.size(), 0);
        for (const auto& [path, c] : combo)
          row[static_cast<std::size_t>(col.at(path))] = p.reduce(row[static_cast<std::size_t>(col.at(path))] + c);
        rows.push_back(std::move(row));
      };
      for (const auto& n : normalized)
        if (n.length == len && n.source == st.first && n.target == st.second)
          emit(n.terms);
      for (const auto& [pst, mat] : prev.ideal) {
        const auto& pps = prev.paths.at(pst);
        for (Index r = 0; r < mat.rows(); ++r) {
          // post-compose with an arrow out of the previous target
          if (pst.first == st.first) {
            for (int a : q.arrows_from(pst.second)) {
              if (q.arrow(a).target != st.second)
                continue;
              std::map<std::vector<int>, std::int64_t> combo;
              for (Index c = 0; c < mat.cols(); ++c)
                if (mat(r, c) != 0) {
                  auto path = pps[static_cast<std::size_t>(c)];
                  path.push_back(a);
                  combo[path] = mat(r, c);
                }
              emit(combo);
            }
          }
          // pre-compose with an arrow into the previous source
          if (pst.second == st.second) {
            for (int a : q.arrows_into(pst.first)) {
              if (q.arrow(a).source != st.first)
                continue;
              std::map<std::vector<int>, std::int64_t> combo;
              for (Index c = 0; c < mat.cols(); ++c)
                if (mat(r, c) != 0) {
                  std::vector<int> path{a};
                  const auto& tail = pps[static_cast<std::size_t>(c)];
                  path.insert(path.end(), tail.begin(), tail.end());
                  combo[path] = mat(r, c);
                }
              emit(combo);
            }
          }
        }
      }
      if (rows.empty())
        continue;
      FpMatrix gens(static_cast<Index>(rows.size()), static_cast<Index>(ps.size()), p);
      for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < ps.size(); ++j)
          gens.set(static_cast<Index>(i), static_cast<Index>(j), rows[i][j]);
      EchelonData e = rref(gens);
      if (e.rank == 0)
        continue;
      cur.ideal.emplace(st, e.reduced.block(0, 0, e.rank, e.reduced.cols()));
      cur.pivots.emplace(st, e.pivot_columns);
    }
    const bool full = cell_full(cur);
    levels.push_back(std::move(cur));
    if (declared > 0) {
      if (len == declared) {
        if (!full)
          throw AlgebraError("relations are not admissible: some path of length " + std::to_string(declared) +
                             " is not in the ideal");
        bound = declared;
        break;
      }
    } else if (full) {
      bound = len;
      break;
    } else if (len >= kMaxDetectedBound) {
      throw AlgebraError("relations are not admissible: no power of the arrow ideal up to " +
                         std::to_string(kMaxDetectedBound) + " lies in the ideal");
    }
  }
  alg->nilpotency_ = bound;

  // Basis: non-pivot paths of every cell below the nilpotency bound.
  for (int len = 0; len < bound && len < static_cast<int>(levels.size()); ++len) {
    const Level& lvl = levels[static_cast<std::size_t>(len)];
    for (const auto& [st, ps] : lvl.paths) {
      std::vector<bool> pivot(ps.size(), false);
      if (auto it = lvl.pivots.find(st); it != lvl.pivots.end())
        for (Index c : it->second)
          pivot[static_cast<std::size_t>(c)] = true;
      Algebra::Cell cell;
      cell.paths = ps;
      std::vector<int> basis_of(ps.size(), -1);
      for (std::size_t i = 0; i < ps.size(); ++i) {
        cell.index[ps[i]] = static_cast<int>(i);
        if (!pivot[i]) {
          basis_of[i] = static_cast<int>(alg->basis_.size());
          alg->basis_.push_back(Path{st.first, st.second, ps[i]});
        }
      }
      cell.reduction.resize(ps.size());
      for (std::size_t i = 0; i < ps.size(); ++i)
        if (!pivot[i])
          cell.reduction[i] = {{basis_of[i], 1}};
      if (auto it = lvl.ideal.find(st); it != lvl.ideal.end()) {
        const FpMatrix& mat = it->second;
        const auto& piv = lvl.pivots.at(st);
        for (std::size_t r = 0; r < piv.size(); ++r) {
          BasisVector v;
          for (std::size_t c = 0; c < ps.size(); ++c)
            if (!pivot[c] && mat(static_cast<Index>(r), static_cast<Index>(c)) != 0)
              v.emplace_back(basis_of[c], p.reduce(-mat(static_cast<Index>(r), static_cast<Index>(c))));
          std::sort(v.begin(), v.end());
          cell.reduction[static_cast<std::size_t>(piv[r])] = std::move(v);
        }
      }
      alg->cells_.emplace(Key{st.first, st.second, len}, std::move(cell));
    }
  }
  alg->trivial_.assign(static_cast<std::size_t>(q.vertex_count()), -1);
  for (std::size_t i = 0; i < alg->basis_.size(); ++i)
    if (alg->basis_[i].arrows.empty())
      alg->trivial_[static_cast<std::size_t>(alg->basis_[i].source)] = static_cast<int>(i);

  const auto n = alg->basis_.size();
  alg->mult_.assign(n, std::vector<BasisVector>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Path& bi = alg->basis_[i];
      const Path& bj = alg->basis_[j];
      if (bj.target != bi.source)
        continue;
      auto word = bj.arrows;
      word.insert(word.end(), bi.arrows.begin(), bi.arrows.end());
      alg->mult_[i][j] = alg->reduce(bj.source, word);
    }
  }
  return alg;
}

BasisVector Algebra::reduce(int source, const std::vector<int>& arrows) const
{
  if (source < 0 || source >= vertex_count())
    throw InputError("reduce: unknown source vertex");
  int at = source;
  for (int a : arrows) {
    if (a < 0 || a >= quiver_.arrow_count())
      throw InputError("reduce: unknown arrow");
    if (quiver_.arrow(a).source != at)
      throw InputError("reduce: arrows do not compose");
    at = quiver_.arrow(a).target;
  }
  const int len = static_cast<int>(arrows.size());
  if (len >= nilpotency_)
    return {};
  const auto it = cells_.find({source, at, len});
  if (it == cells_.end())
    return {};
  return it->second.reduction[static_cast<std::size_t>(it->second.index.at(arrows))];
}

const BasisVector& Algebra::multiply(int i, int j) const
{
  return mult_.at(static_cast<std::size_t>(i)).at(static_cast<std::size_t>(j));
}

std::vector<int> Algebra::radical_power(int k) const
{
  std::vector<int> out;
  for (std::size_t i = 0; i < basis_.size(); ++i)
    if (basis_[i].length() >= k)
      out.push_back(static_cast<int>(i));
  return out;
}

std::vector<int> Algebra::basis_between(int v, int w) const
{
  std::vector<int> out;
  for (std::size_t i = 0; i < basis_.size(); ++i)
    if (basis_[i].source == v && basis_[i].target == w)
      out.push_back(static_cast<int>(i));
  return out;
}

BasisVector Algebra::evaluate(const Relation& r) const
{
  BasisVector acc;
  for (const auto& term : r.terms) {
    if (term.arrows.empty())
      throw InputError("evaluate: empty relation term");
    add_into(acc, reduce(quiver_.arrow(term.arrows.front()).source, term.arrows), term.coefficient, p_);
  }
  return acc;
}

}  // namespace siltlab
