#pragma once

// Basic finite-dimensional algebras kQ/I presented by a quiver and an
// admissible ideal of relations.
//
// Paths compose like functions: the product q*p means "traverse p, then q".
// Internally a path is stored in traversal order, so the arrows of q*p are
// p.arrows followed by q.arrows.

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "siltlab/linalg.hpp"

namespace siltlab {

struct Arrow {
  std::string name;
  int source = 0;
  int target = 0;
};

class Quiver {
 public:
  Quiver() = default;
  /// Vertex names and arrows whose endpoints index into `vertices`.
  Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows);

  [[nodiscard]] int vertex_count() const noexcept { return static_cast<int>(vertices_.size()); }
  [[nodiscard]] int arrow_count() const noexcept { return static_cast<int>(arrows_.size()); }
  [[nodiscard]] const std::string& vertex_name(int v) const { return vertices_.at(static_cast<std::size_t>(v)); }
  [[nodiscard]] const std::vector<std::string>& vertex_names() const noexcept { return vertices_; }
  [[nodiscard]] const Arrow& arrow(int a) const { return arrows_.at(static_cast<std::size_t>(a)); }
  [[nodiscard]] const std::vector<Arrow>& arrows() const noexcept { return arrows_; }
  /// Throws InputError for unknown names.
  [[nodiscard]] int vertex_index(const std::string& name) const;
  [[nodiscard]] int arrow_index(const std::string& name) const;
  [[nodiscard]] std::vector<int> arrows_from(int v) const;
  [[nodiscard]] std::vector<int> arrows_into(int v) const;

 private:
  std::vector<std::string> vertices_;
  std::vector<Arrow> arrows_;
};

/// A path in traversal order; trivial paths e_v have no arrows.
struct Path {
  int source = 0;
  int target = 0;
  std::vector<int> arrows;

  [[nodiscard]] int length() const noexcept { return static_cast<int>(arrows.size()); }
  friend bool operator==(const Path&, const Path&) = default;
};

struct RelationTerm {
  std::int64_t coefficient = 1;
  std::vector<int> arrows;  // traversal order
};

/// A linear combination of parallel paths of one common length >= 2.
struct Relation {
  std::vector<RelationTerm> terms;
};

struct RelationSet {
  std::vector<Relation> relations;
  /// m with J^m contained in the ideal; detected when absent.
  std::optional<int> nilpotency_bound;
};

/// Sparse coefficient vector over the path basis, sorted by basis index.
using BasisVector = std::vector<std::pair<int, std::int64_t>>;

class Algebra {
 public:
  [[nodiscard]] const Quiver& quiver() const noexcept { return quiver_; }
  [[nodiscard]] const RelationSet& relations() const noexcept { return relations_; }
  [[nodiscard]] Prime modulus() const noexcept { return p_; }
  [[nodiscard]] int nilpotency_bound() const noexcept { return nilpotency_; }
  [[nodiscard]] int vertex_count() const noexcept { return quiver_.vertex_count(); }

  [[nodiscard]] int dimension() const noexcept { return static_cast<int>(basis_.size()); }
  [[nodiscard]] const std::vector<Path>& path_basis() const noexcept { return basis_; }
  [[nodiscard]] const Path& basis_path(int i) const { return basis_.at(static_cast<std::size_t>(i)); }
  [[nodiscard]] int trivial_path(int v) const { return trivial_.at(static_cast<std::size_t>(v)); }

  /// Class of the path with the given arrows (traversal order) in the basis.
  /// Throws InputError if the arrows do not compose.
  [[nodiscard]] BasisVector reduce(int source, const std::vector<int>& arrows) const;
  /// b_i * b_j, i.e. traverse b_j then b_i; empty when not composable.
  [[nodiscard]] const BasisVector& multiply(int i, int j) const;

  /// Basis indices spanning J^k (paths of length >= k).
  [[nodiscard]] std::vector<int> radical_power(int k) const;
  /// Basis indices of classes of paths v -> w.
  [[nodiscard]] std::vector<int> basis_between(int v, int w) const;

  /// Relation value as a basis vector; zero for every relation of a built algebra.
  [[nodiscard]] BasisVector evaluate(const Relation& r) const;

 private:
  friend std::shared_ptr<const Algebra> build_algebra(Quiver q, RelationSet rels, Prime p);

  struct Cell {
    std::vector<std::vector<int>> paths;
    std::map<std::vector<int>, int> index;
    std::vector<BasisVector> reduction;  // one coefficient vector per path
  };
  using CellKey = std::tuple<int, int, int>;  // source, target, length

  Algebra(Quiver q, RelationSet r, Prime p) : quiver_(std::move(q)), relations_(std::move(r)), p_(p) {}

  Quiver quiver_;
  RelationSet relations_;
  Prime p_;
  int nilpotency_ = 1;
  std::vector<Path> basis_;
  std::vector<int> trivial_;
  std::map<CellKey, Cell> cells_;
  std::vector<std::vector<BasisVector>> mult_;
};

/// Builds kQ/I. Throws AlgebraError when the relations are not admissible
/// (a relation of length < 2, non-parallel or mixed-length terms, or J^m not
/// contained in I for the declared or any detectable m).
[[nodiscard]] std::shared_ptr<const Algebra> build_algebra(Quiver q, RelationSet rels, Prime p);

using AlgebraPtr = std::shared_ptr<const Algebra>;

}  // namespace siltlab
