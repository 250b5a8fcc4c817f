#pragma once

// Finite-dimensional representations of a bound quiver and the operations of
// the category they form.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "siltlab/algebra.hpp"
#include "siltlab/linalg.hpp"

namespace siltlab {

/// A representation: one vector space per vertex and one matrix per arrow,
/// sized dims[target] x dims[source].
///
/// Vectors of the total space are columns of length total_dimension(), laid
/// out vertex by vertex in vertex order.
class Representation {
 public:
  Representation(AlgebraPtr algebra, std::vector<int> dims, std::vector<FpMatrix> arrow_maps);
  /// The zero representation.
  explicit Representation(AlgebraPtr algebra);

  [[nodiscard]] const AlgebraPtr& algebra() const noexcept { return algebra_; }
  [[nodiscard]] Prime modulus() const noexcept { return algebra_->modulus(); }
  [[nodiscard]] const std::vector<int>& dims() const noexcept { return dims_; }
  [[nodiscard]] int dim(int v) const { return dims_.at(static_cast<std::size_t>(v)); }
  [[nodiscard]] int total_dimension() const noexcept;
  [[nodiscard]] int offset(int v) const;
  [[nodiscard]] bool is_zero() const noexcept { return total_dimension() == 0; }
  [[nodiscard]] const std::vector<FpMatrix>& arrow_maps() const noexcept { return maps_; }
  [[nodiscard]] const FpMatrix& arrow_map(int a) const { return maps_.at(static_cast<std::size_t>(a)); }

  /// Action of a path (traversal order) from M_source to M_target.
  [[nodiscard]] FpMatrix path_action(int source, const std::vector<int>& arrows) const;
  /// Action of the basis element b_i of the algebra.
  [[nodiscard]] FpMatrix basis_action(int i) const;

 private:
  AlgebraPtr algebra_;
  std::vector<int> dims_;
  std::vector<FpMatrix> maps_;
};

/// Empty when every shape and relation check passes.
[[nodiscard]] std::vector<std::string> validate(const Representation& m);

/// A per-vertex family of linear maps; natural when every arrow square commutes.
class Morphism {
 public:
  Morphism(Representation source, Representation target, std::vector<FpMatrix> vertex_maps);

  static Morphism zero(const Representation& source, const Representation& target);
  static Morphism identity(const Representation& m);
  /// Reassembles a morphism from its flattened coordinates (see flatten()).
  static Morphism from_flat(const Representation& source, const Representation& target, const FpMatrix& column);

  [[nodiscard]] const Representation& source() const noexcept { return source_; }
  [[nodiscard]] const Representation& target() const noexcept { return target_; }
  [[nodiscard]] const FpMatrix& at(int v) const { return maps_.at(static_cast<std::size_t>(v)); }
  [[nodiscard]] const std::vector<FpMatrix>& vertex_maps() const noexcept { return maps_; }

  [[nodiscard]] bool is_natural() const;
  [[nodiscard]] bool is_zero() const;
  [[nodiscard]] bool is_mono() const;
  [[nodiscard]] bool is_epi() const;
  [[nodiscard]] bool is_iso() const;
  /// Concatenation of the row-major entries of every vertex map.
  [[nodiscard]] FpMatrix flatten() const;
  /// Block-diagonal matrix on the total spaces.
  [[nodiscard]] FpMatrix total_matrix() const;

  friend Morphism operator+(const Morphism& f, const Morphism& g);
  friend Morphism operator*(std::int64_t s, const Morphism& f);

 private:
  Representation source_;
  Representation target_;
  std::vector<FpMatrix> maps_;
};

/// g∘f.
[[nodiscard]] Morphism compose(const Morphism& g, const Morphism& f);

/// Basis of Hom(M, N), solved from the naturality equations. Deterministic.
[[nodiscard]] std::vector<Morphism> hom_space(const Representation& m, const Representation& n);
[[nodiscard]] int hom_dimension(const Representation& m, const Representation& n);

struct SubObject {
  Representation object;
  Morphism inclusion;
};

struct QuotientObject {
  Representation object;
  Morphism projection;
};

struct Factorization {
  SubObject kernel;
  Representation image;
  Morphism coimage_map;   // source ->> image
  Morphism image_inclusion;  // image >-> target
  QuotientObject cokernel;
};

[[nodiscard]] Factorization factorize(const Morphism& f);
[[nodiscard]] SubObject kernel(const Morphism& f);
[[nodiscard]] QuotientObject cokernel(const Morphism& f);

/// Per-vertex subspaces given by basis columns; must be stable under the arrows.
[[nodiscard]] SubObject subrepresentation(const Representation& m, const std::vector<FpMatrix>& subspaces);
[[nodiscard]] QuotientObject quotient(const Representation& m, const std::vector<FpMatrix>& subspaces);

struct DirectSum {
  Representation sum;
  std::vector<Morphism> injections;
  std::vector<Morphism> projections;
};

/// Σ multiplicities[i] copies of modules[i]; an empty list gives the zero module.
[[nodiscard]] DirectSum direct_sum(const AlgebraPtr& algebra, const std::vector<Representation>& modules,
                                   const std::vector<int>& multiplicities);
[[nodiscard]] DirectSum direct_sum(const AlgebraPtr& algebra, const std::vector<Representation>& modules);

struct IsomorphismResult {
  bool isomorphic = false;
  std::optional<Morphism> witness;
};

/// Searches Hom(M, N) for an invertible morphism. Exhaustive when the search
/// space is at most 3^8 elements, seeded pseudo-random sampling otherwise;
/// throws InfeasibleError if sampling finds nothing and no invariant separates
/// the modules.
[[nodiscard]] IsomorphismResult is_isomorphic(const Representation& m, const Representation& n);

struct Layers {
  SubObject radical;
  QuotientObject top;
  SubObject socle;
};

[[nodiscard]] Layers top_socle_radical(const Representation& m);
/// Per-vertex basis columns of rad M = J·M.
[[nodiscard]] std::vector<FpMatrix> radical_subspaces(const Representation& m);
/// Per-vertex basis columns of soc M, the common kernel of the outgoing arrows.
[[nodiscard]] std::vector<FpMatrix> socle_subspaces(const Representation& m);

/// Multiplicity of each simple S(v), indexed by vertex.
[[nodiscard]] std::vector<int> composition_factors(const Representation& m);

enum class SubQuotientMode { submodule, quotient };

struct SubQuotient {
  Representation object;
  Morphism structural_map;  // inclusion for submodules, projection for quotients
  std::vector<FpMatrix> generated;  // per-vertex basis of the generated submodule
};

/// Submodule generated by total-space vectors, or the quotient by it.
[[nodiscard]] SubQuotient sub_quotient(const Representation& m, const std::vector<FpMatrix>& generators,
                                       SubQuotientMode mode);
/// Closure of per-vertex subspaces under the arrows.
[[nodiscard]] std::vector<FpMatrix> generated_subspaces(const Representation& m, std::vector<FpMatrix> seeds);

/// Same algebra and dimension vector.
[[nodiscard]] bool same_shape(const Representation& a, const Representation& b);
/// Exact equality of dimension vectors and arrow matrices.
[[nodiscard]] bool operator==(const Representation& a, const Representation& b);

}  // namespace siltlab
