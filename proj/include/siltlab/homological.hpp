#pragma once

// Projective covers, presentations, resolutions, injective envelopes and Ext.
//
// Hom out of a sum of indecomposable projectives is read off by Yoneda:
// Hom(⊕P(v_k), N) ≅ ⊕N_{v_k}, so every Ext computation reduces to ranks of
// matrices assembled from arrow actions of N.

#include <optional>
#include <vector>

#include "siltlab/standard_modules.hpp"

namespace siltlab {

struct ProjectiveCover {
  ProjectiveSum projective;
  Morphism epi;
};

/// P ->> M with P = ⊕P(v)^{m_v} and m_v = dim (top M)_v; kernel inside rad P.
[[nodiscard]] ProjectiveCover projective_cover(const Representation& m);

struct ProjectivePresentation {
  ProjectiveSum p1;
  ProjectiveSum p0;
  Morphism sigma;
  Representation cokernel;
  Morphism cok_projection;
  bool minimal = false;
};

[[nodiscard]] ProjectivePresentation minimal_presentation(const Representation& m);

enum class ResolutionStatus { terminated, bound_exceeded };

struct Resolution {
  std::vector<ProjectiveSum> terms;   // P_0 .. P_n
  std::vector<Morphism> differentials;  // differentials[i] : P_{i+1} -> P_i
  Morphism augmentation;              // P_0 ->> resolved
  Representation resolved;
  ResolutionStatus status = ResolutionStatus::terminated;
  /// When bound_exceeded: the nonzero syzygy that was not resolved further.
  std::optional<Representation> open_syzygy;

  /// Index of the last computed term (the projective dimension when terminated).
  [[nodiscard]] int length() const noexcept { return static_cast<int>(terms.size()) - 1; }
};

/// Iterated projective covers. Terminates when the syzygy after P_k vanishes
/// for some k <= max_length; otherwise stops after P_max_length.
[[nodiscard]] Resolution minimal_resolution(const Representation& m, int max_length);

/// 2·dim A + 4.
[[nodiscard]] int default_resolution_bound(const Algebra& algebra);

struct ProjectiveDimension {
  std::optional<int> value;  // empty: pd > bound, possibly infinite
  int bound = 0;

  [[nodiscard]] bool decided() const noexcept { return value.has_value(); }
};

[[nodiscard]] ProjectiveDimension projective_dimension(const Representation& m, int max_length);
[[nodiscard]] ProjectiveDimension projective_dimension(const Representation& m);

/// Matrix of Hom(σ, N): Hom(P0, N) -> Hom(P1, N), both sides in Yoneda coordinates.
[[nodiscard]] FpMatrix induced_hom_map(const ProjectiveSum& p1, const ProjectiveSum& p0, const Morphism& sigma,
                                       const Representation& n);
/// dim Hom(P, N) = Σ_k dim N_{v_k}.
[[nodiscard]] int yoneda_dimension(const ProjectiveSum& p, const Representation& n);

/// Cohomology of Hom(resolution, N) in degree i. Throws UndecidableAtBound
/// when the resolution stops before P_{i+1}.
[[nodiscard]] int ext_dim(int i, const Resolution& res, const Representation& n);
/// Resolves M far enough for degree i and evaluates.
[[nodiscard]] int ext_dim(int i, const Representation& m, const Representation& n);

/// Hom(X, N) from a presentation of X: the kernel of Hom(σ, N).
[[nodiscard]] int hom_dimension_via(const ProjectivePresentation& pres, const Representation& n);

/// Hom(σ, X) surjective.
[[nodiscard]] bool d_sigma_contains(const ProjectivePresentation& sigma, const Representation& x);

struct InjectiveEnvelope {
  Representation injective;
  std::vector<int> vertices;  // summand k is I(vertices[k])
  Morphism mono;
};

/// M >-> E with E = ⊕I(v)^{s_v} and s_v = dim (soc M)_v.
[[nodiscard]] InjectiveEnvelope injective_envelope(const Representation& m);

/// A monomorphism is essential iff its image contains the socle of the target.
[[nodiscard]] bool is_essential_mono(const Morphism& f);

struct ExtensionClasses {
  /// Middle terms E_h of 0 -> X -> E_h -> Z -> 0, one per basis class h of Ext¹(Z, X).
  std::vector<Representation> middles;
  int dimension = 0;
};

/// Pushouts of 0 -> Ω -> P0 -> Z -> 0 along a basis of Ext¹(Z, X).
[[nodiscard]] ExtensionClasses extension_classes(const Representation& z, const Representation& x);

}  // namespace siltlab
