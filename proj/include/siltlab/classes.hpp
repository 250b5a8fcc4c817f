#pragma once

// Membership in Gen T, Pres T, Add T and the perpendicular classes of T.

#include <optional>
#include <string>
#include <vector>

#include "siltlab/indecomposable.hpp"
#include "siltlab/representation.hpp"

namespace siltlab {

enum class Verdict { no, yes, undecided };

[[nodiscard]] const char* to_string(Verdict v) noexcept;

struct MembershipWitness {
  Verdict verdict = Verdict::no;
  /// Human-readable justification: the failing degree, a nonzero Hom or Ext, or the search scope.
  std::string detail;
  std::optional<int> failing_degree;
  std::optional<Morphism> morphism;

  [[nodiscard]] bool holds() const noexcept { return verdict == Verdict::yes; }
};

struct TraceResult {
  SubObject trace;  // t_T(M), the sum of the images of all maps T -> M
  bool gen_member = false;
};

[[nodiscard]] TraceResult trace_and_gen(const Representation& t, const Representation& m);
/// Per-vertex basis of t_T(M).
[[nodiscard]] std::vector<FpMatrix> trace_subspaces(const Representation& t, const Representation& m);

struct PresOptions {
  /// Gen T is closed under extensions (true when T is presilting); a negative
  /// canonical test is then final.
  bool gen_extension_closed = false;
  /// Subspaces of Hom(T, M) tried by the fallback search before giving up.
  std::int64_t fallback_cap = 4096;
};

/// M in Pres T: some T^r ->> M built from a basis of a subspace of Hom(T, M)
/// has its kernel in Gen T. The whole space (the evaluation map) is tried
/// first; the remaining subspaces only when Gen T is not known to be closed
/// under extensions. Returns undecided when the search was cut off.
[[nodiscard]] MembershipWitness pres_contains(const Representation& t, const Representation& m,
                                              const PresOptions& options = {});

/// Every indecomposable summand of M is a summand of T. Throws CompletenessError
/// when either module does not decompose over the corpus.
[[nodiscard]] bool add_contains(const Representation& t, const Representation& m, const Corpus& corpus);

enum class PerpSide { right, left };

struct ClassQuery {
  Representation anchor;
  std::vector<int> degrees;
  PerpSide side = PerpSide::right;
};

/// Right: Ext^i(T, M) = 0 for every listed i. Left: Ext^i(M, T) = 0.
[[nodiscard]] MembershipWitness perp_contains(const ClassQuery& query, const Representation& m);

/// Corpus members X with Hom(X, G) = 0 for every corpus member G in Gen T.
[[nodiscard]] std::vector<int> left_perp0_of_gen(const Representation& t, const Corpus& corpus);

struct TorsionDecomposition {
  SubObject torsion;         // t_T(M)
  QuotientObject torsionfree;  // M / t_T(M)
  bool quotient_in_perp0 = false;
  /// Empty when T was checked presilting on the corpus.
  std::string warning;
};

/// 0 -> t_T(M) -> M -> M/t_T(M) -> 0. With a corpus, T is first checked
/// presilting (Gen T ⊆ T^{⊥1} on the corpus); otherwise a warning is attached.
[[nodiscard]] TorsionDecomposition torsion_decompose(const Representation& t, const Representation& m,
                                                     const Corpus* corpus = nullptr);

struct SubfacFacsub {
  bool in_subfac = false;
  bool in_facsub = false;
  std::optional<Representation> subfac_witness;  // a quotient Y of T with S in soc Y
  std::optional<Representation> facsub_witness;  // a submodule N of T with S in top N
  bool composition_factor = false;
};

/// Searches T for a vector x at the simple's vertex: T/R(Jx) has x̄ in its
/// socle and Rx has S on top. Throws InputError if `s` is not simple.
[[nodiscard]] SubfacFacsub subfac_facsub(const Representation& t, const Representation& s);

}  // namespace siltlab
