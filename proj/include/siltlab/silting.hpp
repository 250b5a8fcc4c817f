#pragma once

// Sincerity, (pre)silting, (pre)tilting and self-orthogonality of basic
// candidates built from a corpus of indecomposables.
//
// A candidate is a set of corpus indices standing for the sum of those
// members. Every class involved is additive, so memberships are assembled from
// per-pair tables over the corpus: Hom and Ext dimensions, trace subspaces and
// D_σ membership of each member's minimal presentation.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "siltlab/classes.hpp"
#include "siltlab/homological.hpp"
#include "siltlab/indecomposable.hpp"

namespace siltlab {

using Candidate = std::vector<int>;  // sorted, distinct corpus indices

struct RouteVerdict {
  std::string route;
  Verdict verdict = Verdict::no;
  std::string witness;
};

struct PredicateReport {
  std::string module_id;
  std::string predicate;
  Verdict verdict = Verdict::no;  // verdict of the first route
  std::vector<RouteVerdict> routes;
  bool routes_agree = true;
  /// Deterministic work measure: table entries and module computations consulted.
  std::int64_t cost = 0;

  [[nodiscard]] bool holds() const noexcept { return verdict == Verdict::yes; }
  [[nodiscard]] const std::string& witness() const { return routes.front().witness; }
};

struct WorkbenchOptions {
  /// Resolution length bound; negative selects 2·dim A + 4.
  int resolution_bound = -1;
  std::int64_t pres_fallback_cap = 4096;
};

/// Corpus-indexed membership vector.
using ClassMask = std::vector<bool>;

class Workbench {
 public:
  explicit Workbench(Corpus corpus, WorkbenchOptions options = {});

  [[nodiscard]] const Corpus& corpus() const noexcept { return corpus_; }
  [[nodiscard]] const AlgebraPtr& algebra() const noexcept { return corpus_.algebra(); }
  [[nodiscard]] int resolution_bound() const noexcept { return bound_; }

  /// Every subset of the corpus with at most `max_summands` members, by size then lexicographically.
  [[nodiscard]] std::vector<Candidate> candidates(int max_summands) const;
  [[nodiscard]] Representation module(const Candidate& c) const;
  /// Primary names joined by '+', or "0".
  [[nodiscard]] std::string id(const Candidate& c) const;
  /// Parses "P2+S2" (names or aliases, "0" for the zero module); InputError on unknown names.
  [[nodiscard]] Candidate parse(const std::string& expression) const;
  /// The basic candidate with the same indecomposable summands as `t`.
  [[nodiscard]] Candidate candidate_of(const Representation& t) const;

  /// Pair tables.
  [[nodiscard]] int ext(int degree, int i, int j) const;
  [[nodiscard]] const ProjectiveDimension& pd_of_member(int i) const { return pd_.at(static_cast<std::size_t>(i)); }
  [[nodiscard]] const ProjectivePresentation& presentation(int i) const
  {
    return presentations_.at(static_cast<std::size_t>(i));
  }
  [[nodiscard]] bool d_sigma_member(int i, int j) const { return dsigma_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; }

  /// Classes of a candidate restricted to the corpus.
  [[nodiscard]] ClassMask gen(const Candidate& c) const;
  [[nodiscard]] ClassMask d_sigma(const Candidate& c) const;
  /// Members M with Ext^i(T, M) = 0 for every listed degree.
  [[nodiscard]] ClassMask right_perp(const Candidate& c, const std::vector<int>& degrees) const;
  [[nodiscard]] ClassMask left_perp0_of_gen(const Candidate& c) const;
  /// dim Hom(T, M) and dim Ext^i(T, M) for a corpus member M.
  [[nodiscard]] int hom_to(const Candidate& c, int j) const;
  [[nodiscard]] int ext_to(int degree, const Candidate& c, int j) const;
  /// Empty when pd exceeds the resolution bound.
  [[nodiscard]] std::optional<int> projective_dimension(const Candidate& c) const;

  [[nodiscard]] PredicateReport sincere(const Candidate& c) const;
  [[nodiscard]] PredicateReport cosincere(const Candidate& c) const;
  [[nodiscard]] PredicateReport satisfies_ts(const Candidate& c) const;
  [[nodiscard]] PredicateReport satisfies_st(const Candidate& c) const;
  [[nodiscard]] PredicateReport presilting(const Candidate& c) const;
  [[nodiscard]] PredicateReport silting(const Candidate& c) const;
  [[nodiscard]] PredicateReport pretilting(const Candidate& c) const;
  /// Routes "definition", "T123", "vanishing"; an empty list runs all three.
  [[nodiscard]] PredicateReport tilting(const Candidate& c, const std::vector<std::string>& routes = {}) const;
  [[nodiscard]] PredicateReport vanishing(const Candidate& c) const;
  [[nodiscard]] PredicateReport self_orthogonal(const Candidate& c) const;
  /// Gen T ⊆ T^{⊥I} on the corpus.
  [[nodiscard]] PredicateReport gen_in_perp(const Candidate& c, const std::vector<int>& degrees) const;
  /// Gen T = Pres T on the corpus; undecided when a Pres search was cut off.
  [[nodiscard]] PredicateReport gen_equals_pres(const Candidate& c) const;
  /// D_σ ⊆ T^{⊥1} on the corpus.
  [[nodiscard]] PredicateReport d_sigma_in_perp1(const Candidate& c) const;

  /// Dispatch by predicate name; InputError for unknown names or routes.
  [[nodiscard]] PredicateReport evaluate(const Candidate& c, const std::string& predicate,
                                         const std::string& route = "") const;
  [[nodiscard]] static const std::vector<std::string>& predicate_names();

 private:
  PredicateReport report(const Candidate& c, const std::string& predicate, std::vector<RouteVerdict> routes,
                         std::int64_t start) const;
  std::string names_of(const ClassMask& mask) const;

  Corpus corpus_;
  WorkbenchOptions options_;
  int bound_;
  std::vector<ProjectivePresentation> presentations_;
  std::vector<Resolution> resolutions_;
  std::vector<ProjectiveDimension> pd_;
  std::vector<std::vector<std::vector<FpMatrix>>> trace_;  // trace_[i][j]: t_{X_i}(X_j) per vertex
  std::vector<std::vector<bool>> dsigma_;
  std::vector<std::vector<int>> hom_projective_;  // [v][j] dim Hom(P(v), X_j)
  std::vector<std::vector<int>> hom_injective_;   // [j][v] dim Hom(X_j, I(v))
  mutable std::map<std::tuple<int, int, int>, int> ext_cache_;
  mutable std::map<Candidate, RouteVerdict> gen_pres_cache_;
  mutable std::int64_t work_ = 0;
};

}  // namespace siltlab
