#pragma once

// Corpora of indecomposable modules, indecomposability testing and
// Krull-Schmidt decomposition against a corpus.

#include <optional>
#include <string>
#include <vector>

#include "siltlab/representation.hpp"

namespace siltlab {

enum class CorpusStrategy { classified, brute };
enum class Completeness { certified_by_classification, brute_force_up_to_dim };

struct BruteOptions {
  int dim_bound = 6;
  /// Largest number of arrow-matrix tuples tried for one dimension vector.
  std::int64_t tuple_cap = std::int64_t{1} << 22;
};

/// Reads SILTLAB_MAX_DIM; falls back to 6.
[[nodiscard]] BruteOptions brute_options_from_environment();

class Corpus {
 public:
  Corpus(AlgebraPtr algebra, std::vector<Representation> members, CorpusStrategy strategy,
         Completeness completeness, int dim_bound);

  [[nodiscard]] const AlgebraPtr& algebra() const noexcept { return algebra_; }
  [[nodiscard]] const std::vector<Representation>& members() const noexcept { return members_; }
  [[nodiscard]] const Representation& member(int i) const { return members_.at(static_cast<std::size_t>(i)); }
  [[nodiscard]] int size() const noexcept { return static_cast<int>(members_.size()); }
  [[nodiscard]] CorpusStrategy strategy() const noexcept { return strategy_; }
  [[nodiscard]] Completeness completeness() const noexcept { return completeness_; }
  [[nodiscard]] int dim_bound() const noexcept { return dim_bound_; }
  [[nodiscard]] bool certified() const noexcept { return completeness_ == Completeness::certified_by_classification; }
  /// "certified-by-classification" or "brute-force-up-to-dim-D".
  [[nodiscard]] std::string completeness_label() const;

  /// Primary name: S<v>, else P<v>, else I<v>, else M<index>.
  [[nodiscard]] const std::string& name(int i) const { return names_.at(static_cast<std::size_t>(i)); }
  /// Every standard name that applies, primary first.
  [[nodiscard]] const std::vector<std::string>& aliases(int i) const { return aliases_.at(static_cast<std::size_t>(i)); }
  /// Radical layers as vertex names, e.g. "1" or "[2;1]".
  [[nodiscard]] const std::string& loewy(int i) const { return loewy_.at(static_cast<std::size_t>(i)); }
  /// Index by primary name or alias; std::nullopt when unknown.
  [[nodiscard]] std::optional<int> find(const std::string& name) const;

  /// dim Hom(member i, member j).
  [[nodiscard]] int hom(int i, int j) const { return hom_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; }

 private:
  AlgebraPtr algebra_;
  std::vector<Representation> members_;
  CorpusStrategy strategy_;
  Completeness completeness_;
  int dim_bound_;
  std::vector<std::string> names_;
  std::vector<std::vector<std::string>> aliases_;
  std::vector<std::string> loewy_;
  std::vector<std::vector<int>> hom_;
};

/// True when every vertex has at most one incoming and one outgoing arrow.
[[nodiscard]] bool has_nakayama_shape(const Algebra& algebra);
/// A linearly oriented or zigzag A_n quiver without relations.
[[nodiscard]] bool is_hereditary_an(const Algebra& algebra);

/// Classified: interval modules for hereditary A_n, uniserials P(v)/rad^k P(v)
/// for Nakayama algebras; throws InputError for other algebras. Brute: every
/// indecomposable of total dimension <= options.dim_bound.
[[nodiscard]] Corpus enumerate_indecomposables(const AlgebraPtr& algebra, CorpusStrategy strategy,
                                               const BruteOptions& options = {});

/// End(M) has no idempotents besides 0 and 1. Throws InfeasibleError when
/// neither the exhaustive search nor random Fitting splitting can decide.
[[nodiscard]] bool is_indecomposable(const Representation& m);

/// Multiplicity of each corpus member in M. Throws CompletenessError when M
/// is not a sum of corpus members.
[[nodiscard]] std::vector<int> decompose(const Representation& m, const Corpus& corpus);

/// Radical layers of M in the same notation as Corpus::loewy.
[[nodiscard]] std::string loewy_notation(const Representation& m);

/// Entries of every arrow matrix in row-major order, arrow by arrow.
[[nodiscard]] std::vector<std::int64_t> canonical_entries(const Representation& m);

}  // namespace siltlab
