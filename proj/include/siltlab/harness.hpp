#pragma once

// Candidate sweeps, theorem verification and the JSON-lines reports behind
// the command-line tool.

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "siltlab/silting.hpp"
#include "siltlab/spec_file.hpp"

namespace siltlab {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;
inline constexpr const char* kSemantics =
    "finite-dimensional semantics: every quantifier over modules ranges over the finite-dimensional modules, "
    "reduced by additivity to the indecomposable corpus";

struct Session {
  std::string id;  // the path as given
  AlgebraSpec spec;
  AlgebraPtr algebra;
};

[[nodiscard]] Session load_session(const std::filesystem::path& path);
/// Classified for hereditary-An and nakayama hints, brute otherwise.
[[nodiscard]] CorpusStrategy default_strategy(FamilyHint family);
[[nodiscard]] CorpusStrategy parse_strategy(const std::string& name);

/// First line of every report.
[[nodiscard]] Json banner(const std::string& command, const std::string& algebra_id, const Corpus* corpus);
[[nodiscard]] Json corpus_descriptor(const Corpus& corpus);
[[nodiscard]] Json report_json(const PredicateReport& report);

[[nodiscard]] std::vector<Json> algebra_info(const Session& session);
[[nodiscard]] std::vector<Json> indec_list(const Corpus& corpus);

/// Predicates tabulated by classify.
[[nodiscard]] const std::vector<std::string>& classify_predicates();
[[nodiscard]] std::vector<Json> classify(const Workbench& bench, int max_summands);

struct TheoremTally {
  std::string id;
  std::string statement;
  int passed = 0;
  int failed = 0;
  int skipped = 0;
  int vacuous = 0;  // hypothesis false
  int nonzero_ext2 = 0;  // instances whose decision consulted a nonzero Ext^2
};

struct TheoremReport {
  std::vector<Json> instances;  // one per candidate
  std::vector<Json> failures;
  std::vector<TheoremTally> tallies;
  int undecided_verdicts = 0;

  [[nodiscard]] int failed() const;
  [[nodiscard]] int skipped() const;
  [[nodiscard]] const TheoremTally& tally(const std::string& id) const;
  /// Banner excluded.
  [[nodiscard]] std::vector<Json> lines(const Corpus& corpus) const;
};

/// Runs every theorem check over every basic candidate of the corpus.
/// `algebra_id` is used in the re-run commands attached to failures.
[[nodiscard]] TheoremReport verify_theorems(const Workbench& bench, const std::string& algebra_id);

struct ExampleReport {
  std::vector<Json> lines;
  bool matches = false;  // every claim equals the expected value
};

/// T = P2 over 1 <-alpha- 2 with the given characteristic.
[[nodiscard]] ExampleReport reproduce_example(std::int64_t prime = 2);

[[nodiscard]] std::string render_jsonl(const std::vector<Json>& lines);
[[nodiscard]] std::string render_table(const std::vector<Json>& lines);

}  // namespace siltlab
