// siltlab: command-line front end. Exit codes: 0 success, 1 theorem failure,
// 2 input error, 3 undecided at bound (with --strict, or when a computation
// cannot be completed at all).

#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "siltlab/error.hpp"
#include "siltlab/harness.hpp"

using namespace siltlab;

namespace {

struct Common {
  std::string format = "jsonl";
  bool strict = false;
};

struct FileArgs {
  std::string path;
  std::string strategy;
  int resolution_bound = -1;
};

void add_file_args(CLI::App* cmd, FileArgs& args)
{
  cmd->add_option("file", args.path, "algebra file (.alg)")->required()->check(CLI::ExistingFile);
  cmd->add_option("--strategy", args.strategy, "corpus strategy: classified or brute")
      ->check(CLI::IsMember({"classified", "brute"}));
  cmd->add_option("--resolution-bound", args.resolution_bound, "projective resolution length bound (default 2 dim A + 4)")
      ->check(CLI::NonNegativeNumber);
}

Corpus corpus_for(const Session& s, const FileArgs& args)
{
  const CorpusStrategy strategy = args.strategy.empty() ? default_strategy(s.spec.family) : parse_strategy(args.strategy);
  return enumerate_indecomposables(s.algebra, strategy, brute_options_from_environment());
}

Workbench bench_for(const Session& s, const FileArgs& args)
{
  WorkbenchOptions opts;
  opts.resolution_bound = args.resolution_bound;
  return Workbench(corpus_for(s, args), opts);
}

void emit(const Common& common, const std::vector<Json>& lines)
{
  std::cout << (common.format == "table" ? render_table(lines) : render_jsonl(lines));
}

int undecided_in(const std::vector<Json>& lines)
{
  int n = 0;
  std::function<void(const Json&)> walk = [&](const Json& j) {
    if (j.is_string() && j.get<std::string>() == "undecided")
      ++n;
    else if (j.is_object() || j.is_array())
      for (const auto& x : j)
        walk(x);
  };
  for (const auto& j : lines)
    walk(j);
  return n;
}

}  // namespace

int main(int argc, char** argv)
{
  CLI::App app{"exact checks of silting and tilting predicates over finite-dimensional algebras"};
  app.require_subcommand(1);
  app.fallthrough();
  Common common;
  app.add_option("--format", common.format, "output format")->check(CLI::IsMember({"jsonl", "table"}));
  app.add_flag("--strict", common.strict, "exit 3 when any verdict is undecided at the bound");

  CLI::App* algebra = app.add_subcommand("algebra", "algebra commands");
  algebra->require_subcommand(1);
  algebra->fallthrough();
  FileArgs info_args;
  CLI::App* info = algebra->add_subcommand("info", "print the parsed algebra");
  info->add_option("file", info_args.path, "algebra file (.alg)")->required()->check(CLI::ExistingFile);

  CLI::App* indec = app.add_subcommand("indec", "indecomposable modules");
  indec->require_subcommand(1);
  indec->fallthrough();
  FileArgs list_args;
  CLI::App* list = indec->add_subcommand("list", "list the corpus of indecomposables");
  add_file_args(list, list_args);

  FileArgs check_args;
  std::string module_expr, predicate, route;
  CLI::App* check = app.add_subcommand("check", "evaluate one predicate on one module");
  add_file_args(check, check_args);
  check->add_option("--module", module_expr, "sum of corpus names, e.g. P2+S2")->required();
  check->add_option("--predicate", predicate, "predicate name")->required();
  check->add_option("--route", route, "restrict to one route");

  FileArgs classify_args;
  int max_summands = 0;
  CLI::App* classify_cmd = app.add_subcommand("classify", "tabulate predicates over basic candidates");
  add_file_args(classify_cmd, classify_args);
  classify_cmd->add_option("--max-summands", max_summands, "largest number of summands")->required()->check(
      CLI::NonNegativeNumber);

  FileArgs verify_args;
  CLI::App* verify = app.add_subcommand("verify-theorems", "check every theorem over every basic candidate");
  add_file_args(verify, verify_args);

  std::int64_t prime = 2;
  CLI::App* example = app.add_subcommand("reproduce-example", "T = P2 over 1 <- 2");
  example->add_option("--prime", prime, "field characteristic");

  CLI11_PARSE(app, argc, argv);

  try {
    if (info->parsed()) {
      const Session s = load_session(info_args.path);
      std::vector<Json> lines{banner("algebra info", s.id, nullptr)};
      for (auto& j : algebra_info(s))
        lines.push_back(std::move(j));
      emit(common, lines);
      return 0;
    }
    if (list->parsed()) {
      const Session s = load_session(list_args.path);
      const Corpus c = corpus_for(s, list_args);
      std::vector<Json> lines{banner("indec list", s.id, &c)};
      for (auto& j : indec_list(c))
        lines.push_back(std::move(j));
      emit(common, lines);
      return 0;
    }
    if (check->parsed()) {
      const Session s = load_session(check_args.path);
      const Workbench w = bench_for(s, check_args);
      const PredicateReport r = w.evaluate(w.parse(module_expr), predicate, route);
      const std::vector<Json> lines{banner("check", s.id, &w.corpus()), report_json(r)};
      emit(common, lines);
      return common.strict && undecided_in(lines) > 0 ? 3 : 0;
    }
    if (classify_cmd->parsed()) {
      const Session s = load_session(classify_args.path);
      const Workbench w = bench_for(s, classify_args);
      std::vector<Json> lines{banner("classify", s.id, &w.corpus())};
      for (auto& j : classify(w, max_summands))
        lines.push_back(std::move(j));
      emit(common, lines);
      return common.strict && undecided_in(lines) > 0 ? 3 : 0;
    }
    if (verify->parsed()) {
      const Session s = load_session(verify_args.path);
      const Workbench w = bench_for(s, verify_args);
      const TheoremReport report = verify_theorems(w, s.id);
      std::vector<Json> lines{banner("verify-theorems", s.id, &w.corpus())};
      for (auto& j : report.lines(w.corpus()))
        lines.push_back(std::move(j));
      emit(common, lines);
      if (report.failed() > 0)
        return 1;
      return common.strict && (report.skipped() > 0 || report.undecided_verdicts > 0) ? 3 : 0;
    }
    if (example->parsed()) {
      const ExampleReport r = reproduce_example(prime);
      emit(common, r.lines);
      return r.matches ? 0 : 1;
    }
  } catch (const InputError& e) {
    std::cerr << "siltlab: " << e.what() << '\n';
    return 2;
  } catch (const AlgebraError& e) {
    std::cerr << "siltlab: " << e.what() << '\n';
    return 2;
  } catch (const InfeasibleError& e) {
    std::cerr << "siltlab: " << e.what() << '\n';
    return 3;
  } catch (const CompletenessError& e) {
    std::cerr << "siltlab: " << e.what() << '\n';
    return 3;
  }
  return 0;
}
