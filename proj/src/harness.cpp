#include "siltlab/harness.hpp"

#include <algorithm>
#include <functional>
#include <iomanip>
#include <numeric>
#include <sstream>

#include "siltlab/error.hpp"
#include "siltlab/representation.hpp"

namespace siltlab {

namespace {

const char* strategy_name(CorpusStrategy s)
{
  return s == CorpusStrategy::classified ? "classified" : "brute";
}

Json verdict_json(Verdict v)
{
  return to_string(v);
}

enum class Status { passed, failed, skipped, vacuous };

const char* status_name(Status s)
{
  switch (s) {
    case Status::passed: return "passed";
    case Status::failed: return "failed";
    case Status::skipped: return "skipped";
    case Status::vacuous: return "vacuous";
  }
  return "skipped";
}

struct Outcome {
  Status status = Status::passed;
  std::string reason;  // for skipped instances
  bool ext2 = false;
  std::vector<const PredicateReport*> evidence;  // dumped on failure
};

Outcome pass_if(bool ok, std::vector<const PredicateReport*> evidence)
{
  return {ok ? Status::passed : Status::failed, "", false, std::move(evidence)};
}

Outcome skip(std::string reason)
{
  return {Status::skipped, std::move(reason), false, {}};
}

Outcome vacuous()
{
  return {Status::vacuous, "", false, {}};
}

bool decided(const PredicateReport& r)
{
  return r.verdict != Verdict::undecided;
}

struct TheoremSpec {
  std::string id;
  std::string statement;
};

const std::vector<TheoremSpec>& theorem_specs()
{
  static const std::vector<TheoremSpec> specs{
      {"sincerity-square", "sincere = cosincere = TS = ST"},
      {"sincerity-routes-agree", "the routes of sincere, TS and ST agree"},
      {"vanishing-implies-sincere", "vanishing => sincere"},
      {"gen-pres-sincere-implies-vanishing", "Gen T = Pres T and sincere => vanishing"},
      {"sincere-silting-iff-presilting-vanishing", "(sincere and silting) <=> (presilting and vanishing)"},
      {"presilting-routes-agree", "Gen T in T^perp1 <=> Gen T in D_sigma"},
      {"sincere-pretilting-iff-gen-perp12", "sincere => (pretilting <=> Gen T in T^perp{1,2})"},
      {"sincere-presilting-pretilting-iff-gen-perp2", "sincere and presilting => (pretilting <=> Gen T in T^perp2)"},
      {"tilting-iff-vanishing-gen-perp12", "tilting <=> vanishing and Gen T in T^perp{1,2}"},
      {"tilting-iff-sincere-silting-gen-perp2", "tilting <=> sincere and silting and Gen T in T^perp2"},
      {"tilting-routes-agree", "the definition, T123 and vanishing routes of tilting agree"},
      {"finite-pd-sincere-silting-self-orthogonal-iff-tilting",
       "sincere silting of finite pd => (self-orthogonal <=> tilting)"},
      {"self-orthogonal-gen-pres-gen-in-perp",
       "self-orthogonal of finite pd and Gen T = Pres T => Ext^i(T, Gen T) = 0 for 1 <= i <= pd T"},
      {"dsigma-in-perp1", "D_sigma in T^perp1"},
      {"tilting-implies-self-orthogonal", "tilting => self-orthogonal"},
  };
  return specs;
}

// Alias of a corpus member preferring the given prefix.
std::string alias_with(const Corpus& corpus, int i, char prefix)
{
  for (const auto& a : corpus.aliases(i))
    if (!a.empty() && a[0] == prefix)
      return a;
  return corpus.name(i);
}

}  // namespace

Session load_session(const std::filesystem::path& path)
{
  Session s;
  s.id = path.string();
  s.spec = load_algebra_spec(path);
  s.algebra = build_algebra(s.spec);
  return s;
}

CorpusStrategy default_strategy(FamilyHint family)
{
  return family == FamilyHint::generic ? CorpusStrategy::brute : CorpusStrategy::classified;
}

CorpusStrategy parse_strategy(const std::string& name)
{
  if (name == "classified")
    return CorpusStrategy::classified;
  if (name == "brute")
    return CorpusStrategy::brute;
  throw InputError("strategy must be classified or brute, got '" + name + "'");
}

Json corpus_descriptor(const Corpus& corpus)
{
  Json j;
  j["strategy"] = strategy_name(corpus.strategy());
  j["completeness"] = corpus.completeness_label();
  j["size"] = corpus.size();
  return j;
}

Json banner(const std::string& command, const std::string& algebra_id, const Corpus* corpus)
{
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["kind"] = "banner";
  j["command"] = command;
  j["algebra"] = algebra_id;
  j["semantics"] = kSemantics;
  if (corpus != nullptr) {
    j["characteristic"] = corpus->algebra()->modulus().value();
    j["corpus"] = corpus_descriptor(*corpus);
  }
  return j;
}

Json report_json(const PredicateReport& r)
{
  Json j;
  j["kind"] = "predicate";
  j["module"] = r.module_id;
  j["predicate"] = r.predicate;
  j["verdict"] = verdict_json(r.verdict);
  j["routes_agree"] = r.routes_agree;
  Json routes = Json::array();
  for (const auto& rv : r.routes) {
    Json x;
    x["route"] = rv.route;
    x["verdict"] = verdict_json(rv.verdict);
    x["witness"] = rv.witness;
    routes.push_back(std::move(x));
  }
  j["routes"] = std::move(routes);
  j["cost"] = r.cost;
  return j;
}

std::vector<Json> algebra_info(const Session& session)
{
  const Algebra& alg = *session.algebra;
  const Quiver& q = alg.quiver();
  Json j;
  j["kind"] = "algebra";
  j["characteristic"] = session.spec.characteristic;
  j["family"] = to_string(session.spec.family);
  j["vertices"] = q.vertex_names();
  Json arrows = Json::array();
  for (const auto& a : q.arrows())
    arrows.push_back({{"name", a.name}, {"source", q.vertex_name(a.source)}, {"target", q.vertex_name(a.target)}});
  j["arrows"] = std::move(arrows);
  j["relations"] = static_cast<int>(session.spec.relations.relations.size());
  j["dimension"] = alg.dimension();
  j["nilpotency"] = alg.nilpotency_bound();
  Json dims = Json::array();
  for (int v = 0; v < alg.vertex_count(); ++v) {
    int pv = 0;
    for (int w = 0; w < alg.vertex_count(); ++w)
      pv += static_cast<int>(alg.basis_between(v, w).size());
    dims.push_back({{"vertex", q.vertex_name(v)}, {"dim_projective", pv}});
  }
  j["projectives"] = std::move(dims);
  j["canonical"] = serialize_algebra_spec(session.spec);
  return {std::move(j)};
}

std::vector<Json> indec_list(const Corpus& corpus)
{
  std::vector<Json> out;
  for (int i = 0; i < corpus.size(); ++i) {
    Json j;
    j["kind"] = "indecomposable";
    j["index"] = i;
    j["name"] = corpus.name(i);
    j["aliases"] = corpus.aliases(i);
    j["dims"] = corpus.member(i).dims();
    j["loewy"] = corpus.loewy(i);
    out.push_back(std::move(j));
  }
  return out;
}

const std::vector<std::string>& classify_predicates()
{
  static const std::vector<std::string> names{"sincere",    "cosincere",  "TS",        "ST",        "presilting",
                                              "silting",    "pretilting", "tilting",   "vanishing", "self-orthogonal"};
  return names;
}

std::vector<Json> classify(const Workbench& bench, int max_summands)
{
  if (max_summands < 0)
    throw InputError("max-summands must be nonnegative");
  std::vector<Json> out;
  std::vector<int> counts(classify_predicates().size(), 0);
  Json tilting = Json::array();
  int rows = 0;
  for (const auto& c : bench.candidates(max_summands)) {
    Json j;
    j["kind"] = "candidate";
    j["module"] = bench.id(c);
    j["summands"] = static_cast<int>(c.size());
    const auto pd = bench.projective_dimension(c);
    j["pd"] = pd ? Json(*pd) : Json("> " + std::to_string(bench.resolution_bound()));
    Json preds;
    bool agree = true;
    for (std::size_t k = 0; k < classify_predicates().size(); ++k) {
      const PredicateReport r = bench.evaluate(c, classify_predicates()[k]);
      preds[r.predicate] = verdict_json(r.verdict);
      agree = agree && r.routes_agree;
      counts[k] += r.holds() ? 1 : 0;
      if (r.predicate == "tilting" && r.holds())
        tilting.push_back(bench.id(c));
    }
    j["predicates"] = std::move(preds);
    j["routes_agree"] = agree;
    out.push_back(std::move(j));
    ++rows;
  }
  Json s;
  s["kind"] = "classification";
  s["candidates"] = rows;
  s["max_summands"] = max_summands;
  Json totals;
  for (std::size_t k = 0; k < counts.size(); ++k)
    totals[classify_predicates()[k]] = counts[k];
  s["counts"] = std::move(totals);
  s["tilting_modules"] = std::move(tilting);
  s["scope"] = bench.corpus().completeness_label();
  out.push_back(std::move(s));
  return out;
}

int TheoremReport::failed() const
{
  return std::accumulate(tallies.begin(), tallies.end(), 0, [](int a, const TheoremTally& t) { return a + t.failed; });
}

int TheoremReport::skipped() const
{
  return std::accumulate(tallies.begin(), tallies.end(), 0, [](int a, const TheoremTally& t) { return a + t.skipped; });
}

const TheoremTally& TheoremReport::tally(const std::string& id) const
{
  for (const auto& t : tallies)
    if (t.id == id)
      return t;
  throw InputError("unknown theorem '" + id + "'");
}

std::vector<Json> TheoremReport::lines(const Corpus& corpus) const
{
  std::vector<Json> out = instances;
  out.insert(out.end(), failures.begin(), failures.end());
  for (const auto& t : tallies) {
    Json j;
    j["kind"] = "theorem";
    j["id"] = t.id;
    j["statement"] = t.statement;
    j["checked"] = t.passed + t.failed;
    j["passed"] = t.passed;
    j["failed"] = t.failed;
    j["skipped"] = t.skipped;
    j["vacuous"] = t.vacuous;
    j["nonzero_ext2"] = t.nonzero_ext2;
    j["scope"] = corpus.completeness_label();
    out.push_back(std::move(j));
  }
  Json s;
  s["kind"] = "summary";
  s["candidates"] = static_cast<int>(instances.size());
  s["failed"] = failed();
  s["skipped"] = skipped();
  s["undecided_verdicts"] = undecided_verdicts;
  s["scope"] = corpus.completeness_label();
  out.push_back(std::move(s));
  return out;
}

TheoremReport verify_theorems(const Workbench& w, const std::string& algebra_id)
{
  const auto& specs = theorem_specs();
  TheoremReport report;
  for (const auto& s : specs)
    report.tallies.push_back({s.id, s.statement});

  for (const auto& c : w.candidates(w.corpus().size())) {
    const PredicateReport sinc = w.sincere(c), cos = w.cosincere(c), ts = w.satisfies_ts(c), st = w.satisfies_st(c);
    const PredicateReport pres = w.presilting(c), sil = w.silting(c), pret = w.pretilting(c);
    const PredicateReport tilt = w.tilting(c), van = w.vanishing(c), so = w.self_orthogonal(c);
    const PredicateReport gp12 = w.gen_in_perp(c, {1, 2}), gp2 = w.gen_in_perp(c, {2});
    const PredicateReport ds1 = w.d_sigma_in_perp1(c);
    const auto pd = w.projective_dimension(c);
    std::optional<PredicateReport> gen_pres;
    auto gen_eq_pres = [&]() -> const PredicateReport& {
      if (!gen_pres)
        gen_pres = w.gen_equals_pres(c);
      return *gen_pres;
    };
    std::optional<PredicateReport> perp_upto_pd;

    for (const PredicateReport* r : {&sinc, &cos, &ts, &st, &pres, &sil, &pret, &tilt, &van, &so, &gp12, &gp2, &ds1})
      for (const auto& rv : r->routes)
        report.undecided_verdicts += rv.verdict == Verdict::undecided ? 1 : 0;

    const bool has_ext2 = !gp2.holds();
    const std::vector<std::function<Outcome()>> checks{
        [&] {
          const bool same = sinc.verdict == cos.verdict && sinc.verdict == ts.verdict && sinc.verdict == st.verdict;
          return pass_if(same, {&sinc, &cos, &ts, &st});
        },
        [&] { return pass_if(sinc.routes_agree && ts.routes_agree && st.routes_agree, {&sinc, &ts, &st}); },
        [&] { return van.holds() ? pass_if(sinc.holds(), {&van, &sinc}) : vacuous(); },
        [&] {
          if (!sinc.holds())
            return vacuous();
          if (van.holds())
            return pass_if(true, {});
          const PredicateReport& gp = gen_eq_pres();
          if (gp.verdict == Verdict::undecided)
            return skip("Gen T = Pres T undecided: " + gp.witness());
          return gp.holds() ? pass_if(false, {&sinc, &van, &gp}) : vacuous();
        },
        [&] { return pass_if((sinc.holds() && sil.holds()) == (pres.holds() && van.holds()), {&sinc, &sil, &pres, &van}); },
        [&] { return pass_if(pres.routes_agree, {&pres}); },
        [&] {
          if (!sinc.holds())
            return vacuous();
          return pass_if(pret.holds() == gp12.holds(), {&sinc, &pret, &gp12});
        },
        [&] {
          if (!(sinc.holds() && pres.holds()))
            return vacuous();
          Outcome o = pass_if(pret.holds() == gp2.holds(), {&sinc, &pres, &pret, &gp2});
          o.ext2 = has_ext2;
          return o;
        },
        [&] {
          if (!decided(tilt))
            return skip("tilting undecided: " + tilt.witness());
          Outcome o = pass_if(tilt.holds() == (van.holds() && gp12.holds()), {&tilt, &van, &gp12});
          o.ext2 = has_ext2;
          return o;
        },
        [&] {
          if (!decided(tilt))
            return skip("tilting undecided: " + tilt.witness());
          Outcome o = pass_if(tilt.holds() == (sinc.holds() && sil.holds() && gp2.holds()), {&tilt, &sinc, &sil, &gp2});
          o.ext2 = has_ext2;
          return o;
        },
        [&] {
          for (const auto& rv : tilt.routes)
            if (rv.verdict == Verdict::undecided)
              return skip("route " + rv.route + " undecided: " + rv.witness);
          return pass_if(tilt.routes_agree, {&tilt});
        },
        [&] {
          if (!(sinc.holds() && sil.holds()))
            return vacuous();
          if (!pd)
            return skip("pd T exceeds the resolution bound " + std::to_string(w.resolution_bound()));
          const bool witnessed = tilt.holds() || so.witness().rfind("Ext^", 0) == 0;
          Outcome o = pass_if(so.holds() == tilt.holds() && witnessed, {&sinc, &sil, &so, &tilt});
          for (int a : c)
            for (int b : c)
              o.ext2 = o.ext2 || (*pd >= 2 && w.ext(2, a, b) != 0);
          return o;
        },
        [&] {
          if (so.verdict == Verdict::undecided || !pd)
            return so.holds() ? skip("pd T exceeds the resolution bound") : vacuous();
          if (!so.holds())
            return vacuous();
          std::vector<int> degrees;
          for (int i = 1; i <= *pd; ++i)
            degrees.push_back(i);
          perp_upto_pd = w.gen_in_perp(c, degrees);
          const PredicateReport& concl = *perp_upto_pd;
          if (concl.holds())
            return pass_if(true, {});
          const PredicateReport& gp = gen_eq_pres();
          if (gp.verdict == Verdict::undecided)
            return skip("Gen T = Pres T undecided: " + gp.witness());
          return gp.holds() ? pass_if(false, {&so, &gp, &concl}) : vacuous();
        },
        [&] { return pass_if(ds1.holds(), {&ds1}); },
        [&] {
          if (!decided(tilt))
            return skip("tilting undecided: " + tilt.witness());
          if (!tilt.holds())
            return vacuous();
          return pass_if(so.holds(), {&tilt, &so});
        },
    };

    Json row;
    row["kind"] = "instance";
    row["module"] = w.id(c);
    Json results, reasons;
    for (std::size_t k = 0; k < checks.size(); ++k) {
      const Outcome o = checks[k]();
      TheoremTally& t = report.tallies[k];
      switch (o.status) {
        case Status::passed: ++t.passed; break;
        case Status::failed: ++t.failed; break;
        case Status::skipped: ++t.skipped; break;
        case Status::vacuous: ++t.vacuous; break;
      }
      t.nonzero_ext2 += (o.ext2 && o.status != Status::vacuous) ? 1 : 0;
      results[specs[k].id] = status_name(o.status);
      if (o.status == Status::skipped)
        reasons[specs[k].id] = o.reason;
      if (o.status == Status::failed) {
        Json f;
        f["kind"] = "failure";
        f["theorem"] = specs[k].id;
        f["module"] = w.id(c);
        Json evidence = Json::array();
        for (const PredicateReport* r : o.evidence)
          evidence.push_back(report_json(*r));
        f["evidence"] = std::move(evidence);
        Json rerun = Json::array();
        for (const PredicateReport* r : o.evidence)
          rerun.push_back("siltlab check " + algebra_id + " --module " + w.id(c) + " --predicate " + r->predicate);
        f["rerun"] = std::move(rerun);
        report.failures.push_back(std::move(f));
      }
    }
    row["results"] = std::move(results);
    if (!reasons.empty())
      row["skipped"] = std::move(reasons);
    report.instances.push_back(std::move(row));
  }
  return report;
}

ExampleReport reproduce_example(std::int64_t prime)
{
  Quiver q({"1", "2"}, {{"alpha", 1, 0}});
  const AlgebraPtr alg = build_algebra(q, {}, Prime(prime));
  const Workbench w(enumerate_indecomposables(alg, CorpusStrategy::classified));
  const Corpus& corpus = w.corpus();
  ExampleReport out;
  out.lines.push_back(banner("reproduce-example", "1 <-alpha- 2", &corpus));

  // Display order: by lowest socle vertex, then by dimension.
  std::vector<int> order(static_cast<std::size_t>(corpus.size()));
  std::iota(order.begin(), order.end(), 0);
  auto socle_vertex = [&](int i) {
    const auto soc = socle_subspaces(corpus.member(i));
    for (int v = 0; v < alg->vertex_count(); ++v)
      if (soc[static_cast<std::size_t>(v)].cols() > 0)
        return v;
    return alg->vertex_count();
  };
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return std::make_pair(socle_vertex(a), corpus.member(a).total_dimension()) <
           std::make_pair(socle_vertex(b), corpus.member(b).total_dimension());
  });
  Json modules = Json::array();
  for (int i : order)
    modules.push_back(corpus.loewy(i));
  bool ok = corpus.size() == 3 && modules == Json::array({"1", "[2;1]", "2"});
  out.lines.push_back({{"kind", "corpus"}, {"size", corpus.size()}, {"modules", modules}});

  const Candidate t = w.parse("P2");
  const PredicateReport sinc = w.sincere(t);
  const auto pd = w.projective_dimension(t);
  const int ext1 = w.ext(1, t.front(), t.front());
  out.lines.push_back({{"kind", "fact"}, {"claim", "T = P2 is sincere"}, {"value", sinc.holds()}});
  out.lines.push_back({{"kind", "fact"}, {"claim", "pd T"}, {"value", pd ? Json(*pd) : Json(nullptr)}});
  out.lines.push_back({{"kind", "fact"}, {"claim", "dim Ext^1(T, T)"}, {"value", ext1}});
  ok = ok && sinc.holds() && pd == 0 && ext1 == 0;

  std::optional<int> witness;
  for (int j = 0; j < corpus.size() && !witness; ++j)
    if (w.hom_to(t, j) == 0 && w.ext_to(1, t, j) == 0)
      witness = j;
  Json wj{{"kind", "fact"}, {"claim", "nonzero module in T^perp{0,1}"}};
  if (witness) {
    wj["module"] = alias_with(corpus, *witness, 'P');
    wj["loewy"] = corpus.loewy(*witness);
    wj["hom"] = w.hom_to(t, *witness);
    wj["ext1"] = w.ext_to(1, t, *witness);
    ok = ok && wj["module"] == "P1";
  } else {
    wj["module"] = nullptr;
    ok = false;
  }
  out.lines.push_back(std::move(wj));

  const PredicateReport pret = w.pretilting(t), pres = w.presilting(t), sil = w.silting(t), tilt = w.tilting(t);
  Json v{{"kind", "verdicts"}, {"module", "P2"}};
  v["pretilting"] = pret.holds();
  v["presilting"] = pres.holds();
  v["sincere"] = sinc.holds();
  v["silting"] = sil.holds();
  v["tilting"] = tilt.holds();
  v["tilting_routes_agree"] = tilt.routes_agree;
  ok = ok && pret.holds() && pres.holds() && !sil.holds() && !tilt.holds() && tilt.routes_agree &&
       tilt.verdict == Verdict::no;
  out.lines.push_back(std::move(v));
  out.lines.push_back({{"kind", "check"}, {"matches_expected", ok}});
  out.matches = ok;
  return out;
}

std::string render_jsonl(const std::vector<Json>& lines)
{
  std::string out;
  for (const auto& j : lines)
    out += j.dump() + '\n';
  return out;
}

namespace {

std::string scalar_text(const Json& v)
{
  if (v.is_string())
    return v.get<std::string>();
  return v.dump();
}

std::string pad(const std::string& s, std::size_t width)
{
  return s.size() >= width ? s : s + std::string(width - s.size(), ' ');
}

void flush_table(std::ostringstream& out, std::vector<std::vector<std::string>>& rows)
{
  if (rows.empty())
    return;
  std::vector<std::size_t> width(rows.front().size(), 0);
  for (const auto& r : rows)
    for (std::size_t k = 0; k < r.size() && k < width.size(); ++k)
      width[k] = std::max(width[k], r[k].size());
  for (const auto& r : rows) {
    std::string line;
    for (std::size_t k = 0; k < r.size(); ++k)
      line += (k + 1 < r.size() ? pad(r[k], width[k] + 2) : r[k]);
    out << line << '\n';
  }
  rows.clear();
}

}  // namespace

std::string render_table(const std::vector<Json>& lines)
{
  std::ostringstream out;
  std::vector<std::vector<std::string>> rows;
  std::string current;
  for (const auto& j : lines) {
    const std::string kind = j.value("kind", "");
    if (kind != current)
      flush_table(out, rows);
    current = kind;
    if (kind == "candidate") {
      if (rows.empty()) {
        std::vector<std::string> head{"module", "pd"};
        for (const auto& [k, _] : j["predicates"].items())
          head.push_back(k);
        rows.push_back(std::move(head));
      }
      std::vector<std::string> r{j["module"].get<std::string>(), scalar_text(j["pd"])};
      for (const auto& [_, v] : j["predicates"].items())
        r.push_back(v.get<std::string>());
      rows.push_back(std::move(r));
    } else if (kind == "theorem") {
      if (rows.empty())
        rows.push_back({"theorem", "checked", "passed", "failed", "skipped", "vacuous"});
      rows.push_back({j["id"].get<std::string>(), scalar_text(j["checked"]), scalar_text(j["passed"]),
                      scalar_text(j["failed"]), scalar_text(j["skipped"]), scalar_text(j["vacuous"])});
    } else if (kind == "indecomposable") {
      if (rows.empty())
        rows.push_back({"index", "name", "dims", "loewy", "aliases"});
      std::string aliases;
      for (const auto& a : j["aliases"])
        aliases += (aliases.empty() ? "" : ",") + a.get<std::string>();
      rows.push_back({scalar_text(j["index"]), j["name"].get<std::string>(), j["dims"].dump(),
                      j["loewy"].get<std::string>(), aliases});
    } else if (kind == "instance") {
      // per-candidate statuses are summarised by the theorem table
      bool clean = true;
      for (const auto& [_, v] : j["results"].items())
        clean = clean && (v == "passed" || v == "vacuous");
      if (!clean) {
        std::string bad;
        for (const auto& [k, v] : j["results"].items())
          if (v != "passed" && v != "vacuous")
            bad += " " + k + "=" + v.get<std::string>();
        out << j["module"].get<std::string>() << ":" << bad << '\n';
      }
    } else {
      for (const auto& [k, v] : j.items()) {
        if (k == "kind")
          continue;
        if (v.is_object() || v.is_array())
          out << kind << '.' << k << ": " << v.dump() << '\n';
        else
          out << kind << '.' << k << ": " << scalar_text(v) << '\n';
      }
    }
  }
  flush_table(out, rows);
  return out.str();
}

}  // namespace siltlab
