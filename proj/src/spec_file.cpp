#include "siltlab/spec_file.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "siltlab/error.hpp"
#include "siltlab/indecomposable.hpp"

namespace siltlab {

namespace {

[[noreturn]] void fail(int line, const std::string& msg)
{
  throw InputError("line " + std::to_string(line) + ": " + msg);
}

std::string trim(const std::string& s)
{
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos)
    return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

bool is_name(const std::string& s)
{
  if (s.empty())
    return false;
  for (char ch : s)
    if (!std::isalnum(static_cast<unsigned char>(ch)) && ch != '_' && ch != '\'')
      return false;
  return true;
}

std::int64_t parse_int(const std::string& s, int line, const std::string& what)
{
  std::size_t used = 0;
  std::int64_t v = 0;
  try {
    v = std::stoll(s, &used);
  } catch (const std::exception&) {
    fail(line, what + " '" + s + "' is not an integer");
  }
  if (used != s.size())
    fail(line, what + " '" + s + "' is not an integer");
  return v;
}

struct RawArrow {
  std::string name, source, target;
  int line;
};

struct RawRelation {
  std::string text;
  int line;
};

// One signed term "c*a*b" of a relation; returns traversal order.
RelationTerm parse_term(const std::string& text, std::int64_t sign, const Quiver& q, int line)
{
  std::vector<std::string> factors;
  std::stringstream in(text);
  std::string f;
  while (std::getline(in, f, '*'))
    factors.push_back(trim(f));
  if (factors.empty() || std::any_of(factors.begin(), factors.end(), [](const std::string& s) { return s.empty(); }))
    fail(line, "malformed relation term '" + trim(text) + "'");
  RelationTerm term;
  term.coefficient = sign;
  std::size_t first = 0;
  if (std::isdigit(static_cast<unsigned char>(factors[0][0]))) {
    term.coefficient *= parse_int(factors[0], line, "coefficient");
    first = 1;
  }
  if (first == factors.size())
    fail(line, "relation term '" + trim(text) + "' has no path");
  // "alpha*beta" is alpha after beta: traverse right to left.
  for (std::size_t k = factors.size(); k-- > first;) {
    int a = -1;
    try {
      a = q.arrow_index(factors[k]);
    } catch (const InputError&) {
      fail(line, "unknown arrow '" + factors[k] + "'");
    }
    if (!term.arrows.empty() && q.arrow(term.arrows.back()).target != q.arrow(a).source)
      fail(line, "path '" + trim(text) + "' does not compose");
    term.arrows.push_back(a);
  }
  return term;
}

Relation parse_relation(const std::string& text, const Quiver& q, int line)
{
  Relation r;
  std::string cur;
  std::int64_t sign = 1;
  auto flush = [&](bool final_term) {
    if (trim(cur).empty()) {
      if (final_term || !r.terms.empty())
        fail(line, "malformed relation '" + trim(text) + "'");
      return;
    }
    r.terms.push_back(parse_term(cur, sign, q, line));
    cur.clear();
  };
  for (char ch : text) {
    if (ch == '+' || ch == '-') {
      if (!(r.terms.empty() && trim(cur).empty()))
        flush(false);
      else if (ch == '+')
        fail(line, "malformed relation '" + trim(text) + "'");
      sign = ch == '-' ? -1 : 1;
      cur.clear();
    } else {
      cur += ch;
    }
  }
  flush(true);
  return r;
}

std::string word_of(const RelationTerm& t, const Quiver& q)
{
  std::string out;
  for (std::size_t k = t.arrows.size(); k-- > 0;) {
    out += q.arrow(t.arrows[k]).name;
    if (k > 0)
      out += '*';
  }
  return out;
}

FamilyHint parse_family(const std::string& s, int line)
{
  if (s == "hereditary-An")
    return FamilyHint::hereditary_an;
  if (s == "nakayama")
    return FamilyHint::nakayama;
  if (s == "generic")
    return FamilyHint::generic;
  fail(line, "family must be hereditary-An, nakayama or generic, got '" + s + "'");
}

}  // namespace

const char* to_string(FamilyHint f) noexcept
{
  switch (f) {
    case FamilyHint::hereditary_an: return "hereditary-An";
    case FamilyHint::nakayama: return "nakayama";
    case FamilyHint::generic: return "generic";
  }
  return "generic";
}

AlgebraSpec parse_algebra_spec(const std::string& text)
{
  std::map<std::string, std::pair<std::string, int>> scalars;
  std::vector<RawArrow> arrows;
  std::vector<RawRelation> relations;
  std::set<std::string> seen;
  enum class Block { none, arrows, relations } block = Block::none;

  std::stringstream in(text);
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const std::string content = raw.substr(0, raw.find('#'));
    if (trim(content).empty())
      continue;
    const bool indented = content[0] == ' ' || content[0] == '\t';
    if (indented) {
      if (block == Block::none)
        fail(line, "indented line outside an arrows or relations block");
      if (block == Block::relations) {
        relations.push_back({trim(content), line});
        continue;
      }
      const auto colon = content.find(':');
      const auto arrow = content.find("->");
      if (colon == std::string::npos || arrow == std::string::npos || arrow < colon)
        fail(line, "arrow must read 'name: source -> target'");
      RawArrow a{trim(content.substr(0, colon)), trim(content.substr(colon + 1, arrow - colon - 1)),
                 trim(content.substr(arrow + 2)), line};
      if (!is_name(a.name) || !is_name(a.source) || !is_name(a.target))
        fail(line, "arrow must read 'name: source -> target'");
      if (std::isdigit(static_cast<unsigned char>(a.name[0])))
        fail(line, "arrow name '" + a.name + "' must not start with a digit");
      arrows.push_back(std::move(a));
      continue;
    }
    const auto colon = content.find(':');
    if (colon == std::string::npos)
      fail(line, "expected 'key: value'");
    const std::string key = trim(content.substr(0, colon));
    const std::string value = trim(content.substr(colon + 1));
    if (!seen.insert(key).second)
      fail(line, "duplicate key '" + key + "'");
    block = Block::none;
    if (key == "arrows" || key == "relations") {
      if (!value.empty())
        fail(line, "'" + key + ":' starts a block; list entries on indented lines");
      block = key == "arrows" ? Block::arrows : Block::relations;
    } else if (key == "characteristic" || key == "family" || key == "vertices" || key == "nilpotency") {
      scalars[key] = {value, line};
    } else {
      fail(line, "unknown key '" + key + "'");
    }
  }

  AlgebraSpec spec;
  if (!scalars.count("characteristic"))
    fail(line, "missing 'characteristic'");
  {
    const auto& [v, l] = scalars["characteristic"];
    spec.characteristic = parse_int(v, l, "characteristic");
    if (!is_prime(spec.characteristic) || spec.characteristic >= (1 << 16))
      fail(l, "characteristic must be a prime below 65536");
  }
  if (scalars.count("family"))
    spec.family = parse_family(scalars["family"].first, scalars["family"].second);

  if (!scalars.count("vertices"))
    fail(line, "missing 'vertices'");
  std::vector<std::string> vertices;
  {
    const auto& [v, l] = scalars["vertices"];
    std::string names = v;
    std::replace(names.begin(), names.end(), ',', ' ');
    std::stringstream vs(names);
    std::string name;
    std::set<std::string> uniq;
    while (vs >> name) {
      if (!is_name(name))
        fail(l, "invalid vertex name '" + name + "'");
      if (!uniq.insert(name).second)
        fail(l, "duplicate vertex '" + name + "'");
      vertices.push_back(name);
    }
    if (vertices.empty())
      fail(l, "vertices section is empty");
  }
  const Quiver names_only(vertices, {});
  std::vector<Arrow> qarrows;
  std::set<std::string> arrow_names;
  for (const auto& a : arrows) {
    if (!arrow_names.insert(a.name).second)
      fail(a.line, "duplicate arrow '" + a.name + "'");
    int s = 0, t = 0;
    try {
      s = names_only.vertex_index(a.source);
      t = names_only.vertex_index(a.target);
    } catch (const InputError&) {
      fail(a.line, "arrow '" + a.name + "' uses an undeclared vertex");
    }
    qarrows.push_back({a.name, s, t});
  }
  spec.quiver = Quiver(vertices, qarrows);
  for (const auto& r : relations)
    spec.relations.relations.push_back(parse_relation(r.text, spec.quiver, r.line));
  if (scalars.count("nilpotency")) {
    const auto& [v, l] = scalars["nilpotency"];
    const std::int64_t m = parse_int(v, l, "nilpotency");
    if (m < 1 || m > 64)
      fail(l, "nilpotency must lie in 1..64");
    spec.relations.nilpotency_bound = static_cast<int>(m);
  }
  return spec;
}

AlgebraSpec load_algebra_spec(const std::filesystem::path& path)
{
  std::ifstream in(path);
  if (!in)
    throw InputError("cannot read algebra file '" + path.string() + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return parse_algebra_spec(buf.str());
  } catch (const InputError& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

std::string serialize_algebra_spec(const AlgebraSpec& spec)
{
  const Quiver& q = spec.quiver;
  std::ostringstream out;
  out << "characteristic: " << spec.characteristic << '\n';
  out << "family: " << to_string(spec.family) << '\n';
  out << "vertices:";
  for (const auto& v : q.vertex_names())
    out << ' ' << v;
  out << '\n';
  if (spec.relations.nilpotency_bound)
    out << "nilpotency: " << *spec.relations.nilpotency_bound << '\n';
  out << "arrows:\n";
  for (const auto& a : q.arrows())
    out << "  " << a.name << ": " << q.vertex_name(a.source) << " -> " << q.vertex_name(a.target) << '\n';
  out << "relations:\n";
  for (const auto& r : spec.relations.relations) {
    out << "  ";
    for (std::size_t i = 0; i < r.terms.size(); ++i) {
      const RelationTerm& t = r.terms[i];
      const std::int64_t mag = t.coefficient < 0 ? -t.coefficient : t.coefficient;
      if (i == 0)
        out << (t.coefficient < 0 ? "-" : "");
      else
        out << (t.coefficient < 0 ? " - " : " + ");
      if (mag != 1)
        out << mag << '*';
      out << word_of(t, q);
    }
    out << '\n';
  }
  return out.str();
}

AlgebraPtr build_algebra(const AlgebraSpec& spec)
{
  AlgebraPtr alg = build_algebra(spec.quiver, spec.relations, Prime(spec.characteristic));
  if (spec.family == FamilyHint::hereditary_an && !is_hereditary_an(*alg))
    throw InputError("family hint hereditary-An does not match the quiver and relations");
  if (spec.family == FamilyHint::nakayama && !has_nakayama_shape(*alg))
    throw InputError("family hint nakayama does not match the quiver");
  return alg;
}

}  // namespace siltlab
