#include <gtest/gtest.h>

#include "siltlab/error.hpp"
#include "siltlab/spec_file.hpp"

namespace siltlab {
namespace {

const std::string kData = SILTLAB_DATA_DIR;

std::string parse_error(const std::string& text)
{
  try {
    (void)parse_algebra_spec(text);
  } catch (const InputError& e) {
    return e.what();
  }
  return "";
}

TEST(SpecFile, ShippedA2)
{
  const AlgebraSpec s = load_algebra_spec(kData + "/a2.alg");
  EXPECT_EQ(s.characteristic, 2);
  EXPECT_EQ(s.family, FamilyHint::hereditary_an);
  ASSERT_EQ(s.quiver.vertex_count(), 2);
  ASSERT_EQ(s.quiver.arrows().size(), 1u);
  EXPECT_EQ(s.quiver.arrow(0).source, 1);
  EXPECT_EQ(s.quiver.arrow(0).target, 0);
  EXPECT_TRUE(s.relations.relations.empty());
  const AlgebraPtr alg = build_algebra(s);
  EXPECT_EQ(alg->dimension(), 3);
}

TEST(SpecFile, NakayamaRelationIsAlphaAfterBeta)
{
  const AlgebraSpec s = load_algebra_spec(kData + "/nakayama_a3.alg");
  ASSERT_EQ(s.relations.relations.size(), 1u);
  const RelationTerm& t = s.relations.relations[0].terms.at(0);
  // traversal order: beta first
  EXPECT_EQ(t.arrows, (std::vector<int>{1, 0}));
  EXPECT_EQ(build_algebra(s)->dimension(), 5);
}

TEST(SpecFile, RoundTripIsCanonical)
{
  for (const char* f : {"a2.alg", "a3.alg", "a4.alg", "nakayama_a3.alg", "cyclic2_rad2.alg"}) {
    const AlgebraSpec s = load_algebra_spec(kData + "/" + f);
    const std::string once = serialize_algebra_spec(s);
    const AlgebraSpec again = parse_algebra_spec(once);
    EXPECT_EQ(serialize_algebra_spec(again), once) << f;
    EXPECT_EQ(again.quiver.vertex_names(), s.quiver.vertex_names()) << f;
    EXPECT_EQ(again.relations.relations.size(), s.relations.relations.size()) << f;
  }
}

TEST(SpecFile, CanonicalForm)
{
  const AlgebraSpec s = parse_algebra_spec(
      "vertices: x, y\n"
      "arrows:\n"
      "  f: x -> y   # comment\n"
      "  g: x -> y\n"
      "relations:\n"
      "nilpotency: 3\n"
      "characteristic: 3\n");
  EXPECT_EQ(serialize_algebra_spec(s),
            "characteristic: 3\nfamily: generic\nvertices: x y\nnilpotency: 3\narrows:\n  f: x -> y\n  g: x -> y\n"
            "relations:\n");
}

TEST(SpecFile, SignedCoefficients)
{
  const AlgebraSpec s = parse_algebra_spec(
      "characteristic: 5\nvertices: 1 2 3 4\narrows:\n  a: 1 -> 2\n  b: 2 -> 4\n  c: 1 -> 3\n  d: 3 -> 4\n"
      "relations:\n  b*a - 2*d*c\n");
  const Relation& r = s.relations.relations.at(0);
  ASSERT_EQ(r.terms.size(), 2u);
  EXPECT_EQ(r.terms[0].coefficient, 1);
  EXPECT_EQ(r.terms[1].coefficient, -2);
  EXPECT_EQ(r.terms[1].arrows, (std::vector<int>{2, 3}));
  EXPECT_NE(serialize_algebra_spec(s).find("  b*a - 2*d*c\n"), std::string::npos);
}

TEST(SpecFile, Errors)
{
  EXPECT_EQ(parse_error("characteristic: 2\nvertices:\n"), "line 2: vertices section is empty");
  EXPECT_EQ(parse_error("characteristic: 2\nvertices: 1\ncolour: red\n"), "line 3: unknown key 'colour'");
  EXPECT_EQ(parse_error("characteristic: 4\nvertices: 1\n"), "line 1: characteristic must be a prime below 65536");
  EXPECT_EQ(parse_error("characteristic: 2\nvertices: 1 1\n"), "line 2: duplicate vertex '1'");
  EXPECT_EQ(parse_error("characteristic: 2\ncharacteristic: 3\n"), "line 2: duplicate key 'characteristic'");
  EXPECT_EQ(parse_error("characteristic: 2\nvertices: 1 2\narrows:\n  a: 1 -> 3\n"),
            "line 4: arrow 'a' uses an undeclared vertex");
  EXPECT_EQ(parse_error("characteristic: 2\nvertices: 1 2\narrows:\n  a: 1 -> 2\nrelations:\n  a*a\n"),
            "line 6: path 'a*a' does not compose");
  EXPECT_EQ(parse_error("characteristic: 2\nvertices: 1 2\narrows:\n  a: 1 -> 2\nrelations:\n  zz\n"),
            "line 6: unknown arrow 'zz'");
  EXPECT_EQ(parse_error("vertices: 1\n"), "line 1: missing 'characteristic'");
  EXPECT_EQ(parse_error("characteristic: 2\n  a: 1 -> 2\n"),
            "line 2: indented line outside an arrows or relations block");
  EXPECT_EQ(parse_error("characteristic: 2\nvertices: 1\nnilpotency: 0\n"), "line 3: nilpotency must lie in 1..64");
  EXPECT_EQ(parse_error("characteristic: 2\nvertices: 1\nfamily: wild\n").substr(0, 7), "line 3:");
  EXPECT_THROW((void)load_algebra_spec(kData + "/missing.alg"), InputError);
}

TEST(SpecFile, FamilyHintIsChecked)
{
  AlgebraSpec s = load_algebra_spec(kData + "/nakayama_a3.alg");
  s.family = FamilyHint::hereditary_an;
  EXPECT_THROW((void)build_algebra(s), InputError);
  AlgebraSpec a = load_algebra_spec(kData + "/a3.alg");
  a.family = FamilyHint::nakayama;
  EXPECT_NO_THROW((void)build_algebra(a));
}

}  // namespace
}  // namespace siltlab
