#include <gtest/gtest.h>

#include <random>

#include "siltlab/error.hpp"
#include "siltlab/linalg.hpp"

namespace siltlab {
namespace {

FpMatrix random_matrix(std::mt19937_64& rng, Index rows, Index cols, Prime p)
{
  std::uniform_int_distribution<std::int64_t> entry(0, p.value() - 1);
  FpMatrix a(rows, cols, p);
  for (Index r = 0; r < rows; ++r)
    for (Index c = 0; c < cols; ++c)
      a.set(r, c, entry(rng));
  return a;
}

// Number of vectors x in F_p^n with A x = 0, by enumeration.
std::int64_t count_kernel(const FpMatrix& a)
{
  const std::int64_t p = a.modulus().value();
  std::int64_t total = 1;
  for (Index i = 0; i < a.cols(); ++i)
    total *= p;
  std::int64_t hits = 0;
  FpMatrix x(a.cols(), 1, a.modulus());
  for (std::int64_t code = 0; code < total; ++code) {
    std::int64_t k = code;
    for (Index i = 0; i < a.cols(); ++i) {
      x.set(i, 0, k % p);
      k /= p;
    }
    hits += (a * x).is_zero() ? 1 : 0;
  }
  return hits;
}

std::int64_t power(std::int64_t b, Index e)
{
  std::int64_t r = 1;
  for (Index i = 0; i < e; ++i)
    r *= b;
  return r;
}

TEST(Prime, RejectsComposites)
{
  EXPECT_THROW(Prime(4), AlgebraError);
  EXPECT_THROW(Prime(1), AlgebraError);
  EXPECT_THROW(Prime(65537), AlgebraError);
  EXPECT_EQ(Prime(65521).value(), 65521);
  const Fp a(3, Prime(7));
  EXPECT_EQ((a * a.inverse()).value(), 1);
  EXPECT_EQ((a / Fp(5, Prime(7))).value(), 2);
  EXPECT_THROW((void)(a / Fp(0, Prime(7))), InputError);
  EXPECT_EQ(Fp(-1, Prime(5)).value(), 4);
}

TEST(Rref, SmallExamples)
{
  const Prime p2(2), p3(3), p5(5);
  const EchelonData id = rref(FpMatrix::identity(3, p2));
  EXPECT_EQ(id.rank, 3);
  EXPECT_EQ(id.kernel_basis.cols(), 0);

  const EchelonData zero = rref(FpMatrix(2, 2, p3));
  EXPECT_EQ(zero.rank, 0);
  EXPECT_EQ(zero.kernel_basis.cols(), 2);

  const EchelonData r = rref(FpMatrix::from_rows({{1, 2}, {2, 4}}, p5));
  EXPECT_EQ(r.rank, 1);
  ASSERT_EQ(r.kernel_basis.cols(), 1);
  EXPECT_EQ(r.kernel_basis, FpMatrix::from_rows({{3}, {1}}, p5));
  EXPECT_EQ(r.pivot_columns, std::vector<Index>{0});
}

TEST(Rref, MixedModuliRejected)
{
  EXPECT_THROW((void)FpMatrix::from_elements({{Fp(1, Prime(2)), Fp(1, Prime(3))}}), InputError);
  EXPECT_THROW((void)(FpMatrix(1, 1, Prime(2)) + FpMatrix(1, 1, Prime(3))), InputError);
}

TEST(Solve, SmallExamples)
{
  const Prime p2(2);
  const FpMatrix b = FpMatrix::from_rows({{1, 0}, {1, 1}}, p2);
  const auto id = solve_linear(FpMatrix::identity(2, p2), b);
  ASSERT_TRUE(id.has_value());
  EXPECT_EQ(id->particular, b);
  EXPECT_EQ(id->kernel_basis.cols(), 0);

  EXPECT_FALSE(solve_linear(FpMatrix(2, 2, p2), b).has_value());

  const auto x = solve_linear(FpMatrix::from_rows({{1, 1}, {0, 1}}, p2), FpMatrix::from_rows({{0}, {1}}, p2));
  ASSERT_TRUE(x.has_value());
  EXPECT_EQ(x->particular, FpMatrix::from_rows({{1}, {1}}, p2));
  EXPECT_EQ(x->kernel_basis.cols(), 0);

  EXPECT_THROW((void)solve_linear(FpMatrix(2, 2, p2), FpMatrix(3, 1, p2)), InputError);
}

TEST(Blocks, Examples)
{
  const Prime p(3);
  EXPECT_EQ(block_diagonal({FpMatrix::identity(1, p), FpMatrix::identity(2, p)}, p), FpMatrix::identity(3, p));
  const FpMatrix a = FpMatrix::from_rows({{1, 2}, {0, 1}}, p);
  EXPECT_EQ(block_diagonal({a, FpMatrix(0, 0, p)}, p), a);
  const FpMatrix r1 = FpMatrix::from_rows({{1, 1}, {2, 2}}, p);
  EXPECT_EQ(rank(block_diagonal({r1, r1}, p)), 2);
  EXPECT_THROW((void)assemble_block({{a, FpMatrix(3, 1, p)}}), InputError);
  EXPECT_EQ(assemble_block({{a, FpMatrix(2, 1, p)}, {FpMatrix(1, 2, p), FpMatrix::identity(1, p)}}).rows(), 3);
  EXPECT_EQ(hstack({}, 4, p).rows(), 4);
  EXPECT_EQ(vstack({}, 4, p).cols(), 4);
}

class RandomMatrices : public ::testing::TestWithParam<int> {};

TEST_P(RandomMatrices, RankNullityAndSolve)
{
  const Prime p(GetParam());
  std::mt19937_64 rng(0xC0FFEE + static_cast<std::uint64_t>(GetParam()));
  std::uniform_int_distribution<Index> shape(0, 7);
  for (int trial = 0; trial < 1000; ++trial) {
    const Index rows = shape(rng);
    const Index cols = shape(rng);
    const FpMatrix a = random_matrix(rng, rows, cols, p);
    const EchelonData e = rref(a);

    EXPECT_EQ(e.rank + e.kernel_basis.cols(), cols);
    EXPECT_EQ(rank(a), rank(a.transpose()));
    EXPECT_TRUE((a * e.kernel_basis).is_zero());
    EXPECT_EQ(rank(e.kernel_basis), e.kernel_basis.cols());
    EXPECT_EQ(e.transform * a, e.reduced);
    EXPECT_TRUE(is_invertible(e.transform));
    EXPECT_EQ(rref(e.reduced).reduced, e.reduced);
    EXPECT_EQ(column_space_basis(a).cols(), e.rank);
    if (cols * (p.value() == 2 ? 1 : 2) <= 8)
      EXPECT_EQ(count_kernel(a), power(p.value(), cols - e.rank));

    const FpMatrix x0 = random_matrix(rng, cols, 2, p);
    const auto sol = solve_linear(a, a * x0);
    ASSERT_TRUE(sol.has_value());
    EXPECT_EQ(a * sol->particular, a * x0);
    EXPECT_EQ(sol->kernel_basis.cols(), cols - e.rank);

    const FpMatrix b = random_matrix(rng, rows, 1, p);
    const auto maybe = solve_linear(a, b);
    EXPECT_EQ(maybe.has_value(), in_column_space(a, b));
    if (maybe)
      EXPECT_EQ(a * maybe->particular, b);
  }
}

INSTANTIATE_TEST_SUITE_P(Fields, RandomMatrices, ::testing::Values(2, 3, 5));

TEST(Complement, FillsSpace)
{
  const Prime p(5);
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const FpMatrix basis = column_space_basis(random_matrix(rng, 5, 3, p));
    const FpMatrix comp = complement_basis(basis, 5);
    EXPECT_EQ(basis.cols() + comp.cols(), 5);
    EXPECT_EQ(rank(hstack({basis, comp}, 5, p)), 5);
    const FpMatrix v = basis * random_matrix(rng, basis.cols(), 1, p);
    EXPECT_EQ(basis * coordinates_in(basis, v), v);
  }
}

}  // namespace
}  // namespace siltlab
