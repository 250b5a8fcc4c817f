#pragma once

// Exact dense linear algebra over prime fields F_p.
//
// Storage is an Eigen integer matrix whose entries are kept fully reduced in
// [0, p). Products are formed in 64-bit integers and reduced afterwards, so
// the modulus is capped at 2^16 to keep every inner product exact.

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <vector>

#include <Eigen/Core>

namespace siltlab {

using Index = Eigen::Index;
using IntMatrix = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

/// A prime modulus. Construction fails for composites and for p >= 2^16.
class Prime {
 public:
  explicit Prime(std::int64_t p);

  [[nodiscard]] std::int64_t value() const noexcept { return p_; }
  [[nodiscard]] std::int64_t reduce(std::int64_t x) const noexcept {
    const std::int64_t r = x % p_;
    return r < 0 ? r + p_ : r;
  }
  [[nodiscard]] std::int64_t inverse(std::int64_t x) const;

  friend bool operator==(Prime, Prime) = default;

 private:
  std::int64_t p_;
};

[[nodiscard]] bool is_prime(std::int64_t n) noexcept;

/// A single element of F_p.
class Fp {
 public:
  Fp(std::int64_t value, Prime p) : p_(p), v_(p.reduce(value)) {}

  [[nodiscard]] std::int64_t value() const noexcept { return v_; }
  [[nodiscard]] Prime modulus() const noexcept { return p_; }
  [[nodiscard]] Fp inverse() const { return {p_.inverse(v_), p_}; }

  friend Fp operator+(Fp a, Fp b);
  friend Fp operator-(Fp a, Fp b);
  friend Fp operator*(Fp a, Fp b);
  friend Fp operator/(Fp a, Fp b);
  friend Fp operator-(Fp a) { return {-a.v_, a.p_}; }
  friend bool operator==(Fp a, Fp b) = default;

 private:
  Prime p_;
  std::int64_t v_;
};

class FpMatrix {
 public:
  FpMatrix(Index rows, Index cols, Prime p);
  FpMatrix(IntMatrix values, Prime p);

  static FpMatrix zero(Index rows, Index cols, Prime p) { return {rows, cols, p}; }
  static FpMatrix identity(Index n, Prime p);
  static FpMatrix from_rows(std::initializer_list<std::initializer_list<std::int64_t>> rows, Prime p);
  /// Throws InputError if the entries do not share one modulus.
  static FpMatrix from_elements(const std::vector<std::vector<Fp>>& rows);
  /// One column per vector; all vectors must have `length` entries.
  static FpMatrix from_columns(const std::vector<std::vector<std::int64_t>>& columns, Index length, Prime p);

  [[nodiscard]] Index rows() const noexcept { return m_.rows(); }
  [[nodiscard]] Index cols() const noexcept { return m_.cols(); }
  [[nodiscard]] Prime modulus() const noexcept { return p_; }
  [[nodiscard]] const IntMatrix& values() const noexcept { return m_; }

  [[nodiscard]] std::int64_t operator()(Index r, Index c) const { return m_(r, c); }
  void set(Index r, Index c, std::int64_t v) { m_(r, c) = p_.reduce(v); }
  [[nodiscard]] Fp at(Index r, Index c) const { return {m_(r, c), p_}; }

  [[nodiscard]] bool is_zero() const { return m_.isZero(); }
  [[nodiscard]] bool empty() const noexcept { return m_.size() == 0; }
  [[nodiscard]] FpMatrix transpose() const;
  [[nodiscard]] FpMatrix block(Index r0, Index c0, Index nr, Index nc) const;
  [[nodiscard]] FpMatrix col(Index c) const { return block(0, c, rows(), 1); }
  [[nodiscard]] FpMatrix select_columns(const std::vector<Index>& cols) const;
  void set_block(Index r0, Index c0, const FpMatrix& b);

  friend FpMatrix operator*(const FpMatrix& a, const FpMatrix& b);
  friend FpMatrix operator+(const FpMatrix& a, const FpMatrix& b);
  friend FpMatrix operator-(const FpMatrix& a, const FpMatrix& b);
  friend FpMatrix operator*(std::int64_t s, const FpMatrix& a);
  friend FpMatrix operator-(const FpMatrix& a);
  friend bool operator==(const FpMatrix& a, const FpMatrix& b);

 private:
  void normalize();

  IntMatrix m_;
  Prime p_;
};

/// Reduced row-echelon data of a matrix A.
///
/// `kernel_basis` and `image_basis` hold their vectors as columns.
/// `transform` is invertible and transform * A == reduced.
struct EchelonData {
  FpMatrix reduced;
  Index rank = 0;
  std::vector<Index> pivot_columns;
  FpMatrix kernel_basis;
  FpMatrix image_basis;
  FpMatrix transform;
};

[[nodiscard]] EchelonData rref(const FpMatrix& a);
[[nodiscard]] Index rank(const FpMatrix& a);
/// Columns span the null space of `a`, one column per free variable.
[[nodiscard]] FpMatrix kernel_basis(const FpMatrix& a);
/// Linearly independent columns of `a` spanning its column space.
[[nodiscard]] FpMatrix column_space_basis(const FpMatrix& a);

struct LinearSolution {
  FpMatrix particular;
  FpMatrix kernel_basis;
};

/// Solves A X = B. Returns std::nullopt iff the system is inconsistent.
[[nodiscard]] std::optional<LinearSolution> solve_linear(const FpMatrix& a, const FpMatrix& b);

/// Assembles a block matrix. Row heights and column widths must agree across
/// the grid; 0x0 blocks are allowed wherever the grid fixes the shape.
[[nodiscard]] FpMatrix assemble_block(const std::vector<std::vector<FpMatrix>>& blocks);
[[nodiscard]] FpMatrix block_diagonal(const std::vector<FpMatrix>& blocks, Prime p);
[[nodiscard]] FpMatrix hstack(const std::vector<FpMatrix>& parts, Index rows, Prime p);
[[nodiscard]] FpMatrix vstack(const std::vector<FpMatrix>& parts, Index cols, Prime p);

/// Columns completing the columns of `basis` (assumed independent) to a basis
/// of F_p^n; picks standard basis vectors greedily in index order.
[[nodiscard]] FpMatrix complement_basis(const FpMatrix& basis, Index n);
/// X with basis * X == target, throwing InputError if target leaves the span.
[[nodiscard]] FpMatrix coordinates_in(const FpMatrix& basis, const FpMatrix& target);
[[nodiscard]] bool in_column_space(const FpMatrix& basis, const FpMatrix& v);
[[nodiscard]] bool is_invertible(const FpMatrix& a);

}  // namespace siltlab
