#include "siltlab/linalg.hpp"

#include <string>
#include <utility>

#include "siltlab/error.hpp"

namespace siltlab {

namespace {

constexpr std::int64_t kMaxModulus = 1 << 16;

void require_same_modulus(Prime a, Prime b, const char* what)
{
  if (a != b)
    throw InputError(std::string(what) + ": operands over different prime fields");
}

// In-place Gauss-Jordan elimination on the first `pivot_limit` columns.
// Pivot choice is deterministic: leftmost column with a nonzero entry, first
// such row at or below the current pivot row.
std::vector<Index> eliminate(IntMatrix& m, Index pivot_limit, Prime p)
{
  std::vector<Index> pivots;
  const Index rows = m.rows();
  const Index cols = m.cols();
  Index r = 0;
  for (Index c = 0; c < pivot_limit && r < rows; ++c) {
    Index sel = -1;
    for (Index i = r; i < rows; ++i) {
      if (m(i, c) != 0) {
        sel = i;
        break;
      }
    }
    if (sel < 0)
      continue;
    if (sel != r)
      m.row(sel).swap(m.row(r));
    const std::int64_t inv = p.inverse(m(r, c));
    if (inv != 1) {
      for (Index j = c; j < cols; ++j)
        m(r, j) = (m(r, j) * inv) % p.value();
    }
    for (Index i = 0; i < rows; ++i) {
      if (i == r)
        continue;
      const std::int64_t f = m(i, c);
      if (f == 0)
        continue;
      const std::int64_t g = p.value() - f;
      for (Index j = c; j < cols; ++j) {
        if (m(r, j) != 0)
          m(i, j) = (m(i, j) + g * m(r, j)) % p.value();
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

FpMatrix kernel_from_reduced(const IntMatrix& red, const std::vector<Index>& pivots, Index cols, Prime p)
{
  std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
  for (Index c : pivots)
    is_pivot[static_cast<std::size_t>(c)] = true;
  std::vector<Index> free_cols;
  for (Index c = 0; c < cols; ++c)
    if (!is_pivot[static_cast<std::size_t>(c)])
      free_cols.push_back(c);
  FpMatrix k(cols, static_cast<Index>(free_cols.size()), p);
  for (std::size_t f = 0; f < free_cols.size(); ++f) {
    const Index fc = free_cols[f];
    const auto fi = static_cast<Index>(f);
    k.set(fc, fi, 1);
    for (std::size_t r = 0; r < pivots.size(); ++r)
      k.set(pivots[r], fi, -red(static_cast<Index>(r), fc));
  }
  return k;
}

}  // namespace

bool is_prime(std::int64_t n) noexcept
{
  if (n < 2)
    return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0)
      return false;
  return true;
}

Prime::Prime(std::int64_t p) : p_(p)
{
  if (!is_prime(p) || p >= kMaxModulus)
    throw AlgebraError("modulus " + std::to_string(p) + " is not a supported prime");
}

std::int64_t Prime::inverse(std::int64_t x) const
{
  std::int64_t a = reduce(x);
  if (a == 0)
    throw InputError("division by zero in F_" + std::to_string(p_));
  // extended Euclid
  std::int64_t t = 0, new_t = 1, r = p_, new_r = a;
  while (new_r != 0) {
    const std::int64_t q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  return reduce(t);
}

Fp operator+(Fp a, Fp b)
{
  require_same_modulus(a.p_, b.p_, "Fp +");
  return {a.v_ + b.v_, a.p_};
}

Fp operator-(Fp a, Fp b)
{
  require_same_modulus(a.p_, b.p_, "Fp -");
  return {a.v_ - b.v_, a.p_};
}

Fp operator*(Fp a, Fp b)
{
  require_same_modulus(a.p_, b.p_, "Fp *");
  return {a.v_ * b.v_, a.p_};
}

Fp operator/(Fp a, Fp b)
{
  require_same_modulus(a.p_, b.p_, "Fp /");
  return a * b.inverse();
}

FpMatrix::FpMatrix(Index rows, Index cols, Prime p) : m_(IntMatrix::Zero(rows, cols)), p_(p) {}

FpMatrix::FpMatrix(IntMatrix values, Prime p) : m_(std::move(values)), p_(p) { normalize(); }

void FpMatrix::normalize()
{
  const std::int64_t q = p_.value();
  m_ = m_.unaryExpr([q](std::int64_t x) {
    const std::int64_t r = x % q;
    return r < 0 ? r + q : r;
  });
}

FpMatrix FpMatrix::identity(Index n, Prime p)
{
  FpMatrix m(n, n, p);
  m.m_.setIdentity();
  return m;
}

FpMatrix FpMatrix::from_rows(std::initializer_list<std::initializer_list<std::int64_t>> rows, Prime p)
{
  const auto nr = static_cast<Index>(rows.size());
  const Index nc = nr == 0 ? 0 : static_cast<Index>(rows.begin()->size());
  IntMatrix m(nr, nc);
  Index r = 0;
  for (const auto& row : rows) {
    if (static_cast<Index>(row.size()) != nc)
      throw InputError("from_rows: ragged row lengths");
    Index c = 0;
    for (std::int64_t v : row)
      m(r, c++) = v;
    ++r;
  }
  return {std::move(m), p};
}

FpMatrix FpMatrix::from_elements(const std::vector<std::vector<Fp>>& rows)
{
  if (rows.empty() || rows.front().empty())
    throw InputError("from_elements: cannot infer the modulus of an empty grid");
  const Prime p = rows.front().front().modulus();
  const auto nr = static_cast<Index>(rows.size());
  const auto nc = static_cast<Index>(rows.front().size());
  IntMatrix m(nr, nc);
  for (Index r = 0; r < nr; ++r) {
    const auto& row = rows[static_cast<std::size_t>(r)];
    if (static_cast<Index>(row.size()) != nc)
      throw InputError("from_elements: ragged row lengths");
    for (Index c = 0; c < nc; ++c) {
      const Fp& e = row[static_cast<std::size_t>(c)];
      if (e.modulus() != p)
        throw InputError("from_elements: mixed moduli across entries");
      m(r, c) = e.value();
    }
  }
  return {std::move(m), p};
}

FpMatrix FpMatrix::from_columns(const std::vector<std::vector<std::int64_t>>& columns, Index length, Prime p)
{
  IntMatrix m(length, static_cast<Index>(columns.size()));
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (static_cast<Index>(columns[c].size()) != length)
      throw InputError("from_columns: vector length mismatch");
    for (Index r = 0; r < length; ++r)
      m(r, static_cast<Index>(c)) = columns[c][static_cast<std::size_t>(r)];
  }
  return {std::move(m), p};
}

FpMatrix FpMatrix::transpose() const
{
  FpMatrix t(cols(), rows(), p_);
  t.m_ = m_.transpose();
  return t;
}

FpMatrix FpMatrix::block(Index r0, Index c0, Index nr, Index nc) const
{
  if (r0 < 0 || c0 < 0 || nr < 0 || nc < 0 || r0 + nr > rows() || c0 + nc > cols())
    throw InputError("block: out of range");
  FpMatrix b(nr, nc, p_);
  if (nr > 0 && nc > 0)
    b.m_ = m_.block(r0, c0, nr, nc);
  return b;
}

FpMatrix FpMatrix::select_columns(const std::vector<Index>& cols_wanted) const
{
  FpMatrix s(rows(), static_cast<Index>(cols_wanted.size()), p_);
  for (std::size_t j = 0; j < cols_wanted.size(); ++j)
    s.m_.col(static_cast<Index>(j)) = m_.col(cols_wanted[j]);
  return s;
}

void FpMatrix::set_block(Index r0, Index c0, const FpMatrix& b)
{
  require_same_modulus(p_, b.p_, "set_block");
  if (r0 < 0 || c0 < 0 || r0 + b.rows() > rows() || c0 + b.cols() > cols())
    throw InputError("set_block: out of range");
  if (b.rows() > 0 && b.cols() > 0)
    m_.block(r0, c0, b.rows(), b.cols()) = b.m_;
}

FpMatrix operator*(const FpMatrix& a, const FpMatrix& b)
{
  require_same_modulus(a.p_, b.p_, "matrix product");
  if (a.cols() != b.rows())
    throw InputError("matrix product: inner dimensions " + std::to_string(a.cols()) + " and " +
                     std::to_string(b.rows()) + " differ");
  if (a.rows() == 0 || b.cols() == 0 || a.cols() == 0)
    return {a.rows(), b.cols(), a.p_};
  return {IntMatrix(a.m_ * b.m_), a.p_};
}

FpMatrix operator+(const FpMatrix& a, const FpMatrix& b)
{
  require_same_modulus(a.p_, b.p_, "matrix sum");
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw InputError("matrix sum: shape mismatch");
  return {IntMatrix(a.m_ + b.m_), a.p_};
}

FpMatrix operator-(const FpMatrix& a, const FpMatrix& b)
{
  require_same_modulus(a.p_, b.p_, "matrix difference");
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw InputError("matrix difference: shape mismatch");
  return {IntMatrix(a.m_ - b.m_), a.p_};
}

FpMatrix operator*(std::int64_t s, const FpMatrix& a)
{
  return {IntMatrix(a.m_ * a.p_.reduce(s)), a.p_};
}

FpMatrix operator-(const FpMatrix& a) { return {IntMatrix(-a.m_), a.p_}; }

bool operator==(const FpMatrix& a, const FpMatrix& b)
{
  return a.p_ == b.p_ && a.rows() == b.rows() && a.cols() == b.cols() && a.m_ == b.m_;
}

EchelonData rref(const FpMatrix& a)
{
  const Prime p = a.modulus();
  const Index rows = a.rows();
  const Index cols = a.cols();
  IntMatrix aug(rows, cols + rows);
  aug.leftCols(cols) = a.values();
  aug.rightCols(rows).setIdentity();
  const std::vector<Index> pivots = eliminate(aug, cols, p);

  EchelonData out{
      FpMatrix(IntMatrix(aug.leftCols(cols)), p),
      static_cast<Index>(pivots.size()),
      pivots,
      kernel_from_reduced(aug, pivots, cols, p),
      a.select_columns(pivots),
      FpMatrix(IntMatrix(aug.rightCols(rows)), p),
  };
  return out;
}

Index rank(const FpMatrix& a)
{
  IntMatrix m = a.values();
  return static_cast<Index>(eliminate(m, m.cols(), a.modulus()).size());
}

FpMatrix kernel_basis(const FpMatrix& a)
{
  IntMatrix m = a.values();
  const std::vector<Index> pivots = eliminate(m, m.cols(), a.modulus());
  return kernel_from_reduced(m, pivots, a.cols(), a.modulus());
}

FpMatrix column_space_basis(const FpMatrix& a)
{
  IntMatrix m = a.values();
  const std::vector<Index> pivots = eliminate(m, m.cols(), a.modulus());
  return a.select_columns(pivots);
}

std::optional<LinearSolution> solve_linear(const FpMatrix& a, const FpMatrix& b)
{
  require_same_modulus(a.modulus(), b.modulus(), "solve_linear");
  if (a.rows() != b.rows())
    throw InputError("solve_linear: A has " + std::to_string(a.rows()) + " rows but B has " +
                     std::to_string(b.rows()));
  const Prime p = a.modulus();
  const Index n = a.cols();
  IntMatrix aug(a.rows(), n + b.cols());
  aug.leftCols(n) = a.values();
  aug.rightCols(b.cols()) = b.values();
  const std::vector<Index> pivots = eliminate(aug, n, p);
  const auto r = static_cast<Index>(pivots.size());
  for (Index i = r; i < aug.rows(); ++i)
    for (Index j = n; j < aug.cols(); ++j)
      if (aug(i, j) != 0)
        return std::nullopt;
  FpMatrix x(n, b.cols(), p);
  for (Index i = 0; i < r; ++i)
    for (Index j = 0; j < b.cols(); ++j)
      x.set(pivots[static_cast<std::size_t>(i)], j, aug(i, n + j));
  return LinearSolution{std::move(x), kernel_from_reduced(aug, pivots, n, p)};
}

FpMatrix assemble_block(const std::vector<std::vector<FpMatrix>>& blocks)
{
  if (blocks.empty())
    throw InputError("assemble_block: empty grid has no modulus");
  const std::size_t ncols = blocks.front().size();
  if (ncols == 0)
    throw InputError("assemble_block: empty block row");
  const Prime p = blocks.front().front().modulus();
  std::vector<Index> heights(blocks.size(), -1);
  std::vector<Index> widths(ncols, -1);
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (blocks[i].size() != ncols)
      throw InputError("assemble_block: ragged block grid");
    for (std::size_t j = 0; j < ncols; ++j) {
      const FpMatrix& b = blocks[i][j];
      require_same_modulus(p, b.modulus(), "assemble_block");
      if (heights[i] < 0)
        heights[i] = b.rows();
      else if (heights[i] != b.rows())
        throw InputError("assemble_block: inconsistent block heights in block row " + std::to_string(i));
      if (widths[j] < 0)
        widths[j] = b.cols();
      else if (widths[j] != b.cols())
        throw InputError("assemble_block: inconsistent block widths in block column " + std::to_string(j));
    }
  }
  Index total_rows = 0, total_cols = 0;
  for (Index h : heights)
    total_rows += h;
  for (Index w : widths)
    total_cols += w;
  FpMatrix out(total_rows, total_cols, p);
  Index r0 = 0;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    Index c0 = 0;
    for (std::size_t j = 0; j < ncols; ++j) {
      out.set_block(r0, c0, blocks[i][j]);
      c0 += widths[j];
    }
    r0 += heights[i];
  }
  return out;
}

FpMatrix block_diagonal(const std::vector<FpMatrix>& blocks, Prime p)
{
  Index total_rows = 0, total_cols = 0;
  for (const auto& b : blocks) {
    require_same_modulus(p, b.modulus(), "block_diagonal");
    total_rows += b.rows();
    total_cols += b.cols();
  }
  FpMatrix out(total_rows, total_cols, p);
  Index r0 = 0, c0 = 0;
  for (const auto& b : blocks) {
    out.set_block(r0, c0, b);
    r0 += b.rows();
    c0 += b.cols();
  }
  return out;
}

FpMatrix hstack(const std::vector<FpMatrix>& parts, Index rows, Prime p)
{
  Index cols = 0;
  for (const auto& m : parts) {
    if (m.rows() != rows)
      throw InputError("hstack: row count mismatch");
    cols += m.cols();
  }
  FpMatrix out(rows, cols, p);
  Index c0 = 0;
  for (const auto& m : parts) {
    out.set_block(0, c0, m);
    c0 += m.cols();
  }
  return out;
}

FpMatrix vstack(const std::vector<FpMatrix>& parts, Index cols, Prime p)
{
  Index rows = 0;
  for (const auto& m : parts) {
    if (m.cols() != cols)
      throw InputError("vstack: column count mismatch");
    rows += m.rows();
  }
  FpMatrix out(rows, cols, p);
  Index r0 = 0;
  for (const auto& m : parts) {
    out.set_block(r0, 0, m);
    r0 += m.rows();
  }
  return out;
}

FpMatrix complement_basis(const FpMatrix& basis, Index n)
{
  const Prime p = basis.modulus();
  // Reduce [basis | I]; the identity columns that become pivots complete the basis.
  IntMatrix aug(n, basis.cols() + n);
  aug.leftCols(basis.cols()) = basis.values();
  aug.rightCols(n).setIdentity();
  const std::vector<Index> pivots = eliminate(aug, aug.cols(), p);
  std::vector<Index> picked;
  for (Index c : pivots)
    if (c >= basis.cols())
      picked.push_back(c - basis.cols());
  return FpMatrix::identity(n, p).select_columns(picked);
}

FpMatrix coordinates_in(const FpMatrix& basis, const FpMatrix& target)
{
  auto sol = solve_linear(basis, target);
  if (!sol)
    throw InputError("coordinates_in: vector outside the spanned subspace");
  return std::move(sol->particular);
}

bool in_column_space(const FpMatrix& basis, const FpMatrix& v)
{
  return solve_linear(basis, v).has_value();
}

bool is_invertible(const FpMatrix& a) { return a.rows() == a.cols() && rank(a) == a.rows(); }

}  // namespace siltlab
