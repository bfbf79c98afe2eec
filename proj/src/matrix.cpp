#include "bioflag/matrix.hpp"

#include <algorithm>

namespace bioflag {

Matrix::Matrix(PrimeField field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

Matrix Matrix::from_rows(PrimeField field, std::size_t cols,
                         const std::vector<Vec>& rows) {
  Matrix m(field, 0, cols);
  m.data_.reserve(rows.size() * cols);
  for (const auto& r : rows) m.append_row(r);
  return m;
}

Matrix Matrix::identity(PrimeField field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Vec Matrix::row_vector(std::size_t r) const {
  auto s = row(r);
  return Vec(s.begin(), s.end());
}

std::vector<Vec> Matrix::row_vectors() const {
  std::vector<Vec> out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out.push_back(row_vector(r));
  return out;
}

void Matrix::append_row(std::span<const Elem> v) {
  if (v.size() != cols_) throw DimensionMismatch("row length does not match column count");
  for (Elem e : v)
    if (e >= field_.modulus()) throw std::invalid_argument("entry outside field");
  data_.insert(data_.end(), v.begin(), v.end());
  ++rows_;
}

std::vector<std::vector<int>> Matrix::to_ints() const {
  std::vector<std::vector<int>> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out[r].push_back((*this)(r, c));
  return out;
}

std::strong_ordering operator<=>(const Matrix& a, const Matrix& b) {
  if (auto c = a.field_ <=> b.field_; c != 0) return c;
  if (auto c = a.rows_ <=> b.rows_; c != 0) return c;
  if (auto c = a.cols_ <=> b.cols_; c != 0) return c;
  return std::lexicographical_compare_three_way(a.data_.begin(), a.data_.end(),
                                                b.data_.begin(), b.data_.end());
}

RowEchelon rref(const Matrix& input) {
  const PrimeField f = input.field();
  Matrix m = input;
  std::vector<std::size_t> pivots;
  std::size_t lead = 0;
  for (std::size_t c = 0; c < m.cols() && lead < m.rows(); ++c) {
    std::size_t r = lead;
    while (r < m.rows() && m(r, c) == 0) ++r;
    if (r == m.rows()) continue;
    if (r != lead)
      std::swap_ranges(m.row(r).begin(), m.row(r).end(), m.row(lead).begin());
    const Elem inv = f.inv(m(lead, c));
    for (auto& e : m.row(lead)) e = f.mul(e, inv);
    for (std::size_t o = 0; o < m.rows(); ++o) {
      if (o == lead || m(o, c) == 0) continue;
      axpy(f, f.neg(m(o, c)), m.row(lead), m.row(o));
    }
    pivots.push_back(c);
    ++lead;
  }
  Matrix out(f, 0, m.cols());
  for (std::size_t r = 0; r < lead; ++r) out.append_row(m.row(r));
  return {std::move(out), std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

Matrix multiply(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows() || a.field() != b.field())
    throw DimensionMismatch("matrix product shape mismatch");
  const PrimeField f = a.field();
  Matrix out(f, a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k)
      if (a(i, k) != 0) axpy(f, a(i, k), b.row(k), out.row(i));
  return out;
}

Matrix transpose(const Matrix& m) {
  Matrix out(m.field(), m.cols(), m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(c, r) = m(r, c);
  return out;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("inverse of non-square matrix");
  const std::size_t n = m.rows();
  Matrix aug(m.field(), n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = 1;
  }
  auto red = rref(aug);
  if (red.pivots.size() < n || red.pivots[n - 1] != n - 1) return std::nullopt;
  Matrix out(m.field(), n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) out(r, c) = red.matrix(r, n + c);
  return out;
}

std::optional<Vec> solve_left(const Matrix& m, std::span<const Elem> v) {
  if (v.size() != m.cols()) throw DimensionMismatch("solve_left: vector length");
  // Column system m^T x^T = v^T, augmented.
  const PrimeField f = m.field();
  Matrix aug(f, m.cols(), m.rows() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) aug(c, r) = m(r, c);
  for (std::size_t c = 0; c < m.cols(); ++c) aug(c, m.rows()) = v[c];
  auto red = rref(aug);
  Vec x(m.rows(), 0);
  for (std::size_t i = 0; i < red.pivots.size(); ++i) {
    if (red.pivots[i] == m.rows()) return std::nullopt;  // inconsistent
    x[red.pivots[i]] = red.matrix(i, m.rows());
  }
  return x;
}

Vec add(const PrimeField& f, std::span<const Elem> a, std::span<const Elem> b) {
  if (a.size() != b.size()) throw DimensionMismatch("vector add length");
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = f.add(a[i], b[i]);
  return out;
}

Vec sub(const PrimeField& f, std::span<const Elem> a, std::span<const Elem> b) {
  if (a.size() != b.size()) throw DimensionMismatch("vector sub length");
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = f.sub(a[i], b[i]);
  return out;
}

Vec scale(const PrimeField& f, Elem c, std::span<const Elem> a) {
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = f.mul(c, a[i]);
  return out;
}

void axpy(const PrimeField& f, Elem c, std::span<const Elem> b, std::span<Elem> a) {
  if (c == 0) return;
  for (std::size_t i = 0; i < a.size(); ++i) a[i] = f.add(a[i], f.mul(c, b[i]));
}

bool is_zero(std::span<const Elem> v) {
  return std::all_of(v.begin(), v.end(), [](Elem e) { return e == 0; });
}

Vec unit_vector(std::size_t n, std::size_t i) {
  Vec v(n, 0);
  v.at(i) = 1;
  return v;
}

}  // namespace bioflag
