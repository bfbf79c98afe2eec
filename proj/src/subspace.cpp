#include "bioflag/subspace.hpp"

#include <algorithm>
#include <numeric>

namespace bioflag {
namespace {

void require_compatible(const Subspace& a, const Subspace& b, const char* what) {
  if (a.field() != b.field() || a.ambient_dim() != b.ambient_dim())
    throw DimensionMismatch(std::string(what) + ": ambient space or field mismatch");
}

// Visits every increasing j-subset of {0..m-1} in lexicographic order.
template <class F>
void for_each_combination(std::size_t m, std::size_t j, F&& visit) {
  std::vector<std::size_t> idx(j);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    visit(idx);
    std::size_t i = j;
    while (i > 0 && idx[i - 1] == m - j + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t t = i; t < j; ++t) idx[t] = idx[t - 1] + 1;
  }
}

// Odometer over p^len digit strings, last digit fastest.
template <class F>
void for_each_digits(unsigned p, std::size_t len, F&& visit) {
  Vec digits(len, 0);
  while (true) {
    visit(digits);
    std::size_t i = len;
    while (i > 0 && digits[i - 1] == p - 1) digits[--i] = 0;
    if (i == 0) return;
    ++digits[i - 1];
  }
}

}  // namespace

Subspace Subspace::zero(PrimeField f, std::size_t n) { return Subspace(Matrix(f, 0, n), {}); }

Subspace Subspace::whole(PrimeField f, std::size_t n) {
  std::vector<std::size_t> piv(n);
  std::iota(piv.begin(), piv.end(), 0);
  return Subspace(Matrix::identity(f, n), std::move(piv));
}

Subspace Subspace::span(PrimeField f, std::size_t n, const std::vector<Vec>& vectors) {
  return row_space(Matrix::from_rows(f, n, vectors));
}

Subspace Subspace::coordinate(PrimeField f, std::size_t n,
                              const std::vector<std::size_t>& axes) {
  std::vector<Vec> rows;
  for (auto a : axes) rows.push_back(unit_vector(n, a));
  return span(f, n, rows);
}

Subspace Subspace::row_space(const Matrix& m) {
  auto red = rref(m);
  return Subspace(std::move(red.matrix), std::move(red.pivots));
}

void Subspace::reduce(std::span<Elem> v) const {
  const PrimeField f = field();
  for (std::size_t r = 0; r < pivots_.size(); ++r) {
    const Elem c = v[pivots_[r]];
    if (c != 0) axpy(f, f.neg(c), basis_.row(r), v);
  }
}

bool Subspace::contains(std::span<const Elem> v) const {
  if (v.size() != ambient_dim()) throw DimensionMismatch("contains: vector length");
  Vec w(v.begin(), v.end());
  reduce(w);
  return bioflag::is_zero(w);
}

bool Subspace::contains(const Subspace& other) const {
  require_compatible(*this, other, "contains");
  if (other.dim() > dim()) return false;
  for (std::size_t r = 0; r < other.dim(); ++r)
    if (!contains(other.basis_.row(r))) return false;
  return true;
}

std::optional<Vec> Subspace::coordinates(std::span<const Elem> v) const {
  if (!contains(v)) return std::nullopt;
  Vec c(dim());
  for (std::size_t r = 0; r < dim(); ++r) c[r] = v[pivots_[r]];
  return c;
}

Vec Subspace::combine(std::span<const Elem> coeffs) const {
  if (coeffs.size() != dim()) throw DimensionMismatch("combine: coefficient count");
  Vec v(ambient_dim(), 0);
  for (std::size_t r = 0; r < dim(); ++r) axpy(field(), coeffs[r], basis_.row(r), v);
  return v;
}

Subspace sum(const Subspace& a, const Subspace& b) {
  require_compatible(a, b, "sum");
  Matrix m = a.basis();
  for (std::size_t r = 0; r < b.dim(); ++r) m.append_row(b.basis().row(r));
  return Subspace::row_space(m);
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  require_compatible(a, b, "intersect");
  const std::size_t n = a.ambient_dim();
  const PrimeField f = a.field();
  // [a | a] over [b | 0]: rows whose left half vanishes carry a basis of a ∩ b.
  Matrix z(f, 0, 2 * n);
  Vec row(2 * n);
  for (std::size_t r = 0; r < a.dim(); ++r) {
    auto v = a.basis().row(r);
    std::copy(v.begin(), v.end(), row.begin());
    std::copy(v.begin(), v.end(), row.begin() + static_cast<std::ptrdiff_t>(n));
    z.append_row(row);
  }
  for (std::size_t r = 0; r < b.dim(); ++r) {
    auto v = b.basis().row(r);
    std::copy(v.begin(), v.end(), row.begin());
    std::fill(row.begin() + static_cast<std::ptrdiff_t>(n), row.end(), 0);
    z.append_row(row);
  }
  auto red = rref(z);
  std::vector<Vec> rows;
  for (std::size_t r = 0; r < red.pivots.size(); ++r) {
    if (red.pivots[r] < n) continue;
    auto full = red.matrix.row(r);
    rows.emplace_back(full.begin() + static_cast<std::ptrdiff_t>(n), full.end());
  }
  return Subspace::span(f, n, rows);
}

Subspace canonical_complement(const Subspace& inner, const Subspace& outer) {
  require_compatible(inner, outer, "canonical_complement");
  if (!outer.contains(inner))
    throw DimensionMismatch("canonical_complement: inner is not contained in outer");
  Matrix coords(outer.field(), 0, outer.dim());
  for (std::size_t r = 0; r < inner.dim(); ++r)
    coords.append_row(*outer.coordinates(inner.basis().row(r)));
  const auto taken = rref(coords).pivots;
  std::vector<Vec> rows;
  for (std::size_t r = 0; r < outer.dim(); ++r)
    if (std::find(taken.begin(), taken.end(), r) == taken.end())
      rows.push_back(outer.basis_vector(r));
  return Subspace::span(outer.field(), outer.ambient_dim(), rows);
}

Vec project(std::span<const Elem> v, const Subspace& onto, const Subspace& along) {
  require_compatible(onto, along, "project");
  if (sum(onto, along).dim() != onto.dim() + along.dim())
    throw NotDirect("project: onto and along intersect nontrivially");
  Matrix m = onto.basis();
  for (std::size_t r = 0; r < along.dim(); ++r) m.append_row(along.basis().row(r));
  auto x = solve_left(m, v);
  if (!x) throw DimensionMismatch("project: vector outside onto + along");
  Vec out(onto.ambient_dim(), 0);
  for (std::size_t r = 0; r < onto.dim(); ++r)
    axpy(onto.field(), (*x)[r], onto.basis().row(r), out);
  return out;
}

Subspace project(const Subspace& s, const Subspace& onto, const Subspace& along) {
  std::vector<Vec> rows;
  for (std::size_t r = 0; r < s.dim(); ++r)
    rows.push_back(project(s.basis().row(r), onto, along));
  return Subspace::span(s.field(), s.ambient_dim(), rows);
}

std::vector<Vec> enumerate_vectors(const Subspace& v) {
  std::vector<Vec> out;
  for_each_digits(v.field().modulus(), v.dim(),
                  [&](const Vec& coeffs) { out.push_back(v.combine(coeffs)); });
  return out;
}

std::vector<Subspace> enumerate_subspaces(const Subspace& v, std::size_t j) {
  const std::size_t m = v.dim();
  if (j > m) return {};
  const PrimeField f = v.field();
  if (j == 0) return {Subspace::zero(f, v.ambient_dim())};
  std::vector<Subspace> out;
  for_each_combination(m, j, [&](const std::vector<std::size_t>& piv) {
    // Free slots of a j x m RREF coefficient matrix with these pivots.
    std::vector<std::pair<std::size_t, std::size_t>> free;
    for (std::size_t r = 0; r < j; ++r)
      for (std::size_t c = piv[r] + 1; c < m; ++c)
        if (std::find(piv.begin(), piv.end(), c) == piv.end()) free.emplace_back(r, c);
    for_each_digits(f.modulus(), free.size(), [&](const Vec& digits) {
      Matrix coeffs(f, j, m);
      for (std::size_t r = 0; r < j; ++r) coeffs(r, piv[r]) = 1;
      for (std::size_t t = 0; t < free.size(); ++t)
        coeffs(free[t].first, free[t].second) = digits[t];
      out.push_back(Subspace::row_space(multiply(coeffs, v.basis())));
    });
  });
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Subspace> subspaces_between(const Subspace& lower, const Subspace& upper,
                                        std::size_t j) {
  require_compatible(lower, upper, "subspaces_between");
  if (j < lower.dim() || j > upper.dim() || !upper.contains(lower)) return {};
  if (lower.dim() == upper.dim()) return {upper};
  const Subspace comp = canonical_complement(lower, upper);
  std::vector<Subspace> out;
  for (const auto& x : enumerate_subspaces(comp, j - lower.dim()))
    out.push_back(sum(lower, x));
  std::sort(out.begin(), out.end());
  return out;
}

Subspace sum_all(PrimeField f, std::size_t n, std::span<const Subspace> parts) {
  Matrix m(f, 0, n);
  for (const auto& s : parts) {
    if (s.field() != f || s.ambient_dim() != n)
      throw DimensionMismatch("sum_all: ambient space or field mismatch");
    for (std::size_t r = 0; r < s.dim(); ++r) m.append_row(s.basis().row(r));
  }
  return Subspace::row_space(m);
}

}  // namespace bioflag
