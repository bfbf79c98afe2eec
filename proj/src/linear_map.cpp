#include "bioflag/linear_map.hpp"

namespace bioflag {

LinearMap::LinearMap(Subspace domain, Subspace target, Matrix matrix)
    : domain_(std::move(domain)), target_(std::move(target)), matrix_(std::move(matrix)) {
  if (domain_.field() != target_.field() || domain_.ambient_dim() != target_.ambient_dim())
    throw DimensionMismatch("LinearMap: domain and target live in different spaces");
  if (matrix_.rows() != target_.dim() || matrix_.cols() != domain_.dim())
    throw DimensionMismatch("LinearMap: matrix shape");
}

LinearMap LinearMap::zero(const Subspace& domain, const Subspace& target) {
  return LinearMap(domain, target, Matrix(domain.field(), target.dim(), domain.dim()));
}

LinearMap LinearMap::from_pairs(const Subspace& domain, const Subspace& target,
                                const std::vector<std::pair<Vec, Vec>>& pairs) {
  const PrimeField f = domain.field();
  if (pairs.size() != domain.dim())
    throw DimensionMismatch("from_pairs: need one pair per domain dimension");
  Matrix src(f, 0, domain.dim());
  Matrix img(f, 0, target.dim());
  for (const auto& [s, t] : pairs) {
    auto cs = domain.coordinates(s);
    auto ct = target.coordinates(t);
    if (!cs) throw DimensionMismatch("from_pairs: source outside domain");
    if (!ct) throw DimensionMismatch("from_pairs: image outside target");
    src.append_row(*cs);
    img.append_row(*ct);
  }
  auto inv = inverse(src);
  if (!inv) throw DimensionMismatch("from_pairs: sources are not a basis of the domain");
  return LinearMap(domain, target, transpose(multiply(*inv, img)));
}

Vec LinearMap::apply(std::span<const Elem> v) const {
  auto c = domain_.coordinates(v);
  if (!c) throw DimensionMismatch("apply: vector outside domain");
  const PrimeField f = domain_.field();
  Vec coeffs(target_.dim(), 0);
  for (std::size_t r = 0; r < target_.dim(); ++r) {
    Elem s = 0;
    for (std::size_t k = 0; k < domain_.dim(); ++k) s = f.add(s, f.mul(matrix_(r, k), (*c)[k]));
    coeffs[r] = s;
  }
  return target_.combine(coeffs);
}

bool LinearMap::is_zero() const {
  for (std::size_t r = 0; r < matrix_.rows(); ++r)
    if (!bioflag::is_zero(matrix_.row(r))) return false;
  return true;
}

Subspace graph(const LinearMap& a) {
  if (!intersect(a.domain(), a.target()).is_zero())
    throw NotDirect("graph: domain and target intersect nontrivially");
  const PrimeField f = a.domain().field();
  std::vector<Vec> rows;
  for (std::size_t c = 0; c < a.domain().dim(); ++c) {
    Vec b = a.domain().basis_vector(c);
    rows.push_back(add(f, b, a.apply(b)));
  }
  return Subspace::span(f, a.domain().ambient_dim(), rows);
}

std::vector<LinearMap> enumerate_maps(const Subspace& domain, const Subspace& target) {
  const PrimeField f = domain.field();
  const std::size_t rows = target.dim(), cols = domain.dim(), len = rows * cols;
  std::vector<LinearMap> out;
  Vec digits(len, 0);
  while (true) {
    Matrix m(f, rows, cols);
    for (std::size_t t = 0; t < len; ++t) m(t / cols, t % cols) = digits[t];
    out.emplace_back(domain, target, std::move(m));
    std::size_t i = len;
    while (i > 0 && digits[i - 1] == f.modulus() - 1) digits[--i] = 0;
    if (i == 0) break;
    ++digits[i - 1];
  }
  return out;
}

}  // namespace bioflag
