#pragma once

#include <random>
#include <set>
#include <vector>

#include "bioflag/subspace.hpp"

namespace testing_support {

using namespace bioflag;

inline Vec e(std::size_t n, std::size_t i) { return unit_vector(n, i - 1); }

inline Matrix random_matrix(std::mt19937& rng, PrimeField f, std::size_t rows, std::size_t cols) {
  std::uniform_int_distribution<unsigned> dist(0, f.modulus() - 1);
  Matrix m(f, rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = static_cast<Elem>(dist(rng));
  return m;
}

inline Subspace random_subspace(std::mt19937& rng, PrimeField f, std::size_t n) {
  std::uniform_int_distribution<std::size_t> rows(0, n);
  return Subspace::row_space(random_matrix(rng, f, rows(rng), n));
}

/// Every vector of GF(p)^n, last coordinate fastest.
inline std::vector<Vec> all_vectors(PrimeField f, std::size_t n) {
  std::vector<Vec> out;
  Vec v(n, 0);
  while (true) {
    out.push_back(v);
    std::size_t i = n;
    while (i > 0 && v[i - 1] == f.modulus() - 1) v[--i] = 0;
    if (i == 0) return out;
    ++v[i - 1];
  }
}

/// All subspaces of GF(p)^n, obtained by spanning every set of at most n
/// vectors and deduplicating; independent of enumerate_subspaces.
inline std::vector<Subspace> all_subspaces_brute(PrimeField f, std::size_t n) {
  const auto vecs = all_vectors(f, n);
  std::set<Subspace> seen;
  std::vector<std::size_t> idx;
  // Depth-first over increasing index tuples of length <= n.
  auto rec = [&](auto&& self, std::size_t start) -> void {
    std::vector<Vec> rows;
    for (auto i : idx) rows.push_back(vecs[i]);
    seen.insert(Subspace::span(f, n, rows));
    if (idx.size() == n) return;
    for (std::size_t i = start; i < vecs.size(); ++i) {
      idx.push_back(i);
      self(self, i + 1);
      idx.pop_back();
    }
  };
  rec(rec, 1);
  return {seen.begin(), seen.end()};
}

}  // namespace testing_support
