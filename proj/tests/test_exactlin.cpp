#include <algorithm>
#include <map>
#include <random>

#include "bioflag/linear_map.hpp"
#include "bioflag/qcount.hpp"
#include "bioflag/subspace.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace bioflag;
using testing_support::e;

namespace {

const PrimeField F2(2);
const PrimeField F3(3);

Subspace span2(std::size_t n, std::vector<Vec> v) { return Subspace::span(F2, n, v); }

// Intersection by listing every ambient vector lying in both.
Subspace brute_intersect(const Subspace& a, const Subspace& b) {
  std::vector<Vec> common;
  for (const auto& v : testing_support::all_vectors(a.field(), a.ambient_dim()))
    if (a.contains(v) && b.contains(v)) common.push_back(v);
  return Subspace::span(a.field(), a.ambient_dim(), common);
}

}  // namespace

TEST_CASE("field arithmetic") {
  CHECK_THROWS_AS(PrimeField(4), std::invalid_argument);
  CHECK_THROWS_AS(PrimeField(257), std::invalid_argument);
  for (unsigned p : {2u, 3u, 5u, 7u, 251u}) {
    PrimeField f(p);
    for (unsigned a = 1; a < p; ++a) CHECK(f.mul(static_cast<Elem>(a), f.inv(static_cast<Elem>(a))) == 1);
    CHECK(f.reduce(-1) == p - 1);
  }
  CHECK_THROWS_AS(F3.inv(0), std::domain_error);
}

TEST_CASE("rref examples") {
  auto id = rref(Matrix::identity(F2, 3));
  CHECK(id.matrix == Matrix::identity(F2, 3));
  CHECK(id.pivots == std::vector<std::size_t>{0, 1, 2});

  auto ones = rref(Matrix::from_rows(F2, 2, {{1, 1}, {1, 1}}));
  CHECK(ones.matrix == Matrix::from_rows(F2, 2, {{1, 1}}));
  CHECK(ones.pivots == std::vector<std::size_t>{0});

  auto zero = rref(Matrix(F2, 2, 2));
  CHECK(zero.matrix.rows() == 0);
  CHECK(zero.pivots.empty());
}

TEST_CASE("span examples") {
  auto s = span2(3, {e(3, 1), add(F2, e(3, 1), e(3, 2))});
  CHECK(s.basis() == Matrix::from_rows(F2, 3, {e(3, 1), e(3, 2)}));
  CHECK(span2(3, {}).is_zero());
  CHECK(span2(3, {e(3, 2)}).basis() == Matrix::from_rows(F2, 3, {e(3, 2)}));
  CHECK_THROWS_AS(span2(3, {Vec{1, 0}}), DimensionMismatch);
}

TEST_CASE("sum intersect contains examples") {
  CHECK(sum(span2(3, {e(3, 1)}), span2(3, {e(3, 2)})) == span2(3, {e(3, 1), e(3, 2)}));
  CHECK(intersect(span2(3, {e(3, 1), e(3, 2)}), span2(3, {e(3, 2), e(3, 3)})) ==
        span2(3, {e(3, 2)}));
  auto v = span2(3, {e(3, 1), e(3, 3)});
  CHECK(v.contains(v));
  CHECK_THROWS_AS(sum(span2(3, {}), span2(2, {})), DimensionMismatch);
  CHECK_THROWS_AS(intersect(span2(2, {}), Subspace::zero(F3, 2)), DimensionMismatch);
}

TEST_CASE("canonical complement examples") {
  auto e1 = span2(2, {e(2, 1)});
  CHECK(canonical_complement(e1, Subspace::whole(F2, 2)) == span2(2, {e(2, 2)}));
  CHECK(canonical_complement(span2(2, {Vec{1, 1}}), Subspace::whole(F2, 2)) == span2(2, {e(2, 2)}));
  CHECK(canonical_complement(e1, e1).is_zero());
  CHECK_THROWS_AS(canonical_complement(Subspace::whole(F2, 2), e1), DimensionMismatch);
}

TEST_CASE("projection examples") {
  auto onto = span2(2, {e(2, 1)});
  auto along = span2(2, {Vec{1, 1}});
  CHECK(project(e(2, 1), onto, along) == e(2, 1));
  CHECK(project(Vec{1, 1}, onto, along) == Vec{0, 0});
  CHECK(project(e(2, 2), onto, along) == e(2, 1));
  CHECK_THROWS_AS(project(e(2, 2), onto, onto), NotDirect);
  CHECK_THROWS_AS(project(e(3, 3), span2(3, {e(3, 1)}), span2(3, {e(3, 2)})), DimensionMismatch);
}

TEST_CASE("graph examples") {
  auto dom = span2(2, {e(2, 1)});
  auto tgt = span2(2, {e(2, 2)});
  CHECK(graph(LinearMap::zero(dom, tgt)) == dom);
  auto a = LinearMap::from_pairs(dom, tgt, {{e(2, 1), e(2, 2)}});
  CHECK(graph(a) == span2(2, {Vec{1, 1}}));
  CHECK_THROWS_AS(graph(LinearMap::zero(dom, dom)), NotDirect);

  // A nonzero map on a line: the graph meets the domain only in 0, by brute force.
  auto dom3 = Subspace::span(F3, 3, {e(3, 1), e(3, 2)});
  auto tgt3 = Subspace::span(F3, 3, {e(3, 3)});
  for (const auto& m : enumerate_maps(dom3, tgt3)) {
    auto g = graph(m);
    CHECK(g.dim() == 2);
    std::size_t fixed = 0;
    for (const auto& v : enumerate_vectors(dom3))
      if (g.contains(v)) ++fixed;
    // Vectors of the domain in the graph are exactly the kernel of the map.
    std::size_t kernel = 0;
    for (const auto& v : enumerate_vectors(dom3))
      if (is_zero(m.apply(v))) ++kernel;
    CHECK(fixed == kernel);
    CHECK(brute_intersect(g, dom3).dim() == (m.is_zero() ? 2u : 1u));
  }
  CHECK(enumerate_maps(dom3, tgt3).size() == 9);
}

TEST_CASE("linear map from pairs and apply") {
  auto dom = Subspace::span(F3, 3, {Vec{1, 1, 0}, Vec{0, 1, 0}});
  auto tgt = Subspace::span(F3, 3, {e(3, 3)});
  auto a = LinearMap::from_pairs(dom, tgt, {{Vec{1, 1, 0}, Vec{0, 0, 2}}, {Vec{0, 1, 0}, Vec{0, 0, 1}}});
  CHECK(a.apply(Vec{1, 1, 0}) == Vec{0, 0, 2});
  CHECK(a.apply(Vec{0, 1, 0}) == Vec{0, 0, 1});
  CHECK(a.apply(Vec{1, 0, 0}) == Vec{0, 0, 1});
  CHECK_THROWS_AS(a.apply(e(3, 3)), DimensionMismatch);
}

TEST_CASE("enumerate subspaces examples") {
  auto whole2 = Subspace::whole(F2, 2);
  CHECK(enumerate_subspaces(whole2, 0) == std::vector<Subspace>{Subspace::zero(F2, 2)});
  CHECK(enumerate_subspaces(whole2, 1).size() == 3);
  CHECK(enumerate_subspaces(Subspace::whole(F2, 4), 2).size() == 35);
  CHECK(enumerate_subspaces(whole2, 3).empty());
}

TEST_CASE("gaussian binomial against brute force") {
  for (PrimeField f : {F2, F3}) {
    const std::size_t max_n = f.modulus() == 2 ? 4 : 3;
    for (std::size_t n = 0; n <= max_n; ++n) {
      std::map<std::size_t, std::size_t> by_dim;
      for (const auto& s : testing_support::all_subspaces_brute(f, n)) ++by_dim[s.dim()];
      for (std::size_t j = 0; j <= n; ++j) {
        auto listed = enumerate_subspaces(Subspace::whole(f, n), j);
        CHECK(listed.size() == by_dim[j]);
        CHECK(std::is_sorted(listed.begin(), listed.end()));
        CHECK(std::adjacent_find(listed.begin(), listed.end()) == listed.end());
        CHECK(gaussian_binomial(static_cast<unsigned>(n), static_cast<unsigned>(j), f.modulus()) == by_dim[j]);
        CHECK(QPoly::gaussian(static_cast<unsigned>(n), static_cast<unsigned>(j)).evaluate(f.modulus()) ==
              static_cast<long long>(by_dim[j]));
      }
    }
  }
  CHECK(gaussian_binomial(4, 2, 2) == 35);
  CHECK(gaussian_binomial(5, 2, 3) == 1210);
}

TEST_CASE("subspaces between") {
  auto lower = Subspace::span(F3, 4, {e(4, 1)});
  auto upper = Subspace::span(F3, 4, {e(4, 1), e(4, 2), e(4, 4)});
  auto mid = subspaces_between(lower, upper, 2);
  CHECK(mid.size() == 4);
  for (const auto& s : mid) CHECK((s.contains(lower) && upper.contains(s) && s.dim() == 2));
  CHECK(subspaces_between(upper, lower, 2).empty());
  CHECK(subspaces_between(lower, upper, 1) == std::vector<Subspace>{lower});
}

TEST_CASE("qpoly") {
  auto q3 = QPoly::q_integer(3);
  CHECK(q3.evaluate(2) == 7);
  CHECK(q3.degree() == 2);
  auto p = q3 * QPoly::monomial(2);
  CHECK(p.degree() == 4);
  CHECK(p.evaluate(3) == 13 * 9);
  CHECK(QPoly::q_integer(2).pow(3).evaluate(2) == 27);
  CHECK(QPoly().degree() == -1);
}

TEST_CASE("exhaustive properties over GF(2)^4") {
  const std::size_t n = 4;
  std::vector<Subspace> all;
  for (std::size_t j = 0; j <= n; ++j)
    for (auto& s : enumerate_subspaces(Subspace::whole(F2, n), j)) all.push_back(s);
  REQUIRE(all.size() == 67);
  const auto vectors = testing_support::all_vectors(F2, n);
  for (const auto& a : all) {
    CHECK(rref(a.basis()).matrix == a.basis());
    for (const auto& b : all) {
      auto s = sum(a, b);
      auto i = intersect(a, b);
      CHECK(a.dim() + b.dim() == s.dim() + i.dim());
      CHECK(i == brute_intersect(a, b));
      if (b.contains(a)) {
        auto c = canonical_complement(a, b);
        CHECK(sum(a, c) == b);
        CHECK(intersect(a, c).is_zero());
      }
      if (i.is_zero()) {
        for (const auto& v : vectors) {
          if (!s.contains(v)) continue;
          auto x = project(v, a, b);
          CHECK(a.contains(x));
          CHECK(b.contains(sub(F2, v, x)));
        }
      }
    }
  }
}

TEST_CASE("randomized properties over GF(3)^4") {
  std::mt19937 rng(20240917);
  const std::size_t n = 4;
  for (int trial = 0; trial < 10000; ++trial) {
    auto m = testing_support::random_matrix(rng, F3, 1 + trial % 5, n);
    auto r = rref(m);
    CHECK(rref(r.matrix).matrix == r.matrix);
    CHECK(r.pivots.size() == rank(m));

    auto a = testing_support::random_subspace(rng, F3, n);
    auto b = testing_support::random_subspace(rng, F3, n);
    auto s = sum(a, b);
    auto i = intersect(a, b);
    CHECK(a.dim() + b.dim() == s.dim() + i.dim());
    CHECK((a.contains(i) && b.contains(i) && s.contains(a) && s.contains(b)));

    auto c = canonical_complement(i, a);
    CHECK(sum(i, c) == a);
    CHECK(intersect(i, c).is_zero());

    auto comp = canonical_complement(a, s);
    auto v = s.combine(testing_support::random_matrix(rng, F3, 1, s.dim()).row_vector(0));
    auto x = project(v, a, comp);
    CHECK(a.contains(x));
    CHECK(comp.contains(sub(F3, v, x)));
  }
}
