#include <set>

#include "bioflag/biflag.hpp"
#include "bioflag/grassfib.hpp"
#include "bioflag/qcount.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace bioflag;
using testing_support::e;

namespace {

const PrimeField F2(2);
const PrimeField F3(3);

struct Cfg {
  unsigned n;
  std::vector<unsigned> beta;
};
const std::vector<Cfg> kConfigs = {{4, {2, 4}}, {4, {1, 3}}, {5, {2, 4}}, {5, {1, 3, 5}}};

// dim(A n B) from ranks of stacked bases, without the Zassenhaus routine.
std::size_t meet_dim(const Subspace& a, const Subspace& b) {
  Matrix m = a.basis();
  for (std::size_t r = 0; r < b.dim(); ++r) m.append_row(b.basis().row(r));
  return a.dim() + b.dim() - rank(m);
}

enum class Filter { closed, open, cell, star_closed, star_open };

// Rank-filtered k-planes from a brute-force subspace list.
std::set<Subspace> brute_filter(PrimeField f, unsigned n, const std::vector<unsigned>& beta, Filter which) {
  const unsigned k = static_cast<unsigned>(beta.size());
  std::set<Subspace> out;
  for (const auto& L : testing_support::all_subspaces_brute(f, n)) {
    if (L.dim() != k) continue;
    bool ok = true;
    for (unsigned i = 1; i <= k && ok; ++i) {
      const auto b = beta[i - 1];
      const auto df = meet_dim(L, standard_F(f, n, b));
      const auto dg = meet_dim(L, standard_G(f, n, b));
      switch (which) {
        case Filter::closed: ok = df >= i; break;
        case Filter::open: ok = df == i; break;
        case Filter::cell: ok = df == i && meet_dim(L, standard_F(f, n, b - 1)) == i - 1; break;
        case Filter::star_closed: ok = dg >= k - i; break;
        case Filter::star_open: ok = dg == k - i; break;
      }
    }
    if (ok) out.insert(L);
  }
  return out;
}

std::set<Subspace> as_set(const std::vector<Subspace>& v) { return {v.begin(), v.end()}; }

}  // namespace

TEST_CASE("frame defaults and derived spaces") {
  FrameConfig cfg(F2, 4, {2, 4});
  CHECK(cfg.L(1) == Subspace::span(F2, 4, {e(4, 1)}));
  CHECK(cfg.Lperp(1) == Subspace::span(F2, 4, {e(4, 2)}));
  CHECK(cfg.L(2) == Subspace::span(F2, 4, {e(4, 3)}));
  CHECK(cfg.Lperp(2) == Subspace::span(F2, 4, {e(4, 4)}));
  CHECK(cfg.Lperp(3).is_zero());
  // V_1^1 = L_1 + L_2^perp + G^4, V_2^2 = L_1 + L_2 + G^4.
  CHECK(cfg.V(1, 1) == Subspace::span(F2, 4, {e(4, 1), e(4, 4)}));
  CHECK(cfg.V(2, 2) == Subspace::span(F2, 4, {e(4, 1), e(4, 3)}));
}

TEST_CASE("frame invariants") {
  for (const auto& c : kConfigs) {
    FrameConfig cfg(F3, c.n, c.beta);
    const unsigned k = cfg.k();
    for (unsigned i = 1; i <= k; ++i) {
      CHECK(sum(cfg.L(i), cfg.Lperp(i)) == cfg.window(i));
      CHECK(intersect(cfg.L(i), cfg.Lperp(i)).is_zero());
      CHECK(sum(cfg.F(cfg.beta(i)), cfg.G(cfg.beta(i))).dim() == c.n);
      for (unsigned j = 1; j <= i; ++j) {
        unsigned expect = j + (c.n - cfg.beta(k));
        for (unsigned q = i + 1; q <= k; ++q) expect += cfg.beta(q) - cfg.beta(q - 1) - 1;
        CHECK(cfg.V(j, i).dim() == expect);
      }
      CHECK(cfg.F_before(i).dim() == cfg.beta(i) - 1);
      CHECK(cfg.F(cfg.beta(i)).contains(cfg.F_before(i)));
    }
  }
}

TEST_CASE("frame rejects bad input") {
  CHECK_THROWS_AS(FrameConfig(F2, 4, {3, 2}), std::invalid_argument);
  CHECK_THROWS_AS(FrameConfig(F2, 4, {0, 2}), std::invalid_argument);
  CHECK_THROWS_AS(FrameConfig(F2, 4, {2, 5}), std::invalid_argument);
  CHECK_THROWS_AS(FrameConfig(F2, 4, {2, 4}, {e(4, 3), e(4, 4)}), std::invalid_argument);
  CHECK_THROWS_AS(parse_beta("1,x"), std::invalid_argument);
  CHECK(parse_beta("1,3,5") == std::vector<unsigned>{1, 3, 5});
  FrameConfig custom(F2, 4, {2, 4}, {add(F2, e(4, 1), e(4, 2)), e(4, 4)});
  CHECK(sum(custom.L(1), custom.Lperp(1)) == custom.window(1));
  CHECK(custom.Lperp(2) == Subspace::span(F2, 4, {e(4, 3)}));
}

TEST_CASE("zero maps give the sum of the fixed lines") {
  for (const auto& c : kConfigs) {
    FrameConfig cfg(F2, c.n, c.beta);
    std::vector<Subspace> lines;
    for (unsigned i = 1; i <= cfg.k(); ++i) lines.push_back(cfg.L(i));
    const auto m = moving_lines(cfg, lines);
    std::vector<LinearMap> zero, zero_star;
    for (unsigned i = 1; i <= cfg.k(); ++i) {
      zero.push_back(LinearMap::zero(m.lines[i - 1], phi_target(cfg, m, i)));
      zero_star.push_back(LinearMap::zero(m.lines[i - 1], phi_star_target(cfg, m, i)));
    }
    const auto sigma = cfg.line_sum(1, cfg.k());
    CHECK(phi(cfg, m, zero) == sigma);
    CHECK(phi_star(cfg, m, zero_star) == sigma);
    CHECK_THROWS_AS(phi(cfg, m, zero_star), DimensionMismatch);
    CHECK_THROWS_AS(phi(cfg, m, {}), DimensionMismatch);
  }
}

TEST_CASE("rank filters agree with brute force") {
  for (const auto& c : kConfigs) {
    FrameConfig cfg(F2, c.n, c.beta);
    CAPTURE(c.n);
    CHECK(as_set(vbeta_points(cfg, VMode::closed)) == brute_filter(F2, c.n, c.beta, Filter::closed));
    CHECK(as_set(vbeta_points(cfg, VMode::open)) == brute_filter(F2, c.n, c.beta, Filter::open));
    CHECK(as_set(vbeta_points(cfg, VMode::cell)) == brute_filter(F2, c.n, c.beta, Filter::cell));
    CHECK(as_set(vbeta_points(cfg, VMode::star_open)) == brute_filter(F2, c.n, c.beta, Filter::star_open));
    CHECK(as_set(vbeta_points(cfg, VMode::star_closed)) ==
          brute_filter(F2, c.n, c.beta, Filter::star_closed));
  }
}

TEST_CASE("closed mode with top multi-index is the whole Grassmannian") {
  for (unsigned n = 2; n <= 5; ++n)
    for (unsigned k = 1; k <= n; ++k) {
      std::vector<unsigned> beta;
      for (unsigned i = 1; i <= k; ++i) beta.push_back(n - k + i);
      FrameConfig cfg(F2, n, beta);
      CHECK(vbeta_points(cfg, VMode::closed).size() == gaussian_binomial(n, k, 2));
    }
}

TEST_CASE("cell point count is p^(sum beta_i - i)") {
  for (unsigned p : {2u, 3u})
    for (unsigned n = 2; n <= (p == 2 ? 5u : 4u); ++n)
      for (unsigned mask = 1; mask < (1u << n); ++mask) {
        std::vector<unsigned> beta;
        for (unsigned b = 1; b <= n; ++b)
          if (mask & (1u << (b - 1))) beta.push_back(b);
        FrameConfig cfg(PrimeField(p), n, beta);
        unsigned N = 0;
        for (unsigned i = 1; i <= beta.size(); ++i) N += beta[i - 1] - i;
        CHECK(vbeta_points(cfg, VMode::cell).size() == ipow(p, N));
      }
}

TEST_CASE("graph sums parametrize the open sets") {
  for (const auto& c : kConfigs) {
    FrameConfig cfg(F2, c.n, c.beta);
    CAPTURE(c.n);
    const auto r = verify_phi(cfg);
    for (const auto& ch : r.checks) CHECK_MESSAGE(ch.pass, ch.name << " " << ch.detail);
    const auto s = verify_phi_star(cfg);
    for (const auto& ch : s.checks) CHECK_MESSAGE(ch.pass, ch.name << " " << ch.detail);
    CHECK(r.counts["target"] == brute_filter(F2, c.n, c.beta, Filter::open).size());
    CHECK(s.counts["target"] == brute_filter(F2, c.n, c.beta, Filter::star_open).size());
  }
}

TEST_CASE("graph sums over GF(3) and with custom lines") {
  FrameConfig cfg(F3, 4, {2, 4});
  CHECK(verify_phi(cfg).pass());
  CHECK(verify_phi_star(cfg).pass());
  FrameConfig custom(F2, 5, {2, 4}, {add(F2, e(5, 1), e(5, 2)), add(F2, e(5, 3), e(5, 4))});
  CHECK(verify_phi(custom).pass());
  CHECK(verify_phi_star(custom).pass());
}

TEST_CASE("count identity from independent sides") {
  for (const auto& c : kConfigs)
    for (unsigned p : {2u, 3u}) {
      FrameConfig cfg(PrimeField(p), c.n, c.beta);
      std::uint64_t lines = 1;
      unsigned rank = 0;
      for (unsigned i = 1; i <= cfg.k(); ++i) {
        lines *= (ipow(p, cfg.beta(i) - cfg.beta(i - 1)) - 1) / (p - 1);
        if (i >= 2) rank += cfg.beta(i - 1) - (i - 1);
      }
      CHECK(vbeta_points(cfg, VMode::open).size() == lines * ipow(p, rank));
    }
}

TEST_CASE("transversal identity") {
  for (const auto& c : kConfigs) {
    FrameConfig cfg(F2, c.n, c.beta);
    const auto r = verify_transversal_identity(cfg);
    for (const auto& ch : r.checks) CHECK_MESSAGE(ch.pass, ch.name);
  }
  for (unsigned b = 1; b <= 4; ++b) {
    FrameConfig cfg(F2, 4, {b});
    const auto r = verify_transversal_identity(cfg);
    CHECK(r.pass());
    CHECK(r.counts["open_meet"] == gaussian_binomial(b, 1, 2));
  }
}

TEST_CASE("budget guard") {
  FrameConfig cfg(F2, 5, {1, 3, 5});
  CHECK_THROWS_AS(vbeta_points(cfg, VMode::open, 10), BudgetExceeded);
  CHECK_THROWS_AS(verify_phi(cfg, 10), BudgetExceeded);
}

TEST_CASE("closed count for n=4, beta=(2,4)") {
  // Planes meeting F_2: all 35 minus the 16 graphs of maps F_2 -> G^2.
  FrameConfig cfg(F2, 4, {2, 4});
  CHECK(brute_filter(F2, 4, {2, 4}, Filter::closed).size() == 19);
  CHECK(verify_phi(cfg).counts["closed"] == 19);
}
