#include <algorithm>
#include <random>
#include <set>

#include "bioflag/biflag.hpp"
#include "bioflag/embres.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace bioflag;

namespace {

const PrimeField F2(2);
const PrimeField F3(3);

struct Cfg {
  unsigned n;
  std::vector<unsigned> beta;
};
const std::vector<Cfg> kConfigs = {{4, {2, 4}}, {4, {1, 3}}, {5, {2, 4}}, {5, {1, 3, 5}}};

std::size_t meet_dim(const Subspace& a, const Subspace& b) {
  Matrix m = a.basis();
  for (std::size_t r = 0; r < b.dim(); ++r) m.append_row(b.basis().row(r));
  return a.dim() + b.dim() - rank(m);
}

// Random flag with the given dimensions: prefixes of a random invertible basis.
PartialFlag random_flag(std::mt19937& rng, PrimeField f, unsigned n, const std::vector<unsigned>& dims) {
  std::vector<Vec> basis;
  Subspace acc = Subspace::zero(f, n);
  while (acc.dim() < n) {
    const Vec v = testing_support::random_matrix(rng, f, 1, n).row_vector(0);
    if (acc.contains(v)) continue;
    basis.push_back(v);
    acc = Subspace::span(f, n, basis);
  }
  PartialFlag flag;
  for (auto d : dims) flag.push_back(Subspace::span(f, n, {basis.begin(), basis.begin() + d}));
  return flag;
}

H0Point zero_h0(const FrameConfig& cfg) {
  H0Point a;
  for (unsigned i = 1; i <= cfg.k(); ++i) a.push_back(LinearMap::zero(cfg.L(i), h0_target(cfg, i)));
  return a;
}

}  // namespace

TEST_CASE("Kempf-Laksov chains") {
  for (unsigned b = 1; b <= 4; ++b) {
    PartialFlag flag{standard_F(F2, 4, b)};
    CHECK(kl_points(flag).size() == (ipow(2, b) - 1));
  }
  std::mt19937 rng(5);
  for (const auto& c : kConfigs) {
    const auto expected = kl_count(c.beta, 3);
    std::uint64_t prod = 1;
    for (unsigned i = 1; i <= c.beta.size(); ++i) prod *= (ipow(3, c.beta[i - 1] - i + 1) - 1) / 2;
    CHECK(expected == prod);
    for (int t = 0; t < 10; ++t) {
      const auto flag = random_flag(rng, F3, c.n, c.beta);
      const auto chains = kl_points(flag);
      CHECK(chains.size() == expected);
      for (const auto& ch : chains) {
        const auto& top = ch.back();
        for (unsigned i = 1; i <= c.beta.size(); ++i) CHECK(meet_dim(top, flag[i - 1]) >= i);
      }
    }
  }
}

TEST_CASE("flag map of the bundle fibre") {
  std::mt19937 rng(11);
  for (const auto& c : kConfigs) {
    FrameConfig g2(F2, c.n, c.beta);
    const auto zero = psi_embed(g2, zero_h0(g2));
    for (unsigned i = 1; i <= g2.k(); ++i) CHECK(zero[i - 1] == standard_F(F2, c.n, g2.beta(i)));
    std::set<PartialFlag> seen;
    const auto all = enumerate_h0(g2);
    for (const auto& a : all) seen.insert(psi_embed(g2, a));
    CHECK(seen.size() == all.size());

    FrameConfig g3(F3, c.n, c.beta);
    for (int t = 0; t < 30; ++t) {
      H0Point a;
      for (unsigned i = 1; i <= g3.k(); ++i) {
        const auto target = h0_target(g3, i);
        a.emplace_back(g3.L(i), target, testing_support::random_matrix(rng, F3, target.dim(), 1));
      }
      const auto flag = psi_embed(g3, a);
      CHECK(flag == psi_tilde(g3, compressed_graphs(g3, a)));
      for (unsigned i = 1; i <= g3.k(); ++i) CHECK(flag[i - 1].dim() == g3.beta(i));
    }
  }
}

TEST_CASE("chart membership is the graph criterion") {
  for (const auto& c : kConfigs) {
    FrameConfig cfg(F2, c.n, c.beta);
    std::set<Subspace> graphs;
    for (const auto& t : enumerate_maps(cfg.line_sum(1, cfg.k()), cfg.perp_sum(1, cfg.k() + 1)))
      graphs.insert(graph(t));
    for (const auto& L : testing_support::all_subspaces_brute(F2, c.n))
      if (L.dim() == cfg.k()) CHECK(in_chart(cfg, L) == (graphs.count(L) == 1));
  }
}

TEST_CASE("cell points") {
  for (const auto& c : kConfigs)
    for (unsigned p : {2u, 3u}) {
      FrameConfig cfg(PrimeField(p), c.n, c.beta);
      const auto cell = cell_points(cfg);
      CHECK(cell.size() == ipow(p, cell_dim(cfg)));
      CHECK(std::find(cell.begin(), cell.end(), cfg.line_sum(1, cfg.k())) != cell.end());
      for (const auto& L : cell) {
        CHECK(in_chart(cfg, L));
        for (unsigned i = 1; i <= cfg.k(); ++i) {
          CHECK(meet_dim(L, cfg.F(cfg.beta(i))) == i);
          CHECK(meet_dim(L, cfg.F_before(i)) == i - 1);
        }
      }
    }
}

TEST_CASE("fibre product enumeration") {
  for (unsigned b = 1; b <= 4; ++b) {
    FrameConfig cfg(F2, 4, {b});
    const auto pts = enumerate_embres(cfg);
    CHECK(pts.size() == enumerate_ghat(cfg).size() * (ipow(2, b) - 1));
    for (const auto& pt : pts) CHECK(pt.chain.size() == 1);
  }
  for (const auto& c : kConfigs) {
    FrameConfig cfg(F2, c.n, c.beta);
    const auto pts = enumerate_embres(cfg);
    CHECK(pts.size() == enumerate_ghat(cfg).size() * kl_count(c.beta, 2));
    for (const auto& pt : pts)
      for (unsigned i = 1; i <= cfg.k(); ++i) {
        const auto bound = sum(pt.grid.at(i, i), cfg.perp_sum(1, i));
        CHECK(bound.contains(pt.chain[i - 1]));
        const auto meet = intersect(pt.chain.back(), bound);
        CHECK(meet.dim() >= i);
        if (meet.dim() == i) CHECK(meet == pt.chain[i - 1]);
      }
  }
}

TEST_CASE("fibre product against a brute-force filter") {
  FrameConfig cfg(F2, 4, {1, 3});
  std::vector<std::vector<Subspace>> by_dim(5);
  for (const auto& s : testing_support::all_subspaces_brute(F2, 4)) by_dim[s.dim()].push_back(s);
  std::set<EmbResPoint> brute;
  for (const auto& g : enumerate_ghat(cfg)) {
    const auto b1 = sum(g.at(1, 1), cfg.perp_sum(1, 1));
    const auto b2 = sum(g.at(2, 2), cfg.perp_sum(1, 2));
    for (const auto& v1 : by_dim[1])
      for (const auto& v2 : by_dim[2])
        if (b1.contains(v1) && b2.contains(v2) && v2.contains(v1)) brute.insert({g, {v1, v2}});
  }
  const auto pts = enumerate_embres(cfg);
  CHECK(std::set<EmbResPoint>(pts.begin(), pts.end()) == brute);
  CHECK(brute.size() == pts.size());
}

TEST_CASE("special point") {
  for (const auto& c : kConfigs) {
    FrameConfig cfg(F2, c.n, c.beta);
    const auto o = special_point(cfg);
    for (unsigned i = 1; i <= cfg.k(); ++i)
      for (unsigned j = 1; j <= i; ++j) CHECK(o.at(i, j) == cfg.line_sum(1, j));
  }
}

TEST_CASE("chart reconstruction and embedded resolution") {
  for (const auto& c : kConfigs) {
    FrameConfig cfg(F2, c.n, c.beta);
    CAPTURE(c.n);
    const auto t = verify_chart(cfg);
    for (const auto& ch : t.checks) CHECK_MESSAGE(ch.pass, ch.name << " " << ch.detail);
    const auto m = verify_embedded_resolution(cfg);
    for (const auto& ch : m.checks) CHECK_MESSAGE(ch.pass, ch.name << " " << ch.detail);
    CHECK(m.counts["hit"] == m.counts["grassmannian"]);
  }
  for (unsigned b = 1; b <= 4; ++b) CHECK(verify_embres(FrameConfig(F2, 4, {b})).pass());
  CHECK(verify_embres(FrameConfig(F3, 4, {2, 4})).pass());
  // 35 planes of GF(2)^4, 16 of them in the chart.
  const auto r = verify_embedded_resolution(FrameConfig(F2, 4, {2, 4}));
  CHECK(r.counts["grassmannian"] == 35);
  CHECK(r.counts["chart"] == 16);
}

TEST_CASE("merged report carries both parts") {
  const auto r = verify_embres(FrameConfig(F2, 4, {1, 3}));
  CHECK(r.command == "embres verify");
  bool chart = false, res = false;
  for (const auto& c : r.checks) {
    chart |= c.name.rfind("chart.", 0) == 0;
    res |= c.name.rfind("resolution.", 0) == 0;
  }
  CHECK(chart);
  CHECK(res);
}

TEST_CASE("budget guard") {
  FrameConfig cfg(F2, 5, {1, 3, 5});
  CHECK_THROWS_AS(enumerate_embres(cfg, 5), BudgetExceeded);
  CHECK_THROWS_AS(cell_points(cfg, 5), BudgetExceeded);
}
