#include "bioflag/suite.hpp"

#include <functional>
#include <random>
#include <set>
#include <sstream>

#include "bioflag/biflag.hpp"
#include "bioflag/bott_samelson.hpp"
#include "bioflag/building.hpp"
#include "bioflag/embres.hpp"
#include "bioflag/qcount.hpp"

namespace bioflag {

namespace {

// Collects failure notes; the criterion passes when none were recorded.
struct Tally {
  std::size_t checked = 0;
  std::vector<std::string> failures;

  void expect(bool ok, const std::string& what) {
    ++checked;
    if (!ok && failures.size() < 8) failures.push_back(what);
    if (!ok && failures.size() == 8) failures.push_back("...");
  }
  void report(const EnumReport& r, const std::string& what) {
    for (const auto& c : r.checks) expect(c.pass, what + " " + c.name + (c.detail.empty() ? "" : " (" + c.detail + ")"));
  }
  std::string detail() const {
    if (failures.empty()) return std::to_string(checked) + " checks";
    std::string s;
    for (const auto& f : failures) s += (s.empty() ? "" : "; ") + f;
    return s;
  }
};

std::string join(const std::vector<std::size_t>& v) {
  std::string s;
  for (auto x : v) s += (s.empty() ? "" : ",") + std::to_string(x);
  return s;
}

std::vector<Permutation> s3_s4() {
  auto out = all_permutations(3);
  for (auto& w : all_permutations(4)) out.push_back(w);
  return out;
}

struct FrameSpec {
  unsigned n;
  std::vector<unsigned> beta;
};
const std::vector<FrameSpec> kFrames = {{4, {2, 4}}, {4, {1, 3}}, {5, {2, 4}}, {5, {1, 3, 5}}};

std::string frame_name(const FrameSpec& s) {
  std::string b;
  for (auto x : s.beta) b += (b.empty() ? "" : ",") + std::to_string(x);
  return "n=" + std::to_string(s.n) + " beta=(" + b + ")";
}

void sigma_example(Tally& t) {
  const auto sigma = Permutation::parse("4,8,6,2,7,3,1,5");
  const auto b = build_building(sigma);
  const std::vector<std::size_t> levels{3, 5, 4, 4, 4, 3, 2};
  const std::vector<std::size_t> raw{18, 10, 8, 6, 4, 3, 2};
  t.expect(b.counts() == levels, "per-level counts " + join(b.counts()));
  t.expect(b.total() == 25, "total " + std::to_string(b.total()));
  const auto d = dedup_rank_matrix(sigma);
  t.expect(d.raw_counts == raw, "raw counts " + join(d.raw_counts));
  t.expect(sigma.length() == 18, "length " + std::to_string(sigma.length()));
  t.expect(b.total() == sigma.length() + 8 - 1, "total = l + n - 1");
}

void building_sweep(Tally& t) {
  for (unsigned n = 2; n <= 6; ++n)
    for (const auto& w : all_permutations(n)) {
      const auto b = build_building(w);
      t.expect(b.total() == w.length() + n - 1, w.to_string() + " total");
      t.expect(b.counts() == dedup_rank_matrix(w).counts(), w.to_string() + " dedup");
    }
}

void tower_counts(Tally& t) {
  for (unsigned p : {2u, 3u}) {
    const PrimeField f(p);
    for (const auto& w : s3_s4()) {
      const auto tower = ipow(p + 1, w.length());
      const auto shat = enumerate_shat(w, f).size();
      const auto bs = enumerate_bs(bubblesort_word(w).letters, w.n(), f).size();
      t.expect(shat == tower, w.to_string() + " p=" + std::to_string(p) + " shat " + std::to_string(shat));
      t.expect(bs == tower, w.to_string() + " p=" + std::to_string(p) + " bs " + std::to_string(bs));
    }
  }
}

void cell_bijectivity(Tally& t) {
  const PrimeField f(2);
  for (const auto& w : s3_s4()) {
    const auto r = verify_flres(w, f);
    for (const auto& c : r.checks)
      if (c.name == "cell_bijective" || c.name == "image_in_closed" || c.name == "cell_count")
        t.expect(c.pass, w.to_string() + " " + c.name);
  }
}

void bs_isomorphism(Tally& t) {
  for (const auto& w : s3_s4()) t.report(bbs_iso(w, PrimeField(2)), w.to_string());
}

void graph_sums(Tally& t) {
  for (const auto& s : kFrames) {
    const FrameConfig cfg(PrimeField(2), s.n, s.beta);
    t.report(verify_phi(cfg), frame_name(s) + " phi");
    t.report(verify_phi_star(cfg), frame_name(s) + " phi*");
    t.report(verify_transversal_identity(cfg), frame_name(s) + " transversal");
  }
}

void resolution(Tally& t) {
  bool multi_seen = false;
  for (const auto& s : kFrames) {
    const FrameConfig cfg(PrimeField(2), s.n, s.beta);
    const auto r = verify_resolution(cfg);
    t.report(r, frame_name(s));
    t.report(lift_report(cfg), frame_name(s) + " lift");
    if (cfg.k() >= 2 && !cfg.Lperp(cfg.k() + 1).is_zero() && r.counts["multi_point_fibres"].get<std::size_t>() > 0)
      multi_seen = true;
  }
  t.expect(multi_seen, "no multi-point fibre with G^beta_k != 0 and k >= 2");
}

void embedded_resolution(Tally& t) {
  for (const auto& s : {kFrames[0], kFrames[1]}) {
    const FrameConfig cfg(PrimeField(2), s.n, s.beta);
    t.report(verify_chart(cfg), frame_name(s));
    t.report(verify_embedded_resolution(cfg), frame_name(s));
  }
}

void dimension_consistency(Tally& t) {
  for (const auto& s : kFrames) {
    const FrameConfig base(PrimeField(2), s.n, s.beta);
    const auto cell_poly = QPoly::monomial(cell_dim(base));
    const auto u_poly = gcal_u_count_poly(base);
    unsigned degree = base.k() * (s.n - base.beta(base.k()));
    for (unsigned i = 1; i < base.k(); ++i) degree += i * (base.beta(i + 1) - base.beta(i) - 1);
    unsigned cells = 0;
    for (unsigned i = 1; i <= base.k(); ++i) cells += base.beta(i) - i;
    t.expect(u_poly.degree() == static_cast<int>(degree), frame_name(s) + " open-part degree");
    t.expect(cell_poly.degree() == static_cast<int>(cells), frame_name(s) + " cell degree");
    for (unsigned p : {2u, 3u}) {
      const FrameConfig cfg(PrimeField(p), s.n, s.beta);
      const std::string tag = frame_name(s) + " p=" + std::to_string(p);
      const auto cell = vbeta_points(cfg, VMode::cell).size();
      const auto cell2 = cell_points(cfg).size();
      std::size_t u = 0;
      for (const auto& pt : enumerate_gcal(cfg)) u += in_U(cfg, pt);
      t.expect(static_cast<long long>(cell) == cell_poly.evaluate(p), tag + " cell " + std::to_string(cell));
      t.expect(static_cast<long long>(cell2) == cell_poly.evaluate(p), tag + " chart cell " + std::to_string(cell2));
      t.expect(static_cast<long long>(u) == u_poly.evaluate(p), tag + " open part " + std::to_string(u));
    }
  }
}

// Number of j-dimensional subspaces found by spanning every j-tuple of vectors.
std::size_t span_count(PrimeField f, unsigned n, unsigned j) {
  const auto vecs = enumerate_vectors(Subspace::whole(f, n));
  std::set<Subspace> seen;
  std::vector<std::size_t> idx(j, 0);
  while (true) {
    std::vector<Vec> rows;
    for (auto i : idx) rows.push_back(vecs[i]);
    const auto s = Subspace::span(f, n, rows);
    if (s.dim() == j) seen.insert(s);
    std::size_t pos = j;
    while (pos > 0 && idx[pos - 1] + 1 == vecs.size()) idx[--pos] = 0;
    if (pos == 0) break;
    ++idx[pos - 1];
  }
  return seen.size();
}

void exactlin_pair(Tally& t, const Subspace& a, const Subspace& b, const Subspace& c) {
  const auto s = sum(a, b), m = intersect(a, b);
  t.expect(s.dim() + m.dim() == a.dim() + b.dim(), "dimension formula");
  t.expect(s.contains(a) && s.contains(b) && a.contains(m) && b.contains(m), "sum and meet bounds");
  // Modular law: for b <= a, a n (b + c) = b + (a n c).
  if (a.contains(b)) t.expect(intersect(a, sum(b, c)) == sum(b, intersect(a, c)), "modular law");
  t.expect(Subspace::row_space(a.basis()) == a, "rref idempotent");
  const auto r = rref(a.basis());
  t.expect(r.matrix == a.basis(), "rref fixes canonical basis");
  if (b.contains(a)) {
    const auto comp = canonical_complement(a, b);
    t.expect(intersect(a, comp).is_zero() && sum(a, comp) == b, "complement direct");
  }
}

void exactlin_suite(Tally& t) {
  const PrimeField f2(2);
  std::vector<Subspace> all;
  for (unsigned j = 0; j <= 4; ++j)
    for (auto& s : enumerate_subspaces(Subspace::whole(f2, 4), j)) all.push_back(s);
  t.expect(all.size() == 67, "GF(2)^4 has 67 subspaces");
  for (const auto& a : all)
    for (const auto& b : all) exactlin_pair(t, a, b, all[(a.dim() * 7 + b.dim() * 13) % all.size()]);
  for (const auto& a : all)
    for (const auto& b : all)
      if (a.contains(b))
        for (const auto& c : all) t.expect(intersect(a, sum(b, c)) == sum(b, intersect(a, c)), "modular law");

  const PrimeField f3(3);
  std::mt19937 rng(20240601);
  std::uniform_int_distribution<unsigned> entry(0, 2), rows(0, 4);
  auto random_space = [&] {
    Matrix m(f3, rows(rng), 4);
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t c = 0; c < 4; ++c) m(r, c) = static_cast<Elem>(entry(rng));
    return Subspace::row_space(m);
  };
  for (int i = 0; i < 10000; ++i) {
    const auto a = random_space(), b = random_space(), c = random_space();
    exactlin_pair(t, a, b, c);
    exactlin_pair(t, sum(a, b), a, c);
    exactlin_pair(t, a, intersect(a, b), c);
  }

  for (unsigned n = 0; n <= 4; ++n)
    for (unsigned j = 0; j <= n; ++j) {
      const auto g = gaussian_binomial(n, j, 2);
      t.expect(enumerate_subspaces(Subspace::whole(f2, n), j).size() == g, "enumeration count GF(2)");
      if (n >= 1) t.expect(span_count(f2, n, j) == g, "span count GF(2)");
    }
  for (unsigned n = 1; n <= 3; ++n)
    for (unsigned j = 0; j <= n; ++j) {
      const auto g = gaussian_binomial(n, j, 3);
      t.expect(enumerate_subspaces(Subspace::whole(f3, n), j).size() == g, "enumeration count GF(3)");
      t.expect(span_count(f3, n, j) == g, "span count GF(3)");
    }
}

struct Criterion {
  const char* title;
  double limit;
  std::function<void(Tally&)> body;
};

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> table = {
      {"sigma example building and rank-matrix counts", 1, sigma_example},
      {"building totals and dedup oracle over S_2..S_6", 30, building_sweep},
      {"tower point counts for S_3 and S_4 at p = 2, 3", 300, tower_counts},
      {"cell bijectivity of the flag resolution", 300, cell_bijectivity},
      {"bioriented and Bott-Samelson isomorphism", 0, bs_isomorphism},
      {"graph-sum parametrizations and transversal identity", 300, graph_sums},
      {"bioriented resolution of the constrained flag variety", 0, resolution},
      {"embedded resolution chart, cell and special fibre", 600, embedded_resolution},
      {"dimension consistency of cell and open-part counts", 0, dimension_consistency},
      {"exact linear algebra property suite", 0, exactlin_suite},
  };
  return table;
}

}  // namespace

CriterionResult run_criterion(int id) {
  if (id < 1 || id > kCriterionCount) throw std::invalid_argument("no criterion " + std::to_string(id));
  const auto& c = criteria()[id - 1];
  CriterionResult r;
  r.id = id;
  r.title = c.title;
  r.limit_seconds = c.limit;
  const auto start = Clock::now();
  Tally t;
  try {
    c.body(t);
  } catch (const std::exception& e) {
    t.expect(false, std::string("exception: ") + e.what());
  }
  r.seconds = elapsed_ms(start) / 1000.0;
  r.pass = t.failures.empty();
  r.detail = t.detail();
  if (c.limit > 0 && r.seconds > c.limit) {
    r.pass = false;
    r.detail += "; exceeded " + std::to_string(c.limit) + " s";
  }
  return r;
}

std::vector<CriterionResult> run_suite() {
  std::vector<CriterionResult> out;
  for (int id = 1; id <= kCriterionCount; ++id) out.push_back(run_criterion(id));
  return out;
}

EnumReport suite_report(const std::vector<CriterionResult>& results) {
  EnumReport rep;
  rep.command = "suite";
  rep.counts["criteria"] = results.size();
  std::size_t passed = 0;
  Json list = Json::array();
  double total = 0;
  for (const auto& r : results) {
    passed += r.pass;
    total += r.seconds;
    rep.add_check("criterion_" + std::to_string(r.id), r.pass, r.title + ": " + r.detail);
    list.push_back(Json{{"id", r.id}, {"title", r.title}, {"pass", r.pass},
                        {"limit_seconds", r.limit_seconds}});
  }
  rep.counts["passed"] = passed;
  rep.data["criteria"] = list;
  rep.wall_time_ms = total * 1000.0;
  return rep;
}

}  // namespace bioflag
