#include "bioflag/biflag.hpp"

#include <map>
#include <set>

#include "bioflag/qcount.hpp"

namespace bioflag {

Subspace standard_F(PrimeField f, std::size_t n, std::size_t i) {
  std::vector<std::size_t> axes;
  for (std::size_t a = 0; a < i; ++a) axes.push_back(a);
  return Subspace::coordinate(f, n, axes);
}

Subspace standard_G(PrimeField f, std::size_t n, std::size_t i) {
  std::vector<std::size_t> axes;
  for (std::size_t a = i; a < n; ++a) axes.push_back(a);
  return Subspace::coordinate(f, n, axes);
}

GridPoint::GridPoint(PrimeField f, unsigned n)
    : n_(n), cells_((n + 1) * (n + 1), Subspace::zero(f, n)) {}

bool is_bioriented_flag(const GridPoint& pt, const Permutation& w) {
  const unsigned n = w.n();
  if (pt.n() != n) return false;
  const auto d = rank_matrix(w);
  for (unsigned p = 1; p <= n; ++p)
    for (unsigned q = 1; q <= n; ++q) {
      const auto& c = pt.at(p, q);
      if (c.dim() != d[p][q]) return false;
      if (q < n && !pt.at(p, q + 1).contains(c)) return false;
      if (p < n && !pt.at(p + 1, q).contains(c)) return false;
    }
  return true;
}

double flw_estimate(const Permutation& w, unsigned p, bool pin_bottom) {
  const unsigned n = w.n();
  const auto d = rank_matrix(w);
  double est = 1;
  for (unsigned r = pin_bottom ? n - 1 : n; r >= 1; --r)
    for (unsigned q = 1; q <= n; ++q) {
      const unsigned below = r == n ? n : d[r + 1][q];
      est *= static_cast<double>(gaussian_binomial(below - d[r][q - 1], d[r][q] - d[r][q - 1], p));
    }
  return est;
}

namespace {

struct GridSearch {
  const RankMatrix& d;
  unsigned n;
  const GridVisitor& visit;
  GridPoint pt;

  void run(unsigned r, unsigned q) {
    if (q > n) {
      if (r == 1) {
        visit(pt);
        return;
      }
      run(r - 1, 1);
      return;
    }
    const Subspace below = r == n ? Subspace::whole(pt.at(r, q).field(), n) : pt.at(r + 1, q);
    for (auto& s : subspaces_between(pt.at(r, q - 1), below, d[r][q])) {
      pt.at(r, q) = std::move(s);
      run(r, q + 1);
    }
  }
};

}  // namespace

void for_each_grid(const Permutation& w, PrimeField f, bool pin_bottom,
                   std::uint64_t budget, const GridVisitor& visit) {
  const unsigned n = w.n();
  require_budget("bioriented flag enumeration", flw_estimate(w, f.modulus(), pin_bottom), budget);
  const auto d = rank_matrix(w);
  GridSearch search{d, n, visit, GridPoint(f, n)};
  if (pin_bottom) {
    for (unsigned q = 1; q <= n; ++q) search.pt.at(n, q) = standard_F(f, n, q);
    if (n == 1) {
      visit(search.pt);
      return;
    }
    search.run(n - 1, 1);
  } else {
    search.run(n, 1);
  }
}

std::vector<GridPoint> enumerate_flw(const Permutation& w, PrimeField f, std::uint64_t budget) {
  std::vector<GridPoint> out;
  for_each_grid(w, f, false, budget, [&](const GridPoint& g) { out.push_back(g); });
  return out;
}

std::vector<GridPoint> enumerate_shat(const Permutation& w, PrimeField f, std::uint64_t budget) {
  std::vector<GridPoint> out;
  for_each_grid(w, f, true, budget, [&](const GridPoint& g) { out.push_back(g); });
  return out;
}

CompleteFlag project_to_flag(const GridPoint& pt) {
  CompleteFlag flag;
  for (unsigned p = 1; p <= pt.n(); ++p) flag.push_back(pt.at(p, pt.n()));
  return flag;
}

std::vector<CompleteFlag> all_complete_flags(PrimeField f, unsigned n, std::uint64_t budget) {
  double est = 1;
  for (unsigned i = 1; i <= n; ++i) est *= static_cast<double>(gaussian_binomial(i, 1, f.modulus()));
  require_budget("complete flag enumeration", est, budget);
  std::vector<CompleteFlag> out;
  CompleteFlag cur;
  const Subspace whole = Subspace::whole(f, n);
  auto rec = [&](auto&& self, unsigned i) -> void {
    if (i > n) {
      out.push_back(cur);
      return;
    }
    const Subspace lower = i == 1 ? Subspace::zero(f, n) : cur.back();
    for (auto& s : subspaces_between(lower, whole, i)) {
      cur.push_back(std::move(s));
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 1);
  return out;
}

std::vector<CompleteFlag> schubert_flag_points(const Permutation& w, PrimeField f,
                                               SchubertMode mode, std::uint64_t budget) {
  const unsigned n = w.n();
  const auto d = rank_matrix(w);
  std::vector<Subspace> F;
  for (unsigned q = 0; q <= n; ++q) F.push_back(standard_F(f, n, q));
  std::vector<CompleteFlag> out;
  for (auto& flag : all_complete_flags(f, n, budget)) {
    bool ok = true;
    for (unsigned p = 1; p <= n && ok; ++p)
      for (unsigned q = 1; q <= n && ok; ++q) {
        const std::size_t k = intersect(flag[p - 1], F[q]).dim();
        ok = mode == SchubertMode::cell ? k == d[p][q] : k >= d[p][q];
      }
    if (ok) out.push_back(std::move(flag));
  }
  return out;
}

GridPoint reconstruct_grid(const CompleteFlag& flag) {
  const unsigned n = static_cast<unsigned>(flag.size());
  const PrimeField f = flag.front().field();
  GridPoint g(f, n);
  for (unsigned p = 1; p <= n; ++p)
    for (unsigned q = 1; q <= n; ++q) g.at(p, q) = intersect(flag[p - 1], standard_F(f, n, q));
  return g;
}

namespace {

Json perm_config(const Permutation& w, PrimeField f, std::uint64_t budget) {
  return Json{{"perm", w.one_line()}, {"n", w.n()}, {"field", f.modulus()}, {"budget", budget}};
}

}  // namespace

EnumReport enumerate_biflag_report(const Permutation& w, PrimeField f, std::uint64_t budget) {
  const auto start = Clock::now();
  EnumReport rep;
  rep.command = "biflag enumerate";
  rep.config = perm_config(w, f, budget);
  std::size_t flw = 0, shat = 0;
  bool valid = true;
  for_each_grid(w, f, false, budget, [&](const GridPoint& g) {
    ++flw;
    valid = valid && is_bioriented_flag(g, w);
  });
  std::vector<GridPoint> shat_pts;
  for_each_grid(w, f, true, budget, [&](const GridPoint& g) {
    ++shat;
    valid = valid && is_bioriented_flag(g, w);
    if (shat_pts.size() < 4) shat_pts.push_back(g);
  });
  const auto tower = ipow(f.modulus() + 1, w.length());
  rep.counts["flw"] = flw;
  rep.counts["shat"] = shat;
  rep.counts["tower"] = tower;
  rep.add_check("grid_invariants", valid);
  rep.add_check("shat_tower_count", shat == tower,
                std::to_string(shat) + " vs " + std::to_string(tower));
  for (std::size_t i = 0; i < shat_pts.size(); ++i)
    rep.add_witness("shat_point_" + std::to_string(i) + "_last_column", project_to_flag(shat_pts[i]));
  rep.wall_time_ms = elapsed_ms(start);
  return rep;
}

EnumReport verify_flres(const Permutation& w, PrimeField f, std::uint64_t budget) {
  const auto start = Clock::now();
  const unsigned n = w.n();
  const auto d = rank_matrix(w);
  EnumReport rep;
  rep.command = "biflag verify";
  rep.config = perm_config(w, f, budget);

  const auto shat = enumerate_shat(w, f, budget);
  const auto closed_list = schubert_flag_points(w, f, SchubertMode::closed, budget);
  const auto cell_list = schubert_flag_points(w, f, SchubertMode::cell, budget);
  const std::set<CompleteFlag> closed(closed_list.begin(), closed_list.end());

  std::map<CompleteFlag, std::vector<std::size_t>> fibres;
  bool in_closed = true, rank_ok = true;
  for (std::size_t i = 0; i < shat.size(); ++i) {
    const auto flag = project_to_flag(shat[i]);
    fibres[flag].push_back(i);
    if (!closed.count(flag)) {
      if (in_closed) rep.add_witness("image_outside_closed", flag);
      in_closed = false;
    }
    for (unsigned p = 1; p <= n; ++p)
      for (unsigned q = 1; q <= n; ++q) {
        const auto meet = intersect(flag[p - 1], standard_F(f, n, q));
        const bool eq_dim = meet.dim() == d[p][q];
        if (meet.dim() < d[p][q] || eq_dim != (meet == shat[i].at(p, q))) rank_ok = false;
      }
  }

  bool cell_bijective = true;
  for (const auto& flag : cell_list) {
    auto it = fibres.find(flag);
    const bool single = it != fibres.end() && it->second.size() == 1;
    if (!single || !(shat[it->second.front()] == reconstruct_grid(flag))) {
      if (cell_bijective) rep.add_witness("cell_flag_bad_fibre", flag);
      cell_bijective = false;
    }
  }

  std::size_t hit = 0;
  for (const auto& flag : closed_list) hit += fibres.count(flag);
  const auto tower = ipow(f.modulus() + 1, w.length());
  const auto cell_expected = ipow(f.modulus(), w.length());

  rep.counts["shat"] = shat.size();
  rep.counts["closed"] = closed_list.size();
  rep.counts["cell"] = cell_list.size();
  rep.counts["image"] = fibres.size();
  rep.add_check("shat_tower_count", shat.size() == tower,
                std::to_string(shat.size()) + " vs " + std::to_string(tower));
  rep.add_check("image_in_closed", in_closed);
  rep.add_check("rank_inequality", rank_ok);
  rep.add_check("cell_bijective", cell_bijective);
  rep.add_check("cell_count", cell_list.size() == cell_expected,
                std::to_string(cell_list.size()) + " vs " + std::to_string(cell_expected));
  rep.data["surjective_empirical"] = hit == closed_list.size();
  rep.data["closed_points_hit"] = hit;
  rep.wall_time_ms = elapsed_ms(start);
  return rep;
}

}  // namespace bioflag
