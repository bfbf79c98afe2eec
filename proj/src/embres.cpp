#include "bioflag/embres.hpp"

#include <map>
#include <set>
#include <stdexcept>

namespace bioflag {

std::uint64_t kl_count(const std::vector<unsigned>& dims, unsigned p) {
  std::uint64_t c = 1;
  for (unsigned i = 1; i <= dims.size(); ++i) {
    if (dims[i - 1] < i) return 0;
    c *= gaussian_binomial(dims[i - 1] - i + 1, 1, p);
  }
  return c;
}

std::vector<KLPoint> kl_points(const PartialFlag& flag, std::uint64_t budget) {
  if (flag.empty()) return {KLPoint{}};
  std::vector<unsigned> dims;
  for (const auto& s : flag) dims.push_back(static_cast<unsigned>(s.dim()));
  const auto f = flag.front().field();
  require_budget("Kempf-Laksov enumeration", static_cast<double>(kl_count(dims, f.modulus())), budget);
  std::vector<KLPoint> out;
  KLPoint chain;
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == flag.size()) {
      out.push_back(chain);
      return;
    }
    const auto lower = i == 0 ? Subspace::zero(f, flag[i].ambient_dim()) : chain.back();
    for (auto& s : subspaces_between(lower, flag[i], i + 1)) {
      chain.push_back(std::move(s));
      self(self, i + 1);
      chain.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

PartialFlag psi_embed(const FrameConfig& cfg, const H0Point& a) {
  if (a.size() != cfg.k()) throw DimensionMismatch("expected one map per fixed line");
  PartialFlag out;
  Subspace acc = Subspace::zero(cfg.field(), cfg.n());
  for (unsigned i = 1; i <= cfg.k(); ++i) {
    const auto& m = a[i - 1];
    if (!(m.domain() == cfg.L(i)) || !(m.target() == h0_target(cfg, i)))
      throw DimensionMismatch("map " + std::to_string(i) + " has the wrong domain or target");
    acc = sum(acc, sum(graph(m), cfg.Lperp(i)));
    if (acc.dim() != cfg.beta(i)) throw std::logic_error("flag component has the wrong dimension");
    out.push_back(acc);
  }
  return out;
}

bool in_chart(const FrameConfig& cfg, const Subspace& L) {
  return L.dim() == cfg.k() && intersect(L, cfg.perp_sum(1, cfg.k() + 1)).is_zero();
}

bool in_cell(const FrameConfig& cfg, const Subspace& L) {
  if (L.dim() != cfg.k()) return false;
  for (unsigned i = 1; i <= cfg.k(); ++i)
    if (intersect(L, cfg.F(cfg.beta(i))).dim() != i || intersect(L, cfg.F_before(i)).dim() != i - 1)
      return false;
  return true;
}

std::vector<Subspace> cell_points(const FrameConfig& cfg, std::uint64_t budget) {
  require_budget("Grassmannian enumeration",
                 static_cast<double>(gaussian_binomial(cfg.n(), cfg.k(), cfg.field().modulus())),
                 budget);
  std::vector<Subspace> out;
  for (auto& L : enumerate_subspaces(Subspace::whole(cfg.field(), cfg.n()), cfg.k()))
    if (in_cell(cfg, L)) out.push_back(std::move(L));
  return out;
}

GHatPoint special_point(const FrameConfig& cfg) {
  GCalPoint diag;
  for (unsigned i = 1; i <= cfg.k(); ++i) diag.push_back(cfg.line_sum(1, i));
  return lift_to_ghat(cfg, diag);
}

std::vector<EmbResPoint> enumerate_embres(const FrameConfig& cfg, std::uint64_t budget) {
  const auto p = cfg.field().modulus();
  const double est = static_cast<double>(ghat_count_poly(cfg).evaluate(p)) *
                     static_cast<double>(kl_count(cfg.betas(), p));
  require_budget("embedded resolution enumeration", est, budget);
  std::vector<EmbResPoint> out;
  for (auto& g : enumerate_ghat(cfg, budget)) {
    const auto flag = psi_tilde(cfg, pi_diag(g));
    for (auto& chain : kl_points(flag, budget)) out.push_back({g, std::move(chain)});
  }
  return out;
}

namespace {

Json frame_config(const FrameConfig& cfg, std::uint64_t budget) {
  Json j = cfg.to_json();
  j["budget"] = budget;
  return j;
}

std::string ratio(std::size_t a, std::size_t b) { return std::to_string(a) + " vs " + std::to_string(b); }

// Chains V_1 c ... c V_k = top with V_i c flag[i-1].
std::vector<KLPoint> chains_ending_at(const PartialFlag& flag, const Subspace& top) {
  const std::size_t k = flag.size();
  std::vector<KLPoint> out;
  if (!flag.back().contains(top)) return out;
  KLPoint chain(k, top);
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == 0) {
      out.push_back(chain);
      return;
    }
    for (auto& s : enumerate_subspaces(intersect(chain[i], flag[i - 1]), i)) {
      chain[i - 1] = std::move(s);
      self(self, i - 1);
    }
  };
  rec(rec, k - 1);
  return out;
}

}  // namespace

EnumReport verify_chart(const FrameConfig& cfg, std::uint64_t budget) {
  const auto start = Clock::now();
  const unsigned k = cfg.k();
  const unsigned p = cfg.field().modulus();
  EnumReport rep;
  rep.command = "embres chart";
  rep.config = frame_config(cfg, budget);

  const auto h0 = enumerate_h0(cfg, budget);
  const auto domain = cfg.line_sum(1, k);
  const auto perps = cfg.perp_sum(1, k + 1);
  require_budget("chart enumeration",
                 static_cast<double>(ipow(p, k * (cfg.n() - k))) * static_cast<double>(h0.size()), budget);

  std::vector<PartialFlag> flags;
  bool agrees = true;
  for (const auto& a : h0) {
    flags.push_back(psi_embed(cfg, a));
    if (!(flags.back() == psi_tilde(cfg, compressed_graphs(cfg, a)))) agrees = false;
  }
  const std::set<PartialFlag> distinct(flags.begin(), flags.end());
  PartialFlag standard;
  for (unsigned i = 1; i <= k; ++i) standard.push_back(cfg.F(cfg.beta(i)));
  const bool zero_standard = flags.front() == standard;

  std::size_t charts = 0, unique = 0, reconstructed = 0;
  std::set<Subspace> chart_graphs;
  for (const auto& t : enumerate_maps(domain, perps)) {
    ++charts;
    const auto gamma = graph(t);
    chart_graphs.insert(gamma);
    std::size_t found = 0;
    std::size_t found_a = 0;
    KLPoint found_chain;
    for (std::size_t ai = 0; ai < h0.size(); ++ai)
      for (auto& chain : chains_ending_at(flags[ai], gamma)) {
        if (found == 0) {
          found_a = ai;
          found_chain = chain;
        }
        ++found;
      }
    if (found == 1) ++unique;
    else rep.add_witness("chart_point_preimages_" + std::to_string(found), gamma);

    // Reconstruction: A_i is T on L_i projected onto the later complements.
    H0Point a;
    for (unsigned i = 1; i <= k; ++i) {
      const Vec b = cfg.L(i).basis_vector(0);
      const auto target = h0_target(cfg, i);
      a.push_back(LinearMap::from_pairs(cfg.L(i), target,
                                        {{b, project(t.apply(b), target, cfg.perp_sum(1, i))}}));
    }
    const auto flag = psi_embed(cfg, a);
    KLPoint chain;
    for (unsigned i = 1; i <= k; ++i) chain.push_back(intersect(gamma, flag[i - 1]));
    if (found >= 1 && flags[found_a] == flag && found_chain == chain) ++reconstructed;
  }
  std::size_t chart_count = 0;
  for (const auto& L : enumerate_subspaces(Subspace::whole(cfg.field(), cfg.n()), k))
    if (in_chart(cfg, L)) {
      ++chart_count;
      if (!chart_graphs.count(L)) rep.add_witness("chart_point_not_a_graph", L);
    }

  rep.counts["h0"] = h0.size();
  rep.counts["chart"] = charts;
  rep.counts["unique_preimage"] = unique;
  rep.counts["reconstructed"] = reconstructed;
  rep.add_check("flag_map_agrees_with_compression", agrees);
  rep.add_check("flag_map_injective", distinct.size() == h0.size(), ratio(distinct.size(), h0.size()));
  rep.add_check("zero_maps_give_standard_flag", zero_standard);
  rep.add_check("chart_is_graphs", chart_count == chart_graphs.size() && chart_graphs.size() == charts,
                ratio(chart_count, charts));
  rep.add_check("chart_unique_preimage", unique == charts, ratio(unique, charts));
  rep.add_check("chart_reconstruction", reconstructed == charts, ratio(reconstructed, charts));
  rep.wall_time_ms = elapsed_ms(start);
  return rep;
}

EnumReport verify_embedded_resolution(const FrameConfig& cfg, std::uint64_t budget) {
  const auto start = Clock::now();
  const unsigned k = cfg.k();
  const unsigned p = cfg.field().modulus();
  EnumReport rep;
  rep.command = "embres resolution";
  rep.config = frame_config(cfg, budget);

  const auto points = enumerate_embres(cfg, budget);
  const auto grass = enumerate_subspaces(Subspace::whole(cfg.field(), cfg.n()), k);
  const auto o = special_point(cfg);

  std::map<Subspace, std::vector<std::size_t>> fibres;
  bool chain_ok = true;
  for (std::size_t t = 0; t < points.size(); ++t) {
    const auto& pt = points[t];
    const auto& top = pt.chain.back();
    fibres[top].push_back(t);
    const auto flag = psi_tilde(cfg, pi_diag(pt.grid));
    for (unsigned i = 1; i <= k; ++i) {
      const auto meet = intersect(top, flag[i - 1]);
      if (meet.dim() < i || (meet.dim() == i && !(meet == pt.chain[i - 1]))) {
        if (chain_ok) rep.add_witness("chain_flag_meet", pt.chain);
        chain_ok = false;
      }
    }
  }

  std::size_t hit = 0, chart = 0, chart_unique = 0;
  for (const auto& L : grass) {
    const auto it = fibres.find(L);
    const std::size_t size = it == fibres.end() ? 0 : it->second.size();
    if (size > 0) ++hit;
    else rep.add_witness("unhit_plane", L);
    if (in_chart(cfg, L)) {
      ++chart;
      if (size == 1) ++chart_unique;
      else rep.add_witness("chart_fibre_" + std::to_string(size), L);
    }
  }

  const auto cell = cell_points(cfg, budget);
  bool cell_over_o = true, cell_in_chart = true;
  for (const auto& L : cell) {
    if (!in_chart(cfg, L)) cell_in_chart = false;
    const auto it = fibres.find(L);
    if (it == fibres.end()) continue;
    for (auto t : it->second)
      if (!(points[t].grid == o)) {
        if (cell_over_o) rep.add_witness("cell_preimage_off_special_point", L);
        cell_over_o = false;
      }
  }
  std::size_t chart_closed = 0;
  const std::set<Subspace> cell_set(cell.begin(), cell.end());
  bool chart_meet_closed = true;
  for (const auto& L : grass)
    if (in_chart(cfg, L) && in_vbeta(cfg, L, VMode::closed)) {
      ++chart_closed;
      if (!cell_set.count(L)) chart_meet_closed = false;
    }

  PartialFlag standard;
  for (unsigned i = 1; i <= k; ++i) standard.push_back(cfg.F(cfg.beta(i)));
  std::set<Subspace> over_o, kl_image;
  for (const auto& pt : points)
    if (pt.grid == o) over_o.insert(pt.chain.back());
  for (const auto& chain : kl_points(standard, budget)) kl_image.insert(chain.back());
  const auto closed = vbeta_points(cfg, VMode::closed, budget);
  const std::set<Subspace> closed_set(closed.begin(), closed.end());

  const auto ghat_count = static_cast<std::size_t>(ghat_count_poly(cfg).evaluate(p));
  const auto expected = ghat_count * kl_count(cfg.betas(), p);
  std::size_t cell_dim_sum = 0;
  for (unsigned i = 1; i <= k; ++i) cell_dim_sum += cfg.beta(i) - i;

  rep.counts["points"] = points.size();
  rep.counts["grassmannian"] = grass.size();
  rep.counts["hit"] = hit;
  rep.counts["chart"] = chart;
  rep.counts["cell"] = cell.size();
  rep.counts["over_special_point"] = over_o.size();
  rep.add_witness("special_point_diagonal", pi_diag(o));
  rep.add_check("point_count", points.size() == expected, ratio(points.size(), expected));
  rep.add_check("chain_determined_by_top", chain_ok);
  rep.add_check("surjective_empirical", hit == grass.size(), ratio(hit, grass.size()));
  rep.add_check("chart_one_to_one", chart_unique == chart, ratio(chart_unique, chart));
  rep.add_check("cell_count", cell.size() == ipow(p, static_cast<unsigned>(cell_dim_sum)),
                ratio(cell.size(), ipow(p, static_cast<unsigned>(cell_dim_sum))));
  rep.add_check("cell_in_chart", cell_in_chart && cell_set.count(cfg.line_sum(1, k)) == 1);
  rep.add_check("chart_meets_closed_in_cell", chart_meet_closed && chart_closed == cell.size(),
                ratio(chart_closed, cell.size()));
  rep.add_check("cell_preimage_over_special_point", cell_over_o);
  rep.add_check("special_fibre_is_kl_image",
                psi_tilde(cfg, pi_diag(o)) == standard && over_o == kl_image && kl_image == closed_set,
                ratio(over_o.size(), closed_set.size()));
  rep.wall_time_ms = elapsed_ms(start);
  return rep;
}

EnumReport verify_embres(const FrameConfig& cfg, std::uint64_t budget) {
  const auto start = Clock::now();
  EnumReport rep;
  rep.command = "embres verify";
  rep.config = frame_config(cfg, budget);
  for (const auto& part : {verify_chart(cfg, budget), verify_embedded_resolution(cfg, budget)}) {
    const std::string prefix = part.command.substr(part.command.find(' ') + 1) + ".";
    for (const auto& [key, value] : part.counts.items()) rep.counts[prefix + key] = value;
    for (const auto& c : part.checks) rep.add_check(prefix + c.name, c.pass, c.detail);
    for (const auto& w : part.witnesses)
      if (rep.witnesses.size() < EnumReport::kMaxWitnesses) rep.witnesses.push_back(w);
  }
  rep.wall_time_ms = elapsed_ms(start);
  return rep;
}

}  // namespace bioflag
