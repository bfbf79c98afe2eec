#include "bioflag/wflag.hpp"

#include <map>
#include <set>
#include <stdexcept>

#include "bioflag/product.hpp"

namespace bioflag {

GHatPoint::GHatPoint(PrimeField f, unsigned n, unsigned k) {
  for (unsigned i = 1; i <= k; ++i) rows_.emplace_back(i, Subspace::zero(f, n));
}

Subspace h0_target(const FrameConfig& cfg, unsigned i) { return cfg.perp_sum(i + 1, cfg.k() + 1); }

unsigned h0_dim(const FrameConfig& cfg) {
  const unsigned k = cfg.k();
  unsigned d = k * (cfg.n() - cfg.beta(k));
  for (unsigned i = 1; i < k; ++i) d += i * (cfg.beta(i + 1) - cfg.beta(i) - 1);
  return d;
}

std::vector<H0Point> enumerate_h0(const FrameConfig& cfg, std::uint64_t budget) {
  require_budget("bundle fibre enumeration",
                 static_cast<double>(ipow(cfg.field().modulus(), h0_dim(cfg))), budget);
  std::vector<std::vector<LinearMap>> factors;
  for (unsigned i = 1; i <= cfg.k(); ++i) factors.push_back(enumerate_maps(cfg.L(i), h0_target(cfg, i)));
  std::vector<H0Point> out;
  for_each_product(factors, [&](const std::vector<LinearMap>& a) { out.push_back(a); });
  return out;
}

std::vector<LinearMap> compress_maps(const FrameConfig& cfg, const H0Point& a) {
  const unsigned k = cfg.k();
  if (a.size() != k) throw DimensionMismatch("expected one map per fixed line");
  for (unsigned j = 1; j <= k; ++j)
    if (!(a[j - 1].domain() == cfg.L(j)) || !(a[j - 1].target() == h0_target(cfg, j)))
      throw DimensionMismatch("map " + std::to_string(j) + " has the wrong domain or target");
  std::vector<LinearMap> out;
  for (unsigned i = 1; i <= k; ++i) {
    const auto target = h0_target(cfg, i);
    std::vector<std::pair<Vec, Vec>> pairs;
    for (unsigned j = 1; j <= i; ++j) {
      const Vec b = cfg.L(j).basis_vector(0);
      pairs.emplace_back(b, project(a[j - 1].apply(b), target, cfg.perp_sum(j + 1, i)));
    }
    out.push_back(LinearMap::from_pairs(cfg.line_sum(1, i), target, pairs));
  }
  return out;
}

GCalPoint compressed_graphs(const FrameConfig& cfg, const H0Point& a) {
  GCalPoint out;
  for (const auto& b : compress_maps(cfg, a)) out.push_back(graph(b));
  return out;
}

bool in_gcal(const FrameConfig& cfg, const GCalPoint& pt) {
  const unsigned k = cfg.k();
  if (pt.size() != k) return false;
  for (unsigned i = 1; i <= k; ++i) {
    const auto& l = pt[i - 1];
    if (l.ambient_dim() != cfg.n() || l.dim() != i || !cfg.V(i, i).contains(l)) return false;
    if (i < k && !sum(pt[i], cfg.Lperp(i + 1)).contains(l)) return false;
  }
  return true;
}

std::vector<GCalPoint> enumerate_gcal(const FrameConfig& cfg, std::uint64_t budget) {
  const unsigned k = cfg.k();
  const unsigned p = cfg.field().modulus();
  double est = static_cast<double>(gaussian_binomial(cfg.V(k, k).dim(), k, p));
  for (unsigned i = 1; i < k; ++i)
    est *= static_cast<double>(gaussian_binomial(i + 1 + cfg.Lperp(i + 1).dim(), i, p));
  require_budget("constrained flag enumeration", est, budget);

  std::vector<GCalPoint> out;
  GCalPoint pt(k, Subspace::zero(cfg.field(), cfg.n()));
  auto rec = [&](auto&& self, unsigned i) -> void {
    if (i == 0) {
      out.push_back(pt);
      return;
    }
    Subspace bound = cfg.V(i, i);
    if (i < k) bound = intersect(bound, sum(pt[i], cfg.Lperp(i + 1)));
    for (auto& l : enumerate_subspaces(bound, i)) {
      pt[i - 1] = std::move(l);
      self(self, i - 1);
    }
  };
  rec(rec, k);
  return out;
}

bool in_ghat(const FrameConfig& cfg, const GHatPoint& pt) {
  const unsigned k = cfg.k();
  if (pt.k() != k) return false;
  for (unsigned i = 1; i <= k; ++i)
    for (unsigned j = 1; j <= i; ++j) {
      const auto& l = pt.at(i, j);
      if (l.ambient_dim() != cfg.n() || l.dim() != j || !cfg.V(j, i).contains(l)) return false;
      if (j < i && !pt.at(i, j + 1).contains(l)) return false;
      if (i < k && !sum(pt.at(i + 1, j), cfg.Lperp(i + 1)).contains(l)) return false;
    }
  return true;
}

std::vector<GHatPoint> enumerate_ghat(const FrameConfig& cfg, std::uint64_t budget) {
  const unsigned k = cfg.k();
  require_budget("bioriented resolution enumeration",
                 static_cast<double>(ghat_count_poly(cfg).evaluate(cfg.field().modulus())), budget);
  std::vector<GHatPoint> out;
  GHatPoint pt(cfg.field(), cfg.n(), k);
  // Rows from k upward, each row from its diagonal entry leftward.
  auto rec = [&](auto&& self, unsigned i, unsigned j) -> void {
    if (j == 0) {
      if (i == 1) {
        out.push_back(pt);
        return;
      }
      self(self, i - 1, i - 1);
      return;
    }
    Subspace bound = cfg.V(j, i);
    if (j < i) bound = intersect(bound, pt.at(i, j + 1));
    if (i < k) bound = intersect(bound, sum(pt.at(i + 1, j), cfg.Lperp(i + 1)));
    for (auto& l : enumerate_subspaces(bound, j)) {
      pt.at(i, j) = std::move(l);
      self(self, i, j - 1);
    }
  };
  rec(rec, k, k);
  return out;
}

GCalPoint pi_diag(const GHatPoint& pt) {
  GCalPoint out;
  for (unsigned i = 1; i <= pt.k(); ++i) out.push_back(pt.at(i, i));
  return out;
}

bool in_U(const FrameConfig& cfg, const GCalPoint& pt) {
  for (unsigned a = 2; a <= pt.size(); ++a)
    for (unsigned j = 1; j < a; ++j)
      if (intersect(pt[a - 1], cfg.V(j, a)).dim() != j) return false;
  return true;
}

GHatPoint closed_form_fibre(const FrameConfig& cfg, const GCalPoint& pt) {
  GHatPoint g(cfg.field(), cfg.n(), cfg.k());
  for (unsigned i = 1; i <= cfg.k(); ++i)
    for (unsigned j = 1; j <= i; ++j) g.at(i, j) = intersect(pt[i - 1], cfg.V(j, i));
  return g;
}

GHatPoint lift_to_ghat(const FrameConfig& cfg, const GCalPoint& pt) {
  if (!in_gcal(cfg, pt)) throw std::invalid_argument("point is not in the constrained flag variety");
  const unsigned k = cfg.k();
  GHatPoint g(cfg.field(), cfg.n(), k);
  for (unsigned i = 1; i <= k; ++i) g.at(i, i) = pt[i - 1];
  // Entry (r, i) on diagonal d = r - i from (r-1, i) and (r, i+1).
  for (unsigned d = 1; d < k; ++d)
    for (unsigned i = 1; i + d <= k; ++i) {
      const unsigned r = i + d;
      const auto& x = g.at(r - 1, i);
      const auto& y = g.at(r, i + 1);
      const auto v = cfg.V(i, r);
      Subspace z = intersect(y, v);
      if (z.dim() != i) {
        z = project(x, v, cfg.Lperp(r));
        for (std::size_t b = 0; b < y.dim() && z.dim() < i; ++b) {
          const Vec row = y.basis_vector(b);
          if (!z.contains(row)) z = sum(z, Subspace::span(cfg.field(), cfg.n(), {row}));
        }
      }
      g.at(r, i) = std::move(z);
    }
  if (!in_ghat(cfg, g)) throw std::logic_error("lift left the bioriented resolution");
  return g;
}

PartialFlag psi_tilde(const FrameConfig& cfg, const GCalPoint& pt) {
  PartialFlag out;
  for (unsigned i = 1; i <= cfg.k(); ++i) {
    out.push_back(sum(pt[i - 1], cfg.perp_sum(1, i)));
    if (out.back().dim() != cfg.beta(i)) throw std::logic_error("flag component has the wrong dimension");
  }
  return out;
}

QPoly ghat_count_poly(const FrameConfig& cfg) {
  const unsigned k = cfg.k();
  QPoly c = QPoly::q_integer(cfg.n() - cfg.beta(k) + 1).pow(k);
  for (unsigned i = 1; i < k; ++i) c = c * QPoly::q_integer(cfg.beta(i + 1) - cfg.beta(i)).pow(i);
  return c;
}

QPoly gcal_u_count_poly(const FrameConfig& cfg) {
  const unsigned k = cfg.k();
  const unsigned c = cfg.n() - cfg.beta(k);
  QPoly out = QPoly::q_integer(c + 1) * QPoly::monomial((k - 1) * c);
  for (unsigned i = 1; i < k; ++i) {
    const unsigned e = cfg.beta(i + 1) - cfg.beta(i) - 1;
    out = out * QPoly::q_integer(e + 1) * QPoly::monomial((i - 1) * e);
  }
  return out;
}

namespace {

Json frame_config(const FrameConfig& cfg, std::uint64_t budget) {
  Json j = cfg.to_json();
  j["budget"] = budget;
  return j;
}

std::vector<Subspace> grid_spaces(const GHatPoint& g) {
  std::vector<Subspace> out;
  for (unsigned i = 1; i <= g.k(); ++i)
    for (unsigned j = 1; j <= i; ++j) out.push_back(g.at(i, j));
  return out;
}

}  // namespace

EnumReport enumerate_wflag_report(const FrameConfig& cfg, std::uint64_t budget) {
  const auto start = Clock::now();
  const auto p = static_cast<long long>(cfg.field().modulus());
  EnumReport rep;
  rep.command = "wflag enumerate";
  rep.config = frame_config(cfg, budget);
  const auto gcal = enumerate_gcal(cfg, budget);
  const auto ghat = enumerate_ghat(cfg, budget);
  std::size_t in_u = 0;
  for (const auto& pt : gcal) in_u += in_U(cfg, pt);
  GCalPoint zero;
  for (unsigned i = 1; i <= cfg.k(); ++i) zero.push_back(cfg.line_sum(1, i));
  const auto ghat_expected = ghat_count_poly(cfg).evaluate(p);
  const auto u_expected = gcal_u_count_poly(cfg).evaluate(p);

  rep.counts["gcal"] = gcal.size();
  rep.counts["gcal_u"] = in_u;
  rep.counts["ghat"] = ghat.size();
  rep.counts["h0_dim"] = h0_dim(cfg);
  rep.add_check("ghat_tower_count", static_cast<long long>(ghat.size()) == ghat_expected,
                std::to_string(ghat.size()) + " vs " + std::to_string(ghat_expected));
  rep.add_check("gcal_u_tower_count", static_cast<long long>(in_u) == u_expected,
                std::to_string(in_u) + " vs " + std::to_string(u_expected));
  rep.add_check("tower_degree_is_h0_dim",
                gcal_u_count_poly(cfg).degree() == static_cast<int>(h0_dim(cfg)) &&
                    ghat_count_poly(cfg).degree() == static_cast<int>(h0_dim(cfg)));
  rep.add_check("zero_point_member", in_gcal(cfg, zero) && in_U(cfg, zero));
  rep.data["ghat_poly"] = ghat_count_poly(cfg).coeffs();
  rep.data["gcal_u_poly"] = gcal_u_count_poly(cfg).coeffs();
  rep.wall_time_ms = elapsed_ms(start);
  return rep;
}

EnumReport lift_report(const FrameConfig& cfg, std::uint64_t budget) {
  const auto start = Clock::now();
  EnumReport rep;
  rep.command = "wflag lift";
  rep.config = frame_config(cfg, budget);
  const auto gcal = enumerate_gcal(cfg, budget);
  bool section = true;
  std::size_t in_u = 0, closed_form = 0;
  for (const auto& pt : gcal) {
    const auto g = lift_to_ghat(cfg, pt);
    if (!(pi_diag(g) == pt)) {
      if (section) rep.add_witness("lift_not_a_section", pt);
      section = false;
    }
    if (in_U(cfg, pt)) {
      ++in_u;
      closed_form += g == closed_form_fibre(cfg, pt);
    }
  }
  GCalPoint zero;
  for (unsigned i = 1; i <= cfg.k(); ++i) zero.push_back(cfg.line_sum(1, i));
  const auto o = lift_to_ghat(cfg, zero);
  rep.add_witness("lift_of_line_sums", grid_spaces(o));

  rep.counts["gcal"] = gcal.size();
  rep.counts["gcal_u"] = in_u;
  rep.add_check("lift_is_section", section);
  rep.add_check("lift_matches_closed_form_on_U", closed_form == in_u,
                std::to_string(closed_form) + " of " + std::to_string(in_u));
  rep.wall_time_ms = elapsed_ms(start);
  return rep;
}

EnumReport verify_resolution(const FrameConfig& cfg, std::uint64_t budget) {
  const auto start = Clock::now();
  const unsigned k = cfg.k();
  EnumReport rep;
  rep.command = "wflag verify";
  rep.config = frame_config(cfg, budget);

  const auto gcal = enumerate_gcal(cfg, budget);
  const auto ghat = enumerate_ghat(cfg, budget);
  const std::set<GCalPoint> gcal_set(gcal.begin(), gcal.end());

  std::map<GCalPoint, std::vector<std::size_t>> fibres;
  bool lands = true;
  for (std::size_t t = 0; t < ghat.size(); ++t) {
    auto d = pi_diag(ghat[t]);
    if (!gcal_set.count(d)) {
      if (lands) rep.add_witness("diagonal_outside_gcal", d);
      lands = false;
    }
    fibres[std::move(d)].push_back(t);
  }

  bool surjective = true, u_ok = true, section = true;
  std::size_t in_u = 0, multi = 0;
  std::map<std::size_t, std::size_t> census;
  for (const auto& pt : gcal) {
    const auto it = fibres.find(pt);
    const std::size_t size = it == fibres.end() ? 0 : it->second.size();
    ++census[size];
    if (size == 0) {
      if (surjective) rep.add_witness("unhit_gcal_point", pt);
      surjective = false;
    }
    if (size > 1) {
      if (multi == 0) rep.add_witness("multi_point_fibre_base", pt);
      ++multi;
    }
    if (in_U(cfg, pt)) {
      ++in_u;
      if (size != 1 || !(ghat[it->second.front()] == closed_form_fibre(cfg, pt))) {
        if (u_ok) rep.add_witness("bad_fibre_over_U", pt);
        u_ok = false;
      }
    }
    const auto g = lift_to_ghat(cfg, pt);
    if (!(pi_diag(g) == pt)) section = false;
  }

  bool nested = true, graphs_in_u = true;
  for (const auto& a : enumerate_h0(cfg, budget)) {
    const auto graphs = compressed_graphs(cfg, a);
    for (unsigned i = 1; i < k; ++i)
      if (!sum(graphs[i], cfg.Lperp(i + 1)).contains(graphs[i - 1])) nested = false;
    if (!in_gcal(cfg, graphs) || !in_U(cfg, graphs)) graphs_in_u = false;
  }

  bool nonzero_perp = false;
  for (unsigned i = 2; i <= k; ++i) nonzero_perp |= !cfg.Lperp(i).is_zero();
  const bool expect_multi = k >= 2 && !cfg.Lperp(k + 1).is_zero() && nonzero_perp;

  rep.counts["gcal"] = gcal.size();
  rep.counts["gcal_u"] = in_u;
  rep.counts["ghat"] = ghat.size();
  rep.counts["multi_point_fibres"] = multi;
  rep.add_check("diagonal_lands_in_gcal", lands);
  rep.add_check("surjective", surjective);
  rep.add_check("singleton_closed_form_over_U", u_ok);
  rep.add_check("lift_is_section", section);
  rep.add_check("compressed_graphs_nested", nested);
  rep.add_check("compressed_graphs_in_U", graphs_in_u);
  rep.add_check("multi_point_fibre", !expect_multi || multi > 0,
                expect_multi ? "required for this frame" : "not required for this frame");
  Json cj = Json::object();
  for (const auto& [size, count] : census) cj[std::to_string(size)] = count;
  rep.data["fibre_census"] = cj;
  rep.data["gcal_equals_u"] = in_u == gcal.size();
  rep.wall_time_ms = elapsed_ms(start);
  return rep;
}

}  // namespace bioflag
