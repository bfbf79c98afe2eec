#include "bioflag/grassfib.hpp"

#include <set>
#include <sstream>
#include <stdexcept>

#include "bioflag/biflag.hpp"
#include "bioflag/product.hpp"
#include "bioflag/qcount.hpp"

namespace bioflag {

std::vector<unsigned> parse_beta(const std::string& text) {
  std::vector<unsigned> beta;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    std::size_t used = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(tok, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad multi-index entry '" + tok + "'");
    }
    if (used != tok.size()) throw std::invalid_argument("bad multi-index entry '" + tok + "'");
    beta.push_back(static_cast<unsigned>(v));
  }
  return beta;
}

void validate_beta(unsigned n, const std::vector<unsigned>& beta) {
  if (beta.empty()) throw std::invalid_argument("multi-index is empty");
  for (std::size_t i = 0; i < beta.size(); ++i) {
    if (beta[i] < 1 || beta[i] > n)
      throw std::invalid_argument("multi-index entry out of range 1.." + std::to_string(n));
    if (i > 0 && beta[i] <= beta[i - 1])
      throw std::invalid_argument("multi-index must be strictly increasing");
  }
}

FrameConfig::FrameConfig(PrimeField f, unsigned n, std::vector<unsigned> beta_in,
                         const std::vector<Vec>& lines)
    : f_(f), n_(n), beta_(std::move(beta_in)) {
  validate_beta(n_, beta_);
  const unsigned kk = k();
  if (!lines.empty() && lines.size() != kk)
    throw std::invalid_argument("need one line per window");
  for (unsigned i = 1; i <= kk; ++i) {
    window_.push_back(intersect(F(beta(i)), G(beta(i - 1))));
    Subspace line = lines.empty()
                        ? Subspace::coordinate(f_, n_, {std::size_t{beta(i - 1)}})
                        : Subspace::span(f_, n_, {lines[i - 1]});
    if (line.ambient_dim() != n_ || line.dim() != 1 || !window_.back().contains(line))
      throw std::invalid_argument("line choice " + std::to_string(i) + " is not a line in its window");
    perp_.push_back(canonical_complement(line, window_.back()));
    line_.push_back(std::move(line));
  }
  perp_.push_back(G(beta(kk)));
}

Subspace FrameConfig::F(unsigned i) const { return standard_F(f_, n_, i); }
Subspace FrameConfig::G(unsigned i) const { return standard_G(f_, n_, i); }

Subspace FrameConfig::line_sum(unsigned a, unsigned b) const {
  Subspace s = Subspace::zero(f_, n_);
  for (unsigned p = a; p <= b; ++p) s = sum(s, L(p));
  return s;
}

Subspace FrameConfig::perp_sum(unsigned a, unsigned b) const {
  Subspace s = Subspace::zero(f_, n_);
  for (unsigned p = a; p <= b; ++p) s = sum(s, Lperp(p));
  return s;
}

Subspace FrameConfig::V(unsigned j, unsigned i) const {
  return sum(line_sum(1, j), perp_sum(i + 1, k() + 1));
}

Subspace FrameConfig::F_before(unsigned i) const {
  return sum(line_sum(1, i - 1), perp_sum(1, i));
}

Json FrameConfig::to_json() const {
  Json lines = Json::array();
  for (const auto& l : line_) lines.push_back(l.basis().to_ints().front());
  return Json{{"n", n_}, {"k", k()}, {"beta", beta_}, {"field", f_.modulus()}, {"lines", lines}};
}

MovingLines moving_lines(const FrameConfig& cfg, const std::vector<Subspace>& lines) {
  if (lines.size() != cfg.k()) throw DimensionMismatch("expected one moving line per window");
  MovingLines m;
  for (unsigned i = 1; i <= cfg.k(); ++i) {
    const auto& l = lines[i - 1];
    if (l.dim() != 1 || !cfg.window(i).contains(l))
      throw DimensionMismatch("moving line " + std::to_string(i) + " is not a line in its window");
    m.lines.push_back(l);
    m.perps.push_back(canonical_complement(l, cfg.window(i)));
  }
  return m;
}

std::vector<std::vector<Subspace>> all_window_lines(const FrameConfig& cfg) {
  std::vector<std::vector<Subspace>> factors;
  for (unsigned i = 1; i <= cfg.k(); ++i) factors.push_back(enumerate_subspaces(cfg.window(i), 1));
  std::vector<std::vector<Subspace>> out;
  for_each_product(factors, [&](const std::vector<Subspace>& c) { out.push_back(c); });
  return out;
}

Subspace phi_target(const FrameConfig& cfg, const MovingLines& m, unsigned i) {
  Subspace s = Subspace::zero(cfg.field(), cfg.n());
  for (unsigned j = 1; j < i; ++j) s = sum(s, m.perps[j - 1]);
  return s;
}

Subspace phi_star_target(const FrameConfig& cfg, const MovingLines& m, unsigned i) {
  Subspace s = cfg.Lperp(cfg.k() + 1);
  for (unsigned j = i + 1; j <= cfg.k(); ++j) s = sum(s, m.perps[j - 1]);
  return s;
}

namespace {

template <typename Target>
std::vector<Subspace> graphs_checked(const FrameConfig& cfg, const MovingLines& m,
                                     const std::vector<LinearMap>& maps, Target target) {
  if (maps.size() != cfg.k()) throw DimensionMismatch("expected one map per window");
  std::vector<Subspace> graphs;
  for (unsigned i = 1; i <= cfg.k(); ++i) {
    const auto& a = maps[i - 1];
    if (!(a.domain() == m.lines[i - 1]) || !(a.target() == target(cfg, m, i)))
      throw DimensionMismatch("map " + std::to_string(i) + " has the wrong domain or target");
    graphs.push_back(graph(a));
  }
  return graphs;
}

std::vector<std::vector<LinearMap>> map_factors(const FrameConfig& cfg, const MovingLines& m,
                                                bool star) {
  std::vector<std::vector<LinearMap>> factors;
  for (unsigned i = 1; i <= cfg.k(); ++i)
    factors.push_back(enumerate_maps(
        m.lines[i - 1], star ? phi_star_target(cfg, m, i) : phi_target(cfg, m, i)));
  return factors;
}

}  // namespace

Subspace phi(const FrameConfig& cfg, const MovingLines& m, const std::vector<LinearMap>& maps) {
  const auto graphs = graphs_checked(cfg, m, maps, phi_target);
  const Subspace out = sum_all(cfg.field(), cfg.n(), graphs);
  for (unsigned i = 1; i <= cfg.k(); ++i)
    if (intersect(out, cfg.F(cfg.beta(i))).dim() != i)
      throw std::logic_error("graph sum violates dim L n F_beta_i = i");
  return out;
}

Subspace phi_star(const FrameConfig& cfg, const MovingLines& m,
                  const std::vector<LinearMap>& maps) {
  const auto graphs = graphs_checked(cfg, m, maps, phi_star_target);
  const Subspace out = sum_all(cfg.field(), cfg.n(), graphs);
  if (out.dim() != cfg.k()) throw std::logic_error("graph sum has the wrong dimension");
  for (unsigned i = 0; i <= cfg.k(); ++i) {
    const std::span<const Subspace> tail(graphs.begin() + i, graphs.end());
    if (!(intersect(out, cfg.G(cfg.beta(i))) == sum_all(cfg.field(), cfg.n(), tail)))
      throw std::logic_error("graph sum meets G^beta_i outside the later graphs");
  }
  return out;
}

std::vector<Subspace> project_to_P(const FrameConfig& cfg, const Subspace& L) {
  std::vector<Subspace> out;
  for (unsigned i = 1; i <= cfg.k(); ++i)
    out.push_back(project(intersect(L, cfg.F(cfg.beta(i))), cfg.window(i), cfg.F(cfg.beta(i - 1))));
  return out;
}

std::vector<Subspace> project_star_to_P(const FrameConfig& cfg, const Subspace& L) {
  std::vector<Subspace> out;
  for (unsigned i = 1; i <= cfg.k(); ++i)
    out.push_back(project(intersect(L, cfg.G(cfg.beta(i - 1))), cfg.window(i), cfg.G(cfg.beta(i))));
  return out;
}

VMode parse_vmode(const std::string& s) {
  if (s == "cell") return VMode::cell;
  if (s == "open") return VMode::open;
  if (s == "closed") return VMode::closed;
  if (s == "star_open") return VMode::star_open;
  if (s == "star_closed") return VMode::star_closed;
  throw std::invalid_argument("unknown mode '" + s + "'");
}

bool in_vbeta(const FrameConfig& cfg, const Subspace& L, VMode mode) {
  const unsigned k = cfg.k();
  if (L.dim() != k) return false;
  for (unsigned i = 1; i <= k; ++i) {
    const auto b = cfg.beta(i);
    const auto df = intersect(L, cfg.F(b)).dim();
    const auto dg = intersect(L, cfg.G(b)).dim();
    switch (mode) {
      case VMode::closed:
        if (df < i) return false;
        break;
      case VMode::open:
        if (df != i) return false;
        break;
      case VMode::cell:
        if (df != i || intersect(L, cfg.F(b - 1)).dim() != i - 1) return false;
        break;
      case VMode::star_closed:
        if (dg < k - i) return false;
        break;
      case VMode::star_open:
        if (dg != k - i) return false;
        break;
    }
  }
  return true;
}

std::vector<Subspace> vbeta_points(const FrameConfig& cfg, VMode mode, std::uint64_t budget) {
  require_budget("Grassmannian enumeration",
                 static_cast<double>(gaussian_binomial(cfg.n(), cfg.k(), cfg.field().modulus())),
                 budget);
  std::vector<Subspace> out;
  for (auto& L : enumerate_subspaces(Subspace::whole(cfg.field(), cfg.n()), cfg.k()))
    if (in_vbeta(cfg, L, mode)) out.push_back(std::move(L));
  return out;
}

std::uint64_t p_count(const FrameConfig& cfg) {
  std::uint64_t c = 1;
  for (unsigned i = 1; i <= cfg.k(); ++i)
    c *= gaussian_binomial(cfg.beta(i) - cfg.beta(i - 1), 1, cfg.field().modulus());
  return c;
}

unsigned h_rank(const FrameConfig& cfg) {
  unsigned r = 0;
  for (unsigned i = 2; i <= cfg.k(); ++i) r += cfg.beta(i - 1) - (i - 1);
  return r;
}

unsigned cell_dim(const FrameConfig& cfg) {
  unsigned r = 0;
  for (unsigned i = 1; i <= cfg.k(); ++i) r += cfg.beta(i) - i;
  return r;
}

namespace {

unsigned h_star_rank(const FrameConfig& cfg) {
  unsigned r = 0;
  for (unsigned i = 1; i <= cfg.k(); ++i) r += cfg.n() - cfg.beta(i) - (cfg.k() - i);
  return r;
}

Json frame_config(const FrameConfig& cfg, std::uint64_t budget) {
  Json j = cfg.to_json();
  j["budget"] = budget;
  return j;
}

EnumReport verify_graph_sum(const FrameConfig& cfg, std::uint64_t budget, bool star) {
  const auto start = Clock::now();
  const unsigned p = cfg.field().modulus();
  EnumReport rep;
  rep.command = star ? "grass verify-phistar" : "grass verify-phi";
  rep.config = frame_config(cfg, budget);

  const unsigned rank = star ? h_star_rank(cfg) : h_rank(cfg);
  const auto inputs_expected = p_count(cfg) * ipow(p, rank);
  require_budget(rep.command, static_cast<double>(inputs_expected), budget);
  const auto target = vbeta_points(cfg, star ? VMode::star_open : VMode::open, budget);

  std::vector<Subspace> images;
  bool commutes = true;
  for (const auto& lines : all_window_lines(cfg)) {
    const auto m = moving_lines(cfg, lines);
    for_each_product(map_factors(cfg, m, star), [&](const std::vector<LinearMap>& maps) {
      Subspace L = star ? phi_star(cfg, m, maps) : phi(cfg, m, maps);
      const auto back = star ? project_star_to_P(cfg, L) : project_to_P(cfg, L);
      if (back != lines) {
        if (commutes) rep.add_witness("projection_mismatch", L);
        commutes = false;
      }
      images.push_back(std::move(L));
    });
  }
  const std::set<Subspace> image_set(images.begin(), images.end());
  const std::set<Subspace> target_set(target.begin(), target.end());
  for (const auto& L : image_set)
    if (!target_set.count(L)) rep.add_witness("image_outside_target", L);
  for (const auto& L : target_set)
    if (!image_set.count(L)) rep.add_witness("target_missed", L);

  rep.counts["inputs"] = images.size();
  rep.counts["image"] = image_set.size();
  rep.counts["target"] = target.size();
  rep.counts["closed"] = vbeta_points(cfg, star ? VMode::star_closed : VMode::closed, budget).size();
  rep.counts["p_points"] = p_count(cfg);
  rep.counts["bundle_rank"] = rank;
  rep.add_check("injective", image_set.size() == images.size());
  rep.add_check("image_equals_rank_filter", image_set == target_set);
  rep.add_check("projection_commutes", commutes);
  rep.add_check("count_identity", target.size() == inputs_expected,
                std::to_string(target.size()) + " vs " + std::to_string(p_count(cfg)) + " * " +
                    std::to_string(p) + "^" + std::to_string(rank));
  rep.wall_time_ms = elapsed_ms(start);
  return rep;
}

}  // namespace

EnumReport verify_phi(const FrameConfig& cfg, std::uint64_t budget) {
  return verify_graph_sum(cfg, budget, false);
}

EnumReport verify_phi_star(const FrameConfig& cfg, std::uint64_t budget) {
  return verify_graph_sum(cfg, budget, true);
}

EnumReport verify_transversal_identity(const FrameConfig& cfg, std::uint64_t budget) {
  const auto start = Clock::now();
  EnumReport rep;
  rep.command = "grass verify-transversal";
  rep.config = frame_config(cfg, budget);

  auto as_set = [&](VMode m) {
    const auto v = vbeta_points(cfg, m, budget);
    return std::set<Subspace>(v.begin(), v.end());
  };
  auto meet = [](const std::set<Subspace>& a, const std::set<Subspace>& b) {
    std::set<Subspace> out;
    for (const auto& x : a)
      if (b.count(x)) out.insert(x);
    return out;
  };
  const auto open = meet(as_set(VMode::open), as_set(VMode::star_open));
  const auto closed = meet(as_set(VMode::closed), as_set(VMode::star_closed));
  std::set<Subspace> sums;
  for (const auto& lines : all_window_lines(cfg)) sums.insert(sum_all(cfg.field(), cfg.n(), lines));

  for (const auto& L : open)
    if (!sums.count(L)) rep.add_witness("open_meet_not_line_sum", L);
  for (const auto& L : closed)
    if (!open.count(L)) rep.add_witness("closed_meet_not_open", L);

  rep.counts["open_meet"] = open.size();
  rep.counts["closed_meet"] = closed.size();
  rep.counts["line_sums"] = sums.size();
  rep.add_check("open_meet_equals_line_sums", open == sums);
  rep.add_check("closed_meet_equals_open_meet", closed == open);
  rep.wall_time_ms = elapsed_ms(start);
  return rep;
}

}  // namespace bioflag
