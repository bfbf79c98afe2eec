#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bioflag/budget.hpp"
#include "bioflag/linear_map.hpp"
#include "bioflag/report.hpp"
#include "bioflag/subspace.hpp"

namespace bioflag {

/// 1 <= beta_1 < ... < beta_k <= n; throws std::invalid_argument otherwise.
std::vector<unsigned> parse_beta(const std::string& text);
void validate_beta(unsigned n, const std::vector<unsigned>& beta);

/// Fixed frames for a multi-index. Indices are 1-based throughout; beta(0) = 0.
/// Windows are F_{beta_i} n G^{beta_{i-1}}, complements of the chosen lines are
/// canonical inside their window, and L_{k+1}^perp = G^{beta_k}.
class FrameConfig {
 public:
  /// `lines` holds one spanning vector per window; empty selects e_{beta_{i-1}+1}.
  FrameConfig(PrimeField f, unsigned n, std::vector<unsigned> beta,
              const std::vector<Vec>& lines = {});

  PrimeField field() const { return f_; }
  unsigned n() const { return n_; }
  unsigned k() const { return static_cast<unsigned>(beta_.size()); }
  unsigned beta(unsigned i) const { return i == 0 ? 0 : beta_[i - 1]; }
  const std::vector<unsigned>& betas() const { return beta_; }

  Subspace F(unsigned i) const;
  Subspace G(unsigned i) const;
  const Subspace& window(unsigned i) const { return window_[i - 1]; }
  const Subspace& L(unsigned i) const { return line_[i - 1]; }
  /// Valid for 1 <= i <= k+1.
  const Subspace& Lperp(unsigned i) const { return perp_[i - 1]; }

  /// L_a + ... + L_b (zero when a > b).
  Subspace line_sum(unsigned a, unsigned b) const;
  /// L_a^perp + ... + L_b^perp (zero when a > b).
  Subspace perp_sum(unsigned a, unsigned b) const;
  /// V_j^i = L_1 + ... + L_j + L_{i+1}^perp + ... + L_{k+1}^perp.
  Subspace V(unsigned j, unsigned i) const;
  /// The hyperplane L_1 + ... + L_{i-1} + L_1^perp + ... + L_i^perp of F_{beta_i}.
  Subspace F_before(unsigned i) const;

  Json to_json() const;

 private:
  PrimeField f_;
  unsigned n_;
  std::vector<unsigned> beta_;
  std::vector<Subspace> window_;
  std::vector<Subspace> line_;
  std::vector<Subspace> perp_;
};

/// Moving lines l_i in the windows with their canonical complements tau_i^perp.
struct MovingLines {
  std::vector<Subspace> lines;
  std::vector<Subspace> perps;
};
MovingLines moving_lines(const FrameConfig& cfg, const std::vector<Subspace>& lines);
/// Every choice of one line per window, in lexicographic order.
std::vector<std::vector<Subspace>> all_window_lines(const FrameConfig& cfg);

/// Target of A_i: tau_1^perp + ... + tau_{i-1}^perp.
Subspace phi_target(const FrameConfig& cfg, const MovingLines& m, unsigned i);
/// Target of A_i: tau_{i+1}^perp + ... + tau_k^perp + G^{beta_k}.
Subspace phi_star_target(const FrameConfig& cfg, const MovingLines& m, unsigned i);

/// Sum of the graphs of A_1..A_k, where maps[i-1] : l_i -> phi_target(i).
/// Throws std::logic_error if dim(result n F_{beta_i}) != i for some i.
Subspace phi(const FrameConfig& cfg, const MovingLines& m, const std::vector<LinearMap>& maps);
/// Same with maps[i-1] : l_i -> phi_star_target(i); asserts
/// result n G^{beta_i} = sum_{j>i} graph(A_j).
Subspace phi_star(const FrameConfig& cfg, const MovingLines& m, const std::vector<LinearMap>& maps);

/// (L n F_{beta_1}, P(L n F_{beta_2}), ...) with P onto the window along F_{beta_{i-1}}.
std::vector<Subspace> project_to_P(const FrameConfig& cfg, const Subspace& L);
/// (P(L n G^{beta_0}), ...) with P onto the window along G^{beta_i}.
std::vector<Subspace> project_star_to_P(const FrameConfig& cfg, const Subspace& L);

enum class VMode { cell, open, closed, star_open, star_closed };
VMode parse_vmode(const std::string& s);
/// Rank-filtered subsets of Gr_k(E) against the standard flags.
bool in_vbeta(const FrameConfig& cfg, const Subspace& L, VMode mode);
std::vector<Subspace> vbeta_points(const FrameConfig& cfg, VMode mode,
                                   std::uint64_t budget = kDefaultBudget);

/// Number of points of the product of projective spaces of the windows.
std::uint64_t p_count(const FrameConfig& cfg);
/// sum_{i>=2} (beta_{i-1} - (i-1)).
unsigned h_rank(const FrameConfig& cfg);
/// sum_i (beta_i - i).
unsigned cell_dim(const FrameConfig& cfg);

EnumReport verify_phi(const FrameConfig& cfg, std::uint64_t budget = kDefaultBudget);
EnumReport verify_phi_star(const FrameConfig& cfg, std::uint64_t budget = kDefaultBudget);
EnumReport verify_transversal_identity(const FrameConfig& cfg,
                                       std::uint64_t budget = kDefaultBudget);

}  // namespace bioflag
