#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include "bioflag/wflag.hpp"

namespace bioflag {

/// Chain L_1 c ... c L_k with L_i of dimension i inside the i-th flag space.
using KLPoint = std::vector<Subspace>;

/// prod_i [dim F'_i - i + 1]_p for a flag with the given dimensions.
std::uint64_t kl_count(const std::vector<unsigned>& dims, unsigned p);
std::vector<KLPoint> kl_points(const PartialFlag& flag, std::uint64_t budget = kDefaultBudget);

/// i-th space sum_{j<=i} (graph(A_j) + L_j^perp).
PartialFlag psi_embed(const FrameConfig& cfg, const H0Point& a);

/// The chart W: L n (L_1^perp + ... + L_{k+1}^perp) = 0.
bool in_chart(const FrameConfig& cfg, const Subspace& L);
/// Cell cut out by F_{beta_i} and the hyperplanes F_before(i).
bool in_cell(const FrameConfig& cfg, const Subspace& L);
std::vector<Subspace> cell_points(const FrameConfig& cfg, std::uint64_t budget = kDefaultBudget);

/// Lift of the diagonal (L_1, L_1 + L_2, ...).
GHatPoint special_point(const FrameConfig& cfg);

struct EmbResPoint {
  GHatPoint grid;
  KLPoint chain;

  friend bool operator==(const EmbResPoint&, const EmbResPoint&) = default;
  friend auto operator<=>(const EmbResPoint&, const EmbResPoint&) = default;
};

/// Pairs (grid, chain) with chain a KL point over psi_tilde(pi_diag(grid)).
std::vector<EmbResPoint> enumerate_embres(const FrameConfig& cfg,
                                          std::uint64_t budget = kDefaultBudget);

EnumReport verify_chart(const FrameConfig& cfg, std::uint64_t budget = kDefaultBudget);
EnumReport verify_embedded_resolution(const FrameConfig& cfg, std::uint64_t budget = kDefaultBudget);
/// Both verifications under one command, checks prefixed by their source.
EnumReport verify_embres(const FrameConfig& cfg, std::uint64_t budget = kDefaultBudget);

}  // namespace bioflag
