#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include "bioflag/grassfib.hpp"
#include "bioflag/qcount.hpp"

namespace bioflag {

/// A_i : L_i -> L_{i+1}^perp + ... + L_{k+1}^perp, one map per i.
using H0Point = std::vector<LinearMap>;
/// (l_1, ..., l_k) with l_i of dimension i.
using GCalPoint = std::vector<Subspace>;
using PartialFlag = std::vector<Subspace>;

/// Lower-triangular grid l_j^i, 1 <= j <= i <= k.
class GHatPoint {
 public:
  GHatPoint(PrimeField f, unsigned n, unsigned k);

  unsigned k() const { return static_cast<unsigned>(rows_.size()); }
  const Subspace& at(unsigned i, unsigned j) const { return rows_[i - 1][j - 1]; }
  Subspace& at(unsigned i, unsigned j) { return rows_[i - 1][j - 1]; }

  friend bool operator==(const GHatPoint&, const GHatPoint&) = default;
  friend auto operator<=>(const GHatPoint& a, const GHatPoint& b) { return a.rows_ <=> b.rows_; }

 private:
  std::vector<std::vector<Subspace>> rows_;
};

Subspace h0_target(const FrameConfig& cfg, unsigned i);
/// k(n - beta_k) + sum_i i (beta_{i+1} - beta_i - 1).
unsigned h0_dim(const FrameConfig& cfg);
std::vector<H0Point> enumerate_h0(const FrameConfig& cfg, std::uint64_t budget = kDefaultBudget);

/// B_i : L_1 + ... + L_i -> L_{i+1}^perp + ... + L_{k+1}^perp, where B_i on L_j
/// is A_j with its components in L_{j+1}^perp .. L_i^perp dropped.
std::vector<LinearMap> compress_maps(const FrameConfig& cfg, const H0Point& a);
/// Graphs of compress_maps, as a point of the constrained variety.
GCalPoint compressed_graphs(const FrameConfig& cfg, const H0Point& a);

bool in_gcal(const FrameConfig& cfg, const GCalPoint& pt);
std::vector<GCalPoint> enumerate_gcal(const FrameConfig& cfg, std::uint64_t budget = kDefaultBudget);

bool in_ghat(const FrameConfig& cfg, const GHatPoint& pt);
std::vector<GHatPoint> enumerate_ghat(const FrameConfig& cfg, std::uint64_t budget = kDefaultBudget);

GCalPoint pi_diag(const GHatPoint& pt);
/// dim(l_a n V_j^a) = j for all j < a <= k.
bool in_U(const FrameConfig& cfg, const GCalPoint& pt);
/// Grid with l_j^i = l_i^i n V_j^i.
GHatPoint closed_form_fibre(const FrameConfig& cfg, const GCalPoint& pt);
/// A preimage under pi_diag, built diagonal by diagonal. Throws
/// std::invalid_argument when pt is not in the constrained variety.
GHatPoint lift_to_ghat(const FrameConfig& cfg, const GCalPoint& pt);

/// i-th space l_i + L_1^perp + ... + L_i^perp, of dimension beta_i.
PartialFlag psi_tilde(const FrameConfig& cfg, const GCalPoint& pt);

/// Tower product formulas as polynomials in the field size.
QPoly ghat_count_poly(const FrameConfig& cfg);
QPoly gcal_u_count_poly(const FrameConfig& cfg);

EnumReport enumerate_wflag_report(const FrameConfig& cfg, std::uint64_t budget = kDefaultBudget);
EnumReport lift_report(const FrameConfig& cfg, std::uint64_t budget = kDefaultBudget);
EnumReport verify_resolution(const FrameConfig& cfg, std::uint64_t budget = kDefaultBudget);

}  // namespace bioflag
