#pragma once

#include <cstdint>
#include <vector>

#include "bioflag/biflag.hpp"
#include "bioflag/permutation.hpp"
#include "bioflag/report.hpp"

namespace bioflag {

/// V_1, ..., V_l with dim V_j = d_j, stored at indices 0..l-1.
using BSPoint = std::vector<Subspace>;

/// Space a reference resolves to: an earlier V_j or a standard F_i.
const Subspace& resolve_ref(const BSRef& ref, const BSPoint& pt, const std::vector<Subspace>& F);

/// All incidences V_left(j) c V_j c V_right(j) hold with the right dimensions.
bool is_bs_point(const BSPoint& pt, const std::vector<unsigned>& letters, unsigned n);

/// Every point for the given word, choosing V_1, V_2, ... in order.
std::vector<BSPoint> enumerate_bs(const std::vector<unsigned>& letters, unsigned n, PrimeField f,
                                  std::uint64_t budget = kDefaultBudget);

/// (V_p(1), ..., V_p(n-1), E) with F_i standing in for letters that never occur.
CompleteFlag bs_projection(const BSPoint& pt, const ReducedWord& word, PrimeField f);

/// Reads the bubblesort coordinates off a grid: row m-1 contributes the cells
/// in the columns to the right of w(m) among those not yet removed.
BSPoint shat_to_bs(const GridPoint& pt, const Permutation& w);

EnumReport enumerate_bs_report(const Permutation& w, PrimeField f,
                               std::uint64_t budget = kDefaultBudget);
EnumReport bbs_iso(const Permutation& w, PrimeField f, std::uint64_t budget = kDefaultBudget);

/// Projection of the points onto the first block against the chain set
/// F_{w(n)-1} c W_1 c ... c W_m, dim W_j = w(n)+j-1, W_j c F_{w(n)+j}.
EnumReport verify_first_block(const Permutation& w, PrimeField f,
                              std::uint64_t budget = kDefaultBudget);

}  // namespace bioflag
