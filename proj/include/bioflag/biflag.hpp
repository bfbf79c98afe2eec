#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "bioflag/budget.hpp"
#include "bioflag/permutation.hpp"
#include "bioflag/report.hpp"
#include "bioflag/subspace.hpp"

namespace bioflag {

/// F_i = span(e_1..e_i).
Subspace standard_F(PrimeField f, std::size_t n, std::size_t i);
/// G^i = span(e_{i+1}..e_n).
Subspace standard_G(PrimeField f, std::size_t n, std::size_t i);

/// l_1 c ... c l_n = E, stored at indices 0..n-1.
using CompleteFlag = std::vector<Subspace>;

/// Grid l_{p,q}, 0 <= p, q <= n, with zero row and column 0.
class GridPoint {
 public:
  GridPoint(PrimeField f, unsigned n);

  unsigned n() const { return n_; }
  const Subspace& at(unsigned p, unsigned q) const { return cells_[p * (n_ + 1) + q]; }
  Subspace& at(unsigned p, unsigned q) { return cells_[p * (n_ + 1) + q]; }

  friend bool operator==(const GridPoint&, const GridPoint&) = default;
  friend auto operator<=>(const GridPoint& a, const GridPoint& b) { return a.cells_ <=> b.cells_; }

 private:
  unsigned n_;
  std::vector<Subspace> cells_;
};

/// Dimensions match the rank matrix and both inclusion families hold.
bool is_bioriented_flag(const GridPoint& pt, const Permutation& w);

/// Product of the per-cell Grassmannian counts met by the row-by-row search.
double flw_estimate(const Permutation& w, unsigned p, bool pin_bottom);

using GridVisitor = std::function<void(const GridPoint&)>;
/// Visits Fl^w (pin_bottom = false) or its subset with row n equal to F_*
/// (pin_bottom = true), filling rows n..1, each left to right.
void for_each_grid(const Permutation& w, PrimeField f, bool pin_bottom,
                   std::uint64_t budget, const GridVisitor& visit);
std::vector<GridPoint> enumerate_flw(const Permutation& w, PrimeField f,
                                     std::uint64_t budget = kDefaultBudget);
std::vector<GridPoint> enumerate_shat(const Permutation& w, PrimeField f,
                                      std::uint64_t budget = kDefaultBudget);

/// Last column l_{1,n}, ..., l_{n,n}.
CompleteFlag project_to_flag(const GridPoint& pt);

/// Every complete flag of GF(p)^n.
std::vector<CompleteFlag> all_complete_flags(PrimeField f, unsigned n,
                                             std::uint64_t budget = kDefaultBudget);

enum class SchubertMode { cell, closed };
/// Complete flags with dim(l_p n F_q) equal to (cell) or at least (closed) d_pq.
std::vector<CompleteFlag> schubert_flag_points(const Permutation& w, PrimeField f,
                                               SchubertMode mode,
                                               std::uint64_t budget = kDefaultBudget);

/// The grid l_{p,q} = l_p n F_q attached to a complete flag.
GridPoint reconstruct_grid(const CompleteFlag& flag);

EnumReport enumerate_biflag_report(const Permutation& w, PrimeField f,
                                   std::uint64_t budget = kDefaultBudget);
EnumReport verify_flres(const Permutation& w, PrimeField f,
                        std::uint64_t budget = kDefaultBudget);

}  // namespace bioflag
