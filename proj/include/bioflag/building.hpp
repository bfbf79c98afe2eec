#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "bioflag/permutation.hpp"

namespace bioflag {

/// A position (row, column) of the rank matrix, both 1-based.
struct Label {
  unsigned row = 0;
  unsigned col = 0;

  friend bool operator==(const Label&, const Label&) = default;
  friend auto operator<=>(const Label&, const Label&) = default;
};

/// floors[i-1] holds the labels on level i, sorted by row, for i = 1..n-1.
struct Building {
  std::vector<std::vector<Label>> floors;

  std::vector<std::size_t> counts() const;
  std::size_t total() const;
};

/// Places every graph label (i, w(i)) on its level, opens apartments from
/// consecutive pairs on each floor, and drops the top level.
Building build_building(const Permutation& w);
std::vector<std::size_t> nonredundant_counts(const Permutation& w);

struct RankDedup {
  /// Entries of value i in the full rank matrix, for i = 1..n-1.
  std::vector<std::size_t> raw_counts;
  /// Surviving positions of value i (row-major order), for i = 1..n-1.
  std::vector<std::vector<Label>> survivors;

  std::vector<std::size_t> counts() const;
};

/// Deletes entries 0 and n and every entry repeating an earlier value in its
/// row or column, scanning row by row from the top.
RankDedup dedup_rank_matrix(const Permutation& w);

struct FactReport {
  bool unique_per_line = true;   // (1) first half
  bool ne_sw_position = true;    // (1) second half
  bool neighbour_steps = true;   // (2)
  bool total_order = true;       // (3)
  bool common_neighbour = true;  // (4)
  bool graph_survival = true;    // (5)
  std::vector<std::string> failures;

  bool all() const {
    return unique_per_line && ne_sw_position && neighbour_steps && total_order &&
           common_neighbour && graph_survival;
  }
};

/// Checks the structural facts about surviving positions.
FactReport check_building_facts(const Permutation& w);

}  // namespace bioflag
