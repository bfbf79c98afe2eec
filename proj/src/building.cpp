#include "bioflag/building.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace bioflag {

std::vector<std::size_t> Building::counts() const {
  std::vector<std::size_t> c;
  for (const auto& f : floors) c.push_back(f.size());
  return c;
}

std::size_t Building::total() const {
  auto c = counts();
  return std::accumulate(c.begin(), c.end(), std::size_t{0});
}

Building build_building(const Permutation& w) {
  const unsigned n = w.n();
  const auto d = rank_matrix(w);
  // A graph label sits one level above its number of smaller labels.
  std::vector<std::set<Label>> level(n + 1);
  for (unsigned i = 1; i <= n; ++i) level[d[i][w(i)]].insert({i, w(i)});
  for (unsigned i = 2; i <= n; ++i) {
    const std::vector<Label> below(level[i - 1].begin(), level[i - 1].end());
    for (std::size_t t = 1; t < below.size(); ++t)
      level[i].insert({std::max(below[t - 1].row, below[t].row),
                       std::max(below[t - 1].col, below[t].col)});
  }
  Building b;
  for (unsigned i = 1; i < n; ++i) b.floors.emplace_back(level[i].begin(), level[i].end());
  return b;
}

std::vector<std::size_t> nonredundant_counts(const Permutation& w) {
  return build_building(w).counts();
}

std::vector<std::size_t> RankDedup::counts() const {
  std::vector<std::size_t> c;
  for (const auto& s : survivors) c.push_back(s.size());
  return c;
}

RankDedup dedup_rank_matrix(const Permutation& w) {
  const unsigned n = w.n();
  const auto d = rank_matrix(w);
  RankDedup out;
  out.raw_counts.assign(n > 0 ? n - 1 : 0, 0);
  out.survivors.assign(n > 0 ? n - 1 : 0, {});
  for (unsigned p = 1; p <= n; ++p) {
    for (unsigned q = 1; q <= n; ++q) {
      const unsigned v = d[p][q];
      if (v == 0 || v == n) continue;
      ++out.raw_counts[v - 1];
      bool repeat = false;
      for (unsigned c = 1; c < q && !repeat; ++c) repeat = d[p][c] == v;
      for (unsigned r = 1; r < p && !repeat; ++r) repeat = d[r][q] == v;
      if (!repeat) out.survivors[v - 1].push_back({p, q});
    }
  }
  return out;
}

namespace {

std::string label_str(const Label& l) {
  return "(" + std::to_string(l.row) + "," + std::to_string(l.col) + ")";
}

}  // namespace

FactReport check_building_facts(const Permutation& w) {
  const unsigned n = w.n();
  const auto d = rank_matrix(w);
  const auto dd = dedup_rank_matrix(w);
  FactReport rep;
  auto fail = [&](bool& flag, const std::string& msg) {
    flag = false;
    rep.failures.push_back(msg);
  };

  // Value of the surviving position at (p, q), 0 when none.
  std::vector<std::vector<unsigned>> surv(n + 2, std::vector<unsigned>(n + 2, 0));
  for (unsigned v = 1; v < n; ++v)
    for (const auto& l : dd.survivors[v - 1]) surv[l.row][l.col] = v;

  for (unsigned v = 1; v < n; ++v) {
    const auto& s = dd.survivors[v - 1];
    for (std::size_t a = 0; a < s.size(); ++a)
      for (std::size_t b = a + 1; b < s.size(); ++b) {
        if (s[a].row == s[b].row || s[a].col == s[b].col)
          fail(rep.unique_per_line, "value " + std::to_string(v) + " repeats on a line at " +
                                        label_str(s[a]) + " " + label_str(s[b]));
        const bool ne = s[b].row < s[a].row && s[b].col > s[a].col;
        const bool sw = s[b].row > s[a].row && s[b].col < s[a].col;
        if (!ne && !sw)
          fail(rep.ne_sw_position, "value " + std::to_string(v) + " not in NE/SW position: " +
                                       label_str(s[a]) + " " + label_str(s[b]));
      }

    // Order along the anti-diagonal: increasing row must mean decreasing column.
    std::vector<Label> sorted = s;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t t = 1; t < sorted.size(); ++t)
      if (!(sorted[t].col < sorted[t - 1].col))
        fail(rep.total_order, "value " + std::to_string(v) + " not totally ordered");

    for (const auto& l : s) {
      // Nearest surviving neighbours along the row and column.
      auto scan = [&](int dr, int dc) -> unsigned {
        int r = static_cast<int>(l.row) + dr, c = static_cast<int>(l.col) + dc;
        while (r >= 1 && c >= 1 && r <= static_cast<int>(n) && c <= static_cast<int>(n)) {
          if (surv[r][c] != 0) return surv[r][c];
          r += dr;
          c += dc;
        }
        return 0;
      };
      const unsigned north = scan(-1, 0), west = scan(0, -1);
      const unsigned south = scan(1, 0), east = scan(0, 1);
      if ((north != 0 && north != v - 1) || (west != 0 && west != v - 1) ||
          (south != 0 && south != v + 1) || (east != 0 && east != v + 1))
        fail(rep.neighbour_steps, "neighbour step violated at " + label_str(l));
    }

    for (std::size_t t = 1; t < sorted.size(); ++t) {
      const Label first = sorted[t], second = sorted[t - 1];  // first lies SW of second
      const Label common{std::max(first.row, second.row), std::max(first.col, second.col)};
      if (v + 1 >= n) {
        if (d[common.row][common.col] != v + 1)
          fail(rep.common_neighbour, "common neighbour value at " + label_str(common));
        continue;
      }
      bool ok = surv[common.row][common.col] == v + 1;
      for (unsigned c = first.col + 1; ok && c < common.col; ++c) ok = surv[first.row][c] == 0;
      for (unsigned r = second.row + 1; ok && r < common.row; ++r) ok = surv[r][second.col] == 0;
      if (!ok)
        fail(rep.common_neighbour, "no common neighbour for " + label_str(first) + " " +
                                       label_str(second));
    }
  }

  for (unsigned i = 1; i <= n; ++i) {
    const unsigned v = d[i][w(i)];
    if (v == n) continue;  // only (n, n), which happens exactly when w(n) = n
    if (surv[i][w(i)] != v)
      fail(rep.graph_survival, "graph position " + label_str({i, w(i)}) + " eliminated");
  }
  return rep;
}

}  // namespace bioflag
