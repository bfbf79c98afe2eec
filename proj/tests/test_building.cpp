#include <algorithm>
#include <numeric>

#include "bioflag/building.hpp"
#include "doctest.h"

using namespace bioflag;

namespace {

const Permutation kSigma = Permutation::parse("4,8,6,2,7,3,1,5");

std::size_t total(const std::vector<std::size_t>& v) {
  return std::accumulate(v.begin(), v.end(), std::size_t{0});
}

}  // namespace

TEST_CASE("sigma building") {
  auto b = build_building(kSigma);
  CHECK(b.counts() == std::vector<std::size_t>{3, 5, 4, 4, 4, 3, 2});
  CHECK(b.total() == 25);
  CHECK(b.floors[0] == std::vector<Label>{{1, 4}, {4, 2}, {7, 1}});
  CHECK(b.floors[1] == std::vector<Label>{{2, 8}, {3, 6}, {4, 4}, {6, 3}, {7, 2}});
  CHECK(b.floors[4] == std::vector<Label>{{5, 8}, {6, 7}, {7, 6}, {8, 5}});
  CHECK(b.floors[6] == std::vector<Label>{{7, 8}, {8, 7}});

  auto dd = dedup_rank_matrix(kSigma);
  CHECK(dd.raw_counts == std::vector<std::size_t>{18, 10, 8, 6, 4, 3, 2});
  CHECK(dd.counts() == std::vector<std::size_t>{3, 5, 4, 4, 4, 3, 2});
}

TEST_CASE("small buildings") {
  auto id = build_building(Permutation::identity(4));
  CHECK(id.counts() == std::vector<std::size_t>{1, 1, 1});
  CHECK(id.floors[1] == std::vector<Label>{{2, 2}});
  CHECK(build_building(Permutation::parse("2,1")).counts() == std::vector<std::size_t>{2});
  CHECK(build_building(Permutation::parse("2,1")).floors[0] == std::vector<Label>{{1, 2}, {2, 1}});
  CHECK(dedup_rank_matrix(Permutation::identity(3)).counts() == std::vector<std::size_t>{1, 1});
  CHECK(build_building(Permutation::identity(1)).floors.empty());
}

TEST_CASE("building equals the rank matrix dedup for n <= 6") {
  for (unsigned n = 2; n <= 6; ++n)
    for (const auto& w : all_permutations(n)) {
      auto b = build_building(w);
      auto dd = dedup_rank_matrix(w);
      REQUIRE(b.floors.size() == n - 1);
      for (unsigned i = 1; i < n; ++i) {
        auto surv = dd.survivors[i - 1];
        std::sort(surv.begin(), surv.end());
        CHECK(b.floors[i - 1] == surv);
        CHECK(!b.floors[i - 1].empty());
        for (const auto& l : b.floors[i - 1]) CHECK((l.row >= i && l.col >= i));
      }
      CHECK(b.total() == w.length() + n - 1);
      CHECK(total(dd.counts()) == w.length() + n - 1);
    }
}

TEST_CASE("building facts for n <= 6") {
  for (unsigned n = 2; n <= 6; ++n)
    for (const auto& w : all_permutations(n)) {
      auto rep = check_building_facts(w);
      INFO(w.to_string() << " " << (rep.failures.empty() ? "" : rep.failures.front()));
      CHECK(rep.all());
    }
  CHECK(check_building_facts(kSigma).all());
}
