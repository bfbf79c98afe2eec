#pragma once

#include <cstddef>
#include <vector>

namespace bioflag {

/// Calls visit(choice) for every element of the cartesian product, the last
/// factor varying fastest. An empty factor list yields one empty choice.
template <typename T, typename Visit>
void for_each_product(const std::vector<std::vector<T>>& factors, Visit&& visit) {
  for (const auto& f : factors)
    if (f.empty()) return;
  std::vector<std::size_t> idx(factors.size(), 0);
  std::vector<T> choice;
  choice.reserve(factors.size());
  for (const auto& f : factors) choice.push_back(f.front());
  while (true) {
    visit(static_cast<const std::vector<T>&>(choice));
    std::size_t i = factors.size();
    while (i > 0) {
      --i;
      if (++idx[i] < factors[i].size()) {
        choice[i] = factors[i][idx[i]];
        break;
      }
      idx[i] = 0;
      choice[i] = factors[i].front();
      if (i == 0) return;
    }
    if (factors.empty()) return;
  }
}

}  // namespace bioflag
