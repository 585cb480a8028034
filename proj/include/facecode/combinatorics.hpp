#pragma once

#include <cstdint>
#include <type_traits>
#include <vector>

namespace facecode {

/// Calls fn(indices) for every k-subset of {0..n-1}, in lexicographic order.
/// Returning false from fn stops the iteration.
template <typename Fn>
void for_each_combination(int n, int k, Fn&& fn) {
  if (k < 0 || k > n) return;
  std::vector<int> idx(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
  while (true) {
    if constexpr (std::is_same_v<decltype(fn(idx)), bool>) {
      if (!fn(idx)) return;
    } else {
      fn(idx);
    }
    int i = k;
    while (i > 0 && idx[static_cast<std::size_t>(i - 1)] == n - k + (i - 1)) --i;
    if (i == 0) return;
    ++idx[static_cast<std::size_t>(i - 1)];
    for (int j = i; j < k; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
}

inline std::int64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::int64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace facecode
