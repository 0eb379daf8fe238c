#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include "permgrid/perm.hpp"

namespace testutil {

inline std::vector<permgrid::Permutation> all_permutations(int n) {
  std::vector<int> vals(static_cast<std::size_t>(n));
  std::iota(vals.begin(), vals.end(), 1);
  std::vector<permgrid::Permutation> out;
  if (n == 0) {
    out.emplace_back();
    return out;
  }
  do {
    out.emplace_back(std::vector<int>(vals));
  } while (std::next_permutation(vals.begin(), vals.end()));
  return out;
}

// Independent containment oracle: walk every index subset of size k.
inline bool contains_oracle(const permgrid::Permutation& pattern,
                            const permgrid::Permutation& perm) {
  const int k = pattern.size();
  const int n = perm.size();
  if (k == 0) return true;
  if (k > n) return false;
  std::vector<int> idx(static_cast<std::size_t>(k));
  std::iota(idx.begin(), idx.end(), 1);
  for (;;) {
    bool iso = true;
    for (int a = 1; a <= k && iso; ++a) {
      for (int b = a + 1; b <= k && iso; ++b) {
        iso = (pattern.at(a) < pattern.at(b)) ==
              (perm.at(idx[static_cast<std::size_t>(a - 1)]) <
               perm.at(idx[static_cast<std::size_t>(b - 1)]));
      }
    }
    if (iso) return true;
    int i = k - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - (k - 1 - i)) --i;
    if (i < 0) return false;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) {
      idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
}

// Catalan numbers by the convolution recurrence.
inline std::vector<std::uint64_t> catalan_upto(int n) {
  std::vector<std::uint64_t> c(static_cast<std::size_t>(n) + 1, 0);
  c[0] = 1;
  for (int m = 1; m <= n; ++m) {
    for (int i = 0; i < m; ++i) {
      c[static_cast<std::size_t>(m)] +=
          c[static_cast<std::size_t>(i)] * c[static_cast<std::size_t>(m - 1 - i)];
    }
  }
  return c;
}

}  // namespace testutil
