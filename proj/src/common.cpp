#include "pesol/common.hpp"

#include <algorithm>

namespace pesol {

std::vector<int> partition_class_map(int n, const std::vector<std::vector<int>>& parts) {
  std::vector<int> class_of(n, -1);
  for (size_t c = 0; c < parts.size(); ++c) {
    if (parts[c].empty()) throw std::invalid_argument("partition has an empty class");
    for (int x : parts[c]) {
      if (x < 0 || x >= n)
        throw std::invalid_argument("partition entry " + std::to_string(x) + " out of range");
      if (class_of[x] != -1)
        throw std::invalid_argument("partition repeats element " + std::to_string(x));
      class_of[x] = static_cast<int>(c);
    }
  }
  for (int x = 0; x < n; ++x)
    if (class_of[x] == -1)
      throw std::invalid_argument("partition misses element " + std::to_string(x));

  // renumber classes by minimal member
  std::vector<int> order(parts.size());
  for (size_t c = 0; c < parts.size(); ++c)
    order[c] = *std::min_element(parts[c].begin(), parts[c].end());
  std::vector<size_t> idx(parts.size());
  for (size_t c = 0; c < parts.size(); ++c) idx[c] = c;
  std::sort(idx.begin(), idx.end(), [&](size_t a, size_t b) { return order[a] < order[b]; });
  std::vector<int> rank(parts.size());
  for (size_t r = 0; r < idx.size(); ++r) rank[idx[r]] = static_cast<int>(r);
  for (int x = 0; x < n; ++x) class_of[x] = rank[class_of[x]];
  return class_of;
}

std::vector<std::vector<int>> normalize_partition(int n, std::vector<std::vector<int>> parts) {
  std::vector<int> class_of = partition_class_map(n, parts);
  std::vector<std::vector<int>> out(parts.size());
  for (int x = 0; x < n; ++x) out[class_of[x]].push_back(x);
  return out;  // ascending within classes, classes by minimal member
}

}  // namespace pesol
