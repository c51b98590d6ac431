#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace pesol {

/// Signals that a structural guarantee maintained by the library itself was
/// observed to fail. Well-formed caller input can never trigger this.
inline void internal_check(bool cond, const std::string& what) {
  if (!cond) throw std::logic_error("internal invariant violated: " + what);
}

/// Checks that `parts` is a partition of {0..n-1}; returns the class id of
/// every point, with classes numbered by minimal member.
std::vector<int> partition_class_map(int n, const std::vector<std::vector<int>>& parts);

/// Sorts each class ascending and orders classes by minimal member.
std::vector<std::vector<int>> normalize_partition(int n, std::vector<std::vector<int>> parts);

}  // namespace pesol
