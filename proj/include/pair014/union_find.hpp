#pragma once

#include <numeric>
#include <vector>

namespace pair014 {

/// Disjoint sets with path halving. unite() keeps the smaller index as the
/// root so representatives are canonical.
class UnionFind {
 public:
  explicit UnionFind(int n = 0) : parent_(static_cast<std::size_t>(n)) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  int find_const(int x) const {
    while (parent_[x] != x) x = parent_[x];
    return x;
  }

  /// Returns the surviving root.
  int unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return a;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
    return a;
  }

  int size() const { return static_cast<int>(parent_.size()); }

 private:
  std::vector<int> parent_;
};

}  // namespace pair014
