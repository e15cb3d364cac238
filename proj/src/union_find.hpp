#pragma once

#include <numeric>
#include <unordered_map>
#include <vector>

namespace knitweave::detail {

class UnionFind {
 public:
  explicit UnionFind(int n = 0) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
    return true;
  }

  int size() const { return static_cast<int>(parent_.size()); }

 private:
  std::vector<int> parent_;
};

/// Maps arbitrary integer labels to dense indices in first-seen order.
class DenseIndex {
 public:
  int operator()(int label) {
    auto [it, inserted] = index_.try_emplace(label, static_cast<int>(labels_.size()));
    if (inserted) labels_.push_back(label);
    return it->second;
  }
  int at(int label) const { return index_.at(label); }
  int size() const { return static_cast<int>(labels_.size()); }
  int label(int index) const { return labels_[index]; }

 private:
  std::unordered_map<int, int> index_;
  std::vector<int> labels_;
};

}  // namespace knitweave::detail
