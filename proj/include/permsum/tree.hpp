#pragma once

#include <string>
#include <vector>

#include "permsum/permutation.hpp"

namespace permsum {

// Increasing binary tree of a permutation: the minimum is the root, the
// entries to its left form the left subtree and those to its right the
// right subtree, recursively. Children are 0 when absent.
struct IncreasingTree {
  int root = 0;
  std::vector<int> left;   // indexed by entry value, size n + 1
  std::vector<int> right;
};

IncreasingTree increasing_tree(const Permutation& p);

// Graphviz DOT text; left/right children are told apart by edge ports.
std::string to_dot(const IncreasingTree& tree, const std::string& graph_name = "increasing_tree");

}  // namespace permsum
