#include "permsum/tree.hpp"

#include <sstream>

namespace permsum {

IncreasingTree increasing_tree(const Permutation& p) {
  const auto e = p.entries();
  const std::size_t n = e.size();
  IncreasingTree tree;
  tree.left.assign(n + 1, 0);
  tree.right.assign(n + 1, 0);
  // Cartesian-tree construction over the sequence with a monotone stack.
  std::vector<int> stack;
  for (int v : e) {
    int last_popped = 0;
    while (!stack.empty() && stack.back() > v) {
      last_popped = stack.back();
      stack.pop_back();
    }
    tree.left[static_cast<std::size_t>(v)] = last_popped;
    if (!stack.empty()) tree.right[static_cast<std::size_t>(stack.back())] = v;
    stack.push_back(v);
  }
  tree.root = stack.front();
  return tree;
}

std::string to_dot(const IncreasingTree& tree, const std::string& graph_name) {
  std::ostringstream out;
  out << "digraph " << graph_name << " {\n";
  out << "  node [shape=circle];\n";
  out << "  " << tree.root << ";\n";
  // Breadth-first so the output reads top-down.
  std::vector<int> queue{tree.root};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const int v = queue[i];
    const int l = tree.left[static_cast<std::size_t>(v)];
    const int r = tree.right[static_cast<std::size_t>(v)];
    if (l != 0) {
      out << "  " << v << " -> " << l << " [tailport=sw, label=\"L\"];\n";
      queue.push_back(l);
    }
    if (r != 0) {
      out << "  " << v << " -> " << r << " [tailport=se, label=\"R\"];\n";
      queue.push_back(r);
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace permsum
