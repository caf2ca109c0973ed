// SPDX-License-Identifier: MIT
#include "rvp/tree.hpp"

#include <algorithm>
#include <stdexcept>

namespace rvp {

ScenarioTree ScenarioTree::uniform(int depth, std::vector<Rat> branch_values,
                                   std::vector<Rat> dates) {
  if (depth < 1) throw std::invalid_argument("tree depth must be >= 1");
  if (branch_values.empty())
    throw std::invalid_argument("tree needs at least one branch value");
  std::sort(branch_values.begin(), branch_values.end());
  branch_values.erase(std::unique(branch_values.begin(), branch_values.end()),
                      branch_values.end());
  if (dates.empty()) {
    for (int t = 0; t <= depth; ++t) dates.emplace_back(t);
  }
  if (static_cast<int>(dates.size()) != depth + 1)
    throw std::invalid_argument("dates must list depth+1 times");
  for (size_t i = 1; i < dates.size(); ++i)
    if (!(dates[i - 1] < dates[i]))
      throw std::invalid_argument("dates must be strictly increasing");

  ScenarioTree tree;
  tree.depth_ = depth;
  tree.dates_ = std::move(dates);
  tree.branch_values_ = branch_values;
  tree.levels_.resize(depth + 1);

  Node root;
  root.increment = 0;
  root.noise = 0;
  root.qv = 0;
  tree.nodes_.push_back(root);
  tree.levels_[0].push_back(0);

  for (int level = 0; level < depth; ++level) {
    for (int id : tree.levels_[level]) {
      tree.nodes_[id].first_child = static_cast<int>(tree.nodes_.size());
      tree.nodes_[id].child_count = static_cast<int>(branch_values.size());
      for (const Rat& inc : branch_values) {
        Node child;
        child.parent = id;
        child.level = level + 1;
        child.increment = inc;
        child.noise = tree.nodes_[id].noise + inc;
        child.qv = tree.nodes_[id].qv + inc * inc;
        tree.levels_[level + 1].push_back(static_cast<int>(tree.nodes_.size()));
        tree.nodes_.push_back(child);
      }
    }
  }

  tree.leaf_index_.assign(tree.nodes_.size(), -1);
  const auto& lv = tree.levels_[depth];
  for (size_t i = 0; i < lv.size(); ++i)
    tree.leaf_index_[lv[i]] = static_cast<int>(i);
  return tree;
}

int ScenarioTree::child_by_increment(int node_id, const Rat& inc) const {
  const Node& n = nodes_[node_id];
  for (int c = n.first_child; c < n.first_child + n.child_count; ++c)
    if (nodes_[c].increment == inc) return c;
  return -1;
}

std::vector<int> ScenarioTree::subtree_leaves(int node_id) const {
  std::vector<int> stack{node_id}, out;
  while (!stack.empty()) {
    int id = stack.back();
    stack.pop_back();
    const Node& n = nodes_[id];
    if (n.level == depth_) {
      out.push_back(leaf_index_[id]);
      continue;
    }
    for (int c = n.first_child; c < n.first_child + n.child_count; ++c)
      stack.push_back(c);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace rvp
