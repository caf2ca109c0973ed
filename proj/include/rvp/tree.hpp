// SPDX-License-Identifier: MIT
#pragma once

#include <memory>
#include <vector>

#include "rvp/rational.hpp"

namespace rvp {

// Finite non-recombining lattice for the noise process B. Each node keeps
// the cumulative noise value and the cumulative quadratic variation (sum of
// squared increments along the path), so leaves are identified by the full
// increment history. Immutable after construction.
class ScenarioTree {
 public:
  struct Node {
    int parent = -1;        // -1 at the root
    int level = 0;          // time index, 0..depth
    int first_child = -1;   // index into nodes_, children are contiguous
    int child_count = 0;
    Rat increment;          // noise increment on the edge from the parent
    Rat noise;              // B at this node
    Rat qv;                 // <B> at this node
  };

  // One child per branch value at every non-terminal node. `dates` defaults
  // to 0,1,..,depth.
  static ScenarioTree uniform(int depth, std::vector<Rat> branch_values,
                              std::vector<Rat> dates = {});

  int depth() const { return depth_; }
  const std::vector<Rat>& dates() const { return dates_; }
  const std::vector<Node>& nodes() const { return nodes_; }
  const Node& node(int id) const { return nodes_[id]; }
  const std::vector<int>& level_nodes(int level) const { return levels_[level]; }
  const std::vector<int>& leaves() const { return levels_[depth_]; }
  int leaf_count() const { return static_cast<int>(leaves().size()); }
  int node_count() const { return static_cast<int>(nodes_.size()); }

  // Position of a node within the leaf list; -1 for interior nodes.
  int leaf_index(int node_id) const { return leaf_index_[node_id]; }
  int leaf_node(int leaf_idx) const { return leaves()[leaf_idx]; }

  // Child of `node_id` whose edge increment equals `inc`; -1 if absent.
  int child_by_increment(int node_id, const Rat& inc) const;

  // Leaves of the subtree rooted at `node_id`, as leaf indices.
  std::vector<int> subtree_leaves(int node_id) const;

  bool is_leaf(int node_id) const { return nodes_[node_id].level == depth_; }

  const std::vector<Rat>& branch_values() const { return branch_values_; }

 private:
  int depth_ = 0;
  std::vector<Rat> dates_;
  std::vector<Rat> branch_values_;
  std::vector<Node> nodes_;
  std::vector<std::vector<int>> levels_;
  std::vector<int> leaf_index_;
};

using TreePtr = std::shared_ptr<const ScenarioTree>;

}  // namespace rvp
