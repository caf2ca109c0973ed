// SPDX-License-Identifier: MIT
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rvp/expr.hpp"
#include "rvp/tree.hpp"

namespace rvp {

// Terminal claim: one exact value per leaf. Values on polar leaves are kept
// but quasi-surely irrelevant; the operations below ignore them where the
// definition says so.
struct Claim {
  std::vector<Rat> values;  // indexed by leaf index

  Claim() = default;
  explicit Claim(std::vector<Rat> v) : values(std::move(v)) {}
  static Claim constant(const ScenarioTree& tree, const Rat& c) {
    return Claim(std::vector<Rat>(tree.leaf_count(), c));
  }
  // Evaluates an expression in B, QV (and S if `asset` is given) per leaf.
  static Claim from_expr(const ScenarioTree& tree, const Expr& expr,
                         const std::vector<Rat>* asset_by_node = nullptr);

  Rat& operator[](int leaf) { return values[leaf]; }
  const Rat& operator[](int leaf) const { return values[leaf]; }
  int size() const { return static_cast<int>(values.size()); }
};

Claim operator+(const Claim& a, const Claim& b);
Claim operator-(const Claim& a, const Claim& b);
Claim operator*(const Rat& s, const Claim& a);

// Adapted process: one exact value per tree node.
struct NodeProcess {
  std::vector<Rat> values;  // indexed by node id

  NodeProcess() = default;
  explicit NodeProcess(std::vector<Rat> v) : values(std::move(v)) {}
  Rat& operator[](int node) { return values[node]; }
  const Rat& operator[](int node) const { return values[node]; }
};

// Per-node volatility choice. Adaptedness is structural: one value per node.
struct VolatilityControl {
  std::vector<Rat> sigma;  // indexed by node id; meaningful on non-terminal nodes
  Rat band_low, band_high;

  bool within_band() const;
};

// A probability measure on the leaves. Mutual singularity and polarity are
// support statements, so masses are stored per leaf rather than as branch
// kernels; kernels are recovered by conditioning.
class Prior {
 public:
  Prior() = default;
  Prior(std::string id, TreePtr tree, std::vector<Rat> leaf_mass,
        std::optional<VolatilityControl> control = std::nullopt);

  const std::string& id() const { return id_; }
  const TreePtr& tree() const { return tree_; }
  const std::vector<Rat>& leaf_mass() const { return leaf_mass_; }
  const Rat& mass(int leaf) const { return leaf_mass_[leaf]; }
  const std::optional<VolatilityControl>& control() const { return control_; }

  // Cumulative mass of the subtree below a node (probability of reaching it).
  const Rat& node_mass(int node_id) const { return node_mass_[node_id]; }
  bool reaches(int node_id) const { return node_mass_[node_id] > 0; }

  // One-step conditional branch distribution at a reached node:
  // pairs (child node id, conditional probability), zero-mass children omitted.
  std::vector<std::pair<int, Rat>> kernel(int node_id) const;

  std::vector<int> support() const;  // leaf indices with positive mass

  Rat expectation(const Claim& x) const;

 private:
  std::string id_;
  TreePtr tree_;
  std::vector<Rat> leaf_mass_;
  std::vector<Rat> node_mass_;
  std::optional<VolatilityControl> control_;
};

class PriorSet {
 public:
  PriorSet(TreePtr tree, std::vector<Prior> priors);

  const TreePtr& tree() const { return tree_; }
  const std::vector<Prior>& priors() const { return priors_; }
  const Prior& prior(int i) const { return priors_[i]; }
  int size() const { return static_cast<int>(priors_.size()); }
  int index_of(const std::string& id) const;  // -1 if absent

  // Leaves charged by at least one prior.
  std::vector<char> charged_leaves() const;

 private:
  TreePtr tree_;
  std::vector<Prior> priors_;
};

// Priors generated by adapted volatility controls with values in `grid`:
// one prior per adapted control on the reachable part of the tree, each step
// branching to +sigma / -sigma with probability branch_prob / 1-branch_prob.
// Controls with distinct constant values produce disjoint supports; this is
// checked and enforced.
PriorSet generate_prior_set(TreePtr tree, const Rat& sigma_low,
                            const Rat& sigma_high, std::vector<Rat> grid,
                            const Rat& branch_prob = Rat(1, 2));

struct UpperExpectation {
  Rat value;
  std::vector<int> attaining;  // indices of all argmax priors, no tie-breaking
};

UpperExpectation upper_expectation(const Claim& x, const PriorSet& ps);

struct CapacityNorm {
  Rat radicand;  // exact upper expectation of X^2
  double value;  // floating square root, presentation only
};

CapacityNorm capacity_norm(const Claim& x, const PriorSet& ps);

// X >= Y on every leaf charged by some prior (polar leaves ignored).
bool quasi_sure_geq(const Claim& x, const Claim& y, const PriorSet& ps);

// Leaves with zero mass under every prior.
std::vector<int> polar_leaves(const PriorSet& ps);

// Strictly positive mixture sum_i w_i P_i; its null leaves are exactly the
// polar leaves of the set.
Prior canonical_reference_measure(const PriorSet& ps, const std::vector<Rat>& weights);

// Finite analogue of countable reduction: priors that attain the upper
// expectation for no claim in `claims` (removing them changes no value on
// the list).
std::vector<int> redundant_priors(const PriorSet& ps, const std::vector<Claim>& claims);

}  // namespace rvp
