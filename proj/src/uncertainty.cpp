// SPDX-License-Identifier: MIT
#include "rvp/uncertainty.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace rvp {

Claim Claim::from_expr(const ScenarioTree& tree, const Expr& expr,
                       const std::vector<Rat>* asset_by_node) {
  std::vector<Rat> vals;
  vals.reserve(tree.leaf_count());
  for (int leaf_node : tree.leaves()) {
    const auto& n = tree.node(leaf_node);
    std::map<std::string, Rat> env{{"B", n.noise}, {"QV", n.qv}};
    if (asset_by_node) env["S"] = (*asset_by_node)[leaf_node];
    vals.push_back(expr.eval_rat(env));
  }
  return Claim(std::move(vals));
}

Claim operator+(const Claim& a, const Claim& b) {
  if (a.size() != b.size()) throw std::invalid_argument("claim size mismatch");
  Claim out = a;
  for (int i = 0; i < a.size(); ++i) out.values[i] += b.values[i];
  return out;
}

Claim operator-(const Claim& a, const Claim& b) {
  if (a.size() != b.size()) throw std::invalid_argument("claim size mismatch");
  Claim out = a;
  for (int i = 0; i < a.size(); ++i) out.values[i] -= b.values[i];
  return out;
}

Claim operator*(const Rat& s, const Claim& a) {
  Claim out = a;
  for (auto& v : out.values) v *= s;
  return out;
}

bool VolatilityControl::within_band() const {
  for (const Rat& s : sigma)
    if (s < band_low || s > band_high) return false;
  return true;
}

Prior::Prior(std::string id, TreePtr tree, std::vector<Rat> leaf_mass,
             std::optional<VolatilityControl> control)
    : id_(std::move(id)),
      tree_(std::move(tree)),
      leaf_mass_(std::move(leaf_mass)),
      control_(std::move(control)) {
  if (static_cast<int>(leaf_mass_.size()) != tree_->leaf_count())
    throw std::invalid_argument("prior must assign a mass to every leaf");
  Rat total = 0;
  for (const Rat& m : leaf_mass_) {
    if (m < 0) throw std::invalid_argument("negative leaf mass in prior " + id_);
    total += m;
  }
  if (total != 1)
    throw std::invalid_argument("leaf masses of prior " + id_ + " sum to " +
                                to_string(total) + ", not 1");
  // Accumulate node masses bottom-up.
  node_mass_.assign(tree_->node_count(), Rat(0));
  for (int leaf = 0; leaf < tree_->leaf_count(); ++leaf)
    node_mass_[tree_->leaf_node(leaf)] = leaf_mass_[leaf];
  for (int level = tree_->depth(); level > 0; --level)
    for (int id_node : tree_->level_nodes(level))
      node_mass_[tree_->node(id_node).parent] += node_mass_[id_node];
}

std::vector<std::pair<int, Rat>> Prior::kernel(int node_id) const {
  const auto& n = tree_->node(node_id);
  if (!reaches(node_id))
    throw std::invalid_argument("kernel requested at a node prior " + id_ +
                                " never reaches");
  std::vector<std::pair<int, Rat>> out;
  for (int c = n.first_child; c < n.first_child + n.child_count; ++c)
    if (node_mass_[c] > 0) out.emplace_back(c, node_mass_[c] / node_mass_[node_id]);
  return out;
}

std::vector<int> Prior::support() const {
  std::vector<int> out;
  for (int i = 0; i < static_cast<int>(leaf_mass_.size()); ++i)
    if (leaf_mass_[i] > 0) out.push_back(i);
  return out;
}

Rat Prior::expectation(const Claim& x) const {
  if (x.size() != static_cast<int>(leaf_mass_.size()))
    throw std::invalid_argument("claim not defined on all leaves");
  Rat acc = 0;
  for (int i = 0; i < x.size(); ++i)
    if (leaf_mass_[i] > 0) acc += leaf_mass_[i] * x.values[i];
  return acc;
}

PriorSet::PriorSet(TreePtr tree, std::vector<Prior> priors)
    : tree_(std::move(tree)), priors_(std::move(priors)) {
  if (priors_.empty()) throw std::invalid_argument("prior set must be nonempty");
  for (const Prior& p : priors_)
    if (p.tree().get() != tree_.get())
      throw std::invalid_argument("all priors must live on the same tree");
}

int PriorSet::index_of(const std::string& id) const {
  for (int i = 0; i < size(); ++i)
    if (priors_[i].id() == id) return i;
  return -1;
}

std::vector<char> PriorSet::charged_leaves() const {
  std::vector<char> charged(tree_->leaf_count(), 0);
  for (const Prior& p : priors_)
    for (int leaf = 0; leaf < tree_->leaf_count(); ++leaf)
      if (p.mass(leaf) > 0) charged[leaf] = 1;
  return charged;
}

namespace {

// Depth-first enumeration of adapted controls on the reachable part of the
// tree. All nodes of `frontier` sit on one level; sigma choices for the
// whole level are fixed before advancing, so each emitted measure appears
// exactly once.
void enumerate_controls(const ScenarioTree& tree, const std::vector<Rat>& grid,
                        const Rat& up_prob, const std::vector<int>& frontier,
                        size_t idx, std::vector<Rat>& sigma, std::vector<Rat>& mass,
                        std::vector<std::pair<std::vector<Rat>, std::vector<Rat>>>& out) {
  if (idx < frontier.size()) {
    for (const Rat& s : grid) {
      sigma[frontier[idx]] = s;
      enumerate_controls(tree, grid, up_prob, frontier, idx + 1, sigma, mass, out);
    }
    return;
  }
  std::vector<int> next;
  next.reserve(frontier.size() * 2);
  for (int node : frontier) {
    int up = tree.child_by_increment(node, sigma[node]);
    int down = tree.child_by_increment(node, -sigma[node]);
    mass[up] = mass[node] * up_prob;
    mass[down] = mass[node] * (1 - up_prob);
    next.push_back(up);
    next.push_back(down);
  }
  if (tree.node(next.front()).level < tree.depth()) {
    enumerate_controls(tree, grid, up_prob, next, 0, sigma, mass, out);
    return;
  }
  std::vector<Rat> leaf_mass(tree.leaf_count(), Rat(0));
  for (int node : next) leaf_mass[tree.leaf_index(node)] = mass[node];
  // Snapshot the control: current sigma on reached nodes, grid.front()
  // canonically elsewhere (unreachable choices cannot affect the measure).
  std::vector<Rat> ctrl(tree.node_count(), grid.front());
  std::vector<int> walk{0};
  while (!walk.empty()) {
    int node = walk.back();
    walk.pop_back();
    if (tree.is_leaf(node)) continue;
    ctrl[node] = sigma[node];
    walk.push_back(tree.child_by_increment(node, sigma[node]));
    walk.push_back(tree.child_by_increment(node, -sigma[node]));
  }
  out.emplace_back(std::move(leaf_mass), std::move(ctrl));
}

}  // namespace

PriorSet generate_prior_set(TreePtr tree, const Rat& sigma_low,
                            const Rat& sigma_high, std::vector<Rat> grid,
                            const Rat& branch_prob) {
  if (grid.empty()) throw std::invalid_argument("sigma grid is empty");
  if (!(0 < sigma_low && sigma_low <= sigma_high))
    throw std::invalid_argument("band must satisfy 0 < sigma_low <= sigma_high");
  if (!(branch_prob > 0 && branch_prob < 1))
    throw std::invalid_argument("branch probability must lie in (0,1)");
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  for (const Rat& s : grid)
    if (s < sigma_low || s > sigma_high)
      throw std::invalid_argument("grid value " + to_string(s) + " outside band");
  // Every non-terminal node must offer the +/-sigma branches.
  for (int level = 0; level < tree->depth(); ++level)
    for (int node : tree->level_nodes(level))
      for (const Rat& s : grid)
        if (tree->child_by_increment(node, s) < 0 ||
            tree->child_by_increment(node, -s) < 0)
          throw std::invalid_argument(
              "tree too small to embed +/-" + to_string(s) + " increments");

  std::vector<std::pair<std::vector<Rat>, std::vector<Rat>>> enumerated;
  std::vector<int> frontier{0};
  std::vector<Rat> sigma(tree->node_count(), Rat(0));
  std::vector<Rat> mass(tree->node_count(), Rat(0));
  mass[0] = 1;
  enumerate_controls(*tree, grid, branch_prob, frontier, 0, sigma, mass, enumerated);

  std::vector<Prior> priors;
  priors.reserve(enumerated.size());
  int k = 1;
  for (auto& [leaf_mass, sig] : enumerated) {
    VolatilityControl ctrl;
    ctrl.band_low = sigma_low;
    ctrl.band_high = sigma_high;
    ctrl.sigma = std::move(sig);
    priors.emplace_back("P" + std::to_string(k++), tree, std::move(leaf_mass),
                        std::move(ctrl));
  }

  // Constant controls give mutually singular priors: verify support disjointness.
  for (size_t a = 0; a < priors.size(); ++a) {
    for (size_t b = a + 1; b < priors.size(); ++b) {
      const auto& ca = priors[a].control()->sigma;
      const auto& cb = priors[b].control()->sigma;
      bool const_a = std::all_of(ca.begin(), ca.end(), [&](const Rat& s) { return s == ca[0]; });
      bool const_b = std::all_of(cb.begin(), cb.end(), [&](const Rat& s) { return s == cb[0]; });
      if (!const_a || !const_b || ca[0] == cb[0]) continue;
      for (int leaf = 0; leaf < tree->leaf_count(); ++leaf)
        if (priors[a].mass(leaf) > 0 && priors[b].mass(leaf) > 0)
          throw std::logic_error("constant controls must have disjoint supports");
    }
  }
  return PriorSet(tree, std::move(priors));
}

UpperExpectation upper_expectation(const Claim& x, const PriorSet& ps) {
  UpperExpectation out;
  for (int i = 0; i < ps.size(); ++i) {
    Rat e = ps.prior(i).expectation(x);
    if (i == 0 || e > out.value) {
      out.value = e;
      out.attaining.assign(1, i);
    } else if (e == out.value) {
      out.attaining.push_back(i);
    }
  }
  return out;
}

CapacityNorm capacity_norm(const Claim& x, const PriorSet& ps) {
  Claim sq = x;
  for (auto& v : sq.values) v *= v;
  Rat rad = upper_expectation(sq, ps).value;
  return {rad, std::sqrt(to_double(rad))};
}

bool quasi_sure_geq(const Claim& x, const Claim& y, const PriorSet& ps) {
  auto charged = ps.charged_leaves();
  for (int leaf = 0; leaf < x.size(); ++leaf)
    if (charged[leaf] && x.values[leaf] < y.values[leaf]) return false;
  return true;
}

std::vector<int> polar_leaves(const PriorSet& ps) {
  auto charged = ps.charged_leaves();
  std::vector<int> out;
  for (int leaf = 0; leaf < static_cast<int>(charged.size()); ++leaf)
    if (!charged[leaf]) out.push_back(leaf);
  return out;
}

Prior canonical_reference_measure(const PriorSet& ps, const std::vector<Rat>& weights) {
  if (static_cast<int>(weights.size()) != ps.size())
    throw std::invalid_argument("one weight per prior required");
  Rat total = 0;
  for (const Rat& w : weights) {
    if (w <= 0) throw std::invalid_argument("weights must be strictly positive");
    total += w;
  }
  if (total != 1) throw std::invalid_argument("weights must sum to 1");
  std::vector<Rat> mass(ps.tree()->leaf_count(), Rat(0));
  for (int i = 0; i < ps.size(); ++i)
    for (int leaf = 0; leaf < ps.tree()->leaf_count(); ++leaf)
      mass[leaf] += weights[i] * ps.prior(i).mass(leaf);
  Prior mix("canonical", ps.tree(), std::move(mass));
  // Null leaves of the mixture are exactly the polar leaves.
  auto charged = ps.charged_leaves();
  for (int leaf = 0; leaf < ps.tree()->leaf_count(); ++leaf)
    if ((mix.mass(leaf) > 0) != (charged[leaf] != 0))
      throw std::logic_error("canonical measure null set differs from polar set");
  return mix;
}

std::vector<int> redundant_priors(const PriorSet& ps, const std::vector<Claim>& claims) {
  std::vector<char> attains(ps.size(), 0);
  for (const Claim& x : claims)
    for (int i : upper_expectation(x, ps).attaining) attains[i] = 1;
  std::vector<int> out;
  for (int i = 0; i < ps.size(); ++i)
    if (!attains[i]) out.push_back(i);
  return out;
}

}  // namespace rvp
