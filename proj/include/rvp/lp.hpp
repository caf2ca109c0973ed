// SPDX-License-Identifier: MIT
#pragma once

#include <string>
#include <vector>

#include "rvp/rational.hpp"

namespace rvp::lp {

enum class Status { kOptimal, kInfeasible, kUnbounded };

enum class Sense { kMin, kMax };

enum class Rel { kEq, kLeq, kGeq };

// Exact-arithmetic LP over rationals. Solutions carry certificates:
//  - optimal:    primal x, dual y with strong duality (checked by verify_*)
//  - infeasible: Farkas vector y with y'A <= 0 (vs x >= lb directions) and
//                y'(b - A*lb) > 0
//  - unbounded:  feasible x plus improving ray r
// The solver is a dense two-phase primal simplex with Bland's rule, so it
// terminates on every input. Problem sizes here are small (tree scale).
class Problem {
 public:
  // Returns the variable index. A variable is either nonnegative over a
  // rational lower bound (x >= lb) or free.
  int add_var(const Rat& lower_bound);
  int add_free_var();

  // coeffs: (var index, coefficient) pairs.
  void add_constraint(std::vector<std::pair<int, Rat>> coeffs, Rel rel, Rat rhs);

  void set_objective(Sense sense, std::vector<std::pair<int, Rat>> coeffs);

  int var_count() const { return static_cast<int>(lower_.size()); }
  int constraint_count() const { return static_cast<int>(rows_.size()); }

  struct Solution {
    Status status;
    std::vector<Rat> x;        // optimal / feasible point (model variables)
    Rat objective;             // model-sense objective value
    std::vector<Rat> dual;     // per original constraint (optimal only)
    std::vector<Rat> farkas;   // per original constraint (infeasible only)
    std::vector<Rat> ray;      // improving direction (unbounded only)
  };

  Solution solve() const;

  // Exact certificate checks against this problem's data.
  bool verify_feasible(const std::vector<Rat>& x) const;
  bool verify_optimal(const Solution& s) const;
  bool verify_infeasible(const Solution& s) const;

 private:
  struct Row {
    std::vector<std::pair<int, Rat>> coeffs;
    Rel rel;
    Rat rhs;
  };
  std::vector<Rat> lower_;       // lower bound per variable
  std::vector<char> is_free_;    // free variables get split internally
  std::vector<Row> rows_;
  std::vector<Rat> objective_;   // dense, model variables
  Sense sense_ = Sense::kMin;

  Rat row_value(const Row& r, const std::vector<Rat>& x) const;
};

}  // namespace rvp::lp
