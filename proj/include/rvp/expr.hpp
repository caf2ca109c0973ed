// SPDX-License-Identifier: MIT
#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "rvp/rational.hpp"

namespace rvp {

// Tiny arithmetic expression language used by the JSON interfaces.
// Claims are expressions in B, QV, S per leaf (exact rational evaluation);
// the PDE engine takes coefficient/payoff expressions in t, x (double
// evaluation, where exp/log/sqrt are additionally available).
//
// Grammar: + - * / unary-minus, ^ with integer exponent, parentheses,
// and the calls max(a,b), min(a,b), abs(a), pow(a,n), exp(a), log(a), sqrt(a).
class Expr {
 public:
  static Expr parse(const std::string& text);

  Rat eval_rat(const std::map<std::string, Rat>& env) const;
  double eval_double(const std::map<std::string, double>& env) const;

  // Variable names referenced by the expression.
  std::vector<std::string> variables() const;

  const std::string& text() const { return text_; }

 private:
  struct Node;
  std::shared_ptr<const Node> root_;
  std::string text_;
};

}  // namespace rvp
