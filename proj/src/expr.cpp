// SPDX-License-Identifier: MIT
#include "rvp/expr.hpp"

#include <cctype>
#include <cmath>
#include <functional>
#include <set>
#include <stdexcept>

namespace rvp {

namespace {

enum class Op { kNum, kVar, kAdd, kSub, kMul, kDiv, kNeg, kPow, kCall };

}  // namespace

struct Expr::Node {
  Op op;
  Rat value;            // kNum
  std::string name;     // kVar / kCall
  long exponent = 0;    // kPow
  std::vector<std::shared_ptr<const Node>> args;
};

namespace {

using NodePtr = std::shared_ptr<const Expr::Node>;

struct Parser {
  const std::string& s;
  size_t pos = 0;

  explicit Parser(const std::string& text) : s(text) {}

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }

  bool eat(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& what) {
    throw std::invalid_argument("expression error at offset " +
                                std::to_string(pos) + ": " + what + " in '" + s + "'");
  }

  NodePtr make(Op op, std::vector<NodePtr> args = {}) {
    auto n = std::make_shared<Expr::Node>();
    n->op = op;
    n->args = std::move(args);
    return n;
  }

  NodePtr parse_expr() {
    NodePtr lhs = parse_term();
    for (;;) {
      skip_ws();
      if (eat('+')) {
        auto n = make(Op::kAdd, {lhs, parse_term()});
        lhs = n;
      } else if (eat('-')) {
        auto n = make(Op::kSub, {lhs, parse_term()});
        lhs = n;
      } else {
        return lhs;
      }
    }
  }

  NodePtr parse_term() {
    NodePtr lhs = parse_factor();
    for (;;) {
      skip_ws();
      if (eat('*')) {
        lhs = make(Op::kMul, {lhs, parse_factor()});
      } else if (eat('/')) {
        lhs = make(Op::kDiv, {lhs, parse_factor()});
      } else {
        return lhs;
      }
    }
  }

  NodePtr parse_factor() {
    NodePtr base = parse_unary();
    skip_ws();
    if (eat('^')) {
      skip_ws();
      bool neg = eat('-');
      size_t start = pos;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
      if (start == pos) fail("integer exponent expected");
      auto n = std::make_shared<Expr::Node>();
      n->op = Op::kPow;
      n->exponent = std::stol(s.substr(start, pos - start)) * (neg ? -1 : 1);
      n->args = {base};
      return n;
    }
    return base;
  }

  NodePtr parse_unary() {
    skip_ws();
    if (eat('-')) return make(Op::kNeg, {parse_unary()});
    if (eat('+')) return parse_unary();
    return parse_primary();
  }

  NodePtr parse_primary() {
    skip_ws();
    if (pos >= s.size()) fail("unexpected end of input");
    char c = s[pos];
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return parse_number();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return parse_ident();
    if (eat('(')) {
      NodePtr inner = parse_expr();
      if (!eat(')')) fail("missing ')'");
      return inner;
    }
    fail("unexpected character");
  }

  NodePtr parse_number() {
    size_t start = pos;
    while (pos < s.size() &&
           (std::isdigit(static_cast<unsigned char>(s[pos])) || s[pos] == '.')) ++pos;
    // exponent part, e.g. 2.5e-3
    if (pos < s.size() && (s[pos] == 'e' || s[pos] == 'E')) {
      size_t save = pos++;
      if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) ++pos;
      if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
      } else {
        pos = save;  // the 'e' belongs to something else
      }
    }
    auto n = std::make_shared<Expr::Node>();
    n->op = Op::kNum;
    n->value = rat_from_string(s.substr(start, pos - start));
    return n;
  }

  NodePtr parse_ident() {
    size_t start = pos;
    while (pos < s.size() && (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_')) ++pos;
    std::string name = s.substr(start, pos - start);
    skip_ws();
    if (eat('(')) {
      std::vector<NodePtr> args;
      if (!eat(')')) {
        do {
          args.push_back(parse_expr());
        } while (eat(','));
        if (!eat(')')) fail("missing ')' in call");
      }
      if (name == "pow") {
        if (args.size() != 2 || args[1]->op != Op::kNum ||
            args[1]->value.get_den() != 1)
          fail("pow expects (expr, integer)");
        auto n = std::make_shared<Expr::Node>();
        n->op = Op::kPow;
        n->exponent = args[1]->value.get_num().get_si();
        n->args = {args[0]};
        return n;
      }
      static const std::set<std::string> unary{"abs", "exp", "log", "sqrt"};
      static const std::set<std::string> binary{"max", "min"};
      if (unary.count(name) && args.size() != 1) fail(name + " expects one argument");
      if (binary.count(name) && args.size() != 2) fail(name + " expects two arguments");
      if (!unary.count(name) && !binary.count(name)) fail("unknown function " + name);
      auto n = std::make_shared<Expr::Node>();
      n->op = Op::kCall;
      n->name = name;
      n->args = std::move(args);
      return n;
    }
    auto n = std::make_shared<Expr::Node>();
    n->op = Op::kVar;
    n->name = name;
    return n;
  }
};

Rat eval_rat_node(const Expr::Node& n, const std::map<std::string, Rat>& env) {
  switch (n.op) {
    case Op::kNum:
      return n.value;
    case Op::kVar: {
      auto it = env.find(n.name);
      if (it == env.end())
        throw std::invalid_argument("unknown variable '" + n.name + "' in claim expression");
      return it->second;
    }
    case Op::kAdd:
      return eval_rat_node(*n.args[0], env) + eval_rat_node(*n.args[1], env);
    case Op::kSub:
      return eval_rat_node(*n.args[0], env) - eval_rat_node(*n.args[1], env);
    case Op::kMul:
      return eval_rat_node(*n.args[0], env) * eval_rat_node(*n.args[1], env);
    case Op::kDiv: {
      Rat d = eval_rat_node(*n.args[1], env);
      if (d == 0) throw std::domain_error("division by zero in expression");
      return eval_rat_node(*n.args[0], env) / d;
    }
    case Op::kNeg:
      return -eval_rat_node(*n.args[0], env);
    case Op::kPow:
      return rat_pow(eval_rat_node(*n.args[0], env), n.exponent);
    case Op::kCall: {
      if (n.name == "abs") return rat_abs(eval_rat_node(*n.args[0], env));
      if (n.name == "max")
        return rat_max(eval_rat_node(*n.args[0], env), eval_rat_node(*n.args[1], env));
      if (n.name == "min")
        return rat_min(eval_rat_node(*n.args[0], env), eval_rat_node(*n.args[1], env));
      throw std::domain_error("function '" + n.name + "' is not exact; unavailable in rational claims");
    }
  }
  throw std::logic_error("unreachable");
}

double eval_double_node(const Expr::Node& n, const std::map<std::string, double>& env) {
  switch (n.op) {
    case Op::kNum:
      return to_double(n.value);
    case Op::kVar: {
      auto it = env.find(n.name);
      if (it == env.end())
        throw std::invalid_argument("unknown variable '" + n.name + "' in expression");
      return it->second;
    }
    case Op::kAdd:
      return eval_double_node(*n.args[0], env) + eval_double_node(*n.args[1], env);
    case Op::kSub:
      return eval_double_node(*n.args[0], env) - eval_double_node(*n.args[1], env);
    case Op::kMul:
      return eval_double_node(*n.args[0], env) * eval_double_node(*n.args[1], env);
    case Op::kDiv:
      return eval_double_node(*n.args[0], env) / eval_double_node(*n.args[1], env);
    case Op::kNeg:
      return -eval_double_node(*n.args[0], env);
    case Op::kPow:
      return std::pow(eval_double_node(*n.args[0], env), static_cast<double>(n.exponent));
    case Op::kCall: {
      double a = eval_double_node(*n.args[0], env);
      if (n.name == "abs") return std::fabs(a);
      if (n.name == "exp") return std::exp(a);
      if (n.name == "log") return std::log(a);
      if (n.name == "sqrt") return std::sqrt(a);
      double b = eval_double_node(*n.args[1], env);
      if (n.name == "max") return std::max(a, b);
      if (n.name == "min") return std::min(a, b);
      break;
    }
  }
  throw std::logic_error("unreachable");
}

void collect_vars(const Expr::Node& n, std::set<std::string>& out) {
  if (n.op == Op::kVar) out.insert(n.name);
  for (const auto& a : n.args) collect_vars(*a, out);
}

}  // namespace

Expr Expr::parse(const std::string& text) {
  Parser p(text);
  Expr e;
  e.root_ = p.parse_expr();
  p.skip_ws();
  if (p.pos != text.size()) p.fail("trailing input");
  e.text_ = text;
  return e;
}

Rat Expr::eval_rat(const std::map<std::string, Rat>& env) const {
  return eval_rat_node(*root_, env);
}

double Expr::eval_double(const std::map<std::string, double>& env) const {
  return eval_double_node(*root_, env);
}

std::vector<std::string> Expr::variables() const {
  std::set<std::string> vars;
  collect_vars(*root_, vars);
  return {vars.begin(), vars.end()};
}

}  // namespace rvp
