#include "kfg/expr.hpp"

#include "kfg/words.hpp"

namespace kfg {

struct SetExpr::Node {
  // leaf: word applied to variable; inner: word applied to (lhs op rhs)
  std::string word;  // may be empty (identity)
  char var = 0;      // 'A' or 'B' for leaves, 0 for inner nodes
  char op = 0;       // '|', '&', '-', '^' for inner nodes
  std::shared_ptr<const Node> lhs, rhs;
};

namespace {

using NodePtr = std::shared_ptr<const SetExpr::Node>;

struct Parser {
  std::string_view s;
  size_t pos = 0;

  char peek() const { return pos < s.size() ? s[pos] : '\0'; }
  char take() { return s[pos++]; }

  [[noreturn]] void fail(const std::string& why) {
    throw ExprError("bad set expression '" + std::string(s) + "': " + why);
  }

  NodePtr parse_expr() {
    NodePtr left = parse_term();
    while (peek() == '|' || peek() == '&' || peek() == '-' || peek() == '^') {
      char op = take();
      NodePtr right = parse_term();
      auto node = std::make_shared<SetExpr::Node>();
      node->op = op;
      node->lhs = left;
      node->rhs = right;
      left = node;
    }
    return left;
  }

  NodePtr parse_term() {
    std::string word;
    while (std::string_view("abifg01d").find(peek()) != std::string_view::npos)
      word += take();
    if (!word.empty() && word != "id" && word.find('d') != std::string::npos)
      fail("unknown word '" + word + "'");
    if (word == "id") word.clear();

    auto node = std::make_shared<SetExpr::Node>();
    node->word = word;
    if (peek() == 'A' || peek() == 'B') {
      node->var = take();
      return node;
    }
    if (peek() == '(') {
      take();
      NodePtr inner = parse_expr();
      if (peek() != ')') fail("expected ')'");
      take();
      if (word.empty()) return inner;
      node->op = '(';
      node->lhs = inner;
      return node;
    }
    fail("expected variable or '('");
  }
};

Code eval_node(const SetExpr::Node& node, const Topology& t, Code a, Code b) {
  Code value;
  if (node.var) {
    value = node.var == 'A' ? a : b;
  } else if (node.op == '(') {
    value = eval_node(*node.lhs, t, a, b);
  } else {
    Code l = eval_node(*node.lhs, t, a, b);
    Code r = eval_node(*node.rhs, t, a, b);
    switch (node.op) {
      case '|': value = l | r; break;
      case '&': value = l & r; break;
      case '-': value = l & ~r; break;
      default: value = l ^ r; break;
    }
  }
  return node.word.empty() ? value : eval_word(t, node.word, value);
}

bool node_uses_b(const SetExpr::Node& node) {
  if (node.var) return node.var == 'B';
  if (node.lhs && node_uses_b(*node.lhs)) return true;
  return node.rhs && node_uses_b(*node.rhs);
}

}  // namespace

SetExpr SetExpr::parse(std::string_view text) {
  Parser p{text};
  SetExpr e;
  e.root_ = p.parse_expr();
  if (p.pos != text.size()) p.fail("trailing input");
  e.text_ = std::string(text);
  return e;
}

Code SetExpr::eval(const Topology& t, Code a, Code b) const {
  return eval_node(*root_, t, a, b);
}

bool SetExpr::uses_second_variable() const { return node_uses_b(*root_); }

}  // namespace kfg
