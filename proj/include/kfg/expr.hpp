#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>

#include "kfg/topology.hpp"

namespace kfg {

struct ExprError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Set expressions over one or two subset variables, e.g. "bi(A|B)", "ifA",
// "(A&ibA)|iaA", "gaA". Lowercase prefixes are operator words evaluated
// rightmost-first; 'A'/'B' are the variables; '|' '&' '-' '^' are union,
// intersection, difference and symmetric difference (left associative, one
// precedence level, parenthesize to mix).
class SetExpr {
 public:
  struct Node;

  static SetExpr parse(std::string_view text);

  Code eval(const Topology& t, Code a, Code b = 0) const;
  bool uses_second_variable() const;
  const std::string& text() const { return text_; }

 private:
  std::shared_ptr<const Node> root_;
  std::string text_;
};

}  // namespace kfg
