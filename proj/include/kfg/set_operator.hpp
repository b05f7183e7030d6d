#pragma once

#include <cstdint>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "kfg/topology.hpp"
#include "kfg/words.hpp"

namespace kfg {

struct UniverseMismatch : std::runtime_error {
  UniverseMismatch() : std::runtime_error("operators live on different universes") {}
};

// A set operator given extensionally: the image of every subset. Equality is
// table equality, nothing finer.
class SetOperator {
 public:
  SetOperator() = default;
  SetOperator(int n, std::vector<Code> table) : n_(n), table_(std::move(table)) {}

  static SetOperator identity(int n);
  static SetOperator constant(int n, Code value);

  int n() const { return n_; }
  Code apply(Code s) const { return table_[s]; }
  const std::vector<Code>& table() const { return table_; }

  bool operator==(const SetOperator&) const = default;

 private:
  int n_ = 0;
  std::vector<Code> table_;
};

SetOperator word_to_operator(const Topology& t, std::string_view word);

SetOperator compose(const SetOperator& o1, const SetOperator& o2);  // o1 after o2
SetOperator dual(const SetOperator& o);                             // aoa

SetOperator op_join(const SetOperator& o1, const SetOperator& o2);
SetOperator op_meet(const SetOperator& o1, const SetOperator& o2);
SetOperator op_complement(const SetOperator& o);                    // a o
SetOperator op_difference(const SetOperator& o1, const SetOperator& o2);

bool leq(const SetOperator& o1, const SetOperator& o2);       // pointwise subset
bool disjoint(const SetOperator& o1, const SetOperator& o2);  // meet is zero

}  // namespace kfg
