#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "kfg/subset.hpp"

namespace kfg {

struct TopologyError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct UniverseTooLarge : TopologyError {
  explicit UniverseTooLarge(int n)
      : TopologyError("universe size " + std::to_string(n) + " exceeds " +
                      std::to_string(kMaxPoints)) {}
};
struct BaseDoesNotCoverUniverse : TopologyError {
  BaseDoesNotCoverUniverse()
      : TopologyError("base union does not cover the universe") {}
};

// A finite topological space stored as its full closure table. The table is
// the single source of truth; opens, interior, boundary and border are all
// derived from it. Immutable after construction.
class Topology {
 public:
  Topology() = default;
  Topology(int n, std::vector<Code> closure_table);

  int n() const { return n_; }
  Code universe() const { return universe_mask(n_); }
  size_t subset_count() const { return size_t(1) << n_; }

  Code closure(Code s) const { return cl_[s]; }
  Code interior(Code s) const {
    return universe() & ~cl_[universe() & ~s];
  }
  Code boundary(Code s) const { return cl_[s] & cl_[universe() & ~s]; }
  Code border(Code s) const { return s & cl_[universe() & ~s]; }
  Code complement(Code s) const { return universe() & ~s; }

  bool is_open(Code s) const { return interior(s) == s; }
  bool is_closed(Code s) const { return cl_[s] == s; }

  const std::vector<Code>& closure_table() const { return cl_; }

  bool operator==(const Topology&) const = default;

 private:
  int n_ = 0;
  std::vector<Code> cl_;
};

// Opens are nonempty unions of base elements, plus the empty set. The union
// of the base must be the whole universe; X itself need not be listed.
Topology from_base(const std::vector<Code>& base, int n);

// One axiom violation: which axiom, and the subset(s) witnessing it.
struct AxiomViolation {
  std::string axiom;  // "closure-of-empty", "extensive", "idempotent", "additive"
  Code witness_a = 0;
  Code witness_b = 0;  // only used by "additive"
  std::string to_string(int n) const;
};

struct ValidationReport {
  std::vector<AxiomViolation> violations;
  bool ok() const { return violations.empty(); }
};

// Checks all four closure axioms at every table entry and reports every
// violation (violations are data, not exceptions).
ValidationReport validate(const Topology& t);

// JSON round trip: {"n": int, "closure": [int; 2^n]}, fields in that order.
std::string topology_to_json(const Topology& t);
Topology topology_from_json(const std::string& text);

}  // namespace kfg
