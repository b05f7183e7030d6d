#pragma once

#include <array>
#include <string>
#include <vector>

#include "kfg/collapse.hpp"
#include "kfg/topology.hpp"
#include "kfg/words.hpp"

namespace kfg {

struct NoMatch : std::runtime_error {
  NoMatch(const std::string& block, Code a)
      : std::runtime_error("no " + block + " predicate matches subset " +
                           std::to_string(a)) {}
};
struct MultipleMatch : std::runtime_error {
  MultipleMatch(const std::string& block, Code a)
      : std::runtime_error("several " + block + " predicates match subset " +
                           std::to_string(a)) {}
};
struct NoWitnessFound : std::runtime_error {
  explicit NoWitnessFound(int m)
      : std::runtime_error("no witness available for class " + std::to_string(m)) {}
};

// The values of every catalog word at one subset.
struct OrbitFamily {
  std::vector<Code> values;  // one per catalog position
  int distinct_count() const;
};

OrbitFamily orbit_family(const Topology& t, Code a,
                         const std::vector<int>& catalog);

int k_number(const Topology& t, Code a);    // distinct values over the 14 words
int kf_number(const Topology& t, Code a);   // distinct values over the 34 words
int k_number_of_space(const Topology& t);   // max over subsets
int kf_number_of_space(const Topology& t);

// Classification against the predicate catalog: the unique matching class,
// 1..30 for the 7-word block, 1..70 for the 34-word block. All predicates
// are always evaluated so transcription bugs surface as MultipleMatch.
int classify_phi(const Topology& t, Code a);
int classify_psi(const Topology& t, Code a);

struct PsiProfile {
  int phi;
  int psi;
  int k;
  int kf;
};
PsiProfile classify_profile(const Topology& t, Code a);

// Partition of the catalog by equal value at a.
Collapse subset_collapse(const Topology& t, Code a,
                         const std::vector<int>& catalog);

// All pairs with o1(a) contained in o2(a).
Ordering subset_ordering(const Topology& t, Code a,
                         const std::vector<int>& catalog);

// Class of the complement: psi_dual(m) = psi(aA) for any A with psi(A)=m.
// Computed once from the built-in witness spaces and memoized; an involution.
int psi_dual(int m);
int phi_dual(int m);

// Evaluates the constructive witness recipes available at psi(a) and reports
// whether each reaches its advertised class.
struct RecipeOutcome {
  int from;
  int to;
  std::string expr;
  int got;
  bool matched;
};
std::vector<RecipeOutcome> psi_witness_constructions(const Topology& t, Code a);

}  // namespace kfg
