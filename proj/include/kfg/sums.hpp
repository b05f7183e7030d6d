#pragma once

#include <array>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "kfg/classifier.hpp"
#include "kfg/topology.hpp"

namespace kfg {

struct MissingWitness : std::runtime_error {
  explicit MissingWitness(int m)
      : std::runtime_error("no cached witness for class " + std::to_string(m)) {}
};

// Disjoint union: opens are component-wise unions of component opens, so the
// closure acts block by block. Components keep their point order; component
// i is shifted past the points of components 0..i-1.
Topology sum_space(const std::vector<Topology>& components);

// n-fold sum of one space.
Topology repeated_sum(const Topology& t, int copies);

// Embeds a subset of component `which` into the sum universe.
Code embed_subset(const std::vector<Topology>& components, int which, Code s);

// All psi values attained by subsets of t.
std::set<int> psi_spectrum(const Topology& t);

struct TopsumReport {
  std::string column;
  int copies;
  std::set<int> new_psi;  // values <= 68 absent from the previous sum
  int k;
  int kf;
};
// column names follow the reference table: GE KD OU ED EO P-noni P-ind D2 D1.
TopsumReport topsum_report(const std::string& column, int copies);

// Witnesses: for each class 1..70 the first (space, subset) pair in the
// canonical enumeration order realizing it. max_n = 8 covers all 70.
struct PsiWitness {
  Topology space;
  Code subset;
};
class WitnessLibrary {
 public:
  explicit WitnessLibrary(int max_n = 8);
  const PsiWitness& witness(int psi) const;  // throws MissingWitness
  bool has(int psi) const;
  int max_n() const { return max_n_; }

 private:
  int max_n_;
  std::vector<std::optional<PsiWitness>> by_psi_;
};

// Meet of two classes: realized by the disjoint union of witnesses and
// cross-checked against the intersection of the collapses. Both routes must
// agree, else an exception.
int psi_meet(const WitnessLibrary& lib, int m, int n);
int phi_meet(const WitnessLibrary& lib, int m, int n);

struct MeetTable {
  std::array<std::array<uint8_t, 71>, 71> psi{};  // 1-based
  std::array<std::array<uint8_t, 31>, 31> phi{};
};
MeetTable meet_table(const WitnessLibrary& lib);

// Height of the phi meet-semilattice (longest chain, edges counted).
int phi_semilattice_height(const MeetTable& table);

// Checks the reachability diagram over spaces up to max_n points: whenever a
// subset with value m exists, every successor block is realized in the same
// space. Returns failing (n, psi_from, block_rep) triples.
struct ImplicationFailure {
  int n;
  int from;
  int to_block;
};
std::vector<ImplicationFailure> verify_psi_implications(int max_n);

}  // namespace kfg
