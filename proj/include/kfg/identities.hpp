#pragma once

#include <string>
#include <vector>

#include "kfg/expr.hpp"
#include "kfg/monoid.hpp"
#include "kfg/topology.hpp"

namespace kfg {

// One relation between set expressions.
struct Relation {
  SetExpr lhs;
  enum Kind { EQ, NEQ, LEQ } kind;
  SetExpr rhs;
  std::string text;

  bool eval(const Topology& t, Code a, Code b) const;
};

struct IdentityLine {
  enum Form { ASSERT, IMP, IFF, CHAIN, EQUIV, IF_THEN } form = ASSERT;
  std::vector<Relation> relations;
  // CHAIN: connective[i] relates relations[i] and relations[i+1]
  // ('>' implies, '=' iff). IF_THEN: first hyp_count relations are hypotheses.
  std::vector<char> connectives;
  size_t hyp_count = 0;
  std::string text;
};

struct IdentityRecord {
  std::string name;
  int vars = 1;                   // 1 or 2
  bool space_level = false;       // quantify each relation over all subsets
  std::string scope = "all";      // all | non-ge | kd | ed-or-eo
  std::vector<IdentityLine> lines;

  bool applies_to(SpaceType t) const;
};

struct IdentityFailure {
  std::string record;
  std::string line;
  Code witness_a = 0;
  Code witness_b = 0;
};

struct IdentityReport {
  int records_checked = 0;
  long long instances_checked = 0;
  std::vector<IdentityFailure> failures;
  bool ok() const { return failures.empty(); }
};

class IdentityCatalog {
 public:
  static IdentityCatalog parse(const std::string& text);
  static const IdentityCatalog& builtin();

  const std::vector<IdentityRecord>& records() const { return records_; }

  // Checks every applicable record on every subset (or subset pair) of t.
  IdentityReport verify(const Topology& t) const;

 private:
  std::vector<IdentityRecord> records_;
};

// Structural checks that live outside the data file: the duality laws over
// the full catalog and the inclusion-consequence table between the word
// families.
IdentityReport verify_duality_laws(const Topology& t);
IdentityReport verify_inclusion_consequences(const Topology& t);

// Everything together (catalog + built-ins).
IdentityReport verify_identities(const Topology& t);

}  // namespace kfg
