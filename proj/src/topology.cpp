#include "kfg/topology.hpp"

#include <algorithm>

#include <nlohmann/json.hpp>

namespace kfg {

std::string subset_to_string(Code s, int n) {
  std::string out = "{";
  bool first = true;
  for (int i = 0; i < n; ++i) {
    if (s >> i & 1) {
      if (!first) out += ",";
      out += std::to_string(i);
      first = false;
    }
  }
  return out + "}";
}

Topology::Topology(int n, std::vector<Code> closure_table)
    : n_(n), cl_(std::move(closure_table)) {
  if (n < 1 || n > kMaxPoints) throw UniverseTooLarge(n);
  if (cl_.size() != (size_t(1) << n))
    throw TopologyError("closure table has wrong length");
}

Topology from_base(const std::vector<Code>& base, int n) {
  if (n < 1 || n > kMaxPoints) throw UniverseTooLarge(n);
  const Code full = universe_mask(n);
  Code covered = 0;
  for (Code b : base) {
    if (b & ~full) throw TopologyError("base element does not fit universe");
    covered |= b;
  }
  if (covered != full) throw BaseDoesNotCoverUniverse();

  // Minimal open neighbourhood of each point: intersection of the base
  // elements containing it. Finite unions of base elements are exactly the
  // unions of these neighbourhoods.
  std::vector<Code> nbhd(n, full);
  for (int p = 0; p < n; ++p)
    for (Code b : base)
      if (b >> p & 1) nbhd[p] &= b;

  // x lies in cl{y} iff every open set around x meets {y}, i.e. y is in the
  // minimal neighbourhood of x.
  std::vector<Code> point_cl(n, 0);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (nbhd[x] >> y & 1) point_cl[y] |= Code(1) << x;

  std::vector<Code> table(size_t(1) << n, 0);
  for (Code s = 1; s <= full; ++s) {
    Code low = s & (~s + 1);
    table[s] = table[s ^ low] | point_cl[std::countr_zero(low)];
  }
  return Topology(n, std::move(table));
}

std::string AxiomViolation::to_string(int n) const {
  std::string out = axiom + " at " + subset_to_string(witness_a, n);
  if (axiom == "additive") out += ", " + subset_to_string(witness_b, n);
  return out;
}

ValidationReport validate(const Topology& t) {
  ValidationReport r;
  const Code full = t.universe();
  if (t.closure(0) != 0) r.violations.push_back({"closure-of-empty", 0, 0});
  for (Code s = 0; s <= full; ++s) {
    if (!subset_of(s, t.closure(s)))
      r.violations.push_back({"extensive", s, 0});
    if (t.closure(t.closure(s)) != t.closure(s))
      r.violations.push_back({"idempotent", s, 0});
  }
  for (Code a = 0; a <= full; ++a)
    for (Code b = a; b <= full; ++b)
      if (t.closure(a | b) != (t.closure(a) | t.closure(b)))
        r.violations.push_back({"additive", a, b});
  return r;
}

std::string topology_to_json(const Topology& t) {
  std::string out = "{\"n\": " + std::to_string(t.n()) + ", \"closure\": [";
  for (size_t i = 0; i < t.subset_count(); ++i) {
    if (i) out += ", ";
    out += std::to_string(t.closure_table()[i]);
  }
  return out + "]}";
}

Topology topology_from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  int n = j.at("n").get<int>();
  std::vector<Code> table = j.at("closure").get<std::vector<Code>>();
  Topology t(n, std::move(table));
  auto report = validate(t);
  if (!report.ok())
    throw TopologyError("closure table violates axioms: " +
                        report.violations.front().to_string(n));
  return t;
}

}  // namespace kfg
