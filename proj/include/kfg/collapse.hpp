#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace kfg {

// A collapse of a catalog: the partition of catalog indices into classes of
// equal operators / equal values. Canonical form: classes[i] is the position
// of the first index equivalent to index i, so equal partitions have equal
// vectors regardless of discovery order.
struct Collapse {
  std::vector<uint8_t> classes;

  int class_count() const;
  bool same_class(int i, int j) const { return classes[i] == classes[j]; }
  bool operator==(const Collapse&) const = default;
  bool operator<(const Collapse& o) const { return classes < o.classes; }

  // Pairs identified by both collapses (the meet in the collapse lattice).
  static Collapse intersect(const Collapse& a, const Collapse& b);
  // true when every class of *this is contained in a class of coarser.
  bool refines(const Collapse& coarser) const;
};

// A reflexive, transitively closed set of <=-pairs over a catalog, stored as
// one bitmask row per index (row i holds the set of j with i <= j).
struct Ordering {
  std::vector<uint64_t> rows;

  bool contains(int i, int j) const { return rows[i] >> j & 1; }
  void add(int i, int j) { rows[i] |= uint64_t(1) << j; }
  size_t size() const { return rows.size(); }
  int pair_count() const;

  bool subset_of(const Ordering& o) const;
  bool operator==(const Ordering&) const = default;
  bool operator<(const Ordering& o) const { return rows < o.rows; }

  // The collapse induced by mutual comparability.
  Collapse induced_collapse() const;
};

// Serialized forms used by censuses, caches and reports: JSON arrays of
// name classes / name pairs in a fixed sorted order.
std::string collapse_to_json(const Collapse& c,
                             const std::vector<int>& catalog);
std::string ordering_to_json(const Ordering& o,
                             const std::vector<int>& catalog);

}  // namespace kfg
