#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "kfg/monoid.hpp"
#include "kfg/topology.hpp"

namespace kfg {

struct OracleLimitExceeded : std::runtime_error {
  explicit OracleLimitExceeded(int n)
      : std::runtime_error("labeled enumeration capped at 6 points, got " +
                           std::to_string(n)) {}
};
struct NotFoundWithinBound : std::runtime_error {
  NotFoundWithinBound() : std::runtime_error("no witness within the size bound") {}
};
struct StaleCache : std::runtime_error {
  explicit StaleCache(const std::string& why)
      : std::runtime_error("stale cache: " + why) {}
};

// Brute-force oracle: every labeled topology on n points exactly once.
// Independent of the class generator below; n is capped at 6.
void enumerate_labeled(int n, const std::function<void(const Topology&)>& fn);

// Lexicographically minimal closure table over all point relabelings.
// Homeomorphic spaces and only those share a canonical form.
struct CanonicalSpace {
  int n = 0;
  std::vector<Code> closure;
  SpaceType type = SpaceType::D;

  bool operator<(const CanonicalSpace& o) const { return closure < o.closure; }
  bool operator==(const CanonicalSpace&) const = default;
};
CanonicalSpace canonical_form(const Topology& t);

// One representative per homeomorphism class, in ascending canonical order.
// Backed by block decomposition: distinguishable-point posets up to
// isomorphism, then point multiplicities up to poset automorphism. Results
// are cached per n for the lifetime of the process.
const std::vector<Topology>& enumerate_classes(int n);

// Classes streamed without the process cache (used by the CLI cache layer).
std::vector<Topology> generate_classes(int n);

struct FrequencyRecord {
  int n = 0;
  std::map<SpaceType, long long> counts;
  long long total() const;
};
FrequencyRecord monoid_frequencies(int n);

// Smallest n whose class stream contains a witness; deterministic first hit.
struct SearchResult {
  int n;
  Topology space;
  std::optional<Code> subset;
};
SearchResult minimal_search(int max_n,
                            const std::function<bool(const Topology&)>& pred);
SearchResult minimal_search_subset(
    int max_n, const std::function<bool(const Topology&, Code)>& pred);

enum class CensusKind {
  KfCollapses,
  Kfg0Collapses,
  KfOrderings,
  Kfg0Orderings,
  KOrderings,
  Kf0Orderings,
  RelationClasses,
};
CensusKind census_kind_from_string(const std::string& name);
std::string to_string(CensusKind kind);

struct CensusRecord {
  CensusKind kind;
  int max_n;
  std::vector<long long> cumulative;  // cumulative[i] = distinct count over |X| <= i+1
};
CensusRecord census(CensusKind kind, int max_n, int jobs = 1);

// Disk cache: one JSON-lines file of canonical closure tables per n plus a
// manifest carrying counts and content hashes. Loading verifies the hash.
struct CacheManifestEntry {
  int n;
  long long count;
  uint64_t hash;
};
void cache_store(const std::string& dir, int n);
std::vector<Topology> cache_load(const std::string& dir, int n);
bool cache_has(const std::string& dir, int n);

uint64_t fnv1a(const std::string& bytes);

}  // namespace kfg
