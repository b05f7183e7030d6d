#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kfg/collapse.hpp"
#include "kfg/set_operator.hpp"
#include "kfg/topology.hpp"
#include "kfg/words.hpp"

namespace kfg {

struct NotAPartialOrder : std::runtime_error {
  NotAPartialOrder() : std::runtime_error("relation is not a partial order") {}
};
struct NotContained : std::runtime_error {
  NotContained() : std::runtime_error("first ordering is not contained in second") {}
};

enum class SpaceType : uint8_t { GE, KD, ED, OU, EO, P, D };

// The ten space types separating the even-family collapse with the border
// words included. The "2" variants satisfy the extra optional equation of
// their family (fbg=fb for ED, g=bg for OU, fb=g for EO).
enum class SpaceTypeG : uint8_t { GE, KD, ED1, ED2, OU1, OU2, EO1, EO2, P, D };

std::string to_string(SpaceType t);
std::string to_string(SpaceTypeG t);

// Closure of {id} under composition with the generators, deduplicated by
// table identity (breadth first, deterministic order).
std::vector<SetOperator> generate_monoid(const Topology& t,
                                         const std::vector<std::string>& generators);

// Tables of every catalog word on t, in catalog order.
std::vector<SetOperator> catalog_tables(const Topology& t,
                                        const std::vector<int>& catalog);

// Partition of the catalog by extensional equality on t.
Collapse space_collapse(const Topology& t, const std::vector<int>& catalog);

// All pairs o1 <= o2 that t satisfies; transitively closed by construction.
Ordering space_ordering(const Topology& t, const std::vector<int>& catalog);

SpaceType classify_space(const Topology& t);
SpaceTypeG classify_space_g(const Topology& t);

// K and K_f numbers of the space (monoid sizes).
int k_number_of_type(SpaceType t);    // |K|
int kf_number_of_type(SpaceType t);   // |KF|

// All pairs whose addition keeps p a partial order ("potential covers").
// p must be a partial order on 0..p.size()-1.
std::vector<std::pair<int, int>> extender(const Ordering& p);

struct RefineResult {
  bool equal;
  std::pair<int, int> witness;  // a pair of Ext(p) ∩ q when not equal
};
// Decides p == q for p ⊆ q via the extender test; throws NotContained
// when p is not a subset of q.
RefineResult poset_refines(const Ordering& p, const Ordering& q);

// Monoid homomorphism order between space types: type1 <= type2 iff the
// canonical collapse of type2 refines that of type1 (kernel containment).
bool projection_order(SpaceType t1, SpaceType t2);
bool projection_order_g(SpaceTypeG t1, SpaceTypeG t2);

// Canonical collapses behind projection_order: computed once from the
// reference spaces of each type.
const Collapse& canonical_collapse(SpaceType t);     // on the 34-word catalog
const Collapse& canonical_collapse_g(SpaceTypeG t);  // on the 40-word catalog

// A smallest space of each type (from the reference base catalog).
const Topology& minimal_space(SpaceType t);

// The order pairs satisfied by every space, expanded from the reference
// Hasse data over the 34- and 40-word catalogs (reflexive-transitive, with
// left duals filled in).
const Ordering& universal_order_kf();
const Ordering& universal_order_kfg();

// Reference extenders of the universal orders, as catalog-position pairs.
const std::vector<std::pair<int, int>>& universal_extender_kf();
const std::vector<std::pair<int, int>>& universal_extender_kfg();

// Toggles the complement prefix of a canonical name ("b" <-> "ab",
// "id" <-> "a", "0" <-> "1").
std::string negate_word_name(std::string_view name);

}  // namespace kfg
