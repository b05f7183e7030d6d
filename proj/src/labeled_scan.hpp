#pragma once

#include <functional>

#include "kfg/topology.hpp"

namespace kfg {
namespace detail {

// Brute-force enumeration of every labeled topology on n points. A finite
// topology is a reflexive-transitive relation: row masks r[x] = points whose
// closure contains x (the minimal open neighbourhood of x). Rows are chosen
// depth first with transitivity enforced on the fly.
void for_each_labeled_preorder(int n, const std::function<void(const Topology&)>& fn);

// Builds the topology whose minimal open neighbourhoods are nbhd[x].
Topology topology_from_neighbourhoods(int n, const std::vector<Code>& nbhd);

}  // namespace detail
}  // namespace kfg
