#pragma once

#include <array>
#include <cstdint>
#include <string_view>
#include <utility>
#include <vector>

#include "kfg/subset.hpp"

namespace kfg {
namespace ref {

// ---------------------------------------------------------------------------
// Universal orders of the 34- and 40-word catalogs, given as Hasse data on
// the even half plus 1. Solid edges are (lower, upper) cover pairs; each
// dashed pair {x, y} means x and y are disjoint, i.e. x <= ay and y <= ax.
// The full order is the reflexive-transitive closure of these edges together
// with their left duals (x,y) -> (neg y, neg x).
// ---------------------------------------------------------------------------

using Edge = std::pair<std::string_view, std::string_view>;

inline constexpr std::array<Edge, 28> kOrderKfSolid = {{
    {"0", "i"},    {"i", "id"},   {"id", "b"},   {"b", "1"},
    {"0", "fib"},  {"fib", "bib"},{"bib", "b"},
    {"0", "fbi"},  {"fbi", "fi"}, {"fi", "bi"},  {"bi", "bib"},
    {"0", "fif"},  {"fif", "ff"}, {"ff", "f"},   {"f", "b"},
    {"0", "if"},   {"if", "bif"}, {"bif", "f"},
    {"i", "ibi"},  {"ibi", "ib"}, {"ib", "bib"}, {"ibi", "bi"},
    {"fib", "fb"}, {"fb", "ff"},  {"fi", "ff"},
    {"fif", "bif"},{"bif", "bib"},{"if", "ib"},
}};

inline constexpr std::array<Edge, 6> kOrderKfDisjoint = {{
    {"ibi", "bif"}, {"ff", "if"}, {"ib", "fb"},
    {"i", "f"},     {"ibi", "fbi"}, {"if", "bi"},
}};

inline constexpr std::array<Edge, 34> kOrderKfgSolid = {{
    {"0", "i"},    {"i", "id"},   {"id", "b"},   {"b", "1"},
    {"0", "g"},    {"g", "id"},   {"g", "bg"},   {"fbg", "bg"},
    {"0", "fib"},  {"fib", "bib"},{"bib", "b"},
    {"0", "fbi"},  {"fbi", "fi"}, {"fi", "bi"},  {"bi", "bib"},
    {"0", "fif"},  {"fif", "fbg"},{"fbg", "ff"}, {"ff", "f"},  {"f", "b"},
    {"0", "if"},   {"if", "bif"}, {"bif", "bg"}, {"bg", "f"},
    {"i", "ibi"},  {"ibi", "ib"}, {"ib", "bib"}, {"ibi", "bi"},
    {"fib", "fb"}, {"fb", "ff"},  {"fi", "ff"},
    {"fif", "bif"},{"bif", "bib"},{"if", "ib"},
}};

inline constexpr std::array<Edge, 6> kOrderKfgDisjoint = kOrderKfDisjoint;

// Extender of the universal 34-word order, up to left duality. Entries are
// ordered pairs (x, y): adding x <= y keeps the order a partial order.
inline constexpr std::array<Edge, 27> kExtenderKf = {{
    // complement pairs and the closure step
    {"i", "ai"}, {"if", "aif"}, {"fib", "afib"}, {"fif", "afif"},
    {"fbi", "afbi"}, {"ab", "b"},
    // identity against the regularizations
    {"id", "bib"}, {"ibi", "id"},
    // interior-of-boundary slots
    {"if", "id"}, {"if", "a"}, {"fb", "bib"},
    // cross pairs against odd regularizations
    {"fif", "aib"}, {"fbi", "aib"}, {"fi", "aibi"},
    // the three-cycle family against its own complements
    {"fib", "afbi"}, {"fif", "afib"}, {"fbi", "afif"},
    // the three-cycle family against closure words
    {"fib", "bi"}, {"fif", "bi"}, {"fib", "bif"}, {"fbi", "bif"},
    // the three-cycle family against identity and complement
    {"fib", "id"}, {"fib", "a"}, {"fif", "id"}, {"fif", "a"},
    {"fbi", "id"}, {"fbi", "a"},
}};

// Extender of the universal 40-word order, same conventions; dashed pairs
// {x,y} abbreviate both (x, neg y) and (y, neg x).
inline constexpr std::array<Edge, 13> kExtenderKfgSolid = {{
    {"ab", "b"}, {"ibi", "id"}, {"fbi", "id"}, {"fib", "id"}, {"fif", "id"},
    {"if", "id"}, {"fb", "bib"}, {"fbg", "bib"}, {"g", "bib"},
    {"fib", "bi"}, {"fif", "bi"}, {"fbi", "bg"}, {"fib", "bg"},
}};
inline constexpr std::array<Edge, 12> kExtenderKfgDisjoint = {{
    {"ibi", "fi"}, {"ibi", "g"}, {"ibi", "fbg"}, {"fif", "ib"},
    {"fbi", "ib"}, {"fif", "fib"}, {"fbi", "fib"}, {"if", "g"},
    {"fif", "g"}, {"fbi", "g"}, {"fib", "g"}, {"fif", "fbi"},
}};
inline constexpr std::array<std::string_view, 6> kExtenderKfgLoops = {
    "fif", "fib", "fbi", "if", "g", "i"};

// ---------------------------------------------------------------------------
// Smallest space of each monoid type, as an open base over points 0..n-1.
// ---------------------------------------------------------------------------

struct BaseSpec {
  int n;
  std::vector<std::vector<int>> opens;
};

BaseSpec minimal_base(std::string_view type);  // "GE","KD","ED","OU","EO","P","D"

// Extra reference spaces: minimal non-indiscrete partition space, two-point
// discrete space, and the bases witnessing optional-order behaviour.
BaseSpec named_base(std::string_view which);
// which ∈ {"P-noni", "D2", "ED-no-fb-id", "EO-no-fb-id", "OU-split",
//          "KD-split", "sharp-increment", "all-phi-10"}

// ---------------------------------------------------------------------------
// Frequencies of the seven monoid types up to homeomorphism.
// ---------------------------------------------------------------------------

struct FrequencyRow {
  int n;
  long long ge, kd, ed, ou, eo, p, d;
  long long total() const { return ge + kd + ed + ou + eo + p + d; }
};

inline constexpr std::array<FrequencyRow, 11> kMonoidFrequencies = {{
    {1, 0, 0, 0, 0, 0, 0, 1},
    {2, 0, 0, 0, 0, 1, 1, 1},
    {3, 0, 0, 1, 1, 4, 2, 1},
    {4, 1, 0, 6, 7, 14, 4, 1},
    {5, 11, 1, 25, 45, 50, 6, 1},
    {6, 88, 9, 99, 306, 205, 10, 1},
    {7, 697, 65, 397, 2375, 986, 14, 1},
    {8, 5993, 454, 1784, 21906, 5820, 21, 1},
    {9, 59525, 3425, 9442, 247357, 43304, 29, 1},
    {10, 712639, 29816, 62679, 3497270, 415241, 41, 1},
    {11, 10592049, 315322, 543735, 62855093, 5195399, 55, 1},
}};

// Hom-order cover edges between the ten border-aware types (upper, lower).
inline constexpr std::array<Edge, 13> kHomOrderEdges = {{
    {"GE", "KD"},  {"KD", "ED1"}, {"KD", "OU1"}, {"ED1", "ED2"},
    {"ED1", "EO1"},{"OU1", "OU2"},{"OU1", "EO1"},{"EO1", "EO2"},
    {"ED2", "EO2"},{"OU2", "EO2"},{"ED2", "P"},  {"EO2", "D"},
    {"P", "D"},
}};

// ---------------------------------------------------------------------------
// Smallest |X| admitting each local-collapse number, one representative per
// dual pair.
// ---------------------------------------------------------------------------

struct MinimalPsiRow {
  int n;
  std::vector<int> psi;
};
const std::vector<MinimalPsiRow>& minimal_psi_rows();

// ---------------------------------------------------------------------------
// Reachability between local-collapse numbers: if some subset of X has a
// number in block(m), then X also contains subsets with numbers in every
// successor block. Blocks group dual pairs.
// ---------------------------------------------------------------------------

const std::vector<std::vector<int>>& psi_blocks();
// Edges between block representatives (first element of each block).
const std::vector<std::pair<int, int>>& psi_block_edges();

// Constructive witnesses: from a subset with number `from`, the expression
// (over variable A) yields a subset with number `to`.
struct PsiRecipe {
  int from;
  int to;
  std::string_view expr;
};
const std::vector<PsiRecipe>& psi_recipes();

// ---------------------------------------------------------------------------
// Values of k and k_f that occur as space numbers for each type.
// ---------------------------------------------------------------------------

struct SpaceNumberRow {
  std::string_view type;
  std::vector<int> k_values;
  std::vector<int> kf_values;
};
const std::vector<SpaceNumberRow>& space_number_table();

// ---------------------------------------------------------------------------
// Repeated-sum expectations: new local-collapse numbers (<= 68) appearing in
// the m-fold sum of the reference space but not the (m-1)-fold one, plus the
// resulting (k, kf) space numbers.
// ---------------------------------------------------------------------------

struct TopsumRow {
  std::string_view column;  // GE KD OU ED EO P-noni P-ind D2 D1
  int copies;
  std::vector<int> new_psi;
  int k;
  int kf;
};
const std::vector<TopsumRow>& topsum_table();

// ---------------------------------------------------------------------------
// Census values for the 20-word even catalog: distinct local collapses and
// local orderings over all spaces with |X| = n, n = 2..11.
// ---------------------------------------------------------------------------

inline constexpr std::array<int, 10> kEvenLocalCollapseCounts = {
    5, 12, 26, 47, 72, 106, 129, 134, 134, 134};
inline constexpr std::array<int, 10> kEvenLocalOrderingCounts = {
    5, 12, 28, 61, 131, 262, 459, 614, 657, 666};

// Largest number of distinct psi values realized by a single space on n
// points, n = 4..11.
inline constexpr std::array<int, 8> kMaxPsiPerSpace = {12, 17, 25, 32,
                                                       38, 43, 52, 59};

// ---------------------------------------------------------------------------
// Four 11-point resolvable witness topologies realizing all 70 local
// collapse numbers between them (points p..z = 0..10).
// ---------------------------------------------------------------------------

const std::array<BaseSpec, 4>& witness_bases();

// Claim lists attached to the witness topologies: numbers each one realizes.
struct WitnessClaims {
  std::vector<int> must_have;     // realized numbers
  std::vector<int> must_miss;     // numbers explicitly absent
};
const std::array<WitnessClaims, 4>& witness_claims();

}  // namespace ref
}  // namespace kfg
