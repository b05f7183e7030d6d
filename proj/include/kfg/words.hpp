#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "kfg/topology.hpp"

namespace kfg {

struct UnknownWord : std::runtime_error {
  explicit UnknownWord(std::string_view w)
      : std::runtime_error("unrecognized operator word: " + std::string(w)) {}
};

// Canonical word names. The even half is the monoid generated by {b,i,f,g}
// on the identity side; the odd half carries the complement prefix. Index
// layout: 0..6 K-part, 7..16 f-part, 17..19 g-part, 20..39 the same with an
// "a" in front ("1" is the canonical spelling of "a0").
inline constexpr int kCatalogSize = 40;
inline constexpr int kEvenCount = 20;
inline constexpr std::array<std::string_view, kCatalogSize> kCatalogNames = {
    // even
    "id", "b", "i", "bi", "ib", "bib", "ibi",
    "0", "f", "if", "fif", "bif", "ff", "fb", "fi", "fbi", "fib",
    "g", "bg", "fbg",
    // odd
    "a", "ab", "ai", "abi", "aib", "abib", "aibi",
    "1", "af", "aif", "afif", "abif", "aff", "afb", "afi", "afbi", "afib",
    "ag", "abg", "afbg"};

// Sub-catalogs, as index lists into kCatalogNames.
std::vector<int> catalog_k();      // 14 words over {a,b}
std::vector<int> catalog_k0();     // 7 even words over {b,i}
std::vector<int> catalog_kf();     // 34 words over {a,b,f}
std::vector<int> catalog_kf0();    // 17 even words
std::vector<int> catalog_kfg();    // all 40
std::vector<int> catalog_kfg0();   // 20 even words

// Index of a canonical name; throws UnknownWord for anything else.
int word_index(std::string_view name);
bool is_canonical_word(std::string_view name);

// aoa as a name map. Total (an involution) on the 34 {a,b,f}-words: on the
// K-part interchange i and b, on the f-part toggle the "a" prefix. The six
// g-family words have no dual inside the catalog (aga generates new
// operators), so they map to nullopt.
std::optional<int> dual_word_index(int idx);

// Evaluates a word at one subset, rightmost letter first. In addition to
// the canonical names this accepts any string over {a,b,i,f,g,0,1} plus the
// spelling "id", which the identity catalog and witness recipes rely on.
Code eval_word(const Topology& t, std::string_view word, Code s);

// Evaluates by catalog index (hot path for censuses).
Code eval_catalog_word(const Topology& t, int idx, Code s);

}  // namespace kfg
