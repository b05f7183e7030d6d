#include "kfg/words.hpp"

#include <algorithm>
#include <map>

namespace kfg {

namespace {

std::vector<int> range(int lo, int hi) {  // [lo, hi)
  std::vector<int> v(hi - lo);
  for (int i = lo; i < hi; ++i) v[i - lo] = i;
  return v;
}

std::vector<int> concat(std::vector<int> a, const std::vector<int>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

}  // namespace

std::vector<int> catalog_k0() { return range(0, 7); }
std::vector<int> catalog_kf0() { return range(0, 17); }
std::vector<int> catalog_kfg0() { return range(0, 20); }
std::vector<int> catalog_k() { return concat(range(0, 7), range(20, 27)); }
std::vector<int> catalog_kf() { return concat(range(0, 17), range(20, 37)); }
std::vector<int> catalog_kfg() { return range(0, 40); }

int word_index(std::string_view name) {
  for (int i = 0; i < kCatalogSize; ++i)
    if (kCatalogNames[i] == name) return i;
  throw UnknownWord(name);
}

bool is_canonical_word(std::string_view name) {
  return std::find(kCatalogNames.begin(), kCatalogNames.end(), name) !=
         kCatalogNames.end();
}

std::optional<int> dual_word_index(int idx) {
  if (idx < 0 || idx >= kCatalogSize) return std::nullopt;
  // Resolved extensionally on a space that separates all 34 two-generator
  // words; on it the dual of each table matches exactly one catalog table.
  // The six border words fall outside (their duals generate new operators).
  static const std::array<int, kCatalogSize> table = [] {
    Topology witness = from_base({0b0001, 0b0110, 0b1111}, 4);
    std::array<std::vector<Code>, kCatalogSize> word_tables;
    for (int w = 0; w < kCatalogSize; ++w) {
      word_tables[w].resize(witness.subset_count());
      for (Code s = 0; s < witness.subset_count(); ++s)
        word_tables[w][s] = eval_word(witness, kCatalogNames[w], s);
    }
    std::array<int, kCatalogSize> out;
    out.fill(-1);
    const Code full = witness.universe();
    for (int w = 0; w < kCatalogSize; ++w) {
      std::vector<Code> dual_table(witness.subset_count());
      for (Code s = 0; s < witness.subset_count(); ++s)
        dual_table[s] = full & ~word_tables[w][full & ~s];
      for (int v = 0; v < kCatalogSize; ++v)
        if (word_tables[v] == dual_table) {
          out[w] = v;
          break;
        }
    }
    return out;
  }();
  if (table[idx] < 0) return std::nullopt;
  return table[idx];
}

Code eval_word(const Topology& t, std::string_view word, Code s) {
  if (word == "id") return s;
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    switch (*it) {
      case 'a': s = t.complement(s); break;
      case 'b': s = t.closure(s); break;
      case 'i': s = t.interior(s); break;
      case 'f': s = t.boundary(s); break;
      case 'g': s = t.border(s); break;
      case '0': s = 0; break;
      case '1': s = t.universe(); break;
      default: throw UnknownWord(word);
    }
  }
  return s;
}

Code eval_catalog_word(const Topology& t, int idx, Code s) {
  return eval_word(t, kCatalogNames[idx], s);
}

}  // namespace kfg
