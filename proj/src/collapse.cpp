#include "kfg/collapse.hpp"

#include <algorithm>

#include "kfg/words.hpp"

namespace kfg {

int Collapse::class_count() const {
  int count = 0;
  for (size_t i = 0; i < classes.size(); ++i)
    if (classes[i] == i) ++count;
  return count;
}

Collapse Collapse::intersect(const Collapse& a, const Collapse& b) {
  Collapse out;
  size_t n = a.classes.size();
  out.classes.assign(n, 0);
  for (size_t i = 0; i < n; ++i) {
    size_t rep = i;
    for (size_t j = 0; j < i; ++j)
      if (a.classes[j] == a.classes[i] && b.classes[j] == b.classes[i]) {
        rep = j;
        break;
      }
    out.classes[i] = uint8_t(rep);
  }
  return out;
}

bool Collapse::refines(const Collapse& coarser) const {
  for (size_t i = 0; i < classes.size(); ++i)
    if (coarser.classes[classes[i]] != coarser.classes[i]) return false;
  return true;
}

int Ordering::pair_count() const {
  int count = 0;
  for (uint64_t row : rows) count += std::popcount(row);
  return count;
}

bool Ordering::subset_of(const Ordering& o) const {
  for (size_t i = 0; i < rows.size(); ++i)
    if (rows[i] & ~o.rows[i]) return false;
  return true;
}

Collapse Ordering::induced_collapse() const {
  Collapse c;
  c.classes.assign(rows.size(), 0);
  for (size_t i = 0; i < rows.size(); ++i) {
    size_t rep = i;
    for (size_t j = 0; j < i; ++j)
      if (contains(i, j) && contains(j, i)) {
        rep = j;
        break;
      }
    c.classes[i] = uint8_t(rep);
  }
  return c;
}

std::string collapse_to_json(const Collapse& c, const std::vector<int>& catalog) {
  std::vector<std::vector<std::string>> groups;
  for (size_t rep = 0; rep < c.classes.size(); ++rep) {
    if (c.classes[rep] != rep) continue;
    std::vector<std::string> names;
    for (size_t i = 0; i < c.classes.size(); ++i)
      if (c.classes[i] == rep)
        names.emplace_back(kCatalogNames[catalog[i]]);
    std::sort(names.begin(), names.end());
    groups.push_back(std::move(names));
  }
  std::sort(groups.begin(), groups.end());
  std::string out = "[";
  for (size_t g = 0; g < groups.size(); ++g) {
    out += g ? ", [" : "[";
    for (size_t i = 0; i < groups[g].size(); ++i) {
      if (i) out += ", ";
      out += "\"" + groups[g][i] + "\"";
    }
    out += "]";
  }
  return out + "]";
}

std::string ordering_to_json(const Ordering& o, const std::vector<int>& catalog) {
  std::vector<std::pair<std::string, std::string>> pairs;
  for (size_t i = 0; i < o.size(); ++i)
    for (size_t j = 0; j < o.size(); ++j)
      if (o.contains(int(i), int(j)))
        pairs.emplace_back(std::string(kCatalogNames[catalog[i]]),
                           std::string(kCatalogNames[catalog[j]]));
  std::sort(pairs.begin(), pairs.end());
  std::string out = "[";
  for (size_t p = 0; p < pairs.size(); ++p) {
    if (p) out += ", ";
    out += "[\"" + pairs[p].first + "\", \"" + pairs[p].second + "\"]";
  }
  return out + "]";
}

}  // namespace kfg
