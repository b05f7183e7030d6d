#include "kfg/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <numeric>
#include <set>
#include <thread>

#include <nlohmann/json.hpp>

#include "kfg/classifier.hpp"
#include "kfg/reference.hpp"
#include "kfg/set_operator.hpp"
#include "labeled_scan.hpp"

namespace kfg {

void enumerate_labeled(int n, const std::function<void(const Topology&)>& fn) {
  if (n < 1 || n > 6) throw OracleLimitExceeded(n);
  detail::for_each_labeled_preorder(n, fn);
}

// --- canonical form ----------------------------------------------------------

namespace {

// Iterated colour refinement over closures and minimal neighbourhoods; the
// resulting classes bound the permutations the lexmin search must try.
std::vector<int> point_colors(const Topology& t) {
  int n = t.n();
  std::vector<Code> cl(n), up(n);
  for (int x = 0; x < n; ++x) cl[x] = t.closure(Code(1) << x);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (cl[y] >> x & 1) up[x] |= Code(1) << y;

  std::vector<int> color(n);
  for (int x = 0; x < n; ++x)
    color[x] = popcount(cl[x]) * (n + 1) + popcount(up[x]);
  for (int round = 0; round < n; ++round) {
    std::vector<std::vector<int>> sig(n);
    for (int x = 0; x < n; ++x) {
      sig[x].push_back(color[x]);
      std::vector<int> down_colors, up_colors;
      for (int y = 0; y < n; ++y) {
        if (cl[x] >> y & 1) down_colors.push_back(color[y]);
        if (up[x] >> y & 1) up_colors.push_back(color[y]);
      }
      std::sort(down_colors.begin(), down_colors.end());
      std::sort(up_colors.begin(), up_colors.end());
      sig[x].insert(sig[x].end(), down_colors.begin(), down_colors.end());
      sig[x].push_back(-1);
      sig[x].insert(sig[x].end(), up_colors.begin(), up_colors.end());
    }
    std::vector<std::vector<int>> sorted = sig;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<int> next(n);
    for (int x = 0; x < n; ++x)
      next[x] = int(std::lower_bound(sorted.begin(), sorted.end(), sig[x]) -
                    sorted.begin());
    if (next == color) break;
    color = next;
  }
  return color;
}

std::vector<Code> table_under_permutation(const Topology& t,
                                          const std::vector<int>& pos) {
  int n = t.n();
  std::vector<Code> point_cl(n);  // indexed by new position
  for (int x = 0; x < n; ++x) {
    Code cl = t.closure(Code(1) << x);
    Code mapped = 0;
    for (int y = 0; y < n; ++y)
      if (cl >> y & 1) mapped |= Code(1) << pos[y];
    point_cl[pos[x]] = mapped;
  }
  std::vector<Code> table(size_t(1) << n, 0);
  for (Code s = 1; s < table.size(); ++s) {
    Code low = s & (~s + 1);
    table[s] = table[s ^ low] | point_cl[std::countr_zero(low)];
  }
  return table;
}

}  // namespace

CanonicalSpace canonical_form(const Topology& t) {
  int n = t.n();
  std::vector<int> color = point_colors(t);

  // positions are handed out colour class by colour class, in sorted colour
  // order; only orderings inside a class remain to be searched
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return color[a] < color[b]; });

  std::vector<Code> best;
  std::vector<int> pos(n, -1);
  std::vector<int> perm(n);  // perm[p] = original point at position p

  auto descend = [&](auto&& self, int p) -> void {
    if (p == n) {
      std::vector<int> position_of(n);
      for (int q = 0; q < n; ++q) position_of[perm[q]] = q;
      std::vector<Code> table = table_under_permutation(t, position_of);
      if (best.empty() || table < best) best = std::move(table);
      return;
    }
    for (int x : order) {
      if (pos[x] >= 0 || color[x] != color[order[p]]) continue;
      pos[x] = p;
      perm[p] = x;
      self(self, p + 1);
      pos[x] = -1;
    }
  };
  descend(descend, 0);

  CanonicalSpace out;
  out.n = n;
  out.closure = std::move(best);
  out.type = classify_space(t);
  return out;
}

// --- block decomposition generator ------------------------------------------

namespace {

// Partial order on k distinguishable blocks: down[i] is the order ideal of
// block i including itself. Canonical form: the lexicographically least row
// sequence over linear-extension labelings (rows are then lower triangular).
struct Poset {
  int k = 0;
  std::vector<uint16_t> down;

  bool operator<(const Poset& o) const { return down < o.down; }
  bool operator==(const Poset&) const = default;
};

struct CanonicalPoset {
  Poset poset;
  std::vector<std::vector<int>> automorphisms;
};

CanonicalPoset canonicalize_poset(const Poset& p) {
  int k = p.k;
  std::vector<uint16_t> best;
  std::vector<uint16_t> rows(k);
  std::vector<int> pos(k, -1);

  auto descend = [&](auto&& self, int depth) -> void {
    if (depth == k) {
      std::vector<uint16_t> current(rows.begin(), rows.end());
      if (best.empty() || current < best) best = current;
      return;
    }
    // candidates: unplaced vertices whose strict down-set is fully placed
    for (int v = 0; v < k; ++v) {
      if (pos[v] >= 0) continue;
      uint16_t strict = p.down[v] & ~(uint16_t(1) << v);
      bool ready = true;
      uint16_t row = uint16_t(1) << depth;
      for (int u = 0; u < k && ready; ++u)
        if (strict >> u & 1) {
          if (pos[u] < 0) ready = false;
          else row |= uint16_t(1) << pos[u];
        }
      if (!ready) continue;
      rows[depth] = row;
      if (!best.empty()) {
        // prune: prefix must not exceed the best sequence
        bool worse = false, better = false;
        for (int q = 0; q <= depth && !worse && !better; ++q) {
          if (rows[q] > best[q]) worse = true;
          if (rows[q] < best[q]) better = true;
        }
        if (worse) continue;
      }
      pos[v] = depth;
      self(self, depth + 1);
      pos[v] = -1;
    }
  };
  descend(descend, 0);

  CanonicalPoset out;
  out.poset = Poset{k, best};
  {
    std::vector<int> map(k, -1);
    auto search = [&](auto&& self, int v) -> void {
      if (v == k) {
        out.automorphisms.push_back(map);
        return;
      }
      for (int w = 0; w < k; ++w) {
        bool used = false;
        for (int u = 0; u < v; ++u) used |= (map[u] == w);
        if (used) continue;
        // rows must be consistent on the assigned prefix
        bool ok = true;
        for (int u = 0; u <= v && ok; ++u) {
          bool rel_uv = out.poset.down[v] >> u & 1;
          bool rel_vu = out.poset.down[u] >> v & 1;
          int mu = u == v ? w : map[u];
          bool rel_mapped_uv = out.poset.down[w] >> mu & 1;
          bool rel_mapped_vu = out.poset.down[mu] >> w & 1;
          if (u == v) {
            rel_mapped_uv = true;
            rel_mapped_vu = true;
          }
          if (rel_uv != rel_mapped_uv || rel_vu != rel_mapped_vu) ok = false;
        }
        if (!ok) continue;
        map[v] = w;
        self(self, v + 1);
        map[v] = -1;
      }
    };
    search(search, 0);
  }
  return out;
}

// All posets on k elements up to isomorphism, with automorphism groups.
const std::vector<CanonicalPoset>& posets_up_to_iso(int k) {
  static std::mutex mu;
  static std::map<int, std::vector<CanonicalPoset>> cache;
  std::scoped_lock lock(mu);
  if (cache.empty()) cache[1] = {canonicalize_poset(Poset{1, {1}})};
  for (int size = int(cache.size()) + 1; size <= k; ++size) {
    const auto& smaller = cache[size - 1];
    std::set<Poset> seen;
    std::vector<CanonicalPoset> out;
    for (const auto& base : smaller) {
      const Poset& p = base.poset;
      // extend by a new maximal element whose down-set is any order ideal
      for (uint16_t ideal = 0; ideal < (uint16_t(1) << (size - 1)); ++ideal) {
        bool closed = true;
        for (int v = 0; v < size - 1 && closed; ++v)
          if (ideal >> v & 1)
            if (p.down[v] & ~ideal) closed = false;
        if (!closed) continue;
        Poset grown{size, p.down};
        grown.down.push_back(uint16_t(ideal | (uint16_t(1) << (size - 1))));
        CanonicalPoset canon = canonicalize_poset(grown);
        if (seen.insert(canon.poset).second) out.push_back(std::move(canon));
      }
    }
    std::sort(out.begin(), out.end(),
              [](const CanonicalPoset& a, const CanonicalPoset& b) {
                return a.poset < b.poset;
              });
    cache[size] = std::move(out);
  }
  return cache.at(k);
}

Topology expand_blocks(const Poset& p, const std::vector<int>& mult) {
  int n = 0;
  std::vector<int> offset(p.k);
  for (int b = 0; b < p.k; ++b) {
    offset[b] = n;
    n += mult[b];
  }
  std::vector<Code> block_mask(p.k, 0);
  for (int b = 0; b < p.k; ++b)
    for (int j = 0; j < mult[b]; ++j)
      block_mask[b] |= Code(1) << (offset[b] + j);

  std::vector<Code> point_cl(n, 0);
  for (int b = 0; b < p.k; ++b) {
    Code cl = 0;
    for (int l = 0; l < p.k; ++l)
      if (p.down[b] >> l & 1) cl |= block_mask[l];
    for (int j = 0; j < mult[b]; ++j) point_cl[offset[b] + j] = cl;
  }
  std::vector<Code> table(size_t(1) << n, 0);
  for (Code s = 1; s < table.size(); ++s) {
    Code low = s & (~s + 1);
    table[s] = table[s ^ low] | point_cl[std::countr_zero(low)];
  }
  return Topology(n, std::move(table));
}

void multiplicity_reps(const CanonicalPoset& cp, int total,
                       const std::function<void(const std::vector<int>&)>& fn) {
  int k = cp.poset.k;
  std::vector<int> mult(k, 1);
  int spare = total - k;
  auto descend = [&](auto&& self, int b, int left) -> void {
    if (b == k - 1) {
      mult[b] = 1 + left;
      // keep only the lexicographically least vector in its orbit
      for (const auto& sigma : cp.automorphisms) {
        std::vector<int> moved(k);
        for (int v = 0; v < k; ++v) moved[sigma[v]] = mult[v];
        if (moved < mult) return;
      }
      fn(mult);
      return;
    }
    for (int extra = 0; extra <= left; ++extra) {
      mult[b] = 1 + extra;
      self(self, b + 1, left - extra);
    }
  };
  if (k > total) return;
  descend(descend, 0, spare);
}

}  // namespace

std::vector<Topology> generate_classes(int n) {
  if (n < 1 || n > kMaxPoints) throw UniverseTooLarge(n);
  std::vector<std::pair<std::vector<Code>, Topology>> keyed;
  for (int k = 1; k <= n; ++k) {
    for (const auto& cp : posets_up_to_iso(k)) {
      multiplicity_reps(cp, n, [&](const std::vector<int>& mult) {
        Topology t = expand_blocks(cp.poset, mult);
        keyed.emplace_back(canonical_form(t).closure, std::move(t));
      });
    }
  }
  std::sort(keyed.begin(), keyed.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Topology> out;
  out.reserve(keyed.size());
  for (auto& [key, t] : keyed) out.push_back(std::move(t));
  return out;
}

const std::vector<Topology>& enumerate_classes(int n) {
  static std::mutex mu;
  static std::map<int, std::vector<Topology>> cache;
  std::scoped_lock lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, generate_classes(n)).first;
  return it->second;
}

long long FrequencyRecord::total() const {
  long long sum = 0;
  for (const auto& [type, count] : counts) sum += count;
  return sum;
}

FrequencyRecord monoid_frequencies(int n) {
  FrequencyRecord rec;
  rec.n = n;
  for (auto type : {SpaceType::GE, SpaceType::KD, SpaceType::ED, SpaceType::OU,
                    SpaceType::EO, SpaceType::P, SpaceType::D})
    rec.counts[type] = 0;
  for (const Topology& t : enumerate_classes(n)) ++rec.counts[classify_space(t)];
  return rec;
}

SearchResult minimal_search(int max_n,
                            const std::function<bool(const Topology&)>& pred) {
  for (int n = 1; n <= max_n; ++n)
    for (const Topology& t : enumerate_classes(n))
      if (pred(t)) return {n, t, std::nullopt};
  throw NotFoundWithinBound();
}

SearchResult minimal_search_subset(
    int max_n, const std::function<bool(const Topology&, Code)>& pred) {
  for (int n = 1; n <= max_n; ++n)
    for (const Topology& t : enumerate_classes(n))
      for (Code a = 0; a < t.subset_count(); ++a)
        if (pred(t, a)) return {n, t, a};
  throw NotFoundWithinBound();
}

// --- censuses ----------------------------------------------------------------

CensusKind census_kind_from_string(const std::string& name) {
  if (name == "kf-collapses") return CensusKind::KfCollapses;
  if (name == "kfg0-collapses") return CensusKind::Kfg0Collapses;
  if (name == "kf-orderings") return CensusKind::KfOrderings;
  if (name == "kfg0-orderings") return CensusKind::Kfg0Orderings;
  if (name == "k-orderings") return CensusKind::KOrderings;
  if (name == "kf0-orderings") return CensusKind::Kf0Orderings;
  if (name == "relation-classes") return CensusKind::RelationClasses;
  throw std::runtime_error("unknown census kind: " + name);
}

std::string to_string(CensusKind kind) {
  switch (kind) {
    case CensusKind::KfCollapses: return "kf-collapses";
    case CensusKind::Kfg0Collapses: return "kfg0-collapses";
    case CensusKind::KfOrderings: return "kf-orderings";
    case CensusKind::Kfg0Orderings: return "kfg0-orderings";
    case CensusKind::KOrderings: return "k-orderings";
    case CensusKind::Kf0Orderings: return "kf0-orderings";
    case CensusKind::RelationClasses: return "relation-classes";
  }
  return "?";
}

namespace {

std::string collapse_key(const Topology& t, Code a, const std::vector<int>& catalog) {
  std::vector<Code> values(catalog.size());
  for (size_t i = 0; i < catalog.size(); ++i)
    values[i] = eval_catalog_word(t, catalog[i], a);
  std::string key(catalog.size(), 0);
  for (size_t i = 0; i < values.size(); ++i) {
    size_t rep = i;
    for (size_t j = 0; j < i; ++j)
      if (values[j] == values[i]) {
        rep = j;
        break;
      }
    key[i] = char(rep);
  }
  return key;
}

std::string ordering_key(const Topology& t, Code a, const std::vector<int>& catalog) {
  std::vector<Code> values(catalog.size());
  for (size_t i = 0; i < catalog.size(); ++i)
    values[i] = eval_catalog_word(t, catalog[i], a);
  std::string key((catalog.size() * catalog.size() + 7) / 8, 0);
  size_t bit = 0;
  for (size_t i = 0; i < values.size(); ++i)
    for (size_t j = 0; j < values.size(); ++j, ++bit)
      if (subset_of(values[i], values[j])) key[bit / 8] |= char(1 << (bit % 8));
  return key;
}

// Representative relations over the 17-word even catalog: equalities
// o1A=o2A, equalities o1A=a(o2A), and the inclusions left open by the
// universal order, reduced exactly as the relation-class count expects.
struct RelationRep {
  int w1, w2;
  enum Form { EQ, EQ_COMPL, INCL, INCL_COMPL_LEFT, INCL_COMPL_RIGHT } form;
};

std::vector<RelationRep> relation_representatives() {
  auto kf0 = catalog_kf0();
  const Ordering& ord = universal_order_kf();  // over the 34-word catalog
  auto comparable = [&](int i, int j) {
    return ord.contains(i, j) || ord.contains(j, i);
  };
  // strict down-set of ff (position of "ff" within the even half)
  int ff = word_index("ff");
  std::vector<bool> below_ff(kf0.size(), false);
  for (size_t i = 0; i < kf0.size(); ++i) below_ff[i] = ord.contains(int(i), ff);
  auto in_triple = [&](int i, int j) {
    static const std::vector<std::vector<std::string_view>> triples = {
        {"i", "ibi", "bi"}, {"ib", "bib", "b"}, {"if", "bif", "f"}};
    for (const auto& tr : triples) {
      bool has_i = false, has_j = false;
      for (auto w : tr) {
        if (kCatalogNames[kf0[i]] == w) has_i = true;
        if (kCatalogNames[kf0[j]] == w) has_j = true;
      }
      if (has_i && has_j) return true;
    }
    return false;
  };
  int id_pos = 0;  // "id" is catalog position 0
  std::vector<RelationRep> reps;
  for (size_t i = 0; i < kf0.size(); ++i)
    for (size_t j = i + 1; j < kf0.size(); ++j) {
      reps.push_back({int(i), int(j), RelationRep::EQ});
      bool excluded = (below_ff[i] && below_ff[j]) || in_triple(int(i), int(j)) ||
                      (int(i) == id_pos && kf0[j] < 7) ||
                      (int(j) == id_pos && kf0[i] < 7);
      if (!excluded) reps.push_back({int(i), int(j), RelationRep::EQ_COMPL});
    }
  for (size_t i = 0; i < kf0.size(); ++i)
    for (size_t j = 0; j < kf0.size(); ++j) {
      if (i == j || comparable(int(i), int(j))) continue;
      reps.push_back({int(i), int(j), RelationRep::INCL});
      if (i < j) {
        if (!(below_ff[i] && below_ff[j]))
          reps.push_back({int(i), int(j), RelationRep::INCL_COMPL_LEFT});
        reps.push_back({int(i), int(j), RelationRep::INCL_COMPL_RIGHT});
      }
    }
  return reps;
}

std::vector<bool> relation_truths(const Topology& t, Code a,
                                  const std::vector<RelationRep>& reps) {
  auto kf0 = catalog_kf0();
  std::vector<Code> v(kf0.size());
  for (size_t i = 0; i < kf0.size(); ++i)
    v[i] = eval_catalog_word(t, kf0[i], a);
  const Code full = t.universe();
  std::vector<bool> out(reps.size());
  for (size_t r = 0; r < reps.size(); ++r) {
    Code x = v[reps[r].w1], y = v[reps[r].w2];
    switch (reps[r].form) {
      case RelationRep::EQ: out[r] = x == y; break;
      case RelationRep::EQ_COMPL: out[r] = x == (full & ~y); break;
      case RelationRep::INCL: out[r] = subset_of(x, y); break;
      case RelationRep::INCL_COMPL_LEFT:
        out[r] = subset_of(full & ~x, y);
        break;
      case RelationRep::INCL_COMPL_RIGHT:
        out[r] = subset_of(x, full & ~y);
        break;
    }
  }
  return out;
}

}  // namespace

CensusRecord census(CensusKind kind, int max_n, int jobs) {
  CensusRecord rec{kind, max_n, {}};
  if (kind == CensusKind::RelationClasses) {
    auto reps = relation_representatives();
    // partition of representatives refined by their satisfaction pattern
    std::vector<int> klass(reps.size(), 0);
    for (int n = 1; n <= max_n; ++n) {
      for (const Topology& t : enumerate_classes(n))
        for (Code a = 0; a < t.subset_count(); ++a) {
          std::vector<bool> truth = relation_truths(t, a, reps);
          std::map<std::pair<int, bool>, int> renumber;
          std::vector<int> next(reps.size());
          for (size_t r = 0; r < reps.size(); ++r) {
            auto key = std::make_pair(klass[r], bool(truth[r]));
            auto [it, fresh] = renumber.emplace(key, int(renumber.size()));
            next[r] = it->second;
          }
          klass = std::move(next);
        }
      std::set<int> distinct(klass.begin(), klass.end());
      rec.cumulative.push_back(static_cast<long long>(distinct.size()));
    }
    return rec;
  }

  std::vector<int> catalog;
  bool orderings = false;
  switch (kind) {
    case CensusKind::KfCollapses: catalog = catalog_kf(); break;
    case CensusKind::Kfg0Collapses: catalog = catalog_kfg0(); break;
    case CensusKind::KfOrderings: catalog = catalog_kf(); orderings = true; break;
    case CensusKind::Kfg0Orderings: catalog = catalog_kfg0(); orderings = true; break;
    case CensusKind::KOrderings: catalog = catalog_k(); orderings = true; break;
    case CensusKind::Kf0Orderings: catalog = catalog_kf0(); orderings = true; break;
    default: break;
  }

  std::set<std::string> seen;
  for (int n = 1; n <= max_n; ++n) {
    const auto& classes = enumerate_classes(n);
    int workers = std::max(1, jobs);
    std::vector<std::set<std::string>> partial(workers);
    std::atomic<size_t> cursor{0};
    auto work = [&](int w) {
      while (true) {
        size_t idx = cursor.fetch_add(1);
        if (idx >= classes.size()) return;
        const Topology& t = classes[idx];
        for (Code a = 0; a < t.subset_count(); ++a)
          partial[w].insert(orderings ? ordering_key(t, a, catalog)
                                      : collapse_key(t, a, catalog));
      }
    };
    if (workers == 1) {
      work(0);
    } else {
      std::vector<std::thread> pool;
      for (int w = 0; w < workers; ++w) pool.emplace_back(work, w);
      for (auto& th : pool) th.join();
    }
    for (auto& p : partial) seen.merge(p);
    rec.cumulative.push_back(static_cast<long long>(seen.size()));
  }
  return rec;
}

// --- disk cache ---------------------------------------------------------------

uint64_t fnv1a(const std::string& bytes) {
  uint64_t h = 1469598103934665603ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

namespace {

namespace fs = std::filesystem;

fs::path class_file(const std::string& dir, int n) {
  return fs::path(dir) / ("classes_n" + std::to_string(n) + ".jsonl");
}
fs::path manifest_file(const std::string& dir) {
  return fs::path(dir) / "manifest.json";
}

}  // namespace

void cache_store(const std::string& dir, int n) {
  fs::create_directories(dir);
  const auto& classes = enumerate_classes(n);
  std::string body;
  for (const Topology& t : classes) body += topology_to_json(t) + "\n";
  {
    std::ofstream out(class_file(dir, n));
    out << body;
  }
  nlohmann::json manifest;
  if (fs::exists(manifest_file(dir))) {
    std::ifstream in(manifest_file(dir));
    in >> manifest;
  }
  manifest["version"] = 1;
  manifest["entries"][std::to_string(n)] = {
      {"count", classes.size()}, {"hash", fnv1a(body)}};
  std::ofstream out(manifest_file(dir));
  out << manifest.dump(2) << "\n";
}

bool cache_has(const std::string& dir, int n) {
  return fs::exists(class_file(dir, n)) && fs::exists(manifest_file(dir));
}

std::vector<Topology> cache_load(const std::string& dir, int n) {
  std::ifstream manifest_in(manifest_file(dir));
  if (!manifest_in) throw StaleCache("missing manifest");
  nlohmann::json manifest;
  manifest_in >> manifest;
  auto entry = manifest["entries"].find(std::to_string(n));
  if (entry == manifest["entries"].end()) throw StaleCache("n not in manifest");

  std::ifstream in(class_file(dir, n));
  if (!in) throw StaleCache("missing class file");
  std::string body((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  if (fnv1a(body) != (*entry)["hash"].get<uint64_t>())
    throw StaleCache("content hash mismatch");

  std::vector<Topology> out;
  std::istringstream lines(body);
  std::string line;
  while (std::getline(lines, line))
    if (!line.empty()) out.push_back(topology_from_json(line));
  if (out.size() != (*entry)["count"].get<size_t>())
    throw StaleCache("count mismatch");
  return out;
}

}  // namespace kfg
