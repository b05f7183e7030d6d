#include "kfg/monoid.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <span>

#include "kfg/reference.hpp"
#include "labeled_scan.hpp"

namespace kfg {

std::string to_string(SpaceType t) {
  switch (t) {
    case SpaceType::GE: return "GE";
    case SpaceType::KD: return "KD";
    case SpaceType::ED: return "ED";
    case SpaceType::OU: return "OU";
    case SpaceType::EO: return "EO";
    case SpaceType::P: return "P";
    case SpaceType::D: return "D";
  }
  return "?";
}

std::string to_string(SpaceTypeG t) {
  switch (t) {
    case SpaceTypeG::GE: return "GE";
    case SpaceTypeG::KD: return "KD";
    case SpaceTypeG::ED1: return "ED1";
    case SpaceTypeG::ED2: return "ED2";
    case SpaceTypeG::OU1: return "OU1";
    case SpaceTypeG::OU2: return "OU2";
    case SpaceTypeG::EO1: return "EO1";
    case SpaceTypeG::EO2: return "EO2";
    case SpaceTypeG::P: return "P";
    case SpaceTypeG::D: return "D";
  }
  return "?";
}

std::vector<SetOperator> generate_monoid(
    const Topology& t, const std::vector<std::string>& generators) {
  std::vector<SetOperator> gens;
  gens.reserve(generators.size());
  for (const auto& g : generators) gens.push_back(word_to_operator(t, g));
  std::vector<SetOperator> found = {SetOperator::identity(t.n())};
  std::set<std::vector<Code>> seen = {found[0].table()};
  for (size_t head = 0; head < found.size(); ++head) {
    for (const auto& g : gens) {
      SetOperator next = compose(g, found[head]);
      if (seen.insert(next.table()).second) found.push_back(std::move(next));
    }
  }
  return found;
}

std::vector<SetOperator> catalog_tables(const Topology& t,
                                        const std::vector<int>& catalog) {
  std::vector<SetOperator> out;
  out.reserve(catalog.size());
  for (int idx : catalog)
    out.push_back(word_to_operator(t, kCatalogNames[idx]));
  return out;
}

Collapse space_collapse(const Topology& t, const std::vector<int>& catalog) {
  auto tables = catalog_tables(t, catalog);
  Collapse c;
  c.classes.assign(catalog.size(), 0);
  for (size_t i = 0; i < tables.size(); ++i) {
    size_t rep = i;
    for (size_t j = 0; j < i; ++j)
      if (tables[j] == tables[i]) {
        rep = j;
        break;
      }
    c.classes[i] = uint8_t(rep);
  }
  return c;
}

Ordering space_ordering(const Topology& t, const std::vector<int>& catalog) {
  auto tables = catalog_tables(t, catalog);
  Ordering o;
  o.rows.assign(catalog.size(), 0);
  for (size_t i = 0; i < tables.size(); ++i)
    for (size_t j = 0; j < tables.size(); ++j)
      if (leq(tables[i], tables[j])) o.add(int(i), int(j));
  return o;
}

namespace {

bool tables_equal(const Topology& t, std::string_view w1, std::string_view w2) {
  for (Code s = 0; s < t.subset_count(); ++s)
    if (eval_word(t, w1, s) != eval_word(t, w2, s)) return false;
  return true;
}

bool table_is_zero(const Topology& t, std::string_view w) {
  for (Code s = 0; s < t.subset_count(); ++s)
    if (eval_word(t, w, s) != 0) return false;
  return true;
}

}  // namespace

SpaceType classify_space(const Topology& t) {
  bool ib_eq = tables_equal(t, "ib", "bib");
  bool bi_eq = tables_equal(t, "bi", "bib");
  bool b_eq = tables_equal(t, "b", "bib");
  if (!ib_eq && !bi_eq && !b_eq)
    return table_is_zero(t, "fif") ? SpaceType::KD : SpaceType::GE;
  if (ib_eq && !bi_eq && !b_eq) return SpaceType::ED;
  if (!ib_eq && bi_eq && !b_eq) return SpaceType::OU;
  if (ib_eq && bi_eq && !b_eq) return SpaceType::EO;
  if (ib_eq && !bi_eq && b_eq) return SpaceType::P;
  if (ib_eq && bi_eq && b_eq) return SpaceType::D;
  throw std::runtime_error("closure table is not a topology");
}

SpaceTypeG classify_space_g(const Topology& t) {
  switch (classify_space(t)) {
    case SpaceType::GE: return SpaceTypeG::GE;
    case SpaceType::KD: return SpaceTypeG::KD;
    case SpaceType::ED:
      return tables_equal(t, "fbg", "fb") ? SpaceTypeG::ED2 : SpaceTypeG::ED1;
    case SpaceType::OU:
      return tables_equal(t, "g", "bg") ? SpaceTypeG::OU2 : SpaceTypeG::OU1;
    case SpaceType::EO:
      return tables_equal(t, "fb", "g") ? SpaceTypeG::EO2 : SpaceTypeG::EO1;
    case SpaceType::P: return SpaceTypeG::P;
    case SpaceType::D: return SpaceTypeG::D;
  }
  throw std::runtime_error("unreachable");
}

int k_number_of_type(SpaceType t) {
  switch (t) {
    case SpaceType::GE:
    case SpaceType::KD: return 14;
    case SpaceType::ED:
    case SpaceType::OU: return 10;
    case SpaceType::EO: return 8;
    case SpaceType::P: return 6;
    case SpaceType::D: return 2;
  }
  return 0;
}

int kf_number_of_type(SpaceType t) {
  switch (t) {
    case SpaceType::GE: return 34;
    case SpaceType::KD: return 28;
    case SpaceType::ED: return 22;
    case SpaceType::OU: return 20;
    case SpaceType::EO: return 16;
    case SpaceType::P: return 10;
    case SpaceType::D: return 4;
  }
  return 0;
}

namespace {

void require_partial_order(const Ordering& p) {
  size_t n = p.size();
  for (size_t i = 0; i < n; ++i) {
    if (!p.contains(int(i), int(i))) throw NotAPartialOrder();
    for (size_t j = 0; j < n; ++j) {
      if (!p.contains(int(i), int(j))) continue;
      if (i != j && p.contains(int(j), int(i))) throw NotAPartialOrder();
      if (p.rows[j] & ~p.rows[i]) throw NotAPartialOrder();
    }
  }
}

}  // namespace

std::vector<std::pair<int, int>> extender(const Ordering& p) {
  require_partial_order(p);
  size_t n = p.size();
  std::vector<uint64_t> down(n, 0);  // down[j] = {i : i <= j}
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      if (p.contains(int(i), int(j))) down[j] |= uint64_t(1) << i;
  std::vector<std::pair<int, int>> out;
  for (size_t x = 0; x < n; ++x)
    for (size_t y = 0; y < n; ++y) {
      if (x == y || p.contains(int(x), int(y)) || p.contains(int(y), int(x)))
        continue;
      uint64_t self_x = uint64_t(1) << x, self_y = uint64_t(1) << y;
      if ((down[x] & ~self_x) & ~down[y]) continue;   // u <= x but not u <= y
      if ((p.rows[y] & ~self_y) & ~p.rows[x]) continue;  // y <= v but not x <= v
      out.emplace_back(int(x), int(y));
    }
  return out;
}

RefineResult poset_refines(const Ordering& p, const Ordering& q) {
  if (!p.subset_of(q)) throw NotContained();
  for (auto [x, y] : extender(p))
    if (q.contains(x, y)) return {false, {x, y}};
  return {true, {-1, -1}};
}

// --- representative spaces and canonical collapses -------------------------

namespace {

Topology build_base(const ref::BaseSpec& spec) {
  std::vector<Code> base;
  for (const auto& open : spec.opens) {
    Code mask = 0;
    for (int p : open) mask |= Code(1) << p;
    base.push_back(mask);
  }
  return from_base(base, spec.n);
}

struct TypeReps {
  std::map<SpaceType, Topology> plain;
  std::map<SpaceTypeG, Topology> bordered;
};

const TypeReps& type_reps() {
  static const TypeReps reps = [] {
    TypeReps r;
    for (auto name : {"GE", "KD", "ED", "OU", "EO", "P", "D"}) {
      Topology t = build_base(ref::minimal_base(name));
      r.plain.emplace(classify_space(t), t);
    }
    // the ten bordered types all occur among small spaces; scan labeled
    // topologies until every one has a representative
    for (int n = 1; n <= 6 && r.bordered.size() < 10; ++n) {
      detail::for_each_labeled_preorder(n, [&](const Topology& t) {
        if (r.bordered.size() == 10) return;
        SpaceTypeG g = classify_space_g(t);
        r.bordered.emplace(g, t);
      });
    }
    if (r.plain.size() != 7 || r.bordered.size() != 10)
      throw std::runtime_error("type representatives incomplete");
    return r;
  }();
  return reps;
}

}  // namespace

const Topology& minimal_space(SpaceType t) { return type_reps().plain.at(t); }

const Collapse& canonical_collapse(SpaceType t) {
  static const std::map<SpaceType, Collapse> cache = [] {
    std::map<SpaceType, Collapse> m;
    for (const auto& [type, topo] : type_reps().plain)
      m.emplace(type, space_collapse(topo, catalog_kf()));
    return m;
  }();
  return cache.at(t);
}

const Collapse& canonical_collapse_g(SpaceTypeG t) {
  static const std::map<SpaceTypeG, Collapse> cache = [] {
    std::map<SpaceTypeG, Collapse> m;
    for (const auto& [type, topo] : type_reps().bordered)
      m.emplace(type, space_collapse(topo, catalog_kfg()));
    return m;
  }();
  return cache.at(t);
}

bool projection_order(SpaceType t1, SpaceType t2) {
  return canonical_collapse(t2).refines(canonical_collapse(t1));
}

bool projection_order_g(SpaceTypeG t1, SpaceTypeG t2) {
  return canonical_collapse_g(t2).refines(canonical_collapse_g(t1));
}

// --- universal orders -------------------------------------------------------

std::string negate_word_name(std::string_view name) {
  if (name == "id") return "a";
  if (name == "a") return "id";
  if (name == "0") return "1";
  if (name == "1") return "0";
  if (name[0] == 'a') return std::string(name.substr(1));
  return "a" + std::string(name);
}

namespace {

Ordering expand_order(const std::vector<int>& catalog,
                      std::span<const ref::Edge> solid,
                      std::span<const ref::Edge> dashed) {
  std::map<std::string, int> pos;
  for (size_t i = 0; i < catalog.size(); ++i)
    pos.emplace(std::string(kCatalogNames[catalog[i]]), int(i));

  std::vector<std::pair<std::string, std::string>> pairs;
  for (auto [x, y] : solid) pairs.emplace_back(std::string(x), std::string(y));
  for (auto [x, y] : dashed) {
    pairs.emplace_back(std::string(x), negate_word_name(y));
    pairs.emplace_back(std::string(y), negate_word_name(x));
  }
  size_t direct = pairs.size();
  for (size_t i = 0; i < direct; ++i)
    pairs.emplace_back(negate_word_name(pairs[i].second),
                       negate_word_name(pairs[i].first));

  Ordering o;
  o.rows.assign(catalog.size(), 0);
  for (size_t i = 0; i < catalog.size(); ++i) o.add(int(i), int(i));
  for (const auto& [x, y] : pairs) o.add(pos.at(x), pos.at(y));
  // transitive closure
  for (size_t k = 0; k < catalog.size(); ++k)
    for (size_t i = 0; i < catalog.size(); ++i)
      if (o.contains(int(i), int(k))) o.rows[i] |= o.rows[k];
  return o;
}

std::vector<std::pair<int, int>> expand_extender(
    const std::vector<int>& catalog,
    std::span<const ref::Edge> solid,
    std::span<const ref::Edge> dashed,
    std::span<const std::string_view> loops) {
  std::map<std::string, int> pos;
  for (size_t i = 0; i < catalog.size(); ++i)
    pos.emplace(std::string(kCatalogNames[catalog[i]]), int(i));

  std::vector<std::pair<std::string, std::string>> pairs;
  for (auto [x, y] : solid) pairs.emplace_back(std::string(x), std::string(y));
  for (auto [x, y] : dashed) {
    pairs.emplace_back(std::string(x), negate_word_name(y));
    pairs.emplace_back(std::string(y), negate_word_name(x));
  }
  for (auto o : loops)
    pairs.emplace_back(std::string(o), negate_word_name(o));
  size_t direct = pairs.size();
  for (size_t i = 0; i < direct; ++i)
    pairs.emplace_back(negate_word_name(pairs[i].second),
                       negate_word_name(pairs[i].first));

  std::set<std::pair<int, int>> out;
  for (const auto& [x, y] : pairs) out.emplace(pos.at(x), pos.at(y));
  return {out.begin(), out.end()};
}

}  // namespace

const Ordering& universal_order_kf() {
  static const Ordering o =
      expand_order(catalog_kf(), ref::kOrderKfSolid, ref::kOrderKfDisjoint);
  return o;
}

const Ordering& universal_order_kfg() {
  static const Ordering o =
      expand_order(catalog_kfg(), ref::kOrderKfgSolid, ref::kOrderKfgDisjoint);
  return o;
}

const std::vector<std::pair<int, int>>& universal_extender_kf() {
  static const std::vector<std::pair<int, int>> e = expand_extender(
      catalog_kf(), ref::kExtenderKf, {}, {});
  return e;
}

const std::vector<std::pair<int, int>>& universal_extender_kfg() {
  static const std::vector<std::pair<int, int>> e = expand_extender(
      catalog_kfg(), ref::kExtenderKfgSolid, ref::kExtenderKfgDisjoint,
      ref::kExtenderKfgLoops);
  return e;
}

}  // namespace kfg
