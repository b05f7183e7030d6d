#include "kfg/classifier.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>

#include "kfg/expr.hpp"
#include "kfg/reference.hpp"
#include "kfg/set_operator.hpp"
#include "embedded_data.hpp"

namespace kfg {

int OrbitFamily::distinct_count() const {
  std::vector<Code> sorted = values;
  std::sort(sorted.begin(), sorted.end());
  return int(std::unique(sorted.begin(), sorted.end()) - sorted.begin());
}

OrbitFamily orbit_family(const Topology& t, Code a,
                         const std::vector<int>& catalog) {
  OrbitFamily fam;
  fam.values.reserve(catalog.size());
  for (int idx : catalog) fam.values.push_back(eval_catalog_word(t, idx, a));
  return fam;
}

int k_number(const Topology& t, Code a) {
  return orbit_family(t, a, catalog_k()).distinct_count();
}

int kf_number(const Topology& t, Code a) {
  return orbit_family(t, a, catalog_kf()).distinct_count();
}

int k_number_of_space(const Topology& t) {
  int best = 0;
  for (Code a = 0; a < t.subset_count(); ++a)
    best = std::max(best, k_number(t, a));
  return best;
}

int kf_number_of_space(const Topology& t) {
  int best = 0;
  for (Code a = 0; a < t.subset_count(); ++a)
    best = std::max(best, kf_number(t, a));
  return best;
}

// --- predicate catalog -------------------------------------------------------

namespace {

struct Atom {
  int word1;
  int word2;
  bool equal;
};

struct PredicateCatalog {
  std::vector<std::string> words;          // distinct words used by atoms
  std::vector<std::vector<Atom>> phi;      // 30 records
  std::vector<std::vector<Atom>> psi;      // 70 records

  int word_id(const std::string& w) {
    for (size_t i = 0; i < words.size(); ++i)
      if (words[i] == w) return int(i);
    words.push_back(w);
    return int(words.size()) - 1;
  }
};

std::string strip(const std::string& s) {
  size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

const PredicateCatalog& predicate_catalog() {
  static const PredicateCatalog cat = [] {
    PredicateCatalog c;
    c.phi.resize(30);
    c.psi.resize(70);
    std::istringstream in{std::string(embedded::kPsiPredicates)};
    std::string raw;
    while (std::getline(in, raw)) {
      std::string line = strip(raw);
      if (line.empty() || line[0] == '#') continue;
      bool is_phi = line.starts_with("phi ");
      if (!is_phi && !line.starts_with("psi "))
        throw std::runtime_error("bad predicate line: " + line);
      size_t colon = line.find(':');
      int id = std::stoi(line.substr(4, colon - 4));
      std::string body = strip(line.substr(colon + 1));
      auto& slot = is_phi ? c.phi.at(id - 1) : c.psi.at(id - 1);
      if (body.starts_with("phi ")) {
        slot = c.phi.at(std::stoi(body.substr(4)) - 1);
        continue;
      }
      std::istringstream atoms(body);
      std::string atom_text;
      while (std::getline(atoms, atom_text, ';')) {
        std::string a = strip(atom_text);
        size_t neq = a.find("!=");
        size_t eq = a.find('=');
        Atom atom;
        if (neq != std::string::npos) {
          atom.equal = false;
          atom.word1 = c.word_id(strip(a.substr(0, neq)));
          atom.word2 = c.word_id(strip(a.substr(neq + 2)));
        } else {
          atom.equal = true;
          atom.word1 = c.word_id(strip(a.substr(0, eq)));
          atom.word2 = c.word_id(strip(a.substr(eq + 1)));
        }
        slot.push_back(atom);
      }
    }
    for (const auto& rec : c.phi)
      if (rec.empty()) throw std::runtime_error("incomplete phi catalog");
    for (const auto& rec : c.psi)
      if (rec.empty()) throw std::runtime_error("incomplete psi catalog");
    return c;
  }();
  return cat;
}

int classify_against(const Topology& t, Code a,
                     const std::vector<std::vector<Atom>>& block,
                     const char* label) {
  const auto& cat = predicate_catalog();
  // evaluate every referenced word once
  std::vector<Code> value(cat.words.size());
  for (size_t w = 0; w < cat.words.size(); ++w)
    value[w] = eval_word(t, cat.words[w], a);
  int found = 0;
  for (size_t rec = 0; rec < block.size(); ++rec) {
    bool hold = true;
    for (const Atom& atom : block[rec]) {
      bool eq = value[atom.word1] == value[atom.word2];
      if (eq != atom.equal) {
        hold = false;
        break;
      }
    }
    if (!hold) continue;
    if (found) throw MultipleMatch(label, a);
    found = int(rec) + 1;
  }
  if (!found) throw NoMatch(label, a);
  return found;
}

}  // namespace

int classify_phi(const Topology& t, Code a) {
  return classify_against(t, a, predicate_catalog().phi, "phi");
}

int classify_psi(const Topology& t, Code a) {
  return classify_against(t, a, predicate_catalog().psi, "psi");
}

PsiProfile classify_profile(const Topology& t, Code a) {
  return {classify_phi(t, a), classify_psi(t, a), k_number(t, a),
          kf_number(t, a)};
}

Collapse subset_collapse(const Topology& t, Code a,
                         const std::vector<int>& catalog) {
  OrbitFamily fam = orbit_family(t, a, catalog);
  Collapse c;
  c.classes.assign(catalog.size(), 0);
  for (size_t i = 0; i < fam.values.size(); ++i) {
    size_t rep = i;
    for (size_t j = 0; j < i; ++j)
      if (fam.values[j] == fam.values[i]) {
        rep = j;
        break;
      }
    c.classes[i] = uint8_t(rep);
  }
  return c;
}

Ordering subset_ordering(const Topology& t, Code a,
                         const std::vector<int>& catalog) {
  OrbitFamily fam = orbit_family(t, a, catalog);
  Ordering o;
  o.rows.assign(catalog.size(), 0);
  for (size_t i = 0; i < fam.values.size(); ++i)
    for (size_t j = 0; j < fam.values.size(); ++j)
      if (subset_of(fam.values[i], fam.values[j])) o.add(int(i), int(j));
  return o;
}

// --- duals -------------------------------------------------------------------

namespace {

Topology build_witness(int which) {
  const auto& spec = ref::witness_bases()[which];
  std::vector<Code> base;
  for (const auto& open : spec.opens) {
    Code mask = 0;
    for (int p : open) mask |= Code(1) << p;
    base.push_back(mask);
  }
  return from_base(base, spec.n);
}

struct DualTables {
  std::array<int, 71> psi{};
  std::array<int, 31> phi{};
};

const DualTables& dual_tables() {
  static const DualTables tables = [] {
    DualTables t{};
    for (int which = 0; which < 4; ++which) {
      Topology topo = build_witness(which);
      for (Code a = 0; a < topo.subset_count(); ++a) {
        PsiProfile p = classify_profile(topo, a);
        Code ca = topo.complement(a);
        int dual_psi = classify_psi(topo, ca);
        int dual_phi = classify_phi(topo, ca);
        if (t.psi[p.psi] && t.psi[p.psi] != dual_psi)
          throw std::runtime_error("inconsistent dual for class " +
                                   std::to_string(p.psi));
        t.psi[p.psi] = dual_psi;
        t.phi[p.phi] = dual_phi;
      }
    }
    for (int m = 1; m <= 70; ++m)
      if (!t.psi[m]) throw NoWitnessFound(m);
    for (int m = 1; m <= 30; ++m)
      if (!t.phi[m]) throw NoWitnessFound(m);
    return t;
  }();
  return tables;
}

}  // namespace

int psi_dual(int m) { return dual_tables().psi.at(m); }
int phi_dual(int m) { return dual_tables().phi.at(m); }

std::vector<RecipeOutcome> psi_witness_constructions(const Topology& t, Code a) {
  int m = classify_psi(t, a);
  std::vector<RecipeOutcome> out;
  for (const auto& recipe : ref::psi_recipes()) {
    if (recipe.from != m) continue;
    Code b = SetExpr::parse(recipe.expr).eval(t, a);
    int got = classify_psi(t, b);
    out.push_back({recipe.from, recipe.to, std::string(recipe.expr), got,
                   got == recipe.to});
  }
  return out;
}

}  // namespace kfg
