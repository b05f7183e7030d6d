#include "kfg/sums.hpp"

#include <algorithm>
#include <map>

#include "kfg/enumerate.hpp"
#include "kfg/reference.hpp"

namespace kfg {

Topology sum_space(const std::vector<Topology>& components) {
  int total = 0;
  for (const Topology& c : components) total += c.n();
  if (total > kMaxPoints) throw UniverseTooLarge(total);
  if (components.size() == 1) return components.front();
  if (components.empty()) throw TopologyError("empty sum");

  // per-point closures transfer blockwise
  std::vector<Code> point_cl(total, 0);
  int offset = 0;
  for (const Topology& c : components) {
    for (int x = 0; x < c.n(); ++x)
      point_cl[offset + x] = c.closure(Code(1) << x) << offset;
    offset += c.n();
  }
  std::vector<Code> table(size_t(1) << total, 0);
  for (Code s = 1; s < table.size(); ++s) {
    Code low = s & (~s + 1);
    table[s] = table[s ^ low] | point_cl[std::countr_zero(low)];
  }
  return Topology(total, std::move(table));
}

Topology repeated_sum(const Topology& t, int copies) {
  return sum_space(std::vector<Topology>(copies, t));
}

Code embed_subset(const std::vector<Topology>& components, int which, Code s) {
  int offset = 0;
  for (int i = 0; i < which; ++i) offset += components[i].n();
  return s << offset;
}

std::set<int> psi_spectrum(const Topology& t) {
  std::set<int> out;
  for (Code a = 0; a < t.subset_count(); ++a) out.insert(classify_psi(t, a));
  return out;
}

namespace {

Topology build_column_space(const std::string& column) {
  auto build = [](const ref::BaseSpec& spec) {
    std::vector<Code> base;
    for (const auto& open : spec.opens) {
      Code mask = 0;
      for (int p : open) mask |= Code(1) << p;
      base.push_back(mask);
    }
    return from_base(base, spec.n);
  };
  if (column == "P-noni" || column == "D2") return build(ref::named_base(column));
  if (column == "P-ind") return build(ref::minimal_base("P"));
  if (column == "D1") return build(ref::minimal_base("D"));
  return build(ref::minimal_base(column));
}

}  // namespace

TopsumReport topsum_report(const std::string& column, int copies) {
  Topology base = build_column_space(column);
  TopsumReport report;
  report.column = column;
  report.copies = copies;

  std::set<int> previous;
  if (copies > 1) {
    Topology prev = repeated_sum(base, copies - 1);
    previous = psi_spectrum(prev);
  }
  Topology sum = repeated_sum(base, copies);
  std::set<int> current = psi_spectrum(sum);
  for (int v : current)
    if (v <= 68 && !previous.count(v)) report.new_psi.insert(v);
  report.k = k_number_of_space(sum);
  report.kf = kf_number_of_space(sum);
  return report;
}

// --- witness library -----------------------------------------------------------

WitnessLibrary::WitnessLibrary(int max_n) : max_n_(max_n) {
  by_psi_.resize(71);
  int found = 0;
  for (int n = 1; n <= max_n_ && found < 70; ++n) {
    for (const Topology& t : enumerate_classes(n)) {
      for (Code a = 0; a < t.subset_count(); ++a) {
        int psi = classify_psi(t, a);
        if (!by_psi_[psi]) {
          by_psi_[psi] = PsiWitness{t, a};
          ++found;
        }
      }
      if (found == 70) break;
    }
  }
}

const PsiWitness& WitnessLibrary::witness(int psi) const {
  if (psi < 1 || psi > 70 || !by_psi_[psi]) throw MissingWitness(psi);
  return *by_psi_[psi];
}

bool WitnessLibrary::has(int psi) const {
  return psi >= 1 && psi <= 70 && bool(by_psi_[psi]);
}

namespace {

int meet_by_witness(const WitnessLibrary& lib, int m, int n, bool phi_block) {
  const PsiWitness& wm = lib.witness(m);
  const PsiWitness& wn = lib.witness(n);
  std::vector<Topology> parts = {wm.space, wn.space};
  Topology sum = sum_space(parts);
  Code a = embed_subset(parts, 0, wm.subset) | embed_subset(parts, 1, wn.subset);
  return phi_block ? classify_phi(sum, a) : classify_psi(sum, a);
}

}  // namespace

int psi_meet(const WitnessLibrary& lib, int m, int n) {
  int realized = meet_by_witness(lib, m, n, false);
  // second route: the collapse of the union is the intersection of the
  // component collapses
  const PsiWitness& wm = lib.witness(m);
  const PsiWitness& wn = lib.witness(n);
  Collapse cm = subset_collapse(wm.space, wm.subset, catalog_kf());
  Collapse cn = subset_collapse(wn.space, wn.subset, catalog_kf());
  Collapse expect = Collapse::intersect(cm, cn);
  const PsiWitness& wr = lib.witness(realized);
  Collapse got = subset_collapse(wr.space, wr.subset, catalog_kf());
  if (!(got == expect))
    throw std::runtime_error("meet routes disagree for (" + std::to_string(m) +
                             ", " + std::to_string(n) + ")");
  return realized;
}

int phi_meet(const WitnessLibrary& lib, int m, int n) {
  // witnesses are indexed by the 70-class value; any subset with the wanted
  // 30-class value works, so reuse the first 70-class witness that projects
  // onto it
  std::map<int, int> phi_to_psi;
  for (int v = 1; v <= 70 && phi_to_psi.size() < 30; ++v) {
    if (!lib.has(v)) continue;
    const PsiWitness& w = lib.witness(v);
    phi_to_psi.emplace(classify_phi(w.space, w.subset), v);
  }
  auto pm = phi_to_psi.find(m), pn = phi_to_psi.find(n);
  if (pm == phi_to_psi.end()) throw MissingWitness(m);
  if (pn == phi_to_psi.end()) throw MissingWitness(n);
  return meet_by_witness(lib, pm->second, pn->second, true);
}

MeetTable meet_table(const WitnessLibrary& lib) {
  MeetTable table;
  for (int m = 1; m <= 70; ++m)
    for (int n = m; n <= 70; ++n) {
      int v = psi_meet(lib, m, n);
      table.psi[m][n] = uint8_t(v);
      table.psi[n][m] = uint8_t(v);
    }
  for (int m = 1; m <= 30; ++m)
    for (int n = m; n <= 30; ++n) {
      int v = phi_meet(lib, m, n);
      table.phi[m][n] = uint8_t(v);
      table.phi[n][m] = uint8_t(v);
    }
  return table;
}

int phi_semilattice_height(const MeetTable& table) {
  // m <= n iff meet(m, n) == m; height = longest chain, edges counted
  int best = 0;
  std::array<int, 31> memo{};
  auto below = [&](int m, int n) { return m != n && table.phi[m][n] == m; };
  auto longest = [&](auto&& self, int v) -> int {
    if (memo[v]) return memo[v];
    int d = 0;
    for (int u = 1; u <= 30; ++u)
      if (below(u, v)) d = std::max(d, self(self, u) + 1);
    return memo[v] = d;
  };
  for (int v = 1; v <= 30; ++v) best = std::max(best, longest(longest, v));
  return best;
}

std::vector<ImplicationFailure> verify_psi_implications(int max_n) {
  const auto& blocks = ref::psi_blocks();
  const auto& edges = ref::psi_block_edges();
  std::map<int, int> block_of;  // value -> block index
  for (size_t b = 0; b < blocks.size(); ++b)
    for (int v : blocks[b]) block_of[v] = int(b);

  std::vector<ImplicationFailure> failures;
  for (int n = 1; n <= max_n; ++n) {
    for (const Topology& t : enumerate_classes(n)) {
      std::set<int> spectrum = psi_spectrum(t);
      std::set<int> present_blocks;
      for (int v : spectrum) present_blocks.insert(block_of.at(v));
      for (auto [from, to] : edges) {
        if (!present_blocks.count(block_of.at(from))) continue;
        // the source block is present via either member
        if (!present_blocks.count(block_of.at(to)))
          failures.push_back({n, from, to});
      }
    }
  }
  return failures;
}

}  // namespace kfg
