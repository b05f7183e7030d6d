#include "kfg/identities.hpp"

#include <sstream>

#include "kfg/set_operator.hpp"
#include "embedded_data.hpp"

namespace kfg {

bool Relation::eval(const Topology& t, Code a, Code b) const {
  Code l = lhs.eval(t, a, b);
  Code r = rhs.eval(t, a, b);
  switch (kind) {
    case EQ: return l == r;
    case NEQ: return l != r;
    case LEQ: return subset_of(l, r);
  }
  return false;
}

bool IdentityRecord::applies_to(SpaceType t) const {
  if (scope == "all") return true;
  if (scope == "non-ge") return t != SpaceType::GE;
  if (scope == "kd") return t == SpaceType::KD;
  if (scope == "ed-or-eo") return t == SpaceType::ED || t == SpaceType::EO;
  throw std::runtime_error("unknown identity scope: " + scope);
}

namespace {

std::string trim(const std::string& s) {
  size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

Relation parse_relation(const std::string& text) {
  auto make = [&](size_t pos, size_t oplen, Relation::Kind kind) {
    Relation r{SetExpr::parse(trim(text.substr(0, pos))), kind,
               SetExpr::parse(trim(text.substr(pos + oplen))), text};
    return r;
  };
  if (size_t pos = text.find("!="); pos != std::string::npos)
    return make(pos, 2, Relation::NEQ);
  if (size_t pos = text.find("<="); pos != std::string::npos)
    return make(pos, 2, Relation::LEQ);
  if (size_t pos = text.find('='); pos != std::string::npos)
    return make(pos, 1, Relation::EQ);
  throw std::runtime_error("no relation in identity line: " + text);
}

std::vector<std::string> split(const std::string& text, const std::string& sep) {
  std::vector<std::string> parts;
  size_t start = 0;
  while (true) {
    size_t pos = text.find(sep, start);
    if (pos == std::string::npos) {
      parts.push_back(trim(text.substr(start)));
      return parts;
    }
    parts.push_back(trim(text.substr(start, pos - start)));
    start = pos + sep.size();
  }
}

IdentityLine parse_line(const std::string& raw) {
  IdentityLine line;
  line.text = raw;
  if (raw.starts_with("equiv ")) {
    line.form = IdentityLine::EQUIV;
    for (const auto& part : split(raw.substr(6), ";"))
      line.relations.push_back(parse_relation(part));
    return line;
  }
  if (raw.starts_with("if ")) {
    line.form = IdentityLine::IF_THEN;
    size_t then_pos = raw.find(" then ");
    if (then_pos == std::string::npos)
      throw std::runtime_error("missing 'then': " + raw);
    for (const auto& part : split(raw.substr(3, then_pos - 3), ";"))
      line.relations.push_back(parse_relation(part));
    line.hyp_count = line.relations.size();
    for (const auto& part : split(raw.substr(then_pos + 6), ";"))
      line.relations.push_back(parse_relation(part));
    return line;
  }
  std::string body = raw;
  if (raw.starts_with("chain ")) body = raw.substr(6);
  // split on -> and <-> keeping the connectives
  std::vector<std::string> parts;
  std::vector<char> conns;
  size_t start = 0;
  while (true) {
    size_t arrow = body.find("->", start);
    if (arrow == std::string::npos) {
      parts.push_back(trim(body.substr(start)));
      break;
    }
    bool iff = arrow > 0 && body[arrow - 1] == '<';
    parts.push_back(trim(body.substr(start, arrow - start - (iff ? 1 : 0))));
    conns.push_back(iff ? '=' : '>');
    start = arrow + 2;
  }
  for (const auto& part : parts) line.relations.push_back(parse_relation(part));
  line.connectives = conns;
  if (conns.empty())
    line.form = IdentityLine::ASSERT;
  else if (conns.size() == 1)
    line.form = conns[0] == '>' ? IdentityLine::IMP : IdentityLine::IFF;
  else
    line.form = IdentityLine::CHAIN;
  return line;
}

bool line_holds(const IdentityLine& line, const std::vector<char>& truth) {
  switch (line.form) {
    case IdentityLine::ASSERT:
      return truth[0];
    case IdentityLine::IMP:
      return !truth[0] || truth[1];
    case IdentityLine::IFF:
      return truth[0] == truth[1];
    case IdentityLine::CHAIN:
      for (size_t i = 0; i < line.connectives.size(); ++i) {
        bool ok = line.connectives[i] == '>' ? (!truth[i] || truth[i + 1])
                                             : (truth[i] == truth[i + 1]);
        if (!ok) return false;
      }
      return true;
    case IdentityLine::EQUIV:
      for (size_t i = 1; i < truth.size(); ++i)
        if (truth[i] != truth[0]) return false;
      return true;
    case IdentityLine::IF_THEN: {
      for (size_t i = 0; i < line.hyp_count; ++i)
        if (!truth[i]) return true;
      for (size_t i = line.hyp_count; i < truth.size(); ++i)
        if (!truth[i]) return false;
      return true;
    }
  }
  return false;
}

}  // namespace

IdentityCatalog IdentityCatalog::parse(const std::string& text) {
  IdentityCatalog cat;
  std::istringstream in(text);
  std::string raw;
  IdentityRecord* current = nullptr;
  while (std::getline(in, raw)) {
    std::string line = trim(raw);
    if (line.empty() || line[0] == '#') continue;
    if (line[0] == '[') {
      size_t close = line.find(']');
      IdentityRecord rec;
      rec.name = line.substr(1, close - 1);
      for (const auto& field : split(line.substr(close + 1), " ")) {
        if (field.empty()) continue;
        if (field.starts_with("vars=")) rec.vars = field[5] - '0';
        else if (field.starts_with("level=")) rec.space_level = field.substr(6) == "space";
        else if (field.starts_with("scope=")) rec.scope = field.substr(6);
        else throw std::runtime_error("bad record field: " + field);
      }
      cat.records_.push_back(std::move(rec));
      current = &cat.records_.back();
      continue;
    }
    if (!current) throw std::runtime_error("identity line outside record");
    current->lines.push_back(parse_line(line));
  }
  return cat;
}

const IdentityCatalog& IdentityCatalog::builtin() {
  static const IdentityCatalog cat = parse(embedded::kIdentityCatalog);
  return cat;
}

IdentityReport IdentityCatalog::verify(const Topology& t) const {
  IdentityReport report;
  const SpaceType type = classify_space(t);
  const Code full = t.universe();

  for (const auto& rec : records_) {
    if (!rec.applies_to(type)) continue;
    ++report.records_checked;
    for (const auto& line : rec.lines) {
      std::vector<char> truth(line.relations.size());
      if (rec.space_level) {
        // each relation is quantified over all subsets first
        for (size_t r = 0; r < line.relations.size(); ++r) {
          bool holds = true;
          for (Code a = 0; a <= full && holds; ++a)
            holds = line.relations[r].eval(t, a, 0);
          truth[r] = holds;
        }
        ++report.instances_checked;
        if (!line_holds(line, truth))
          report.failures.push_back({rec.name, line.text, 0, 0});
        continue;
      }
      const Code bmax = rec.vars == 2 ? full : 0;
      for (Code a = 0; a <= full; ++a)
        for (Code b = 0; b <= bmax; ++b) {
          for (size_t r = 0; r < line.relations.size(); ++r)
            truth[r] = line.relations[r].eval(t, a, b);
          ++report.instances_checked;
          if (!line_holds(line, truth)) {
            report.failures.push_back({rec.name, line.text, a, b});
            b = bmax;  // one witness per line is enough
            a = full;
          }
        }
    }
  }
  return report;
}

IdentityReport verify_duality_laws(const Topology& t) {
  IdentityReport report;
  report.records_checked = 1;
  std::vector<SetOperator> tables = catalog_tables(t, catalog_kfg());
  for (size_t i = 0; i < tables.size(); ++i) {
    if (dual(dual(tables[i])) != tables[i])
      report.failures.push_back({"duality", "d(d(o)) = o with o=" +
                                 std::string(kCatalogNames[i]), 0, 0});
    // a(d(o)) = oa
    SetOperator lhs = op_complement(dual(tables[i]));
    std::vector<Code> rhs(t.subset_count());
    for (Code s = 0; s < rhs.size(); ++s)
      rhs[s] = tables[i].apply(t.complement(s));
    if (lhs.table() != rhs)
      report.failures.push_back({"duality", "a(d(o)) = oa with o=" +
                                 std::string(kCatalogNames[i]), 0, 0});
    for (size_t j = 0; j < tables.size(); ++j) {
      ++report.instances_checked;
      if (dual(compose(tables[i], tables[j])) !=
          compose(dual(tables[i]), dual(tables[j])))
        report.failures.push_back(
            {"duality", "d(o1 o2) = d(o1) d(o2) with o1=" +
             std::string(kCatalogNames[i]) + " o2=" +
             std::string(kCatalogNames[j]), 0, 0});
    }
  }
  return report;
}

IdentityReport verify_inclusion_consequences(const Topology& t) {
  IdentityReport report;
  report.records_checked = 1;
  const Code full = t.universe();
  auto k0 = catalog_k0();
  std::vector<int> a_k0, fg0, a_fg0, kfg0 = catalog_kfg0(), a_kfg0;
  for (int i : k0) a_k0.push_back(i + kEvenCount);
  for (int i = 7; i < 20; ++i) fg0.push_back(i);
  for (int i : fg0) a_fg0.push_back(i + kEvenCount);
  for (int i : kfg0) a_kfg0.push_back(i + kEvenCount);

  auto check = [&](const std::vector<int>& lhs, const std::vector<int>& rhs,
                   bool empty_interior_side) {
    for (Code a = 0; a <= full; ++a) {
      std::vector<Code> lv(lhs.size()), rv(rhs.size());
      for (size_t i = 0; i < lhs.size(); ++i) lv[i] = eval_catalog_word(t, lhs[i], a);
      for (size_t j = 0; j < rhs.size(); ++j) rv[j] = eval_catalog_word(t, rhs[j], a);
      bool any = false;
      for (size_t i = 0; i < lhs.size() && !any; ++i)
        for (size_t j = 0; j < rhs.size() && !any; ++j)
          any = subset_of(lv[i], rv[j]);
      ++report.instances_checked;
      if (!any) continue;
      bool ok;
      if (empty_interior_side)
        ok = t.interior(a) == 0 && t.closure(t.interior(a)) == t.interior(a) &&
             a != full;
      else
        ok = t.closure(a) == full &&
             t.interior(t.closure(a)) == t.closure(a) && a != 0;
      if (!ok)
        report.failures.push_back(
            {"inclusion-consequences",
             empty_interior_side ? "even-below-odd" : "odd-below-even", a, 0});
    }
  };

  std::vector<int> odd_targets = a_k0;
  odd_targets.insert(odd_targets.end(), fg0.begin(), fg0.end());
  check(k0, odd_targets, true);
  check(a_fg0, fg0, true);
  check(a_kfg0, kfg0, false);
  return report;
}

IdentityReport verify_identities(const Topology& t) {
  IdentityReport report = IdentityCatalog::builtin().verify(t);
  for (auto part : {verify_duality_laws(t), verify_inclusion_consequences(t)}) {
    report.records_checked += part.records_checked;
    report.instances_checked += part.instances_checked;
    report.failures.insert(report.failures.end(), part.failures.begin(),
                           part.failures.end());
  }
  return report;
}

}  // namespace kfg
