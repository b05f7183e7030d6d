#include "kfg/set_operator.hpp"

namespace kfg {

namespace {
void check_same(const SetOperator& a, const SetOperator& b) {
  if (a.n() != b.n()) throw UniverseMismatch();
}
}  // namespace

SetOperator SetOperator::identity(int n) {
  std::vector<Code> table(size_t(1) << n);
  for (Code s = 0; s < table.size(); ++s) table[s] = s;
  return SetOperator(n, std::move(table));
}

SetOperator SetOperator::constant(int n, Code value) {
  return SetOperator(n, std::vector<Code>(size_t(1) << n, value));
}

SetOperator word_to_operator(const Topology& t, std::string_view word) {
  if (!is_canonical_word(word)) throw UnknownWord(word);
  std::vector<Code> table(t.subset_count());
  for (Code s = 0; s < table.size(); ++s) table[s] = eval_word(t, word, s);
  return SetOperator(t.n(), std::move(table));
}

SetOperator compose(const SetOperator& o1, const SetOperator& o2) {
  check_same(o1, o2);
  std::vector<Code> table(o1.table().size());
  for (Code s = 0; s < table.size(); ++s) table[s] = o1.apply(o2.apply(s));
  return SetOperator(o1.n(), std::move(table));
}

SetOperator dual(const SetOperator& o) {
  const Code full = universe_mask(o.n());
  std::vector<Code> table(o.table().size());
  for (Code s = 0; s < table.size(); ++s)
    table[s] = full & ~o.apply(full & ~s);
  return SetOperator(o.n(), std::move(table));
}

SetOperator op_join(const SetOperator& o1, const SetOperator& o2) {
  check_same(o1, o2);
  std::vector<Code> table(o1.table().size());
  for (Code s = 0; s < table.size(); ++s) table[s] = o1.apply(s) | o2.apply(s);
  return SetOperator(o1.n(), std::move(table));
}

SetOperator op_meet(const SetOperator& o1, const SetOperator& o2) {
  check_same(o1, o2);
  std::vector<Code> table(o1.table().size());
  for (Code s = 0; s < table.size(); ++s) table[s] = o1.apply(s) & o2.apply(s);
  return SetOperator(o1.n(), std::move(table));
}

SetOperator op_complement(const SetOperator& o) {
  const Code full = universe_mask(o.n());
  std::vector<Code> table(o.table().size());
  for (Code s = 0; s < table.size(); ++s) table[s] = full & ~o.apply(s);
  return SetOperator(o.n(), std::move(table));
}

SetOperator op_difference(const SetOperator& o1, const SetOperator& o2) {
  check_same(o1, o2);
  std::vector<Code> table(o1.table().size());
  for (Code s = 0; s < table.size(); ++s) table[s] = o1.apply(s) & ~o2.apply(s);
  return SetOperator(o1.n(), std::move(table));
}

bool leq(const SetOperator& o1, const SetOperator& o2) {
  check_same(o1, o2);
  for (Code s = 0; s < o1.table().size(); ++s)
    if (o1.apply(s) & ~o2.apply(s)) return false;
  return true;
}

bool disjoint(const SetOperator& o1, const SetOperator& o2) {
  check_same(o1, o2);
  for (Code s = 0; s < o1.table().size(); ++s)
    if (o1.apply(s) & o2.apply(s)) return false;
  return true;
}

}  // namespace kfg
