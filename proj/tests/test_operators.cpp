#include <doctest.h>

#include <set>

#include "kfg/enumerate.hpp"
#include "kfg/monoid.hpp"
#include "kfg/set_operator.hpp"

using namespace kfg;

namespace {
Topology sierpinski() { return from_base({0b01, 0b11}, 2); }
}  // namespace

TEST_CASE("word evaluation and operator tables") {
  Topology s = sierpinski();
  SetOperator zero = word_to_operator(s, "0");
  for (Code a = 0; a < 4; ++a) CHECK(zero.apply(a) == 0);

  SetOperator interior = word_to_operator(s, "i");
  CHECK(interior.apply(0b00) == 0b00);
  CHECK(interior.apply(0b01) == 0b01);
  CHECK(interior.apply(0b10) == 0b00);
  CHECK(interior.apply(0b11) == 0b11);

  const Topology& ge = minimal_space(SpaceType::GE);
  SetOperator fbg = word_to_operator(ge, "fbg");
  SetOperator chain = compose(word_to_operator(ge, "f"),
                              compose(word_to_operator(ge, "b"),
                                      word_to_operator(ge, "g")));
  CHECK(fbg == chain);

  CHECK_THROWS_AS(word_to_operator(s, "ba"), UnknownWord);
  CHECK_THROWS_AS(word_to_operator(s, "x"), UnknownWord);
}

TEST_CASE("composition") {
  Topology s = sierpinski();
  SetOperator id = SetOperator::identity(2);
  SetOperator b = word_to_operator(s, "b");
  CHECK(compose(id, b) == b);
  CHECK(compose(b, id) == b);
  CHECK(compose(word_to_operator(s, "b"), word_to_operator(s, "i")).apply(0b10) == 0);
  CHECK_THROWS_AS(compose(b, SetOperator::identity(3)), UniverseMismatch);

  // border after interior vanishes on every space
  for (int n = 1; n <= 4; ++n)
    for (const Topology& t : enumerate_classes(n)) {
      SetOperator gi = compose(word_to_operator(t, "g"), word_to_operator(t, "i"));
      CHECK(gi == SetOperator::constant(t.n(), 0));
    }
}

TEST_CASE("duality") {
  for (int n = 1; n <= 4; ++n)
    for (const Topology& t : enumerate_classes(n)) {
      SetOperator id = SetOperator::identity(t.n());
      CHECK(dual(id) == id);
      CHECK(dual(word_to_operator(t, "b")) == word_to_operator(t, "i"));
      SetOperator f = word_to_operator(t, "f");
      CHECK(dual(dual(f)) == f);
    }
}

TEST_CASE("lattice operations") {
  for (int n = 1; n <= 4; ++n)
    for (const Topology& t : enumerate_classes(n)) {
      SetOperator b = word_to_operator(t, "b");
      SetOperator ba = compose(b, word_to_operator(t, "a"));
      CHECK(op_meet(b, ba) == word_to_operator(t, "f"));
      CHECK(op_complement(word_to_operator(t, "0")) == word_to_operator(t, "1"));
      SetOperator o = word_to_operator(t, "ib");
      CHECK(op_join(o, word_to_operator(t, "0")) == o);
    }
}

TEST_CASE("pointwise order and disjointness") {
  Topology s = sierpinski();
  CHECK(leq(word_to_operator(s, "0"), word_to_operator(s, "b")));
  CHECK(leq(word_to_operator(s, "i"), SetOperator::identity(2)));
  CHECK(leq(SetOperator::identity(2), word_to_operator(s, "b")));
  CHECK(disjoint(SetOperator::identity(2), word_to_operator(s, "a")));
  CHECK(disjoint(word_to_operator(s, "0"), word_to_operator(s, "fif")));
  CHECK(disjoint(word_to_operator(s, "i"), word_to_operator(s, "f")));
}

TEST_CASE("catalog structure") {
  CHECK(catalog_k0().size() == 7);
  CHECK(catalog_kf0().size() == 17);
  CHECK(catalog_kfg0().size() == 20);
  CHECK(catalog_k().size() == 14);
  CHECK(catalog_kf().size() == 34);
  CHECK(catalog_kfg().size() == 40);

  // the complement-prefix map is an involution on the 34 two-generator words
  for (int idx : catalog_kf()) {
    auto d = dual_word_index(idx);
    REQUIRE(d.has_value());
    CHECK(dual_word_index(*d) == idx);
  }
  CHECK(!dual_word_index(word_index("g")).has_value());
  CHECK(!dual_word_index(word_index("abg")).has_value());
  CHECK(dual_word_index(word_index("bib")) == word_index("ibi"));
  CHECK(dual_word_index(word_index("f")) == word_index("af"));

  // name-level duals agree with the extensional dual on every small space
  for (int n = 1; n <= 4; ++n)
    for (const Topology& t : enumerate_classes(n))
      for (int idx : catalog_kf()) {
        int d = *dual_word_index(idx);
        CHECK(dual(word_to_operator(t, kCatalogNames[idx])) ==
              word_to_operator(t, kCatalogNames[d]));
      }
}

TEST_CASE("generated monoids coincide with the catalogs") {
  for (int n = 1; n <= 4; ++n)
    for (const Topology& t : enumerate_classes(n)) {
      auto tables_of = [&](const std::vector<int>& catalog) {
        std::set<std::vector<Code>> out;
        for (int idx : catalog)
          out.insert(word_to_operator(t, kCatalogNames[idx]).table());
        return out;
      };
      std::set<std::vector<Code>> kf_set;
      for (const SetOperator& o : generate_monoid(t, {"a", "b", "f"}))
        kf_set.insert(o.table());
      CHECK(kf_set == tables_of(catalog_kf()));
      // the even half is the monoid generated without complement; adding
      // the complement generates strictly more than the 40 catalog words
      // (g followed by complement already escapes them)
      std::set<std::vector<Code>> even_set;
      for (const SetOperator& o : generate_monoid(t, {"b", "i", "f", "g"}))
        even_set.insert(o.table());
      CHECK(even_set == tables_of(catalog_kfg0()));
      std::set<std::vector<Code>> kfg_set;
      for (const SetOperator& o : generate_monoid(t, {"a", "b", "f", "g"}))
        kfg_set.insert(o.table());
      for (const auto& table : tables_of(catalog_kfg()))
        CHECK(kfg_set.count(table) == 1);
    }
}

TEST_CASE("even and odd halves never meet") {
  for (int n = 1; n <= 4; ++n)
    for (const Topology& t : enumerate_classes(n))
      for (int e = 0; e < kEvenCount; ++e)
        for (int o = kEvenCount; o < kCatalogSize; ++o)
          CHECK(!(word_to_operator(t, kCatalogNames[e]) ==
                  word_to_operator(t, kCatalogNames[o])));
}
