#include <doctest.h>

#include <set>

#include "kfg/enumerate.hpp"
#include "kfg/monoid.hpp"

using namespace kfg;

TEST_CASE("monoid sizes on the reference spaces") {
  CHECK(generate_monoid(minimal_space(SpaceType::GE), {"a", "b"}).size() == 14);
  CHECK(generate_monoid(minimal_space(SpaceType::D), {"a", "b", "f"}).size() == 4);
  CHECK(generate_monoid(minimal_space(SpaceType::KD), {"a", "b", "f"}).size() == 28);
  CHECK(generate_monoid(minimal_space(SpaceType::EO), {"a", "b", "f"}).size() == 16);

  std::set<size_t> k_sizes, kf_sizes;
  for (int n = 1; n <= 5; ++n)
    for (const Topology& t : enumerate_classes(n)) {
      k_sizes.insert(generate_monoid(t, {"a", "b"}).size());
      kf_sizes.insert(generate_monoid(t, {"a", "b", "f"}).size());
    }
  CHECK(k_sizes == std::set<size_t>{2, 6, 8, 10, 14});
  CHECK(kf_sizes == std::set<size_t>{4, 10, 16, 20, 22, 28, 34});
}

TEST_CASE("space collapses") {
  Collapse one_point = space_collapse(minimal_space(SpaceType::D), catalog_kf());
  CHECK(one_point.class_count() == 4);
  CHECK(space_collapse(minimal_space(SpaceType::GE), catalog_kf()).class_count() == 34);
  CHECK(space_collapse(minimal_space(SpaceType::EO), catalog_kf()).class_count() == 16);
}

TEST_CASE("space orderings") {
  // the two-point space with one isolated open point satisfies fb <= id
  const Topology& eo = minimal_space(SpaceType::EO);
  Ordering o = space_ordering(eo, catalog_kf());
  auto pos = [&](const char* w) {
    auto cat = catalog_kf();
    for (size_t i = 0; i < cat.size(); ++i)
      if (kCatalogNames[cat[i]] == w) return int(i);
    return -1;
  };
  CHECK(o.contains(pos("fb"), pos("id")));

  Ordering d = space_ordering(minimal_space(SpaceType::D), catalog_kf());
  CHECK(!d.contains(pos("id"), pos("a")));
  CHECK(!d.contains(pos("a"), pos("id")));
}

TEST_CASE("classification") {
  CHECK(classify_space(minimal_space(SpaceType::GE)) == SpaceType::GE);
  CHECK(classify_space(from_base({0b01, 0b11}, 2)) == SpaceType::EO);
  CHECK(classify_space(from_base({0b11}, 2)) == SpaceType::P);
  CHECK(classify_space(from_base({0b01, 0b10}, 2)) == SpaceType::D);
  CHECK(classify_space(minimal_space(SpaceType::KD)) == SpaceType::KD);
  CHECK(k_number_of_type(SpaceType::EO) == 8);
  CHECK(kf_number_of_type(SpaceType::KD) == 28);
}

TEST_CASE("extender") {
  Ordering antichain;
  antichain.rows = {0b01, 0b10};
  auto ext = extender(antichain);
  CHECK(ext == std::vector<std::pair<int, int>>{{0, 1}, {1, 0}});

  Ordering chain;
  chain.rows = {0b11, 0b10};
  CHECK(extender(chain).empty());

  Ordering broken;
  broken.rows = {0b01, 0b11};  // 1 <= 0 but 0 is not reflexive over 1
  broken.rows = {0b11, 0b11};  // mutual pair
  CHECK_THROWS_AS(extender(broken), NotAPartialOrder);

  // the closure word sits right above its complement-conjugate
  auto full = universal_extender_kf();
  auto cat = catalog_kf();
  int ab = -1, b = -1;
  for (size_t i = 0; i < cat.size(); ++i) {
    if (kCatalogNames[cat[i]] == "ab") ab = int(i);
    if (kCatalogNames[cat[i]] == "b") b = int(i);
  }
  CHECK(std::count(full.begin(), full.end(), std::make_pair(ab, b)) == 1);
}

TEST_CASE("poset refinement test") {
  Ordering chain;
  chain.rows = {0b11, 0b10};
  CHECK(poset_refines(chain, chain).equal);

  Ordering antichain;
  antichain.rows = {0b01, 0b10};
  auto r = poset_refines(antichain, chain);
  CHECK(!r.equal);
  CHECK(r.witness == std::make_pair(0, 1));

  CHECK_THROWS_AS(poset_refines(chain, antichain), NotContained);
}

TEST_CASE("projection order") {
  CHECK(projection_order(SpaceType::D, SpaceType::P));
  CHECK(!projection_order(SpaceType::P, SpaceType::D));
  CHECK(projection_order(SpaceType::KD, SpaceType::GE));
  CHECK(projection_order(SpaceType::GE, SpaceType::GE));
  CHECK(projection_order_g(SpaceTypeG::EO2, SpaceTypeG::OU2));
  CHECK(!projection_order_g(SpaceTypeG::OU2, SpaceTypeG::ED2));
}

TEST_CASE("negating canonical names") {
  CHECK(negate_word_name("id") == "a");
  CHECK(negate_word_name("a") == "id");
  CHECK(negate_word_name("0") == "1");
  CHECK(negate_word_name("1") == "0");
  CHECK(negate_word_name("fib") == "afib");
  CHECK(negate_word_name("afib") == "fib");
}
