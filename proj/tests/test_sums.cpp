#include <doctest.h>

#include <random>

#include "kfg/classifier.hpp"
#include "kfg/enumerate.hpp"
#include "kfg/monoid.hpp"
#include "kfg/sums.hpp"

using namespace kfg;

namespace {
Topology sierpinski() { return from_base({0b01, 0b11}, 2); }
}  // namespace

TEST_CASE("sum spaces") {
  Topology s = sierpinski();
  Topology twice = sum_space({s, s});
  CHECK(twice.n() == 4);
  int opens = 0;
  for (Code a = 0; a < twice.subset_count(); ++a)
    if (twice.is_open(a)) ++opens;
  CHECK(opens == 9);

  CHECK(sum_space({s}) == s);
  Topology big = from_base({universe_mask(9)}, 9);
  CHECK_THROWS_AS(sum_space({big, big}), UniverseTooLarge);

  // closures act component by component
  std::mt19937 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    Code a = rng() & 3, b = rng() & 3;
    Code joint = embed_subset({s, s}, 0, a) | embed_subset({s, s}, 1, b);
    CHECK(twice.closure(joint) ==
          (embed_subset({s, s}, 0, s.closure(a)) |
           embed_subset({s, s}, 1, s.closure(b))));
  }
}

TEST_CASE("repeated sums of the reference spaces") {
  TopsumReport d2 = topsum_report("D1", 2);
  CHECK(d2.new_psi == std::set<int>{68});
  CHECK(d2.k == 2);
  CHECK(d2.kf == 4);

  TopsumReport eo2 = topsum_report("EO", 2);
  CHECK(eo2.k == 8);
  CHECK(eo2.kf == 16);

  TopsumReport kd3 = topsum_report("KD", 3);
  CHECK(kd3.k == 14);
  CHECK(kd3.kf == 28);
}

TEST_CASE("meets through witnesses") {
  WitnessLibrary lib(4);
  CHECK(lib.has(69));
  CHECK(lib.has(70));
  CHECK(lib.has(61));
  CHECK(!lib.has(1));  // needs eight points
  CHECK_THROWS_AS(lib.witness(1), MissingWitness);

  CHECK(psi_meet(lib, 69, 70) == 68);
  CHECK(psi_meet(lib, 69, 69) == 69);
  CHECK(psi_meet(lib, 61, 61) == 61);
  CHECK(psi_meet(lib, 61, 69) == 59);  // dense set next to a full copy
  CHECK(psi_meet(lib, 68, 69) == 68);
}

TEST_CASE("reachability diagram on small spaces") {
  CHECK(verify_psi_implications(4).empty());
}

TEST_CASE("every nonempty space tops out at the full class") {
  for (int n = 1; n <= 4; ++n)
    for (const Topology& t : enumerate_classes(n)) {
      CHECK(classify_psi(t, t.universe()) == 69);
      CHECK(classify_psi(t, 0) == 70);
    }
}
