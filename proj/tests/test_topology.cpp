#include <doctest.h>

#include "kfg/enumerate.hpp"
#include "kfg/monoid.hpp"
#include "kfg/topology.hpp"

using namespace kfg;

namespace {

Topology sierpinski() { return from_base({0b01, 0b11}, 2); }

}  // namespace

TEST_CASE("from_base builds the expected open families") {
  Topology s = sierpinski();
  CHECK(s.is_open(0b00));
  CHECK(s.is_open(0b01));
  CHECK(s.is_open(0b11));
  CHECK(!s.is_open(0b10));

  CHECK_THROWS_AS(from_base({}, 1), BaseDoesNotCoverUniverse);
  CHECK_THROWS_AS(from_base({0b1}, 17), UniverseTooLarge);
  CHECK_THROWS_AS(from_base({0b100}, 2), TopologyError);

  // {{w},{x,y},{w,x,y,z}} closes to five opens
  Topology t = from_base({0b0001, 0b0110, 0b1111}, 4);
  int opens = 0;
  for (Code s4 = 0; s4 < t.subset_count(); ++s4)
    if (t.is_open(s4)) ++opens;
  CHECK(opens == 5);
}

TEST_CASE("primitive operators on the two-point space") {
  Topology s = sierpinski();
  CHECK(s.closure(0b01) == 0b11);
  CHECK(s.closure(0) == 0);
  CHECK(s.interior(0b10) == 0);
  CHECK(s.interior(0b11) == 0b11);
  CHECK(s.boundary(0b01) == 0b10);
  CHECK(s.boundary(0) == 0);
  CHECK(s.border(0b01) == 0);
  CHECK(s.complement(0b01) == 0b10);
  CHECK(s.complement(s.complement(0b10)) == 0b10);
}

TEST_CASE("reference four-point space values") {
  const Topology& ge = minimal_space(SpaceType::GE);
  CHECK(ge.closure(0b0010) == 0b1110);           // cl{x} = {x,y,z}
  CHECK(ge.interior(0b1001) == 0b0001);          // int{w,z} = {w}
  CHECK(ge.boundary(0b1001) == 0b1000);          // bd{w,z} = {z}
  CHECK(ge.border(0b1001) == 0b1000);
}

TEST_CASE("validate reports every broken axiom") {
  Topology s = sierpinski();
  CHECK(validate(s).ok());

  std::vector<Code> table = s.closure_table();
  table[0] = 0b01;  // closure of the empty set
  ValidationReport r = validate(Topology(2, table));
  CHECK(!r.ok());
  bool found = false;
  for (const auto& v : r.violations) found |= v.axiom == "closure-of-empty";
  CHECK(found);

  table = s.closure_table();
  table[0b11] = 0b01;  // not extensive, breaks additivity too
  r = validate(Topology(2, table));
  bool extensive = false, additive = false;
  for (const auto& v : r.violations) {
    extensive |= v.axiom == "extensive";
    additive |= v.axiom == "additive";
  }
  CHECK(extensive);
  CHECK(additive);
}

TEST_CASE("closure axioms and derived identities on all small spaces") {
  for (int n = 1; n <= 4; ++n)
    for (const Topology& t : enumerate_classes(n)) {
      CHECK(validate(t).ok());
      for (Code a = 0; a < t.subset_count(); ++a) {
        CHECK(t.boundary(a) == t.boundary(t.complement(a)));
        CHECK(subset_of(t.interior(a), a));
        CHECK(subset_of(a, t.closure(a)));
        CHECK((t.border(a) & t.interior(a)) == 0);
        CHECK((t.border(a) | t.interior(a)) == a);
      }
    }
}

TEST_CASE("json round trip") {
  Topology s = sierpinski();
  std::string text = topology_to_json(s);
  CHECK(text == "{\"n\": 2, \"closure\": [0, 3, 2, 3]}");
  Topology back = topology_from_json(text);
  CHECK(back == s);
  CHECK_THROWS_AS(topology_from_json("{\"n\": 1, \"closure\": [1, 1]}"),
                  TopologyError);
}
