#include <doctest.h>

#include "kfg/enumerate.hpp"
#include "kfg/identities.hpp"
#include "kfg/monoid.hpp"

using namespace kfg;

TEST_CASE("catalog parses completely") {
  const IdentityCatalog& cat = IdentityCatalog::builtin();
  CHECK(cat.records().size() >= 20);
  bool has_cancellation = false, has_scoped = false;
  for (const auto& rec : cat.records()) {
    if (rec.name == "f_cancellation") has_cancellation = true;
    if (rec.scope == "non-ge") has_scoped = true;
  }
  CHECK(has_cancellation);
  CHECK(has_scoped);
}

TEST_CASE("reference spaces satisfy the catalog") {
  for (auto type : {SpaceType::GE, SpaceType::KD, SpaceType::ED, SpaceType::OU,
                    SpaceType::EO, SpaceType::P, SpaceType::D}) {
    IdentityReport r = verify_identities(minimal_space(type));
    CHECK(r.ok());
    CHECK(r.instances_checked > 0);
  }
}

TEST_CASE("every space with four points or fewer satisfies the catalog") {
  for (int n = 1; n <= 4; ++n)
    for (const Topology& t : enumerate_classes(n))
      CHECK(verify_identities(t).ok());
}

TEST_CASE("a corrupted closure table fails something") {
  Topology s = from_base({0b01, 0b11}, 2);
  std::vector<Code> table = s.closure_table();
  table[0b01] = 0b10;  // closure no longer contains the set itself
  Topology broken(2, std::move(table));
  CHECK(!validate(broken).ok());
  bool caught = false;
  try {
    caught = !verify_identities(broken).ok();
  } catch (const std::exception&) {
    caught = true;  // unclassifiable tables are just as dead
  }
  CHECK(caught);
}

TEST_CASE("duality laws and family inclusion consequences") {
  for (int n = 1; n <= 4; ++n)
    for (const Topology& t : enumerate_classes(n)) {
      CHECK(verify_duality_laws(t).ok());
      CHECK(verify_inclusion_consequences(t).ok());
    }
}
