#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>

#include "kfg/classifier.hpp"
#include "kfg/enumerate.hpp"
#include "kfg/monoid.hpp"
#include "kfg/reference.hpp"

using namespace kfg;

TEST_CASE("labeled enumeration counts") {
  const long long expected[] = {1, 4, 29, 355, 6942};
  for (int n = 1; n <= 5; ++n) {
    long long count = 0;
    enumerate_labeled(n, [&](const Topology&) { ++count; });
    CHECK(count == expected[n - 1]);
  }
  CHECK_THROWS_AS(enumerate_labeled(7, [](const Topology&) {}),
                  OracleLimitExceeded);
}

TEST_CASE("canonical forms identify relabelings and nothing else") {
  Topology s1 = from_base({0b01, 0b11}, 2);
  Topology s2 = from_base({0b10, 0b11}, 2);
  CHECK(canonical_form(s1) == canonical_form(s2));

  Topology discrete = from_base({0b01, 0b10}, 2);
  Topology indiscrete = from_base({0b11}, 2);
  CHECK(!(canonical_form(discrete) == canonical_form(indiscrete)));

  std::mt19937 rng(7);
  for (int n = 2; n <= 5; ++n)
    for (const Topology& t : enumerate_classes(n)) {
      std::vector<int> perm(n);
      for (int i = 0; i < n; ++i) perm[i] = i;
      for (int trial = 0; trial < 20; ++trial) {
        std::shuffle(perm.begin(), perm.end(), rng);
        std::vector<Code> table(t.subset_count());
        for (Code s = 0; s < t.subset_count(); ++s) {
          Code moved = 0;
          for (int i = 0; i < n; ++i)
            if (s >> i & 1) moved |= Code(1) << perm[i];
          Code cl = t.closure(s);
          Code cl_moved = 0;
          for (int i = 0; i < n; ++i)
            if (cl >> i & 1) cl_moved |= Code(1) << perm[i];
          table[moved] = cl_moved;
        }
        Topology relabeled(n, std::move(table));
        CHECK(canonical_form(relabeled) == canonical_form(t));
      }
    }
}

TEST_CASE("class counts match the frequency table") {
  const long long totals[] = {1, 3, 9, 33, 139, 718};
  for (int n = 1; n <= 6; ++n)
    CHECK(long(enumerate_classes(n).size()) == totals[n - 1]);

  FrequencyRecord rec = monoid_frequencies(5);
  CHECK(rec.counts[SpaceType::GE] == 11);
  CHECK(rec.counts[SpaceType::KD] == 1);
  CHECK(rec.counts[SpaceType::OU] == 45);
  CHECK(rec.total() == 139);
}

TEST_CASE("minimal searches") {
  SearchResult kd = minimal_search(6, [](const Topology& t) {
    return classify_space(t) == SpaceType::KD;
  });
  CHECK(kd.n == 5);
  CHECK(canonical_form(kd.space) ==
        canonical_form(minimal_space(SpaceType::KD)));

  SearchResult resolvable = minimal_search_subset(
      4, [](const Topology& t, Code a) { return classify_psi(t, a) == 61; });
  CHECK(resolvable.n == 2);

  SearchResult pair42 = minimal_search_subset(5, [](const Topology& t, Code a) {
    int psi = classify_psi(t, a);
    return psi == 42 || psi == 44;
  });
  CHECK(pair42.n == 4);

  CHECK_THROWS_AS(
      minimal_search(3, [](const Topology& t) { return t.n() > 5; }),
      NotFoundWithinBound);
}

TEST_CASE("census values at small sizes") {
  CensusRecord c = census(CensusKind::Kfg0Collapses, 5, 2);
  REQUIRE(c.cumulative.size() == 5);
  CHECK(c.cumulative[1] == 5);
  CHECK(c.cumulative[2] == 12);
  CHECK(c.cumulative[3] == 26);
  CHECK(c.cumulative[4] == 47);
  CensusRecord o = census(CensusKind::Kfg0Orderings, 5, 2);
  CHECK(o.cumulative[4] == 61);
  CHECK_THROWS(census_kind_from_string("bogus"));
}

TEST_CASE("disk cache round trip and staleness") {
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "kfg-cache-test";
  fs::remove_all(dir);
  cache_store(dir.string(), 3);
  CHECK(cache_has(dir.string(), 3));
  auto loaded = cache_load(dir.string(), 3);
  CHECK(loaded.size() == 9);
  CHECK(loaded.front() == enumerate_classes(3).front());

  // tampering must be detected
  std::ofstream out(dir / "classes_n3.jsonl", std::ios::app);
  out << "\n";
  out.close();
  CHECK_THROWS_AS(cache_load(dir.string(), 3), StaleCache);
  fs::remove_all(dir);
}
