#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "onepoint/generator.hpp"
#include "onepoint/oracle.hpp"

using namespace onepoint;

TEST_CASE("ribbon gluings at desk scale") {
  GluingCount d1 = ribbon_gluings(1);
  CHECK(d1.at_genus(0) == 1);
  GluingCount d2 = ribbon_gluings(2);
  CHECK(d2.at_genus(0) == 2);
  CHECK(d2.at_genus(1) == 1);
  GluingCount d5 = ribbon_gluings(5);
  CHECK(d5.at_genus(0) == 42);
  CHECK(d5.at_genus(1) == 420);
  CHECK(d5.at_genus(2) == 483);
  CHECK_THROWS_AS(ribbon_gluings(7), Error);
  CHECK_THROWS_AS(ribbon_gluings(0), Error);
}

TEST_CASE("ribbon mass check: all gluings accounted for") {
  for (long d = 1; d <= 5; ++d) {
    GluingCount c = ribbon_gluings(d);
    Rat total(0);
    for (const auto& [g, v] : c.genus_histogram) total += v;
    Int dfact(1);
    for (long k = 2 * d - 1; k >= 1; k -= 2) dfact *= k;
    CHECK(total == Rat(dfact));
  }
}

TEST_CASE("monotone factorizations") {
  CHECK(monotone_factorizations(2, 1) == 1);
  CHECK(monotone_factorizations(1, 1) == 0);
  CHECK(monotone_factorizations(1, 0) == 1);
  CHECK(monotone_factorizations(4, 1) == 70);
  CHECK(monotone_factorizations(3, 0) == 2);
  CHECK_THROWS_AS(monotone_factorizations(6, 0), Error);
}

TEST_CASE("dessin counts") {
  GluingCount d1 = dessin_counts(1);
  CHECK(d1.at_genus(0) == 1);
  GluingCount d2 = dessin_counts(2);
  CHECK(d2.at_genus(0) == 2);
  CHECK(d2.at_genus(1) == 0);
  GluingCount d3 = dessin_counts(3);
  CHECK(d3.at_genus(0) == 5);
  CHECK(d3.at_genus(1) == 1);
  CHECK_THROWS_AS(dessin_counts(6), Error);
}

TEST_CASE("bms counts") {
  GluingCount m1 = bms_counts(1, 1);
  CHECK(m1.at_genus(0) == 1);
  GluingCount m3d2 = bms_counts(3, 2);
  CHECK(m3d2.at_genus(0) == 3);
  CHECK(m3d2.at_genus(1) == 1);
  CHECK_THROWS_AS(bms_counts(4, 2), Error);
  CHECK_THROWS_AS(bms_counts(3, 5), Error);
}

TEST_CASE("oracle matches the generator on small rectangles") {
  InvariantTable rib = invariants(catalog("ribbon"), 8, 2);
  for (long d = 1; d <= 4; ++d) {
    GluingCount c = ribbon_gluings(d);
    for (long g = 0; g <= 2; ++g) CHECK(c.at_genus(g) == rib.at(g, 2 * d));
  }
  InvariantTable mono = invariants(catalog("monotone"), 4, 2);
  for (long d = 1; d <= 4; ++d)
    for (long g = 0; g <= 1; ++g)
      CHECK(monotone_factorizations(d, g) == mono.at(g, d));
  InvariantTable des = invariants(catalog("dessin"), 4, 2);
  for (long d = 1; d <= 4; ++d) {
    GluingCount c = dessin_counts(d);
    for (long g = 0; g <= 2; ++g) CHECK(c.at_genus(g) == des.at(g, d));
  }
  InvariantTable b3 = invariants(catalog("bms(3)"), 3, 3);
  for (long d = 1; d <= 3; ++d) {
    GluingCount c = bms_counts(3, d);
    for (long g = 0; g <= 3; ++g) CHECK(c.at_genus(g) == b3.at(g, d));
  }
}
