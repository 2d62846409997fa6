#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "barcode/bottleneck.hpp"
#include "support/oracles.hpp"

using barcode::Barcode;
using barcode::bottleneck_distance;
using barcode::Interval;
using barcode::kInfinity;
using testing_support::brute_force_bottleneck;
using testing_support::random_barcode;

TEST_CASE("bottleneck basics") {
  Barcode empty;
  CHECK(bottleneck_distance(empty, empty) == 0.0);
  CHECK(bottleneck_distance(Barcode({Interval(0, kInfinity)}),
                            Barcode({Interval(5, kInfinity)})) == 5.0);
  // Mismatched semi-infinite counts can never be matched up.
  CHECK(bottleneck_distance(Barcode({Interval(0, kInfinity)}), empty) == kInfinity);
  CHECK(bottleneck_distance(Barcode({Interval(0, kInfinity), Interval(1, kInfinity)}),
                            Barcode({Interval(0, kInfinity)})) == kInfinity);
  // A single finite bar against nothing costs half its length.
  CHECK(bottleneck_distance(Barcode({Interval(0, 1)}), empty) == 0.5);
  CHECK(bottleneck_distance(Barcode({Interval(0, 2), Interval(10, 11)}),
                            Barcode({Interval(0, 2)})) == 0.5);
}

TEST_CASE("identity and symmetry") {
  std::mt19937_64 rng(11);
  for (int rep = 0; rep < 60; ++rep) {
    Barcode a = random_barcode(rng, 6);
    Barcode b = random_barcode(rng, 6);
    CHECK(bottleneck_distance(a, a) == 0.0);
    CHECK(bottleneck_distance(a, b) == bottleneck_distance(b, a));
  }
}

TEST_CASE("agrees with the exhaustive matching oracle") {
  std::mt19937_64 rng(23);
  for (int rep = 0; rep < 200; ++rep) {
    Barcode a = random_barcode(rng, 6);
    Barcode b = random_barcode(rng, 6);
    double expected = brute_force_bottleneck(a, b);
    double got = bottleneck_distance(a, b);
    INFO("rep " << rep);
    CHECK(got == expected);
  }
}

TEST_CASE("triangle inequality on random triples") {
  std::mt19937_64 rng(31);
  for (int rep = 0; rep < 200; ++rep) {
    Barcode a = random_barcode(rng, 5);
    Barcode b = random_barcode(rng, 5);
    Barcode c = random_barcode(rng, 5);
    double ab = bottleneck_distance(a, b);
    double bc = bottleneck_distance(b, c);
    double ac = bottleneck_distance(a, c);
    if (std::isfinite(ab) && std::isfinite(bc)) {
      INFO("rep " << rep);
      CHECK(ac <= ab + bc + 1e-9);
    }
  }
}

TEST_CASE("distance zero iff equal") {
  std::mt19937_64 rng(41);
  for (int rep = 0; rep < 60; ++rep) {
    Barcode a = random_barcode(rng, 5);
    Barcode b = random_barcode(rng, 5);
    bool zero = bottleneck_distance(a, b) == 0.0;
    CHECK(zero == (a == b));
  }
  // Distinct multiplicity of the same bar is detected.
  Barcode one({Interval(0, 4)});
  Barcode two({Interval(0, 4), Interval(0, 4)});
  CHECK(bottleneck_distance(one, two) == 2.0);
}
