#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "barcode/persistence.hpp"
#include "support/oracles.hpp"

using barcode::Barcode;
using barcode::CellSpec;
using barcode::FilteredComplex;
using barcode::Interval;
using barcode::kInfinity;

namespace {

FilteredComplex sphere_complex() {
  std::vector<CellSpec> cells = {{"p1", 0, -2.5}, {"p2", 0, -2}, {"x1", 1, -1},
                                 {"x2", 1, 1},    {"s2", 2, 2},  {"s1", 2, 2.5}};
  std::map<std::string, std::vector<std::string>> boundary = {
      {"x1", {"p1", "p2"}},
      {"x2", {"p1", "p2"}},
      {"s1", {"x1", "x2"}},
      {"s2", {"x1", "x2"}}};
  return FilteredComplex::build(std::move(cells), boundary);
}

const Barcode sphere_barcode({Interval(-2.5, kInfinity), Interval(-2, -1),
                              Interval(1, 2), Interval(2.5, kInfinity)});

}  // namespace

TEST_CASE("q_dimension counts containing bars") {
  Barcode b({Interval(0, 2)});
  CHECK(barcode::q_dimension(b, 1) == 1);
  CHECK(barcode::q_dimension(b, 0) == 0);  // birth excluded by half-openness
  CHECK(barcode::q_dimension(b, 2) == 1);  // death included
  CHECK(barcode::q_dimension(b, 2.5) == 0);
  Barcode two({Interval(0, kInfinity), Interval(0, kInfinity)});
  CHECK(barcode::q_dimension(two, 5) == 2);
}

TEST_CASE("column reduction on the six-point sphere") {
  CHECK(compute_barcode(sphere_complex()) == sphere_barcode);
}

TEST_CASE("single cell gives one semi-infinite bar") {
  auto fc = FilteredComplex::build({{"a", 0, 1.5}}, {});
  CHECK(compute_barcode(fc) == Barcode({Interval(1.5, kInfinity)}));
  CHECK(barcode_via_ranks(fc) == Barcode({Interval(1.5, kInfinity)}));
}

TEST_CASE("invalid complexes are rejected") {
  // Boundary of boundary nonzero: one source over one saddle over two sinks.
  auto bad = FilteredComplex::build(
      {{"p", 0, 0}, {"q", 0, 1}, {"x", 1, 2}, {"z", 2, 3}},
      {{"x", {"p", "q"}}, {"z", {"x"}}});
  auto offenders = bad.d_squared_offenders();
  REQUIRE(offenders.size() == 1);
  CHECK(offenders[0] == "z");
  CHECK_THROWS_AS(compute_barcode(bad), barcode::ValidationError);
  CHECK_THROWS_AS(barcode_via_ranks(bad), barcode::ValidationError);

  // Face at a larger value than its cell.
  auto nonmonotone = FilteredComplex::build({{"a", 0, 5}, {"b", 1, 1}}, {{"b", {"a"}}});
  CHECK_THROWS_AS(compute_barcode(nonmonotone), barcode::ValidationError);

  // Structural problems are caught at build time.
  CHECK_THROWS_AS(FilteredComplex::build({{"a", 0, 0}}, {{"a", {"missing"}}}),
                  barcode::ValidationError);
  CHECK_THROWS_AS(FilteredComplex::build({{"a", 0, 0}, {"a", 0, 1}}, {}),
                  barcode::ValidationError);
  CHECK_THROWS_AS(FilteredComplex::build({{"a", 0, 0}, {"b", 2, 1}}, {{"b", {"a"}}}),
                  barcode::ValidationError);
}

TEST_CASE("double faces cancel mod 2") {
  auto fc = FilteredComplex::build({{"p", 0, 0}, {"x", 1, 1}}, {{"x", {"p", "p"}}});
  CHECK(fc.boundary(fc.size() - 1).empty());
  CHECK(compute_barcode(fc) ==
        Barcode({Interval(0, kInfinity), Interval(1, kInfinity)}));
}

TEST_CASE("rank_map") {
  auto fc = sphere_complex();
  SECTION("s = t gives the homology dimension") {
    CHECK(barcode::rank_map(fc, 0, 0, 0) == 1);   // p1+p2 already merged by x1
    CHECK(barcode::rank_map(fc, -1.5, -1.5, 0) == 2);
    CHECK(barcode::rank_map(fc, 3, 3, 0) == 1);
    CHECK(barcode::rank_map(fc, 3, 3, 1) == 0);
    CHECK(barcode::rank_map(fc, 3, 3, 2) == 1);
  }
  SECTION("the connected-components class survives the merge") {
    CHECK(barcode::rank_map(fc, -1.5, 0, 0) == 1);
  }
  SECTION("empty sublevel has rank zero") {
    CHECK(barcode::rank_map(fc, -10, 0, 0) == 0);
  }
  SECTION("preconditions") {
    CHECK_THROWS_AS(barcode::rank_map(fc, 1, 0, 0), std::invalid_argument);
  }
}

TEST_CASE("rank oracle matches reduction on the sphere") {
  CHECK(barcode_via_ranks(sphere_complex()) == sphere_barcode);
}

TEST_CASE("rank oracle matches reduction on random complexes") {
  std::mt19937_64 rng(101);
  for (int rep = 0; rep < 120; ++rep) {
    auto fc = testing_support::random_complex(rng, 12);
    INFO("rep " << rep);
    REQUIRE(compute_barcode(fc) == barcode_via_ranks(fc));
  }
}

TEST_CASE("interval-sum complex inverts the barcode functor") {
  std::mt19937_64 rng(103);
  for (int rep = 0; rep < 200; ++rep) {
    Barcode b = testing_support::random_barcode(rng, 10);
    INFO("rep " << rep);
    REQUIRE(compute_barcode(barcode::interval_sum_complex(b)) == b);
  }
}

TEST_CASE("q_dimension agrees with sublevel homology dimensions") {
  std::mt19937_64 rng(107);
  for (int rep = 0; rep < 40; ++rep) {
    auto fc = testing_support::random_complex(rng, 10);
    Barcode b = compute_barcode(fc);
    for (double t : {0.25, 5.0, 10.25, 20.5}) {
      int dims = 0;
      for (int d = 0; d <= fc.max_degree(); ++d) dims += barcode::rank_map(fc, t, t, d);
      INFO("rep " << rep << " t " << t);
      CHECK(barcode::q_dimension(b, t) == dims);
    }
    for (double t : fc.critical_values()) {
      int dims = 0;
      for (int d = 0; d <= fc.max_degree(); ++d) dims += barcode::rank_map(fc, t, t, d);
      CHECK(barcode::q_dimension(b, t) == dims);
    }
  }
}

TEST_CASE("tie order between equal-value cells does not change the barcode") {
  std::mt19937_64 rng(109);
  int renamed = 0;
  for (int rep = 0; rep < 60; ++rep) {
    auto fc = testing_support::random_complex(rng, 10);
    // Swap the ids of two same-degree same-value cells, if any.
    std::vector<CellSpec> cells = fc.cells();
    std::map<std::string, std::vector<std::string>> boundary;
    int a = -1, b = -1;
    for (int i = 0; i < fc.size() && a < 0; ++i)
      for (int j = i + 1; j < fc.size() && a < 0; ++j)
        if (fc.degree(i) == fc.degree(j) && fc.value(i) == fc.value(j)) {
          a = i;
          b = j;
        }
    if (a < 0) continue;
    ++renamed;
    auto rename = [&](const std::string& id) {
      if (id == fc.id(a)) return fc.id(b);
      if (id == fc.id(b)) return fc.id(a);
      return id;
    };
    for (auto& cell : cells) cell.id = rename(cell.id);
    for (int i = 0; i < fc.size(); ++i) {
      if (fc.boundary(i).empty()) continue;
      std::vector<std::string> faces;
      for (int f : fc.boundary(i)) faces.push_back(rename(fc.id(f)));
      boundary[rename(fc.id(i))] = faces;
    }
    auto renamed_fc = FilteredComplex::build(std::move(cells), boundary);
    INFO("rep " << rep);
    CHECK(compute_barcode(renamed_fc) == compute_barcode(fc));
  }
  CHECK(renamed > 0);
}
