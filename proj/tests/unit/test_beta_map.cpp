#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "barcode/beta_map.hpp"
#include "barcode/foliation.hpp"

using barcode::ActionGraph;
using barcode::Barcode;
using barcode::compute_B;
using barcode::GraphData;
using barcode::Interval;
using barcode::kInfinity;

namespace {

Barcode to_barcode(const std::vector<barcode::CategorizedBar>& bars) {
  std::vector<Interval> raw;
  for (const auto& cb : bars) raw.push_back(cb.interval);
  return Barcode(std::move(raw));
}

}  // namespace

TEST_CASE("category 0") {
  auto g = barcode::paper_example("section4");
  CHECK(to_barcode(bars_category0(g)) ==
        Barcode({Interval(0, kInfinity), Interval(3, kInfinity)}));

  auto ns = barcode::paper_example("north-south");
  CHECK(to_barcode(bars_category0(ns)) ==
        Barcode({Interval(0, kInfinity), Interval(1, kInfinity)}));

  auto single = ActionGraph::from({"", {{"a", 4, 1}}, {}});
  auto bars = bars_category0(single);
  REQUIRE(bars.size() == 2);
  CHECK(bars[0].interval == Interval(4, kInfinity));
  CHECK(bars[1].interval == Interval(4, kInfinity));
  CHECK(compute_B(single).size() == 2);
}

TEST_CASE("category 1") {
  auto g = barcode::paper_example("section4");
  auto at_saddle = bars_category1(g, 2);
  REQUIRE(at_saddle.size() == 1);
  CHECK(at_saddle[0].interval == Interval(1, 2));
  CHECK(at_saddle[0].witness == "y1");

  auto sphere = barcode::paper_example("morse-sphere");
  auto merge = bars_category1(sphere, -1);
  REQUIRE(merge.size() == 1);
  CHECK(merge[0].interval == Interval(-2, -1));

  // A sink's in-edges come from above, so a sink value merges nothing.
  CHECK(bars_category1(barcode::paper_example("north-south"), 0).empty());
  CHECK(bars_category1(sphere, -2).empty());
}

TEST_CASE("category 2") {
  auto sphere = barcode::paper_example("morse-sphere");
  auto split = bars_category2(sphere, 1);
  REQUIRE(split.size() == 1);
  CHECK(split[0].interval == Interval(1, 2));
  CHECK(split[0].witness == "s2");

  CHECK(bars_category2(barcode::paper_example("section4"), 2).empty());
  CHECK(bars_category2(barcode::paper_example("north-south"), 1).empty());
}

TEST_CASE("category 3") {
  auto g = barcode::paper_example("section4");
  CHECK(bars_category3(g, 2).empty());
  auto sphere = barcode::paper_example("morse-sphere");
  CHECK(bars_category3(sphere, -1).empty());
  CHECK(bars_category3(sphere, 1).empty());

  // On a genus-1 instance the two extra semi-infinite bars are category 3.
  barcode::GeneratorParams params;
  params.target_genus = 1;
  params.rng_seed = 42;
  auto gen = barcode::generate(params);
  int cat3 = 0;
  bool some_threshold_has_one = false;
  for (double t : gen.instance.graph.action_values()) {
    auto bars = bars_category3(gen.instance.graph, t);
    cat3 += static_cast<int>(bars.size());
    if (bars.size() == 1) some_threshold_has_one = true;
    for (const auto& cb : bars) CHECK(cb.interval == Interval(t, kInfinity));
  }
  CHECK(cat3 == 2);
  CHECK(some_threshold_has_one);
}

TEST_CASE("compute_B on the worked examples") {
  CHECK(compute_B(barcode::paper_example("section4")) ==
        Barcode({Interval(0, kInfinity), Interval(1, 2), Interval(3, kInfinity)}));
  CHECK(compute_B(barcode::paper_example("north-south")) ==
        Barcode({Interval(0, kInfinity), Interval(1, kInfinity)}));
  CHECK(compute_B(barcode::paper_example("morse-sphere")) ==
        Barcode({Interval(-2.5, kInfinity), Interval(-2, -1), Interval(1, 2),
                 Interval(2.5, kInfinity)}));
}

TEST_CASE("every bar endpoint is an action value") {
  std::mt19937_64 rng(55);
  for (int rep = 0; rep < 20; ++rep) {
    barcode::GeneratorParams params;
    params.target_genus = rep % 4;
    params.n_sources = 1 + rep % 3;
    params.rng_seed = 4000 + rep;
    auto g = barcode::generate(params).instance.graph;
    auto values = g.action_values();
    auto is_value = [&](double x) {
      return std::find(values.begin(), values.end(), x) != values.end();
    };
    for (const auto& bar : compute_B(g).bars()) {
      CHECK(is_value(bar.birth()));
      if (!bar.infinite()) CHECK(is_value(bar.death()));
    }
  }
}

TEST_CASE("negative leftover saddle weight emits nothing") {
  // Index -1 saddle whose threshold already has two category-1/2 bars: an
  // hourglass with two sinks below and two sources above.
  GraphData data;
  data.vertices = {{"y1", 0, 1}, {"y2", 1, 1}, {"x", 2, -1}, {"z1", 3, 1}, {"z2", 4, 1}};
  data.edges = {{"x", "y1"}, {"x", "y2"}, {"z1", "x"}, {"z2", "x"}};
  auto g = ActionGraph::from(data);
  auto detailed = compute_B_detailed(g);
  bool found = false;
  for (const auto& diag : detailed.thresholds)
    if (diag.t == 2) {
      found = true;
      CHECK(diag.k == 1);
      CHECK(diag.k_prime == -1);
    }
  CHECK(found);
  CHECK(bars_category3(g, 2).empty());
  CHECK(detailed.barcode == Barcode({Interval(0, kInfinity), Interval(1, 2),
                                     Interval(2, 3), Interval(4, kInfinity)}));
}

TEST_CASE("tie between merged blocks keeps the multiset well defined") {
  GraphData data;
  data.vertices = {{"a", 0, 1}, {"b", 0, 1}, {"x", 1, -1}, {"z", 2, 1}};
  data.edges = {{"x", "a"}, {"x", "b"}, {"z", "x"}};
  auto g = ActionGraph::from(data);
  auto bars = bars_category1(g, 1);
  REQUIRE(bars.size() == 1);
  CHECK(bars[0].interval == Interval(0, 1));

  // Renaming the tied sinks swaps the argmin choice but not the barcode.
  GraphData swapped = data;
  swapped.vertices[0].id = "b";
  swapped.vertices[1].id = "a";
  swapped.edges = {{"x", "b"}, {"x", "a"}, {"z", "x"}};
  CHECK(compute_B(ActionGraph::from(swapped)) == compute_B(g));
}

TEST_CASE("saddle inequality") {
  auto g = barcode::paper_example("section4");
  auto check = check_saddle_inequality(g, "x");
  CHECK(check.sub_preimages == 2);
  CHECK(check.super_preimages == 1);
  CHECK(check.holds);

  auto sphere = barcode::paper_example("morse-sphere");
  auto x1 = check_saddle_inequality(sphere, "x1");
  CHECK(x1.sub_preimages == 2);
  CHECK(x1.super_preimages == 1);
  CHECK(x1.holds);

  // A saddle feeding four sinks and fed by four sources is not realizable,
  // and the bound detects that.
  GraphData star;
  star.vertices = {{"x", 0, -1}};
  for (int i = 1; i <= 4; ++i) {
    star.vertices.push_back({"y" + std::to_string(i), -static_cast<double>(i), 1});
    star.vertices.push_back({"z" + std::to_string(i), static_cast<double>(i), 1});
    star.edges.push_back({"x", "y" + std::to_string(i)});
    star.edges.push_back({"z" + std::to_string(i), "x"});
  }
  auto bad = check_saddle_inequality(ActionGraph::from(star), "x");
  CHECK(bad.sub_preimages == 4);
  CHECK(bad.super_preimages == 4);
  CHECK_FALSE(bad.holds);

  CHECK_THROWS_AS(check_saddle_inequality(g, "z"), std::invalid_argument);
  GraphData shared = g.data();
  shared.vertices.push_back({"w", 2, 1});
  shared.edges.push_back({"w", "y1"});
  CHECK_THROWS_AS(check_saddle_inequality(ActionGraph::from(shared), "x"),
                  std::invalid_argument);
}

TEST_CASE("cone lemma enumeration") {
  CHECK_FALSE(barcode::check_cone_lemma(1).has_value());
  CHECK_FALSE(barcode::check_cone_lemma(4).has_value());
  CHECK_THROWS_AS(barcode::check_cone_lemma(7), std::invalid_argument);
  CHECK_THROWS_AS(barcode::check_cone_lemma(0), std::invalid_argument);

  // An instance violating the bound is rejected by the hypothesis filter.
  barcode::ConeInstance bad{2, {0, 1}, {0, 1}};
  CHECK_FALSE(cone_inequality_holds(bad));
  CHECK_FALSE(cone_hypothesis_holds(bad));

  barcode::ConeInstance constant_omega{3, {0, 0, 0}, {0, 1, 2}};
  CHECK(cone_hypothesis_holds(constant_omega));
  CHECK(cone_inequality_holds(constant_omega));
}
