#include <doctest.h>

#include <random>

#include "core/bottleneck.hpp"
#include "core/error.hpp"
#include "core/generators.hpp"
#include "core/persistence.hpp"
#include "oracles.hpp"

using namespace reeb;
using oracle::R;

namespace {

Diagram ord(std::initializer_list<std::pair<const char*, const char*>> pts) {
  std::vector<DiagramPoint> v;
  for (auto [b, d] : pts) v.push_back({PointKind::Ord0, R(b), R(d)});
  return Diagram(v);
}

Diagram random_diagram(std::mt19937_64& rng, std::size_t n) {
  std::vector<DiagramPoint> v;
  for (std::size_t i = 0; i < n; ++i) {
    auto k = kAllKinds[rng() % 4];
    Rational b(static_cast<long>(rng() % 40), 4), d(static_cast<long>(rng() % 40), 4);
    if (k == PointKind::Ord0 && b > d) std::swap(b, d);
    if ((k == PointKind::Rel1 || k == PointKind::Ext1) && b < d) std::swap(b, d);
    v.push_back({k, b, d});
  }
  return Diagram(v);
}

}  // namespace

TEST_SUITE("bottleneck") {
  TEST_CASE("matching cost") {
    CHECK(matching_cost(ord({{"1", "2"}}), Diagram{}, {{}, {0}, {}}) == R("0.5"));
    CHECK(matching_cost(ord({{"0", "4"}}), ord({{"1", "5"}}), {{{0, 0}}, {}, {}}) == 1);
    auto d = ord({{"0", "4"}, {"1", "3"}});
    CHECK(matching_cost(d, d, {{{0, 0}, {1, 1}}, {}, {}}) == 0);
  }

  TEST_CASE("matching cost rejects malformed matchings") {
    auto d = ord({{"0", "4"}});
    CHECK_THROWS_AS(matching_cost(d, d, {{{0, 0}}, {0}, {}}), InvalidArgument);
    CHECK_THROWS_AS(matching_cost(d, d, {{}, {}, {}}), InvalidArgument);
    Diagram rel({{PointKind::Rel1, 4, 0}});
    CHECK_THROWS_AS(matching_cost(d, rel, {{{0, 0}}, {}, {}}), InvalidArgument);
  }

  TEST_CASE("bottleneck examples") {
    CHECK(bottleneck(ord({{"0", "4"}}), ord({{"1", "5"}})).value == 1);
    CHECK(bottleneck(ord({{"1", "2"}}), Diagram{}).value == R("0.5"));
    auto l = extended_diagram(make_figure1_left()), r = extended_diagram(make_figure1_right());
    CHECK(bottleneck(l, r).value == 0);
  }

  TEST_CASE("feasibility") {
    auto a = ord({{"0", "4"}}), b = ord({{"1", "5"}});
    CHECK(feasible(a, b, 1));
    CHECK_FALSE(feasible(a, b, R("0.99")));
    CHECK(feasible(a, a, 0));
    CHECK_THROWS_AS(feasible(a, b, -1), InvalidArgument);
  }

  TEST_CASE("graph bottleneck") {
    CHECK(graph_bottleneck(make_y(), make_y()) == 0);
    CHECK(graph_bottleneck(make_figure1_left(), make_figure1_right()) == 0);
    CHECK(graph_bottleneck(make_y(), make_y(R("1.05"), R("1.95"))) == R("0.05"));
    CHECK(graph_bottleneck(make_y(), make_segment()) == R("0.5"));
  }

  TEST_CASE("agrees with exhaustive matching and its witness is optimal") {
    std::mt19937_64 rng(17);
    for (int t = 0; t < 300; ++t) {
      auto a = random_diagram(rng, rng() % 6), b = random_diagram(rng, rng() % 6);
      auto r = bottleneck(a, b);
      CHECK(r.value == oracle::bottleneck(a, b));
      CHECK(matching_cost(a, b, r.witness) == r.value);
      CHECK(feasible(a, b, r.value));
      if (r.value > 0) CHECK_FALSE(feasible(a, b, r.value - Rational(1, 1000)));
      CHECK(bottleneck(b, a).value == r.value);
    }
  }

  TEST_CASE("triangle inequality") {
    std::mt19937_64 rng(23);
    for (int t = 0; t < 100; ++t) {
      auto a = random_diagram(rng, 5), b = random_diagram(rng, 5), c = random_diagram(rng, 5);
      CHECK(bottleneck(a, c).value <= bottleneck(a, b).value + bottleneck(b, c).value);
    }
  }
}
