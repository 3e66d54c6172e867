#include <doctest.h>

#include <random>

#include "core/bottleneck.hpp"
#include "core/error.hpp"
#include "core/generators.hpp"
#include "core/graph_io.hpp"
#include "core/isomorphism.hpp"
#include "core/leveled_space.hpp"
#include "core/operators.hpp"
#include "core/persistence.hpp"
#include "oracles.hpp"

using namespace reeb;
using oracle::R;

namespace {

Diagram one(PointKind k, const char* b, const char* d) { return Diagram({{k, R(b), R(d)}}); }

bool clear_of_diagonal(const Diagram& d, const Rational& r) {
  for (const auto& p : d.points())
    if (p.kind != PointKind::Ext0 && diagonal_distance(p) <= r) return false;
  return true;
}

}  // namespace

TEST_SUITE("operators") {
  TEST_CASE("merge on the Y") {
    auto m = merge(make_y(), R("1.8"), R("2.6"));
    auto d = extended_diagram(m);
    CHECK(d == Diagram({{PointKind::Ext0, 0, 3}, {PointKind::Ord0, 1, R("2.2")}}));
    CHECK(d == snap_diagram(extended_diagram(make_y()), R("1.8"), R("2.6")));
  }

  TEST_CASE("merge inside an edge is invisible") {
    auto m = merge(make_segment(), 1, 2);
    CHECK(is_level_isomorphic(m, make_segment()));
  }

  TEST_CASE("merge around the minimum of a cycle") {
    auto m = merge(make_cycle(), R("-0.5"), R("0.5"));
    CHECK(is_level_isomorphic(m, make_cycle()));
    CHECK(extended_diagram(m) == extended_diagram(make_cycle()));
  }

  TEST_CASE("merge across the whole branch removes it") {
    auto m = merge(make_y(), R("0.5"), R("2.5"));
    CHECK(extended_diagram(m) == snap_diagram(extended_diagram(make_y()), R("0.5"), R("2.5")));
    CHECK(extended_diagram(m).count(PointKind::Ord0) == 0);
    CHECK_THROWS_AS(merge(make_y(), 2, 1), InvalidArgument);
  }

  TEST_CASE("snap rule") {
    CHECK(snap_diagram(one(PointKind::Ord0, "1", "2"), R("1.8"), R("2.6")) == one(PointKind::Ord0, "1", "2.2"));
    CHECK(snap_diagram(one(PointKind::Ord0, "1", "2"), R("0.5"), R("2.5")).empty());
    CHECK(snap_diagram(Diagram{}, 0, 1).empty());
    // Ext0 points survive even when both ends snap together
    CHECK(snap_diagram(one(PointKind::Ext0, "0", "1"), 0, 1) == one(PointKind::Ext0, "0.5", "0.5"));
  }

  TEST_CASE("snapping principle on random graphs and bands") {
    std::mt19937_64 rng(8);
    for (std::uint64_t seed = 1; seed <= 60; ++seed) {
      auto g = make_random({.seed = seed, .critical = 3 + static_cast<unsigned>(seed % 5)});
      auto a = random_grid_value(rng, -1, 11, 48), b = random_grid_value(rng, -1, 11, 48);
      if (a > b) std::swap(a, b);
      CHECK(extended_diagram(merge(g, a, b)) == snap_diagram(extended_diagram(g), a, b));
    }
  }

  TEST_CASE("simplify on the Y") {
    auto s = simplify_tracked(make_y(), R("1.5"));
    CHECK(is_level_isomorphic(s.graph, make_segment()));
    CHECK(s.certificate <= 3);
    CHECK(is_level_isomorphic(simplify(make_y(), R("0.5")), make_y()));
    CHECK(is_level_isomorphic(simplify(make_segment(), 100), make_segment()));
  }

  TEST_CASE("simplify contract on random graphs") {
    std::mt19937_64 rng(12);
    for (std::uint64_t seed = 1; seed <= 60; ++seed) {
      auto g = make_random({.seed = seed, .critical = 3 + static_cast<unsigned>(seed % 5)});
      auto alpha = random_grid_value(rng, 0, 3, 24);
      auto s = simplify_tracked(g, alpha);
      auto dh = extended_diagram(s.graph);
      CHECK(clear_of_diagonal(dh, alpha / 2));
      CHECK(bottleneck(dh, extended_diagram(g)).value <= 4 * alpha);
      CHECK(s.certificate <= 2 * alpha);
    }
  }

  TEST_CASE("smallest feature") {
    CHECK(*smallest_feature(extended_diagram(make_y())) == 1);
    CHECK_FALSE(smallest_feature(extended_diagram(make_segment())));
  }

  TEST_CASE("full transform recovers perturbed graphs") {
    auto yp = make_y(R("1.05"), R("1.95"));
    auto t = full_transform(yp, R("0.1"), {0, 1, 2, 3});
    CHECK(is_level_isomorphic(t.graph, make_y()));
    auto same = full_transform(make_y(), R("0.01"), {0, 1, 2, 3});
    CHECK(is_level_isomorphic(same.graph, make_y()));
    CHECK(same.warnings.empty());
  }

  TEST_CASE("full transform on figure 1 keeps the diagram but not the graph") {
    auto left = make_figure1_left();
    auto t = full_transform(make_figure1_right(), R("0.01"), critical_values(left));
    CHECK(extended_diagram(t.graph) == extended_diagram(left));
    CHECK_FALSE(is_level_isomorphic(t.graph, left));
  }

  TEST_CASE("full transform warns when bands overlap") {
    auto t = full_transform(make_y(), R("0.1"), {0, 1, 2, 3});
    CHECK_FALSE(t.warnings.empty());
  }

  TEST_CASE("crit ball check") {
    auto dy = extended_diagram(make_y());
    CHECK(crit_ball_check(dy, dy, 0));
    CHECK(crit_ball_check(extended_diagram(make_y(R("1.05"), R("1.95"))), dy, R("0.05")));
    CHECK_FALSE(crit_ball_check(dy, extended_diagram(make_segment()), R("0.4")));
  }

  TEST_CASE("leveled space bookkeeping") {
    LeveledSpace s(make_y());
    CHECK(s.certificate() == 0);
    s.subdivide_at(R("1.5"));
    CHECK(s.vertex_count() == 6);
    CHECK(is_level_isomorphic(s.graph(), make_y()));
    auto k = s.snapshot();
    s.collapse_band(R("0.5"), R("2.5"));
    CHECK(s.certificate() == 1);
    CHECK(s.distance_to(s.snapshot_values(k)) == 1);
    CHECK(is_level_isomorphic(s.graph(), make_segment()));
    std::vector<Rational> bad = s.current();
    bad[0] = 10;
    CHECK_THROWS_AS(s.set_current(bad), InvalidArgument);
  }

  TEST_CASE("band components respect connectivity") {
    LeveledSpace s(make_cycle());
    s.subdivide_at(1);
    s.subdivide_at(2);
    // the two sides of the cycle at level [1, 2] are separate components
    VertexIndex start = 0;
    for (VertexIndex v = 0; v < s.vertex_count(); ++v)
      if (s.current()[v] == 1) start = v;
    CHECK(s.band_component(start, 1, 2).size() == 2);
    s.collapse_component(start, 1, 2);
    CHECK(s.certificate() == R("0.5"));
    CHECK(first_betti_number(s.graph()) == 1);
  }
}
