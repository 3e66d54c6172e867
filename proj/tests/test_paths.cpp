#include <doctest.h>

#include <random>

#include "core/bottleneck.hpp"
#include "core/error.hpp"
#include "core/generators.hpp"
#include "core/graph_io.hpp"
#include "core/isomorphism.hpp"
#include "core/paths.hpp"
#include "core/persistence.hpp"
#include "oracles.hpp"

using namespace reeb;
using oracle::R;

namespace {

std::vector<Rational> values_of(const ReebGraph& g) {
  std::vector<Rational> v;
  for (const auto& x : g.vertices()) v.push_back(x.value);
  return v;
}

Rational sum(const std::vector<Rational>& v) {
  Rational s = 0;
  for (const auto& x : v) s += x;
  return s;
}

}  // namespace

TEST_SUITE("paths") {
  TEST_CASE("constant path has length zero") {
    GraphPath p{{0, 1}, {make_y(), make_y()}, {0}};
    CHECK(path_length(p, PathMetric::Bottleneck).total == 0);
    CHECK(path_length(p, PathMetric::FdUpper).total == 0);
    auto eq = check_strong_equivalence(p);
    CHECK(eq.ok);
    CHECK(eq.total_bottleneck == 0);
  }

  TEST_CASE("malformed paths are rejected") {
    CHECK_THROWS_AS(check_path({{0, 1}, {make_y()}, {}}), InvalidArgument);
    CHECK_THROWS_AS(check_path({{0, 0}, {make_y(), make_y()}, {0}}), InvalidArgument);
    CHECK_THROWS_AS(check_path({{R("0.5"), 1}, {make_y(), make_y()}, {0}}), InvalidArgument);
  }

  TEST_CASE("two-step path sums its certificates") {
    GraphPath p{{0, R("0.5"), 1}, {make_y(), make_segment(), make_segment()}, {R("0.5"), R("0.25")}};
    CHECK(path_length(p, PathMetric::FdUpper).total == R("0.75"));
    CHECK(path_length(p, PathMetric::Bottleneck).total == R("0.5"));
  }

  TEST_CASE("linear path on the segment") {
    auto p = linear_path(make_segment(), {0, 5}, 2);
    REQUIRE(p.graphs.size() == 3);
    CHECK(p.graphs[1].value(1) == 4);
    CHECK(p.graphs[2].value(1) == 5);
    CHECK(p.times == std::vector<Rational>{0, R("0.5"), 1});
  }

  TEST_CASE("linear path on the Y") {
    auto yp = make_y(R("1.05"), R("1.95"));
    auto p = linear_path(make_y(), values_of(yp), 5);
    for (const auto& s : p.step_upper) CHECK(s == R("0.01"));
    CHECK(identical(p.graphs.back(), yp));
    auto fine = linear_path(make_y(), values_of(yp), 16);
    CHECK(path_length(fine, PathMetric::Bottleneck).total <= R("0.05"));
  }

  TEST_CASE("linear path refuses value collisions") {
    CHECK_THROWS_AS(linear_path(make_y(), {0, 3, 2, 3}, 2), PreconditionFailed);
    CHECK_THROWS_AS(linear_path(make_y(), {0, 1}, 2), InvalidArgument);
  }

  TEST_CASE("contraction of a segment only shrinks") {
    auto p = contraction_path(make_segment(), 4);
    CHECK(p.graphs.size() == 5);
    for (const auto& s : p.step_upper) CHECK(s == R("0.375"));
    CHECK(p.graphs.back().vertex_count() == 1);
    auto s = contract_to_segment(make_segment());
    CHECK(s.stages == 0);
    CHECK(s.length == 0);
  }

  TEST_CASE("contraction of the Y prunes once") {
    auto s = contract_to_segment(make_y());
    CHECK(s.stages == 1);
    CHECK(s.length <= 1);
    auto p = contraction_path(make_y(), 2);
    CHECK(p.graphs.size() == 5);
    CHECK(is_level_isomorphic(p.graphs[2], make_segment()));
  }

  TEST_CASE("contraction of figure 1 left") {
    auto g = make_figure1_left();
    auto s = contract_to_segment(g);
    CHECK(s.stages == 2);
    CHECK(s.lo == 0);
    CHECK(s.hi == 10);
    auto p = contraction_path(g, 2);
    auto eq = check_strong_equivalence(p);
    CHECK(eq.ok);
  }

  TEST_CASE("intrinsic upper bounds") {
    CHECK(intrinsic_upper(make_y(), make_y()).value == 0);
    auto y = intrinsic_upper(make_y(), make_y(R("1.05"), R("1.95")));
    CHECK(y.value <= R("0.05"));
    CHECK(y.route == "linear");
    auto f = intrinsic_upper(make_figure1_left(), make_figure1_right());
    CHECK(f.value > 0);
    CHECK(certify_fd(make_figure1_left(), make_figure1_right()) == f.value);
  }

  TEST_CASE("refinement never shortens the bottleneck length") {
    auto yp = make_y(R("1.05"), R("1.95"));
    std::vector<std::function<GraphPath(unsigned)>> makers{
        [&](unsigned n) { return linear_path(make_y(), values_of(yp), n); },
        [&](unsigned n) { return contraction_path(make_figure1_left(), n); },
        [&](unsigned n) { return contraction_path(make_random({.seed = 3, .critical = 5}), n); },
    };
    for (const auto& make : makers) {
      Rational prev = -1;
      for (unsigned n : {2u, 4u, 8u, 16u}) {
        auto p = make(n);
        auto eq = check_strong_equivalence(p);
        CHECK(eq.ok);
        CHECK(eq.total_bottleneck >= prev);
        CHECK(eq.total_certificate == sum(p.step_upper));
        prev = eq.total_bottleneck;
      }
    }
  }

  TEST_CASE("manifests") {
    auto p = load_path_manifest("0 y.txt\n1 y_perturbed.txt\n", REEB_TEST_DATA);
    CHECK(p.graphs.size() == 2);
    CHECK(p.step_upper[0] == R("0.05"));
    CHECK_THROWS_AS(load_path_manifest("0 y.txt\n0 y.txt\n", REEB_TEST_DATA), InvalidArgument);
    CHECK_THROWS_AS(load_path_manifest("zero y.txt\n", REEB_TEST_DATA), ParseError);
  }
}
