#include <doctest.h>

#include <random>

#include "core/bottleneck.hpp"
#include "core/distortion.hpp"
#include "core/error.hpp"
#include "core/generators.hpp"
#include "core/graph_io.hpp"
#include "oracles.hpp"

using namespace reeb;
using oracle::R;

namespace {

// max |d_f - d_g| over pairs of C(phi, psi), recomputed with path enumeration
Rational brute_distortion(const ReebGraph& g1, const ReebGraph& g2, const Correspondence& c) {
  std::vector<std::pair<GraphPoint, GraphPoint>> pairs;
  for (std::size_t i = 0; i < c.samples1.size(); ++i) pairs.push_back({c.samples1[i], c.phi[i]});
  for (std::size_t j = 0; j < c.samples2.size(); ++j) pairs.push_back({c.psi[j], c.samples2[j]});
  Rational worst = 0;
  for (std::size_t i = 0; i < pairs.size(); ++i)
    for (std::size_t j = i + 1; j < pairs.size(); ++j) {
      Rational d1 = oracle::travel(g1, pairs[i].first, pairs[j].first);
      Rational d2 = oracle::travel(g2, pairs[i].second, pairs[j].second);
      worst = std::max(worst, abs_diff(d1, d2));
    }
  return worst;
}

}  // namespace

TEST_SUITE("distortion") {
  TEST_CASE("identity correspondences cost nothing") {
    for (const auto& g : {make_segment(), make_y(), make_cycle(), make_figure1_left()}) {
      auto c = natural_correspondence(g, g, default_resolution(g, g));
      auto r = evaluate(g, g, c);
      CHECK(r.distortion == 0);
      CHECK(r.sampled == 0);
      CHECK(fd_upper(g, g, c) == 0);
      CHECK(fd_lower(g, g) == 0);
    }
  }

  TEST_CASE("Y against its perturbation") {
    auto y = make_y(), yp = make_y(R("1.05"), R("1.95"));
    auto c = natural_correspondence(y, yp, default_resolution(y, yp));
    auto r = evaluate(y, yp, c);
    CHECK(r.defect_phi == R("0.05"));
    CHECK(r.defect_psi == R("0.05"));
    CHECK(r.distortion <= R("0.1"));
    CHECK(r.sampled == R("0.05"));
    CHECK(r.distortion == brute_distortion(y, yp, c));
    CHECK(fd_lower(y, yp) == R("0.025"));
  }

  TEST_CASE("Y collapsed onto a segment") {
    auto y = make_y(), s = make_segment();
    auto c = collapse_correspondence(y, s, default_resolution(y, s));
    auto r = evaluate(y, s, c);
    CHECK(r.distortion == 1);
    CHECK(r.defect_phi == 0);
    CHECK(r.defect_psi == 0);
    CHECK(r.sampled == R("0.5"));
    CHECK(r.distortion == brute_distortion(y, s, c));
    // the same witness read from the other side
    auto back = collapse_correspondence(s, y, default_resolution(s, y));
    CHECK(evaluate(s, y, back).sampled == R("0.5"));
  }

  TEST_CASE("cycle collapsed onto a segment") {
    auto c = make_cycle(), s = make_segment();
    auto w = collapse_correspondence(c, s, default_resolution(c, s));
    auto r = evaluate(c, s, w);
    CHECK(r.distortion == brute_distortion(c, s, w));
    CHECK(graph_bottleneck(c, s) <= 2 * r.upper);
  }

  TEST_CASE("collapse needs a segment") {
    CHECK_THROWS_AS(collapse_correspondence(make_y(), make_cycle(), 1), PreconditionFailed);
  }

  TEST_CASE("natural correspondence needs matching combinatorics") {
    CHECK_THROWS_AS(natural_correspondence(make_y(), make_segment(), 1), PreconditionFailed);
    CHECK_THROWS_AS(natural_correspondence(make_figure1_left(), make_figure1_right(), 1), PreconditionFailed);
  }

  TEST_CASE("sample nets") {
    auto y = make_y();
    auto net = sample_net(y, R("0.25"));
    CHECK(sample_spacing(y, net) <= R("0.25"));
    CHECK(net.size() == 4 + 7 + 3 + 3);
    std::vector<GraphPoint> partial{GraphPoint::at_vertex(0)};
    CHECK_THROWS_AS(sample_spacing(y, partial), InvalidArgument);
    CHECK(default_resolution(y, make_segment()) == R("0.125"));
  }

  TEST_CASE("witness files") {
    auto s = make_segment();
    auto c = parse_correspondence(s, s, "phi v0 v0\nphi v1 v1\nphi v0~v1@1.5 v0~v1@1.5\npsi v0 v0\npsi v1 v1\n");
    CHECK(evaluate(s, s, c).sampled == 0);
    auto y = make_y();
    auto p = parse_point(y, "a~c@0.5");
    CHECK(point_value(y, p) == R("0.5"));
    CHECK(parse_point(y, "c").is_vertex());
    auto cyc = make_cycle();
    auto q = parse_point(cyc, "v0~v1#1@2");
    CHECK(q.index == 1);
    CHECK_THROWS_AS(parse_point(y, "zz"), ParseError);
    CHECK_THROWS_AS(parse_point(y, "a~c"), ParseError);
    CHECK_THROWS_AS(parse_point(y, "a~d@1"), ParseError);
    CHECK_THROWS_AS(parse_correspondence(s, s, "phi v0\n"), ParseError);
  }

  TEST_CASE("reported upper bound includes the resolution remainder") {
    auto y = make_y(), yp = make_y(R("1.05"), R("1.95"));
    auto r = evaluate(y, yp, natural_correspondence(y, yp, R("0.25")));
    CHECK(r.resolution <= R("0.25"));
    CHECK(r.remainder == 2 * r.resolution);
    CHECK(r.upper == r.sampled + r.remainder);
  }

  TEST_CASE("lower bound never beats an upper bound on jittered graphs") {
    std::mt19937_64 rng(4);
    for (std::uint64_t seed = 1; seed <= 25; ++seed) {
      auto g = make_random({.seed = seed, .critical = 4});
      auto h = g.with_values(jitter_values(rng, g, R("0.3")));
      auto c = natural_correspondence(g, h, default_resolution(g, h));
      auto r = evaluate(g, h, c);
      CHECK(graph_bottleneck(g, h) <= 2 * r.sampled);
      CHECK(r.sampled <= R("0.3"));
      CHECK(fd_lower(g, h) <= r.upper);
    }
  }
}
