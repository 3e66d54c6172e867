#include <doctest.h>

#include <algorithm>
#include <random>

#include "core/generators.hpp"
#include "core/graph_io.hpp"
#include "core/isomorphism.hpp"
#include "oracles.hpp"

using namespace reeb;
using oracle::R;

namespace {

ReebGraph shuffle(const ReebGraph& g, std::mt19937_64& rng) {
  std::vector<VertexIndex> perm(g.vertex_count());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<Vertex> vs(g.vertex_count());
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) vs[perm[v]] = {"x" + std::to_string(v), g.value(v)};
  std::vector<Edge> es;
  for (const auto& e : g.edges()) es.push_back(rng() % 2 ? Edge{perm[e.a], perm[e.b]} : Edge{perm[e.b], perm[e.a]});
  std::shuffle(es.begin(), es.end(), rng);
  return ReebGraph(vs, es);
}

bool map_is_isomorphism(const ReebGraph& a, const ReebGraph& b, const VertexMap& m) {
  for (VertexIndex v = 0; v < a.vertex_count(); ++v)
    if (a.value(v) != b.value(m[v])) return false;
  auto key = [](VertexIndex x, VertexIndex y) { return std::make_pair(std::min(x, y), std::max(x, y)); };
  std::vector<std::pair<VertexIndex, VertexIndex>> ea, eb;
  for (const auto& e : a.edges()) ea.push_back(key(m[e.a], m[e.b]));
  for (const auto& e : b.edges()) eb.push_back(key(e.a, e.b));
  std::sort(ea.begin(), ea.end());
  std::sort(eb.begin(), eb.end());
  return ea == eb;
}

}  // namespace

TEST_SUITE("isomorphism") {
  TEST_CASE("Y against a relabelled copy") {
    auto y = make_y();
    auto p = parse_graph_text("v d 3\nv c 2\nv b 1\nv a 0\ne c d\ne a c\ne b c\n");
    auto m = level_isomorphism(y, p);
    REQUIRE(m);
    CHECK(map_is_isomorphism(y, p, *m));
  }

  TEST_CASE("figure 1 pair is not isomorphic") {
    CHECK_FALSE(is_level_isomorphic(make_figure1_left(), make_figure1_right()));
    CHECK_FALSE(oracle::isomorphic(make_figure1_left(), make_figure1_right()));
  }

  TEST_CASE("values must agree") {
    CHECK_FALSE(is_level_isomorphic(make_segment(0, 3), make_segment(0, 2)));
    CHECK_FALSE(is_level_isomorphic(make_segment(), make_cycle()));
  }

  TEST_CASE("edge multiplicity matters") {
    auto a = parse_graph_text("v a 0\nv b 1\nv c 2\ne a b\ne a b\ne b c\n");
    auto b = parse_graph_text("v a 0\nv b 1\nv c 2\ne a b\ne b c\ne b c\n");
    CHECK_FALSE(is_level_isomorphic(a, b));
    CHECK(oracle::isomorphic(a, b) == is_level_isomorphic(a, b));
  }

  TEST_CASE("agrees with permutation brute force") {
    std::mt19937_64 rng(99);
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
      auto g = make_random({.seed = seed, .critical = 4, .lo = 0, .hi = 4});
      if (g.vertex_count() > 8) continue;
      auto h = shuffle(g, rng);
      auto m = level_isomorphism(g, h);
      REQUIRE(m);
      CHECK(map_is_isomorphism(g, h, *m));
      // a random other graph with the same vertex count
      auto other = make_random({.seed = seed + 1000, .critical = 4, .lo = 0, .hi = 4});
      if (other.vertex_count() <= 8) CHECK(is_level_isomorphic(g, other) == oracle::isomorphic(g, other));
    }
  }

  TEST_CASE("oriented isomorphism finds the smallest shift") {
    auto y = make_y();
    auto yp = make_y(R("1.05"), R("1.95"));
    auto m = best_oriented_isomorphism(y, yp);
    REQUIRE(m);
    CHECK(m->shift == R("0.05"));
    auto f = best_oriented_isomorphism(make_figure1_left(), make_figure1_right());
    if (f) CHECK(f->shift > 0);
    CHECK_FALSE(best_oriented_isomorphism(make_y(), make_segment()));
  }
}
