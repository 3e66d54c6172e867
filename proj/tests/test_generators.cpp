#include <doctest.h>

#include <random>

#include "core/error.hpp"
#include "core/generators.hpp"
#include "core/graph.hpp"
#include "core/persistence.hpp"
#include "oracles.hpp"

using namespace reeb;
using oracle::R;

TEST_SUITE("generators") {
  TEST_CASE("random graphs are valid and canonical") {
    auto g = generate("random:7:6:0:10");
    CHECK(validate(g).ok());
    CHECK(critical_values(g).size() == 6);
    for (std::uint64_t seed = 1; seed <= 200; ++seed) {
      unsigned k = 3 + seed % 5;
      auto h = make_random({.seed = seed, .critical = k});
      CHECK(validate(h).ok());
      CHECK(critical_values(h).size() == k);
      CHECK(min_critical_gap(h) >= Rational(10, 4 * k));
      CHECK(h.vertex_count() <= 30);
      CHECK(extended_diagram(h).size() <= 50);
    }
  }

  TEST_CASE("random graphs are deterministic in the seed") {
    auto a = make_random({.seed = 5});
    auto b = make_random({.seed = 5});
    auto c = make_random({.seed = 6});
    CHECK(identical(a, b));
    CHECK_FALSE(identical(a, c));
  }

  TEST_CASE("figure 5 has n+2 critical values") {
    CHECK(critical_values(make_figure5(3)).size() == 5);
    for (unsigned n = 1; n <= 8; ++n) {
      auto g = make_figure5(n);
      CHECK(validate(g).ok());
      CHECK(critical_values(g).size() == n + 2);
    }
  }

  TEST_CASE("figure 1 pair") {
    auto l = make_figure1_left(), r = make_figure1_right();
    CHECK(validate(l).ok());
    CHECK(validate(r).ok());
    CHECK(extended_diagram(l) == extended_diagram(r));
  }

  TEST_CASE("jitter stays within delta and keeps edge orientation") {
    std::mt19937_64 rng(3);
    for (std::uint64_t seed = 1; seed <= 50; ++seed) {
      auto g = make_random({.seed = seed, .critical = 5});
      Rational delta(1, 10);
      auto vals = jitter_values(rng, g, delta);
      REQUIRE(vals.size() == g.vertex_count());
      for (VertexIndex v = 0; v < g.vertex_count(); ++v) CHECK(abs_diff(vals[v], g.value(v)) <= delta);
      for (EdgeIndex e = 0; e < g.edge_count(); ++e) CHECK(vals[g.lower(e)] < vals[g.upper(e)]);
    }
  }

  TEST_CASE("grid values stay in range") {
    std::mt19937_64 rng(1);
    for (int i = 0; i < 200; ++i) {
      auto x = random_grid_value(rng, 2, 3, 16);
      CHECK(x >= 2);
      CHECK(x <= 3);
      Rational scaled = x * 16;
      CHECK(scaled.get_den() == 1);
    }
  }

  TEST_CASE("generator strings") {
    CHECK(identical(generate("Y"), make_y()));
    CHECK(identical(generate("figure5:2"), make_figure5(2)));
    CHECK_THROWS_AS(generate("figure5:0"), InvalidArgument);
    CHECK_THROWS_AS(generate("bogus"), InvalidArgument);
    CHECK_THROWS_AS(generate("random:1:2"), InvalidArgument);
  }
}
