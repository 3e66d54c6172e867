#include <doctest.h>

#include <random>

#include "core/error.hpp"
#include "core/generators.hpp"
#include "core/graph_io.hpp"
#include "oracles.hpp"

using namespace reeb;
using oracle::R;

TEST_SUITE("io") {
  TEST_CASE("rational parsing and formatting") {
    CHECK(parse_rational("12") == 12);
    CHECK(parse_rational("-0.25") == Rational(-1, 4));
    CHECK(parse_rational("3.140") == Rational(157, 50));
    CHECK(parse_rational("7/3") == Rational(7, 3));
    CHECK(parse_rational("14/6") == Rational(7, 3));
    CHECK(format_rational(Rational(-1, 4)) == "-0.25");
    CHECK(format_rational(Rational(7, 3)) == "7/3");
    CHECK(format_rational(Rational(5)) == "5");
    CHECK(format_rational(Rational(1, 1024)) == "0.0009765625");
    for (const char* bad : {"", "1.", ".5x", "1/0", "abc", "1e3", "--1"}) {
      CHECK_THROWS_AS(parse_rational(bad), ParseError);
    }
  }

  TEST_CASE("format then parse is the identity on rationals") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 500; ++i) {
      long p = static_cast<long>(rng() % 20001) - 10000;
      long q = static_cast<long>(rng() % 999) + 1;
      Rational x(p, q);
      x.canonicalize();
      CHECK(parse_rational(format_rational(x)) == x);
    }
  }

  TEST_CASE("text round trip") {
    for (const auto& g : {make_y(), make_cycle(), make_figure1_left(), make_figure5(3)}) {
      auto back = parse_graph_text(format_graph_text(g));
      CHECK(identical(back, g));
    }
  }

  TEST_CASE("json round trip") {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
      auto g = make_random({.seed = seed, .critical = 5});
      CHECK(identical(parse_graph_json(format_graph_json(g)), g));
      CHECK(identical(parse_graph(format_graph_json(g)), g));
      CHECK(identical(parse_graph(format_graph_text(g)), g));
    }
  }

  TEST_CASE("text parse errors carry line numbers") {
    try {
      parse_graph_text("v a 0\nv b zz\n");
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(std::string(e.what()).find("line 2") != std::string::npos);
    }
    CHECK_THROWS_AS(parse_graph_text("e a b\n"), ParseError);
    CHECK_THROWS_AS(parse_graph_text("v a 0\nv a 1\n"), Error);
    CHECK_THROWS_AS(parse_graph_text("x 1 2\n"), ParseError);
    CHECK_THROWS_AS(parse_graph_json("{\"vertices\": 3}"), ParseError);
    CHECK_THROWS_AS(parse_graph_json("{"), ParseError);
  }

  TEST_CASE("comments and blank lines are ignored") {
    auto g = parse_graph_text("# hello\n\nv a 0   # trailing\nv b 1/2\n\ne a b\n");
    CHECK(g.vertex_count() == 2);
    CHECK(g.value(1) == R("0.5"));
  }

  TEST_CASE("missing files raise io errors") {
    try {
      load_graph("/nonexistent/file.txt");
      FAIL("expected an io error");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::Io);
    }
  }
}
