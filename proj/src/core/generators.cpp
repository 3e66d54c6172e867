#include "core/generators.hpp"

#include <algorithm>
#include <string>

#include "core/error.hpp"

namespace reeb {

namespace {

ReebGraph build(std::initializer_list<std::pair<const char*, Rational>> vertices,
                std::initializer_list<std::pair<const char*, const char*>> edges, std::string name) {
  std::vector<Vertex> vs;
  for (const auto& [id, value] : vertices) vs.push_back({id, value});
  auto index = [&](const char* id) {
    for (VertexIndex v = 0; v < vs.size(); ++v)
      if (vs[v].id == id) return v;
    throw Error(ErrorCode::Internal, std::string("generator references unknown vertex ") + id);
  };
  std::vector<Edge> es;
  for (const auto& [a, b] : edges) es.push_back({index(a), index(b)});
  return ReebGraph(std::move(vs), std::move(es), std::move(name));
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    std::size_t end = s.find(sep, start);
    out.emplace_back(s.substr(start, end - start));
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return out;
}

unsigned long parse_unsigned(const std::string& s) {
  if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; }))
    throw InvalidArgument("expected a non-negative integer, got '" + s + "'");
  return std::stoul(s);
}

}  // namespace

ReebGraph make_segment(const Rational& lo, const Rational& hi) {
  return build({{"v0", lo}, {"v1", hi}}, {{"v0", "v1"}}, "segment");
}

ReebGraph make_cycle(const Rational& lo, const Rational& hi) {
  return build({{"v0", lo}, {"v1", hi}}, {{"v0", "v1"}, {"v0", "v1"}}, "cycle");
}

ReebGraph make_y() { return make_y(1, 2); }

ReebGraph make_y(const Rational& b, const Rational& c) {
  return build({{"a", 0}, {"b", b}, {"c", c}, {"d", 3}}, {{"a", "c"}, {"b", "c"}, {"c", "d"}}, "Y");
}

ReebGraph make_figure1_left() {
  return build({{"m0", 0}, {"m2", 2}, {"s4", 4}, {"j5", 5}, {"M8", 8}, {"M10", 10}},
               {{"m0", "s4"}, {"s4", "M8"}, {"s4", "j5"}, {"m2", "j5"}, {"j5", "M10"}}, "figure1_left");
}

ReebGraph make_figure1_right() {
  return build({{"m0", 0}, {"m2", 2}, {"s4", 4}, {"j5", 5}, {"M8", 8}, {"M10", 10}},
               {{"m2", "s4"}, {"s4", "M8"}, {"s4", "j5"}, {"m0", "j5"}, {"j5", "M10"}}, "figure1_right");
}

ReebGraph make_figure5(unsigned n) {
  if (n == 0) throw InvalidArgument("figure5 needs n >= 1");
  auto x = [](unsigned k) {
    Rational r = 1 - Rational(1, mpz_class(1) << k);
    r.canonicalize();
    return r;
  };
  std::vector<Vertex> vs{{"r0", 0}, {"top", 1}};
  std::vector<Edge> es;
  for (unsigned k = 1; k <= n; ++k) {
    vs.push_back({"j" + std::to_string(k), x(k)});
    vs.push_back({"b" + std::to_string(k), x(k - 1)});
  }
  auto junction = [](unsigned k) -> VertexIndex { return 2 * k; };
  auto branch = [](unsigned k) -> VertexIndex { return 2 * k + 1; };
  es.push_back({0, junction(1)});
  for (unsigned k = 1; k < n; ++k) es.push_back({junction(k), junction(k + 1)});
  es.push_back({junction(n), 1});
  for (unsigned k = 1; k <= n; ++k) es.push_back({branch(k), junction(k)});
  return ReebGraph(std::move(vs), std::move(es), "figure5:" + std::to_string(n));
}

Rational random_grid_value(std::mt19937_64& rng, const Rational& lo, const Rational& hi, unsigned steps) {
  std::uniform_int_distribution<unsigned> pick(0, steps);
  Rational r = lo + (hi - lo) * Rational(pick(rng), steps);
  r.canonicalize();
  return r;
}

ReebGraph make_random(const RandomGraphOptions& opt) {
  std::mt19937_64 rng(opt.seed);
  return make_random(rng, opt);
}

ReebGraph make_random(std::mt19937_64& rng, const RandomGraphOptions& opt) {
  if (opt.critical < 2) throw InvalidArgument("random graphs need at least 2 critical values");
  if (!(opt.lo < opt.hi)) throw InvalidArgument("random graphs need lo < hi");
  constexpr unsigned grid = 1000;
  if (opt.critical > grid / 8) throw InvalidArgument("too many critical values for the value grid");
  const Rational min_gap = (opt.hi - opt.lo) / (4 * opt.critical);

  std::vector<Rational> values;
  while (values.size() < opt.critical) {
    Rational v = random_grid_value(rng, opt.lo, opt.hi, grid);
    bool ok = std::none_of(values.begin(), values.end(), [&](const Rational& w) { return abs_diff(v, w) < min_gap; });
    if (ok) values.push_back(v);
  }
  std::vector<Vertex> vs;
  for (std::size_t i = 0; i < values.size(); ++i) vs.push_back({"v" + std::to_string(i), values[i]});

  std::vector<Edge> es;
  for (VertexIndex i = 1; i < vs.size(); ++i) {
    std::uniform_int_distribution<VertexIndex> pick(0, i - 1);
    es.push_back({pick(rng), i});
  }
  std::uniform_int_distribution<unsigned> extra(0, opt.max_extra_edges);
  std::uniform_int_distribution<VertexIndex> any(0, vs.size() - 1);
  for (unsigned k = extra(rng); k > 0; --k) {
    VertexIndex a = any(rng), b = any(rng);
    if (a != b) es.push_back({a, b});
  }

  auto bottom = std::min_element(values.begin(), values.end()) - values.begin();
  auto top = std::max_element(values.begin(), values.end()) - values.begin();
  ReebGraph draft(vs, es);
  std::bernoulli_distribution coin(0.5);
  for (VertexIndex v = 0; v < vs.size(); ++v)
    if (draft.is_pass_through(v)) es.push_back({v, static_cast<VertexIndex>(coin(rng) ? top : bottom)});
  return ReebGraph(std::move(vs), std::move(es), "random");
}

ReebGraph generate(std::string_view spec) {
  std::vector<std::string> parts = split(spec, ':');
  const std::string& kind = parts[0];
  auto arity = [&](std::size_t n) {
    if (parts.size() != n) throw InvalidArgument("malformed generator spec '" + std::string(spec) + "'");
  };
  if (kind == "segment") return arity(1), make_segment();
  if (kind == "cycle") return arity(1), make_cycle();
  if (kind == "Y") return arity(1), make_y();
  if (kind == "figure1_left") return arity(1), make_figure1_left();
  if (kind == "figure1_right") return arity(1), make_figure1_right();
  if (kind == "figure5") {
    arity(2);
    unsigned long n = parse_unsigned(parts[1]);
    if (n == 0 || n > 60) throw InvalidArgument("figure5 needs 1 <= n <= 60");
    return make_figure5(static_cast<unsigned>(n));
  }
  if (kind == "random") {
    arity(5);
    RandomGraphOptions opt;
    opt.seed = parse_unsigned(parts[1]);
    opt.critical = static_cast<unsigned>(parse_unsigned(parts[2]));
    try {
      opt.lo = parse_rational(parts[3]);
      opt.hi = parse_rational(parts[4]);
    } catch (const ParseError& e) {
      throw InvalidArgument(std::string("random generator range: ") + e.what());
    }
    return make_random(opt);
  }
  throw InvalidArgument("unknown generator '" + kind + "'");
}

std::vector<Rational> jitter_values(std::mt19937_64& rng, const ReebGraph& g, const Rational& delta) {
  std::vector<Rational> out(g.vertex_count());
  for (int attempt = 0; attempt < 1000; ++attempt) {
    for (VertexIndex v = 0; v < g.vertex_count(); ++v)
      out[v] = g.value(v) + random_grid_value(rng, -delta, delta, 64);
    bool ok = true;
    for (EdgeIndex e = 0; e < g.edge_count() && ok; ++e) {
      const Edge& edge = g.edge(e);
      ok = (g.value(edge.a) < g.value(edge.b)) == (out[edge.a] < out[edge.b]) && out[edge.a] != out[edge.b];
    }
    if (ok) return out;
  }
  throw PreconditionFailed("could not jitter values without breaking edge order; use a smaller delta");
}

}  // namespace reeb
