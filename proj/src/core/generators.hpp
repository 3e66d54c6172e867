#pragma once

#include <cstdint>
#include <random>
#include <string_view>

#include "core/graph.hpp"

namespace reeb {

ReebGraph make_segment(const Rational& lo = 0, const Rational& hi = 3);
/// Two vertices joined by two parallel edges.
ReebGraph make_cycle(const Rational& lo = 0, const Rational& hi = 3);
/// a:0, b:1, c:2, d:3 with edges a-c, b-c, c-d.
ReebGraph make_y();
/// The Y-graph with b moved to `b` and c moved to `c`.
ReebGraph make_y(const Rational& b, const Rational& c);

/// Two non-isomorphic graphs with the same extended diagram
/// { Ext0 (0,10), Ord0 (2,5), Rel1 (8,4) }. They differ in which minimum hangs
/// from the lower saddle.
ReebGraph make_figure1_left();
ReebGraph make_figure1_right();

/// Comb converging to nothing: a trunk from 0 to 1 with junctions at
/// x_k = 1 - 2^-k (k = 1..n) and a branch at each junction whose minimum sits at
/// x_{k-1}. R_n has n+2 critical values and d_B(R_n, R_{n+1}) = 2^-(n+2).
ReebGraph make_figure5(unsigned n);

struct RandomGraphOptions {
  std::uint64_t seed = 1;
  unsigned critical = 6;
  Rational lo = 0;
  Rational hi = 10;
  unsigned max_extra_edges = 2;
};

/// Valid canonical graph whose critical values lie on a grid of [lo, hi] and are
/// pairwise at least (hi - lo) / (4 * critical) apart.
ReebGraph make_random(const RandomGraphOptions& opt);
ReebGraph make_random(std::mt19937_64& rng, const RandomGraphOptions& opt);

/// "segment", "cycle", "Y", "figure1_left", "figure1_right", "figure5:<n>",
/// "random:<seed>:<critical>:<lo>:<hi>". Throws InvalidArgument otherwise.
ReebGraph generate(std::string_view spec);

/// Uniform rational in [lo, hi] on a grid of `steps` cells.
Rational random_grid_value(std::mt19937_64& rng, const Rational& lo, const Rational& hi, unsigned steps);

/// Moves every vertex by at most `delta` (on a grid) while keeping the strict
/// order of values along every edge. Returns the perturbed values.
std::vector<Rational> jitter_values(std::mt19937_64& rng, const ReebGraph& g, const Rational& delta);

}  // namespace reeb
