#pragma once

#include <cstddef>
#include <vector>

#include "core/graph.hpp"

namespace reeb {

/// All-pairs data for the travel distance
///
///     d_f(x, y) = min over paths x -> y of (max f - min f along the path).
///
/// Only vertex-to-vertex paths need to be enumerated: a path leaving an edge
/// point does so through one of the two endpoints, and inside an edge f is
/// monotone. For every vertex pair we keep the Pareto frontier of (lowest level
/// L, lowest reachable ceiling H) over paths staying above L.
class TravelOracle {
 public:
  explicit TravelOracle(const ReebGraph& g);

  const ReebGraph& graph() const { return g_; }
  Rational distance(const GraphPoint& x, const GraphPoint& y) const;

  struct Level {
    std::size_t floor;    // rank of L in the sorted distinct values
    std::size_t ceiling;  // rank of H
  };
  // Frontier for the vertex pair (a, b), floors strictly decreasing.
  const std::vector<Level>& frontier(VertexIndex a, VertexIndex b) const { return frontier_[a * n_ + b]; }
  const std::vector<Rational>& levels() const { return levels_; }

 private:
  ReebGraph g_;
  std::size_t n_ = 0;
  std::vector<Rational> levels_;
  std::vector<std::vector<Level>> frontier_;
};

/// Travel distance on a connected graph. Throws InvalidArgument for points that
/// are not on `g` and InvalidGraph for disconnected input.
Rational travel_distance(const ReebGraph& g, const GraphPoint& x, const GraphPoint& y);

struct Discrepancy {
  Rational value;
  std::size_t i = 0;
  std::size_t j = 0;
};

/// max over i < j of |d_f(p_i, p_j) - d_g(q_i, q_j)| for the paired point lists.
Discrepancy max_travel_discrepancy(const TravelOracle& f, const std::vector<GraphPoint>& p,
                                   const TravelOracle& g, const std::vector<GraphPoint>& q);

}  // namespace reeb
