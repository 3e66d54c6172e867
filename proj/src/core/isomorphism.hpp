#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "core/graph.hpp"

namespace reeb {

/// Vertex bijection g1 -> g2 (indexed by g1 vertex).
using VertexMap = std::vector<VertexIndex>;

/// Value-preserving bijection that preserves edge multiplicities, if one exists.
std::optional<VertexMap> level_isomorphism(const ReebGraph& g1, const ReebGraph& g2);
bool is_level_isomorphic(const ReebGraph& g1, const ReebGraph& g2);

struct OrientedMatch {
  VertexMap map;
  Rational shift;  // max |f(v) - g(map[v])|
};

/// Bijection preserving edge multiplicities and the up/down orientation of
/// every edge that minimises the sup-norm value change. Branch and bound; gives
/// up after `node_limit` search nodes and returns the best match found so far.
std::optional<OrientedMatch> best_oriented_isomorphism(const ReebGraph& g1, const ReebGraph& g2,
                                                       std::size_t node_limit = 200000);

}  // namespace reeb
