#pragma once

#include <optional>
#include <vector>

#include "core/diagram.hpp"
#include "core/graph.hpp"

namespace reeb {

/// A diagram point together with the graph feature that created it:
///   Ord0  birth vertex (a minimum), Rel1  the maximum whose cone edge is born,
///   Ext0  the global minimum,       Ext1  upper endpoint of the cycle-creating edge.
struct ExtendedPair {
  DiagramPoint point;
  VertexIndex representative;
  std::optional<EdgeIndex> cycle_edge;
};

/// Z2 column reduction of the boundary matrix of the extended filtration, built
/// on the cone over the graph: the apex, then vertices and edges by ascending
/// value, then the cones over vertices and edges by descending value. Ties by
/// (dimension, index). Zero-length ordinary and relative pairs are dropped.
std::vector<ExtendedPair> extended_pairs(const ReebGraph& g);
Diagram reduce_extended_filtration(const ReebGraph& g);

/// Validates `g` (connected, no level edges) and returns its extended diagram.
Diagram extended_diagram(const ReebGraph& g);

/// Sublevel-set 0-dimensional persistence by union-find with the elder rule.
std::vector<DiagramPoint> ord0_unionfind(const ReebGraph& g);
/// The same run on -f, mapped back to Rel1 points of f.
std::vector<DiagramPoint> rel1_unionfind(const ReebGraph& g);

}  // namespace reeb
