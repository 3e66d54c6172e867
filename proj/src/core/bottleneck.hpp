#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "core/diagram.hpp"
#include "core/graph.hpp"

namespace reeb {

/// Indices refer to Diagram::points() of the two diagrams.
struct PartialMatching {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  std::vector<std::size_t> unmatched_left;
  std::vector<std::size_t> unmatched_right;
};

/// Max over matched l-infinity distances and unmatched diagonal distances.
/// Throws InvalidArgument on kind mismatches, reused or missing indices.
Rational matching_cost(const Diagram& d1, const Diagram& d2, const PartialMatching& m);

struct BottleneckResult {
  Rational value;
  PartialMatching witness;
};

/// Exact bottleneck distance. Kinds never mix, so each kind is solved on its own
/// by binary search over the sorted candidate distances.
BottleneckResult bottleneck(const Diagram& d1, const Diagram& d2);

/// Does a matching of cost <= delta exist?
bool feasible(const Diagram& d1, const Diagram& d2, const Rational& delta);

/// Bottleneck distance between the extended diagrams of two graphs.
Rational graph_bottleneck(const ReebGraph& g1, const ReebGraph& g2);

}  // namespace reeb
