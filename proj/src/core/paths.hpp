#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "core/graph.hpp"

namespace reeb {

/// Discretised path in the space of Reeb graphs: graphs at strictly increasing
/// times from 0 to 1, with an upper bound on d_FD for every consecutive pair.
struct GraphPath {
  std::vector<Rational> times;
  std::vector<ReebGraph> graphs;
  std::vector<Rational> step_upper;  // size graphs.size() - 1
};

/// Throws InvalidArgument unless the path is well formed.
void check_path(const GraphPath& p);

enum class PathMetric { Bottleneck, FdUpper };

struct PathLength {
  Rational total;
  std::vector<Rational> steps;
};

/// Sum over consecutive steps of d_B, or of the d_FD certificates.
PathLength path_length(const GraphPath& p, PathMetric metric);

/// n equal steps of linear value interpolation on the fixed graph g. Every
/// grid step must keep every edge strictly monotone in its original direction;
/// otherwise PreconditionFailed names the first bad step.
GraphPath linear_path(const ReebGraph& g, const std::vector<Rational>& target, unsigned n);

/// Deformation of g into a single vertex. Features are removed in stages of
/// increasing persistence (one simplification per stage, each split into n
/// linear sub-steps), then the remaining segment shrinks to its midpoint.
GraphPath contraction_path(const ReebGraph& g, unsigned n);

struct ContractionSummary {
  Rational length;  // certified length of the stages, excluding the final shrink
  Rational lo, hi;  // the segment reached
  std::size_t stages = 0;
};
ContractionSummary contract_to_segment(const ReebGraph& g);

struct IntrinsicBound {
  Rational value;
  std::string route;  // "isomorphic", "linear" or "join"
};

/// Upper bound on the intrinsic distance: the cheapest of a direct linear path
/// (when an orientation-preserving isomorphism exists) and the path that
/// contracts g1 to a segment, moves that segment onto g2's, and undoes g2's
/// contraction.
IntrinsicBound intrinsic_upper(const ReebGraph& g1, const ReebGraph& g2);

/// Upper bound on d_FD(g1, g2). Every route of intrinsic_upper bounds d_FD.
Rational certify_fd(const ReebGraph& g1, const ReebGraph& g2);

struct SegmentCheck {
  Rational bottleneck;
  Rational certificate;
  bool ok;
};

struct EquivalenceReport {
  std::vector<SegmentCheck> segments;
  Rational total_bottleneck;
  Rational total_certificate;
  bool ok = true;
};

/// Per segment d_B <= 2 * certificate, and the same for the sums.
EquivalenceReport check_strong_equivalence(const GraphPath& p);

/// Manifest lines `<t> <graph-file>`; relative paths resolve against `base_dir`.
/// Step certificates come from certify_fd.
GraphPath load_path_manifest(std::string_view text, const std::string& base_dir);

}  // namespace reeb
