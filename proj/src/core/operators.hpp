#pragma once

#include <optional>
#include <string>
#include <vector>

#include "core/diagram.hpp"
#include "core/graph.hpp"
#include "core/leveled_space.hpp"

namespace reeb {

/// Contracts every connected component of f^-1([a, b]) to a point at (a+b)/2.
/// Output is canonical. Throws InvalidArgument when a > b.
ReebGraph merge(const ReebGraph& g, const Rational& a, const Rational& b);

/// Coordinates in [a, b] move to (a+b)/2. Ordinary, relative and loop points
/// that land on the diagonal disappear; Ext0 points stay.
Diagram snap_diagram(const Diagram& d, const Rational& a, const Rational& b);

struct SimplifyResult {
  ReebGraph graph;
  Rational certificate;  // upper bound on d_FD(input, output)
  std::size_t moves = 0;
};

/// Removes every Ord0, Rel1 and Ext1 point with |birth - death| <= alpha.
/// Each move takes the shortest remaining such feature and collapses the band
/// component spanning it to its middle level, then recomputes the diagram.
SimplifyResult simplify_tracked(const ReebGraph& g, const Rational& alpha);
ReebGraph simplify(const ReebGraph& g, const Rational& alpha);

/// The same moves applied to the current function of `space`. Returns the
/// number of moves.
std::size_t simplify_space(LeveledSpace& space, const Rational& alpha);

/// Smallest persistence of an Ord0, Rel1 or Ext1 point, if any.
std::optional<Rational> smallest_feature(const Diagram& d);

struct TransformResult {
  ReebGraph graph;
  Rational certificate;           // upper bound on d_FD(input, output)
  Rational simplify_certificate;  // part of the above spent by the simplification stage
  std::vector<std::string> warnings;
};

/// Simplify by 2 alpha, then merge the band [a - 9 alpha, a + 9 alpha] around
/// every anchor, lowest anchor first.
TransformResult full_transform(const ReebGraph& g, const Rational& alpha, std::vector<Rational> anchors);

/// True iff every point of d_h is within l-infinity distance r of a point of
/// d_f of the same kind.
bool crit_ball_check(const Diagram& d_h, const Diagram& d_f, const Rational& r);

}  // namespace reeb
