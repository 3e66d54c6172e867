#include "core/operators.hpp"

#include <algorithm>

#include "core/error.hpp"
#include "core/persistence.hpp"

namespace reeb {

ReebGraph merge(const ReebGraph& g, const Rational& a, const Rational& b) {
  if (a > b) throw InvalidArgument("merge needs a <= b");
  LeveledSpace space(g);
  space.collapse_band(a, b);
  return space.graph();
}

Diagram snap_diagram(const Diagram& d, const Rational& a, const Rational& b) {
  if (a > b) throw InvalidArgument("snap needs a <= b");
  Rational mid = midpoint(a, b);
  auto snap = [&](const Rational& x) { return a <= x && x <= b ? mid : x; };
  std::vector<DiagramPoint> out;
  for (const DiagramPoint& p : d.points()) {
    DiagramPoint q{p.kind, snap(p.birth), snap(p.death)};
    if (q.birth == q.death && q.kind != PointKind::Ext0) continue;
    out.push_back(std::move(q));
  }
  return Diagram(std::move(out));
}

std::optional<Rational> smallest_feature(const Diagram& d) {
  std::optional<Rational> best;
  for (const DiagramPoint& p : d.points()) {
    if (p.kind == PointKind::Ext0) continue;
    Rational q = persistence(p);
    if (!best || q < *best) best = q;
  }
  return best;
}

std::size_t simplify_space(LeveledSpace& space, const Rational& alpha) {
  if (alpha <= 0) throw InvalidArgument("simplify needs alpha > 0");
  std::size_t moves = 0;
  std::size_t limit = 0;
  while (true) {
    LeveledSpace::Quotient q = space.quotient();
    std::vector<ExtendedPair> pairs = extended_pairs(q.graph);
    if (limit == 0) limit = 2 * pairs.size() + 8;
    const ExtendedPair* pick = nullptr;
    for (const ExtendedPair& p : pairs) {
      if (p.point.kind == PointKind::Ext0 || persistence(p.point) > alpha) continue;
      if (!pick || persistence(p.point) < persistence(pick->point) ||
          (persistence(p.point) == persistence(pick->point) && p.point < pick->point))
        pick = &p;
    }
    if (!pick) return moves;
    if (++moves > limit) throw Error(ErrorCode::Internal, "simplification did not converge");
    Rational lo = std::min(pick->point.birth, pick->point.death);
    Rational hi = std::max(pick->point.birth, pick->point.death);
    space.collapse_component(q.representative[pick->representative], lo, hi);
  }
}

SimplifyResult simplify_tracked(const ReebGraph& g, const Rational& alpha) {
  LeveledSpace space(g);
  SimplifyResult r;
  r.moves = simplify_space(space, alpha);
  r.graph = space.graph();
  r.certificate = space.certificate();
  return r;
}

ReebGraph simplify(const ReebGraph& g, const Rational& alpha) { return simplify_tracked(g, alpha).graph; }

TransformResult full_transform(const ReebGraph& g, const Rational& alpha, std::vector<Rational> anchors) {
  if (alpha <= 0) throw InvalidArgument("transform needs alpha > 0");
  std::sort(anchors.begin(), anchors.end());
  anchors.erase(std::unique(anchors.begin(), anchors.end()), anchors.end());
  TransformResult r;
  for (std::size_t i = 1; i < anchors.size(); ++i) {
    if (18 * alpha >= anchors[i] - anchors[i - 1]) {
      r.warnings.push_back("merge bands around " + format_rational(anchors[i - 1]) + " and " +
                           format_rational(anchors[i]) + " overlap (18 alpha >= gap)");
    }
  }
  LeveledSpace space(g);
  simplify_space(space, 2 * alpha);
  r.simplify_certificate = space.certificate();
  for (const Rational& a : anchors) space.collapse_band(a - 9 * alpha, a + 9 * alpha);
  r.graph = space.graph();
  r.certificate = space.certificate();
  return r;
}

bool crit_ball_check(const Diagram& d_h, const Diagram& d_f, const Rational& r) {
  if (r < 0) throw InvalidArgument("radius must be non-negative");
  for (const DiagramPoint& p : d_h.points()) {
    bool hit = std::any_of(d_f.points().begin(), d_f.points().end(), [&](const DiagramPoint& q) {
      return q.kind == p.kind && linf_distance(p, q) <= r;
    });
    if (!hit) return false;
  }
  return true;
}

}  // namespace reeb
