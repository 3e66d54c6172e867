#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "core/graph.hpp"

namespace reeb {

/// Discretised pair of maps phi: g1 -> g2 and psi: g2 -> g1, given on finite
/// sample nets that contain every vertex.
struct Correspondence {
  std::vector<GraphPoint> samples1;
  std::vector<GraphPoint> phi;  // phi[i] is on g2
  std::vector<GraphPoint> samples2;
  std::vector<GraphPoint> psi;  // psi[j] is on g1
  std::string description;
};

/// Every vertex plus, on each edge, equally spaced interior points so that
/// consecutive samples are at most `h` apart in value.
std::vector<GraphPoint> sample_net(const ReebGraph& g, const Rational& h);

/// Largest value gap between consecutive samples along any edge. Throws
/// InvalidArgument when some vertex is not sampled.
Rational sample_spacing(const ReebGraph& g, const std::vector<GraphPoint>& samples);

/// min(a_f, a_g) / 8, falling back to a graph's value span when it has a
/// single critical value.
Rational default_resolution(const ReebGraph& g1, const ReebGraph& g2);

/// Same vertex ids and edges on both sides; points keep their position along
/// their edge. Throws PreconditionFailed when the graphs differ combinatorially.
Correspondence natural_correspondence(const ReebGraph& g1, const ReebGraph& g2, const Rational& h);

/// One side is a segment. The other graph is mapped onto it by value, and the
/// segment runs along a monotone path from a global minimum to a global
/// maximum. Throws PreconditionFailed when neither side is a segment or no such
/// path exists.
Correspondence collapse_correspondence(const ReebGraph& g1, const ReebGraph& g2, const Rational& h);

/// Witness file: `phi <point of g1> <point of g2>` and `psi <point of g2>
/// <point of g1>` lines. A point is a vertex id or `<id>~<id>[#k]@<value>`
/// for a point on the k-th edge (0-based) joining the two vertices.
Correspondence parse_correspondence(const ReebGraph& g1, const ReebGraph& g2, std::string_view text);
GraphPoint parse_point(const ReebGraph& g, std::string_view text);

struct DistortionReport {
  Rational distortion;  // max |d_f - d_g| over pairs of C(phi, psi) on the samples
  Rational defect_phi;  // max |f(x) - g(phi(x))|
  Rational defect_psi;  // max |f(psi(y)) - g(y)|
  Rational sampled;     // max(distortion / 2, defect_phi, defect_psi)
  Rational resolution;  // actual sample spacing h
  Rational remainder;   // 2h
  Rational upper;       // sampled + remainder
  std::string worst_pair;
};

DistortionReport evaluate(const ReebGraph& g1, const ReebGraph& g2, const Correspondence& c);
Rational distortion(const ReebGraph& g1, const ReebGraph& g2, const Correspondence& c);
/// The sampled bound; the remainder is reported by evaluate().
Rational fd_upper(const ReebGraph& g1, const ReebGraph& g2, const Correspondence& c);
/// graph_bottleneck / 2.
Rational fd_lower(const ReebGraph& g1, const ReebGraph& g2);

struct FDBoundCertificate {
  Rational lower;
  Rational upper;
  std::string upper_witness;
  std::string lower_source;
};

}  // namespace reeb
