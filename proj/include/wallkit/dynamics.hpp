#pragma once

#include "wallkit/coxeter.hpp"
#include "wallkit/walls.hpp"

namespace wallkit {

enum class AxisKind { InvariantGeodesic, OrbitQuasiAxis };

/// Combinatorial axis segment of an isometry inside the ball. The
/// quasi-axis through the cyclic group orbit stands in for the full
/// elementary-subgroup orbit; the Hausdorff error is bounded.
struct Axis {
  Word element;
  int period = 1;  // power n0 realizing translation invariance
  std::vector<Vertex> vertices;
  AxisKind kind = AxisKind::OrbitQuasiAxis;

  int position_of(Vertex v) const {
    for (std::size_t i = 0; i < vertices.size(); ++i)
      if (vertices[i] == v) return static_cast<int>(i);
    return -1;
  }
};

/// Searches powers n0 = 1..power_budget for a geodesic through the
/// orbit that is invariant under h^{n0} (assembled from translates of a
/// base geodesic o -> h^{n0} o); falls back to the orbit quasi-axis.
Axis build_axis(WordEngine& eng, const CayleyBall& ball, const Word& h,
                int power_budget = 8);

struct ProjectionProfile {
  std::vector<int> distance_to_axis;  // per ball vertex
  std::vector<int> vertex_diameter;   // diameter of the projection set
  int max_vertex_diameter = 0;        // empirical contracting constant
  int far_threshold = 2;
  /// Max projection diameter over vertex-pair intervals whose vertices
  /// all stay >= far_threshold away from the axis.
  int max_far_geodesic_diameter = 0;
};

ProjectionProfile projection_profile(const BallGraph& g, const Axis& axis,
                                     int c_candidate = 2);

enum class Verdict { Certified, Refuted, Inconclusive };

struct ContractingCertificate {
  Word element;
  Axis axis;
  Verdict verdict = Verdict::Inconclusive;
  int radius = 0;
  /// Hyperplanes crossed by the axis, in axis order.
  std::vector<int> crossed;
  /// The certifying strongly separated pair, if any.
  int pair_h = -1;
  int pair_k = -1;
  TransversalCount pair_transversals;
  ProjectionProfile profile;
  /// Descending chain of pairwise strongly separated walls along the
  /// axis, grown from h-translates of the certifying pair.
  std::vector<int> chain;
};

/// Certified: some interior crossed pair (both walls within depth
/// radius/2 of the root) is disjoint with zero common transversals in
/// the whole ball. Refuted: every interior crossed pair either meets
/// itself or has an interior common transversal. Otherwise
/// Inconclusive. Interiority keeps frontier effects out of both
/// verdicts.
ContractingCertificate certify_contracting(WordEngine& eng,
                                           const CayleyBall& ball,
                                           const WallComplex& H, const Word& h,
                                           int power_budget = 8);

struct PathSegment {
  bool connector = false;
  Word element;  // group element this segment traverses
  std::vector<Vertex> vertices;
};

struct AdmissiblePath {
  std::vector<Vertex> vertices;
  std::vector<PathSegment> segments;
  int L = 0;
  int tau = 0;
  /// Empirical quasi-geodesic constant: max over prefixes of
  /// (steps + 1) / d(start, prefix end).
  double quasi_constant = 0.0;
  /// Hausdorff distance to the lex-min geodesic between the endpoints.
  int fellow_travel_radius = 0;
};

/// Builds p0 q1 p1 ... with axis segments p_i from `word` (element,
/// power) and connectors q_i drawn from `candidates`, subject to long
/// local (each interior p_i longer than L) and bounded projection
/// (connectors project with diameter <= tau onto adjacent p segments).
AdmissiblePath build_admissible_path(
    WordEngine& eng, const CayleyBall& ball,
    const std::vector<std::pair<Word, int>>& word,
    const std::vector<Word>& candidates, int L, int tau);

struct NsTrajectory {
  int sample_id = 0;
  /// a(xi, n) for n = 1..agreement.size().
  std::vector<int> agreement;
  bool domain_exceeded = false;
  int last_valid_n = 0;
  /// Sample starts inside the repelling half of the ball; excluded
  /// from convergence targets.
  bool repelling = false;
  bool monotone = true;
  int first_n_at_target = -1;
};

struct NsReport {
  std::vector<NsTrajectory> trajectories;
  int target_radius = 0;
  int max_agreement = 0;  // cap = floor(radius / 2), the trusted depth
  bool all_monotone = true;
};

/// North-south iteration: pushes each ray-prefix sample forward by g^n
/// and measures the agreement radius against the attracting reference
/// orientation (the principal orientation of the deepest in-ball
/// forward orbit point). Only walls within depth radius/2 count; deeper
/// walls are truncation-unsafe.
NsReport ns_iterate(WordEngine& eng, const CayleyBall& ball,
                    const WallComplex& H, const Word& g,
                    const std::vector<GeodesicPath>& samples, int n_max,
                    int target_radius = 3);

}  // namespace wallkit
