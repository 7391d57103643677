#pragma once

#include <vector>

#include "wallkit/walls.hpp"

namespace wallkit {

/// Graph (weak) order at the root: x <= y iff x lies on a geodesic
/// from o to y.
bool leq(const BallGraph& g, Vertex x, Vertex y);

/// Greatest lower bound of S under <=_o. On paraclique inputs uses the
/// sector-intersection gate algorithm and cross-checks it against the
/// brute-force greatest lower bound; throws InternalInconsistency on
/// mismatch, NoMeet if no greatest lower bound exists.
Vertex meet(const BallGraph& g, const WallComplex& H,
            const std::vector<Vertex>& S);

/// Brute-force oracle: maxima of the common lower bounds; the meet is
/// the unique maximum dominating all lower bounds.
Vertex meet_brute_force(const BallGraph& g, const std::vector<Vertex>& S);

struct MinimalUpperBounds {
  std::vector<Vertex> elements;
  /// True when further minimal upper bounds could exist beyond the
  /// frontier (the join search may be incomplete).
  bool frontier_possible = false;
};

MinimalUpperBounds minimal_upper_bounds(const BallGraph& g, Vertex x, Vertex y);

}  // namespace wallkit
