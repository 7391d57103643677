#pragma once

#include <map>

#include "wallkit/walls.hpp"

namespace wallkit {

/// Finite orientation: the hyperplanes decided by a ray prefix (or a
/// vertex), each assigned the sector entered and retained.
struct Orientation {
  std::map<int, int> sector;  // hyperplane id -> sector index

  int decided() const { return static_cast<int>(sector.size()); }
};

Orientation ray_orientation(const BallGraph& g, const WallComplex& H,
                            const GeodesicPath& p);

/// Principal orientation sigma_x over the non-truncated hyperplanes.
Orientation principal_orientation(const BallGraph& g, const WallComplex& H,
                                  Vertex x);

/// |assignments(a) delta assignments(b)| as sets of (hyperplane,
/// sector) pairs.
int symmetric_difference(const Orientation& a, const Orientation& b);

/// b_y(x) = d(x,y) - d(o,y) over the ball.
struct HorofunctionVector {
  Vertex target = -1;
  std::vector<int> values;
};

HorofunctionVector horofunction_vector(const BallGraph& g, Vertex y);

/// sup |a - b|, over the whole ball or a sub-ball.
int sup_difference(const HorofunctionVector& a, const HorofunctionVector& b);
int sup_difference(const HorofunctionVector& a, const HorofunctionVector& b,
                   const std::vector<Vertex>& over);

/// Longest chain of pairwise strongly separated (disjoint, zero common
/// transversals in the ball) hyperplanes among the decided
/// non-truncated ones; truncated walls shed their transversals at the
/// frontier and would fake separation. Length >= 2 is minimality
/// evidence at this radius.
struct ChainReport {
  std::vector<int> walls;  // by increasing distance to the root

  int length() const { return static_cast<int>(walls.size()); }
};

ChainReport chain_minimality(const BallGraph& g, const WallComplex& H,
                             const Orientation& o);

/// Per-carrier recurrence overlap: the longest contiguous subsegment of
/// p inside the R-neighborhood of the carrier, as an edge count.
struct MyrbergProfile {
  int R = 0;
  std::vector<int> overlap;  // per carrier
  int max_overlap = 0;
};

MyrbergProfile myrberg_profile(const BallGraph& g, const GeodesicPath& p,
                               const std::vector<std::vector<Vertex>>& carriers,
                               int R);

}  // namespace wallkit
