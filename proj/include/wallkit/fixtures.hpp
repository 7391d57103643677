#pragma once

#include "wallkit/coxeter.hpp"

namespace wallkit::fixtures {

/// Infinite dihedral group, generators s < t.
CoxeterSystem dinfty();
/// A2 = symmetric group S3, generators a < b, m_ab = 3.
CoxeterSystem a2();
/// A3 path diagram (3,3).
CoxeterSystem a3();
/// B3 path diagram (4,3).
CoxeterSystem b3();
/// Triangle group with m_ab = p, m_bc = q, m_ac = r.
CoxeterSystem triangle(int p, int q, int r);
/// Affine A3: the 4-cycle diagram with all edge labels 3.
CoxeterSystem affine_a3();
/// Right-angled system on the 4-cycle a-b-c-d; its group is
/// D-infinity x D-infinity and the Cayley graph is the grid.
CoxeterSystem racg_cycle4();
/// Right-angled system on the path a-b-c-d (rank 4, median fixture).
CoxeterSystem racg_path4();

/// Radius-r ball of the universal cover of the thickened rose: flat
/// strips Z x {-1,0,1} crossing each other perpendicularly on 3x3
/// vertex patches centered every 4 steps. Rooted at the center of the
/// base strip; labels are "strip:x,y" with strips named R, R.m,
/// R.m.k, ... by the block where they cross their parent.
BallGraph rose_ball(int radius);

}  // namespace wallkit::fixtures
