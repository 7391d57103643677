#include "wallkit/order.hpp"

#include <algorithm>

namespace wallkit {

bool leq(const BallGraph& g, Vertex x, Vertex y) {
  return g.distance(g.root(), x) + g.distance(x, y) ==
         g.distance(g.root(), y);
}

Vertex meet_brute_force(const BallGraph& g, const std::vector<Vertex>& S) {
  if (S.empty()) throw Error(Errc::BadInput, "meet of empty set");
  std::vector<Vertex> lower;
  for (Vertex z = 0; z < g.vertex_count(); ++z) {
    bool ok = true;
    for (Vertex s : S) ok = ok && leq(g, z, g.check(s));
    if (ok) lower.push_back(z);
  }
  // The root is always a lower bound, so `lower` is nonempty.
  for (Vertex m : lower) {
    bool greatest = true;
    for (Vertex z : lower) greatest = greatest && leq(g, z, m);
    if (greatest) return m;
  }
  throw Error(Errc::NoMeet, "no greatest lower bound");
}

Vertex meet(const BallGraph& g, const WallComplex& H,
            const std::vector<Vertex>& S) {
  Vertex oracle = meet_brute_force(g, S);
  if (!H.report().paraclique) return oracle;

  // Intersect the sectors containing S that are delimited by
  // hyperplanes separating o from all of S, then gate o on it.
  const Vertex o = g.root();
  std::vector<char> in_A(g.vertex_count(), 1);
  for (const auto& h : H.hyperplanes()) {
    int sec = H.sector_of(h.id, S.front());
    bool same = true;
    for (Vertex s : S) same = same && H.sector_of(h.id, s) == sec;
    if (!same || H.sector_of(h.id, o) == sec) continue;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
      if (H.sector_of(h.id, v) != sec) in_A[v] = 0;
  }
  std::vector<Vertex> A;
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (in_A[v]) A.push_back(v);
  Vertex m = gate(g, o, A);
  if (m != oracle)
    throw Error(Errc::InternalInconsistency,
                "gate meet disagrees with brute force");
  return m;
}

MinimalUpperBounds minimal_upper_bounds(const BallGraph& g, Vertex x,
                                        Vertex y) {
  g.check(x);
  g.check(y);
  MinimalUpperBounds out;
  std::vector<Vertex> upper;
  for (Vertex z = 0; z < g.vertex_count(); ++z)
    if (leq(g, x, z) && leq(g, y, z)) upper.push_back(z);
  for (Vertex z : upper) {
    bool minimal = true;
    for (Vertex w : upper)
      if (w != z && leq(g, w, z)) minimal = false;
    if (minimal) out.elements.push_back(z);
  }
  if (!g.is_finite_graph()) {
    // More minimal upper bounds can hide outside the ball only if both
    // up-sets reach the frontier.
    auto reaches = [&](Vertex v) {
      for (Vertex z = 0; z < g.vertex_count(); ++z)
        if (g.margin(z) == 0 && leq(g, v, z)) return true;
      return false;
    };
    out.frontier_possible = reaches(x) && reaches(y);
  }
  return out;
}

}  // namespace wallkit
