#include "wallkit/boundary.hpp"

#include <algorithm>
#include <cstdlib>

namespace wallkit {

Orientation ray_orientation(const BallGraph& g, const WallComplex& H,
                            const GeodesicPath& p) {
  if (p.vertices.empty() || p.front() != g.root())
    throw Error(Errc::NotFromRoot, "ray prefix must start at the root");
  if (!is_geodesic(g, p))
    throw Error(Errc::NotGeodesic, "ray prefix is not geodesic");
  Orientation o;
  for (std::size_t i = 0; i + 1 < p.vertices.size(); ++i) {
    int w = H.hyperplane_of_edge(p.vertices[i], p.vertices[i + 1]);
    // a geodesic crosses each wall once, so the sector at the endpoint
    // is the one entered and retained
    if (w >= 0) o.sector[w] = H.sector_of(w, p.back());
  }
  return o;
}

Orientation principal_orientation(const BallGraph& g, const WallComplex& H,
                                  Vertex x) {
  g.check(x);
  Orientation o;
  for (int w = 0; w < H.count(); ++w)
    if (!H.hyperplane(w).truncated) o.sector[w] = H.sector_of(w, x);
  return o;
}

int symmetric_difference(const Orientation& a, const Orientation& b) {
  int diff = 0;
  for (const auto& [w, s] : a.sector) {
    auto it = b.sector.find(w);
    if (it == b.sector.end())
      ++diff;  // decided by a only
    else if (it->second != s)
      diff += 2;  // both decided, opposite sectors
  }
  for (const auto& [w, s] : b.sector)
    if (!a.sector.count(w)) ++diff;
  return diff;
}

HorofunctionVector horofunction_vector(const BallGraph& g, Vertex y) {
  g.check(y);
  HorofunctionVector v;
  v.target = y;
  v.values.resize(g.vertex_count());
  const int base = g.distance(g.root(), y);
  for (Vertex x = 0; x < g.vertex_count(); ++x)
    v.values[x] = g.distance(x, y) - base;
  return v;
}

int sup_difference(const HorofunctionVector& a, const HorofunctionVector& b) {
  int sup = 0;
  for (std::size_t x = 0; x < a.values.size(); ++x)
    sup = std::max(sup, std::abs(a.values[x] - b.values[x]));
  return sup;
}

int sup_difference(const HorofunctionVector& a, const HorofunctionVector& b,
                   const std::vector<Vertex>& over) {
  int sup = 0;
  for (Vertex x : over)
    sup = std::max(sup, std::abs(a.values[x] - b.values[x]));
  return sup;
}

ChainReport chain_minimality(const BallGraph& g, const WallComplex& H,
                             const Orientation& o) {
  std::vector<int> walls;
  // truncated walls lose their transversals at the frontier and would
  // fake separation, so only margin-safe walls count as evidence
  for (const auto& [w, s] : o.sector)
    if (!H.hyperplane(w).truncated) walls.push_back(w);
  std::sort(walls.begin(), walls.end(), [&](int a, int b) {
    if (H.distance_to_root(a) != H.distance_to_root(b))
      return H.distance_to_root(a) < H.distance_to_root(b);
    return a < b;
  });

  const int n = static_cast<int>(walls.size());
  std::vector<std::vector<bool>> sep(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      auto pc = classify_pair(g, H, walls[i], walls[j]);
      bool s = pc.kind == PairClass::Nested &&
               common_transversals(g, H, walls[i], walls[j]).count == 0;
      sep[i][j] = sep[j][i] = s;
    }

  // exact maximum pairwise-separated subset; decided sets are small
  ChainReport best;
  std::vector<int> cur;
  auto dfs = [&](auto&& self, int from) -> void {
    if (cur.size() > best.walls.size()) {
      best.walls.clear();
      for (int i : cur) best.walls.push_back(walls[i]);
    }
    for (int i = from; i < n; ++i) {
      bool ok = true;
      for (int j : cur) ok = ok && sep[j][i];
      if (!ok) continue;
      cur.push_back(i);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  dfs(dfs, 0);
  return best;
}

MyrbergProfile myrberg_profile(const BallGraph& g, const GeodesicPath& p,
                               const std::vector<std::vector<Vertex>>& carriers,
                               int R) {
  check_walk(g, p);
  MyrbergProfile out;
  out.R = R;
  for (const auto& carrier : carriers) {
    int longest = 0, run = -1;
    for (Vertex v : p.vertices) {
      int d = -1;
      for (Vertex c : carrier) {
        int dc = g.distance(v, c);
        if (d < 0 || dc < d) d = dc;
      }
      if (d >= 0 && d <= R)
        longest = std::max(longest, ++run);
      else
        run = -1;
    }
    out.overlap.push_back(longest);
    out.max_overlap = std::max(out.max_overlap, longest);
  }
  return out;
}

}  // namespace wallkit
