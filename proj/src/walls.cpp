#include "wallkit/walls.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <map>
#include <numeric>
#include <set>

namespace wallkit {

namespace {

// Bron-Kerbosch with pivoting; vertex order makes the output
// deterministic before the final sort.
void bron_kerbosch(const BallGraph& g, std::vector<Vertex>& R,
                   std::vector<Vertex> P, std::vector<Vertex> X,
                   std::vector<std::vector<Vertex>>& out) {
  if (P.empty() && X.empty()) {
    out.push_back(R);
    return;
  }
  Vertex pivot = P.empty() ? X.front() : P.front();
  std::vector<Vertex> cand;
  for (Vertex v : P)
    if (!g.adjacent(pivot, v)) cand.push_back(v);
  for (Vertex v : cand) {
    std::vector<Vertex> P2, X2;
    for (Vertex u : P)
      if (g.adjacent(v, u)) P2.push_back(u);
    for (Vertex u : X)
      if (g.adjacent(v, u)) X2.push_back(u);
    R.push_back(v);
    bron_kerbosch(g, R, std::move(P2), std::move(X2), out);
    R.pop_back();
    P.erase(std::find(P.begin(), P.end(), v));
    X.push_back(v);
  }
}

int clique_distance(const BallGraph& g, const Clique& a, const Clique& b) {
  int best = 1 << 30;
  for (Vertex v : a.vertices)
    for (Vertex u : b.vertices) best = std::min(best, g.distance(v, u));
  return best;
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

// True when every cross distance between the two cliques is certified
// exact in the ball (the whole interval between the endpoints fits).
bool distances_exact(const BallGraph& g, const Clique& a, const Clique& b) {
  if (g.is_finite_graph()) return true;
  Vertex o = g.root();
  for (Vertex v : a.vertices)
    for (Vertex u : b.vertices) {
      int d = g.distance(v, u);
      if (std::min(g.distance(o, v), g.distance(o, u)) + d > g.radius())
        return false;
    }
  return true;
}

// Margin >= 2 for every clique vertex: the clique's relations to other
// trusted cliques are undistorted by truncation.
bool trusted_clique(const BallGraph& g, const Clique& c) {
  if (g.is_finite_graph()) return true;
  for (Vertex v : c.vertices)
    if (g.margin(v) < 2) return false;
  return true;
}

}  // namespace

std::vector<Clique> maximal_cliques(const BallGraph& g) {
  std::vector<std::vector<Vertex>> raw;
  std::vector<Vertex> R, P(g.vertex_count()), X;
  std::iota(P.begin(), P.end(), 0);
  bron_kerbosch(g, R, std::move(P), std::move(X), raw);
  for (auto& c : raw) std::sort(c.begin(), c.end());
  std::sort(raw.begin(), raw.end());
  std::vector<Clique> out;
  out.reserve(raw.size());
  for (std::size_t i = 0; i < raw.size(); ++i)
    out.push_back({static_cast<int>(i), std::move(raw[i])});
  return out;
}

CliquePairRelation clique_pair_relation(const BallGraph& g, const Clique& a,
                                        const Clique& b) {
  const int D = clique_distance(g, a, b);

  if (a.vertices.size() == b.vertices.size()) {
    // Parallel: a bijection v_i <-> u_i with d(v_i,u_i) = D and every
    // cross pair at D+1.
    Parallel par;
    bool ok = true;
    std::set<Vertex> used;
    for (Vertex v : a.vertices) {
      Vertex match = -1;
      for (Vertex u : b.vertices) {
        int d = g.distance(v, u);
        if (d == D) {
          if (match != -1) {
            ok = false;
            break;
          }
          match = u;
        } else if (d != D + 1) {
          ok = false;
          break;
        }
      }
      if (!ok || match == -1 || !used.insert(match).second) {
        ok = false;
        break;
      }
      par.matching.emplace_back(v, match);
    }
    if (ok) return par;
  }

  // Antipodal: a unique closest pair (u,v); all mixed pairs at D+1 and
  // the remaining pairs at D+2.
  std::pair<Vertex, Vertex> closest{-1, -1};
  int n_closest = 0;
  for (Vertex v : a.vertices)
    for (Vertex u : b.vertices)
      if (g.distance(v, u) == D) {
        closest = {v, u};
        ++n_closest;
      }
  if (n_closest == 1) {
    bool ok = true;
    for (Vertex v : a.vertices)
      for (Vertex u : b.vertices) {
        if (v == closest.first && u == closest.second) continue;
        int want = (v == closest.first || u == closest.second) ? D + 1 : D + 2;
        if (g.distance(v, u) != want) ok = false;
      }
    if (ok) return Antipodal{closest};
  }
  return OtherRelation{};
}

WallComplex detail_build_hyperplanes(const BallGraph& g, bool lenient) {
  WallComplex W;
  W.cliques_ = maximal_cliques(g);
  const int n_cliques = static_cast<int>(W.cliques_.size());
  const int n = g.vertex_count();
  ParacliqueReport& rep = W.report_;

  // Clique-gatedness per HK96: triangle condition plus no two triangles
  // sharing exactly one edge (triangles inside a common maximal clique
  // are exempt; complete graphs are clique-gated).
  std::vector<std::array<Vertex, 3>> triangles;
  for (Vertex x = 0; x < n; ++x)
    for (Vertex y : g.neighbors(x))
      if (y > x)
        for (Vertex z : g.neighbors(y))
          if (z > y && g.adjacent(x, z)) triangles.push_back({x, y, z});
  for (std::size_t i = 0; i < triangles.size() && rep.no_shared_edge_triangles;
       ++i)
    for (std::size_t j = i + 1; j < triangles.size(); ++j) {
      int shared = 0;
      for (Vertex v : triangles[i])
        for (Vertex u : triangles[j]) shared += (v == u);
      if (shared != 2) continue;
      bool common_clique = false;
      for (const auto& c : W.cliques_) {
        bool all = true;
        for (Vertex v : triangles[i])
          all = all && std::binary_search(c.vertices.begin(), c.vertices.end(),
                                          v);
        for (Vertex u : triangles[j])
          all = all && std::binary_search(c.vertices.begin(), c.vertices.end(),
                                          u);
        if (all) {
          common_clique = true;
          break;
        }
      }
      if (!common_clique) {
        rep.no_shared_edge_triangles = false;
        break;
      }
    }

  const Vertex o = g.root();
  for (Vertex apex = 0; apex < n && rep.triangle_condition; ++apex)
    for (Vertex x = 0; x < n; ++x) {
      if (!g.is_finite_graph() &&
          g.distance(o, apex) + g.distance(apex, x) > g.radius())
        continue;
      for (Vertex y : g.neighbors(x)) {
        if (y < x || g.distance(apex, x) != g.distance(apex, y)) continue;
        if (!g.is_finite_graph() &&
            g.distance(o, apex) + g.distance(apex, y) > g.radius())
          continue;
        if (g.distance(apex, x) == 0) continue;
        bool witness = false;
        for (Vertex z : g.neighbors(x))
          if (g.adjacent(z, y) && g.distance(apex, z) == g.distance(apex, x) - 1)
            witness = true;
        if (!witness) {
          rep.triangle_condition = false;
          break;
        }
      }
    }
  rep.clique_gated = rep.triangle_condition && rep.no_shared_edge_triangles;

  // Parallel classes by union-find; antipodal/other pairs never merge.
  std::vector<std::vector<signed char>> parallel(
      n_cliques, std::vector<signed char>(n_cliques, 0));
  UnionFind uf(n_cliques);
  for (int i = 0; i < n_cliques; ++i)
    for (int j = i + 1; j < n_cliques; ++j) {
      auto rel = clique_pair_relation(g, W.cliques_[i], W.cliques_[j]);
      if (std::holds_alternative<Parallel>(rel)) {
        parallel[i][j] = parallel[j][i] = 1;
        uf.unite(i, j);
      }
    }

  // Transitivity: every pair inside a class must itself be parallel.
  for (int i = 0; i < n_cliques; ++i)
    for (int j = i + 1; j < n_cliques; ++j)
      if (uf.find(i) == uf.find(j) && !parallel[i][j]) {
        ++rep.transitivity_violations;
        // A fake parallel pair at the frontier can merge two distinct
        // walls; only a violation between trusted cliques with exact
        // distances indicts the interior.
        if (distances_exact(g, W.cliques_[i], W.cliques_[j]) &&
            trusted_clique(g, W.cliques_[i]) &&
            trusted_clique(g, W.cliques_[j]))
          ++rep.interior_transitivity_violations;
      }
  rep.paraclique =
      rep.clique_gated && rep.interior_transitivity_violations == 0;

  if (!lenient && !rep.paraclique)
    throw Error(Errc::NotParaclique,
                rep.clique_gated ? "clique parallelism is not transitive"
                                 : "graph is not clique-gated");

  // Classes -> hyperplanes, deterministic by smallest clique id.
  std::map<int, std::vector<int>> classes;
  for (int i = 0; i < n_cliques; ++i) classes[uf.find(i)].push_back(i);
  std::map<std::pair<Vertex, Vertex>, int> edge_to_h;
  for (const auto& [root_id, members] : classes) {
    Hyperplane h;
    h.id = static_cast<int>(W.hyperplanes_.size());
    h.clique_ids = members;
    bool trunc = false;
    for (int ci : members) {
      const auto& vs = W.cliques_[ci].vertices;
      for (std::size_t i = 0; i < vs.size(); ++i) {
        if (!g.is_finite_graph() && g.margin(vs[i]) < 2) trunc = true;
        for (std::size_t j = i + 1; j < vs.size(); ++j)
          h.edges.emplace_back(vs[i], vs[j]);
      }
    }
    std::sort(h.edges.begin(), h.edges.end());
    h.edges.erase(std::unique(h.edges.begin(), h.edges.end()), h.edges.end());
    h.truncated = trunc;
    for (auto e : h.edges) edge_to_h.emplace(e, h.id);

    // Sectors: components after removing the class edges.
    std::set<std::pair<Vertex, Vertex>> removed(h.edges.begin(), h.edges.end());
    std::vector<int> comp(n, -1);
    int n_comp = 0;
    for (Vertex s = 0; s < n; ++s) {
      if (comp[s] >= 0) continue;
      comp[s] = n_comp;
      std::deque<Vertex> q{s};
      while (!q.empty()) {
        Vertex u = q.front();
        q.pop_front();
        for (Vertex v : g.neighbors(u)) {
          auto e = std::minmax(u, v);
          if (removed.count({e.first, e.second})) continue;
          if (comp[v] < 0) {
            comp[v] = n_comp;
            q.push_back(v);
          }
        }
      }
      ++n_comp;
    }
    h.sectors.assign(n_comp, {});
    for (Vertex v = 0; v < n; ++v) h.sectors[comp[v]].push_back(v);
    // Components were discovered in ascending smallest-vertex order, so
    // sector indices are already tie-broken per the determinism rule.
    W.sector_of_.push_back(std::move(comp));
    int rd = 1 << 30;
    for (auto e : h.edges)
      rd = std::min({rd, g.distance(g.root(), e.first),
                     g.distance(g.root(), e.second)});
    W.root_dist_.push_back(rd);
    W.hyperplanes_.push_back(std::move(h));
  }

  W.edge_index_.assign(n, {});
  for (const auto& [e, hid] : edge_to_h) W.edge_index_[e.first].push_back({e, hid});

  // Gate-preimage sector bijection (only meaningful for paraclique
  // inputs, only enforced away from the frontier).
  if (rep.paraclique) {
    for (const auto& h : W.hyperplanes_) {
      if (h.truncated) continue;
      for (int ci : h.clique_ids) {
        const auto& delta = W.cliques_[ci].vertices;
        // Each sector contains exactly one vertex of the clique.
        std::set<int> hit;
        for (Vertex x : delta)
          if (!hit.insert(W.sector_of_[h.id][x]).second)
            ++rep.sector_gate_failures;
        if (static_cast<int>(hit.size()) !=
            static_cast<int>(h.sectors.size()))
          ++rep.sector_gate_failures;
        for (Vertex z = 0; z < n; ++z) {
          try {
            Vertex p = gate(g, z, delta);
            if (W.sector_of_[h.id][p] != W.sector_of_[h.id][z])
              ++rep.sector_gate_failures;
          } catch (const Error&) {
            ++rep.sector_gate_failures;
          }
        }
      }
    }
  }
  return W;
}

WallComplex build_hyperplanes(const BallGraph& g) {
  return detail_build_hyperplanes(g, false);
}
WallComplex build_hyperplanes_lenient(const BallGraph& g) {
  return detail_build_hyperplanes(g, true);
}

int WallComplex::hyperplane_of_edge(Vertex u, Vertex v) const {
  auto e = std::minmax(u, v);
  for (const auto& [edge, hid] : edge_index_[e.first])
    if (edge == std::make_pair(e.first, e.second)) return hid;
  return -1;
}

std::vector<int> separating_hyperplanes(const BallGraph& g,
                                        const WallComplex& H, Vertex x,
                                        Vertex y) {
  g.check(x);
  g.check(y);
  std::vector<int> out;
  for (const auto& h : H.hyperplanes())
    if (H.sector_of(h.id, x) != H.sector_of(h.id, y)) out.push_back(h.id);
  if (H.report().paraclique) {
    int d = g.distance(x, y);
    bool safe = g.is_finite_graph() ||
                (g.margin(x) >= d && g.margin(y) >= d);
    if (safe && static_cast<int>(out.size()) != d)
      throw Error(Errc::InternalInconsistency,
                  "separating-hyperplane count disagrees with distance");
  }
  return out;
}

PairClass classify_pair(const BallGraph& g, const WallComplex& H, int h,
                        int k) {
  if (h == k) throw Error(Errc::BadInput, "classify_pair needs h != k");
  const Hyperplane& A = H.hyperplane(h);
  const Hyperplane& B = H.hyperplane(k);
  const int sa = static_cast<int>(A.sectors.size());
  const int sb = static_cast<int>(B.sectors.size());
  std::vector<std::vector<char>> meets(sa, std::vector<char>(sb, 0));
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    meets[H.sector_of(h, v)][H.sector_of(k, v)] = 1;

  PairClass out;
  out.truncated_pair = A.truncated || B.truncated;
  bool all = true;
  for (int i = 0; i < sa; ++i)
    for (int j = 0; j < sb; ++j) all = all && meets[i][j];
  if (all) {
    out.kind = PairClass::Transverse;
    return out;
  }

  // Nested: find the distinguished pair (a, b): every sector of k other
  // than b is contained in a, and symmetrically.
  int found = 0;
  for (int a = 0; a < sa; ++a)
    for (int b = 0; b < sb; ++b) {
      bool ok = true;
      for (int j = 0; j < sb && ok; ++j) {
        if (j == b) continue;
        for (int i = 0; i < sa; ++i)
          if (i != a && meets[i][j]) ok = false;
      }
      for (int i = 0; i < sa && ok; ++i) {
        if (i == a) continue;
        for (int j = 0; j < sb; ++j)
          if (j != b && meets[i][j]) ok = false;
      }
      if (ok) {
        ++found;
        out.a_sector = a;
        out.b_sector = b;
      }
    }
  out.kind = PairClass::Nested;
  if (found != 1) {
    if (out.truncated_pair) return out;  // best effort near the frontier
    throw Error(Errc::InternalInconsistency,
                "nested pair without a unique distinguished sector pair");
  }

  // Cross-check against the antipodal-clique formulation: if cliques
  // Δh ⊂ h and Δk ⊂ k are antipodal with closest pair (u, v), then the
  // distinguished sector of h is the one holding v, and vice versa.
  if (!out.truncated_pair) {
    for (int ci : A.clique_ids)
      for (int cj : B.clique_ids) {
        auto rel = clique_pair_relation(g, H.cliques()[ci], H.cliques()[cj]);
        if (auto* ap = std::get_if<Antipodal>(&rel)) {
          auto [u, v] = ap->closest;
          if (H.sector_of(h, v) != out.a_sector ||
              H.sector_of(k, u) != out.b_sector)
            throw Error(Errc::InternalInconsistency,
                        "nest orientation disagrees with antipodal gates");
          return out;
        }
      }
  }
  return out;
}

TransversalCount common_transversals(const BallGraph& g, const WallComplex& H,
                                     int h, int k) {
  TransversalCount out;
  out.lower_bound_only =
      H.hyperplane(h).truncated || H.hyperplane(k).truncated;
  for (const auto& m : H.hyperplanes()) {
    if (m.id == h || m.id == k) continue;
    auto transverse_to = [&](int other) {
      const auto& O = H.hyperplane(other);
      std::vector<std::vector<char>> meets(
          m.sectors.size(), std::vector<char>(O.sectors.size(), 0));
      for (Vertex v = 0; v < g.vertex_count(); ++v)
        meets[H.sector_of(m.id, v)][H.sector_of(other, v)] = 1;
      for (const auto& row : meets)
        for (char c : row)
          if (!c) return false;
      return true;
    };
    if (transverse_to(h) && transverse_to(k)) ++out.count;
  }
  return out;
}

CrossingSignature crossing_signature(const BallGraph& g, const WallComplex& H,
                                     const GeodesicPath& p) {
  if (!is_geodesic(g, p))
    throw Error(Errc::NotGeodesic, "crossing_signature needs a geodesic");
  CrossingSignature sig;
  std::set<int> seen;
  for (std::size_t i = 0; i + 1 < p.vertices.size(); ++i) {
    Vertex u = p.vertices[i], v = p.vertices[i + 1];
    int hid = H.hyperplane_of_edge(u, v);
    if (hid < 0)
      throw Error(Errc::InternalInconsistency, "edge missing from every wall");
    if (!seen.insert(hid).second && H.report().paraclique)
      throw Error(Errc::InternalInconsistency,
                  "geodesic crosses a hyperplane twice");
    sig.push_back({hid, H.sector_of(hid, u), H.sector_of(hid, v)});
  }
  return sig;
}

}  // namespace wallkit
