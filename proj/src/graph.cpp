#include "wallkit/graph.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>

namespace wallkit {

Vertex BallGraph::Builder::add_vertex(std::string label) {
  labels_.push_back(std::move(label));
  return static_cast<Vertex>(labels_.size()) - 1;
}

void BallGraph::Builder::add_edge(Vertex u, Vertex v) {
  edges_.emplace_back(u, v);
}

BallGraph BallGraph::Builder::build(Vertex root, int radius) && {
  BallGraph g;
  g.labels_ = std::move(labels_);
  const int n = g.vertex_count();
  if (root < 0 || root >= n)
    throw Error(Errc::InvalidVertex, "root out of range");
  g.adj_.assign(n, {});
  std::set<std::pair<Vertex, Vertex>> seen;
  for (auto [u, v] : edges_) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw Error(Errc::InvalidVertex, "edge endpoint out of range");
    if (u == v) throw Error(Errc::BadInput, "loop edge");
    auto key = std::minmax(u, v);
    if (!seen.insert(key).second) continue;  // collapse multi-edges
    g.adj_[u].push_back(v);
    g.adj_[v].push_back(u);
  }
  for (auto& nb : g.adj_) std::sort(nb.begin(), nb.end());

  g.dist_.assign(n, std::vector<int>(n, -1));
  for (Vertex s = 0; s < n; ++s) {
    auto& d = g.dist_[s];
    d[s] = 0;
    std::deque<Vertex> q{s};
    while (!q.empty()) {
      Vertex u = q.front();
      q.pop_front();
      for (Vertex v : g.adj_[u])
        if (d[v] < 0) {
          d[v] = d[u] + 1;
          q.push_back(v);
        }
    }
    for (int x : d)
      if (x < 0) throw Error(Errc::BadInput, "graph is not connected");
  }

  g.root_ = root;
  if (radius == kFiniteGraph) {
    g.finite_graph_ = true;
    g.radius_ = *std::max_element(g.dist_[root].begin(), g.dist_[root].end());
  } else {
    g.radius_ = radius;
    for (Vertex v = 0; v < n; ++v)
      if (g.dist_[root][v] > radius)
        throw Error(Errc::BadInput, "vertex outside declared radius");
  }
  return g;
}

std::optional<Vertex> BallGraph::find(const std::string& label) const {
  for (Vertex v = 0; v < vertex_count(); ++v)
    if (labels_[v] == label) return v;
  return std::nullopt;
}

bool BallGraph::adjacent(Vertex u, Vertex v) const {
  const auto& nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), check(v));
}

int distance(const BallGraph& g, Vertex x, Vertex y) {
  return g.distance(x, y);
}

std::vector<Vertex> interval(const BallGraph& g, Vertex x, Vertex y) {
  std::vector<Vertex> out;
  const int d = g.distance(x, y);
  for (Vertex z = 0; z < g.vertex_count(); ++z)
    if (g.distance(x, z) + g.distance(z, y) == d) out.push_back(z);
  return out;
}

GeodesicEnumeration enumerate_geodesics(const BallGraph& g, Vertex x, Vertex y,
                                        std::size_t limit) {
  g.check(x);
  g.check(y);
  GeodesicEnumeration res;
  std::vector<Vertex> cur{x};
  // Depth-first over distance-decreasing neighbors; neighbor lists are
  // sorted, so paths come out in lexicographic vertex order.
  auto dfs = [&](auto&& self, Vertex v) -> bool {
    if (v == y) {
      if (res.paths.size() == limit) {
        res.overflow = true;
        return false;
      }
      res.paths.push_back({cur});
      return true;
    }
    for (Vertex u : g.neighbors(v)) {
      if (g.distance(u, y) != g.distance(v, y) - 1) continue;
      cur.push_back(u);
      bool ok = self(self, u);
      cur.pop_back();
      if (!ok) return false;
    }
    return true;
  };
  dfs(dfs, x);
  return res;
}

GeodesicPath lex_geodesic(const BallGraph& g, Vertex x, Vertex y) {
  g.check(x);
  g.check(y);
  GeodesicPath p{{x}};
  Vertex v = x;
  while (v != y) {
    for (Vertex u : g.neighbors(v))
      if (g.distance(u, y) == g.distance(v, y) - 1) {
        v = u;  // neighbor lists are sorted, so this picks the smallest
        break;
      }
    p.vertices.push_back(v);
  }
  return p;
}

Vertex gate(const BallGraph& g, Vertex x, const std::vector<Vertex>& Y) {
  g.check(x);
  if (Y.empty()) throw Error(Errc::BadInput, "gate target set is empty");
  Vertex best = Y.front();
  for (Vertex y : Y)
    if (g.distance(x, g.check(y)) < g.distance(x, best)) best = y;
  for (Vertex y : Y)
    if (g.distance(x, best) + g.distance(best, y) != g.distance(x, y))
      throw Error(Errc::NotGated, "no gate from vertex " + std::to_string(x));
  return best;
}

void check_walk(const BallGraph& g, const GeodesicPath& p) {
  if (p.vertices.empty()) throw Error(Errc::NotAWalk, "empty path");
  for (std::size_t i = 0; i + 1 < p.vertices.size(); ++i)
    if (!g.adjacent(p.vertices[i], p.vertices[i + 1]))
      throw Error(Errc::NotAWalk, "non-adjacent consecutive vertices");
}

bool is_geodesic(const BallGraph& g, const GeodesicPath& p) {
  check_walk(g, p);
  return p.length() == g.distance(p.front(), p.back());
}

BallGraph parse_graph(std::istream& in) {
  BallGraph::Builder b;
  std::map<std::string, Vertex> ids;
  auto intern = [&](const std::string& s) {
    auto it = ids.find(s);
    if (it != ids.end()) return it->second;
    Vertex v = b.add_vertex(s);
    ids.emplace(s, v);
    return v;
  };
  std::string line, root_label;
  bool have_root = false;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string a, c;
    if (!(ls >> a)) continue;
    if (!have_root) {
      if (a != "root" || !(ls >> root_label))
        throw Error(Errc::UnsupportedFormat, "expected `root <label>` first");
      have_root = true;
      intern(root_label);
      continue;
    }
    if (!(ls >> c)) throw Error(Errc::UnsupportedFormat, "expected two labels");
    b.add_edge(intern(a), intern(c));
  }
  if (!have_root) throw Error(Errc::UnsupportedFormat, "missing root line");
  return std::move(b).build(ids.at(root_label), kFiniteGraph);
}

}  // namespace wallkit
