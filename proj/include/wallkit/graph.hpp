#pragma once

#include <istream>
#include <optional>
#include <string>
#include <vector>

#include "wallkit/error.hpp"

namespace wallkit {

using Vertex = int;

/// Sentinel radius for finite input graphs that are not balls of an
/// infinite graph. Margins are then computed against the eccentricity
/// of the root, which keeps every truncation-safe predicate vacuously
/// permissive only at the true frontier.
inline constexpr int kFiniteGraph = -1;

/// Rooted finite graph with a dense all-pairs distance table.
/// Immutable once built; vertex ids are insertion order.
class BallGraph {
 public:
  class Builder {
   public:
    Vertex add_vertex(std::string label);
    void add_edge(Vertex u, Vertex v);
    /// radius = kFiniteGraph marks a finite input graph; margins then
    /// use max d(root, v) as the horizon.
    BallGraph build(Vertex root, int radius) &&;

   private:
    std::vector<std::string> labels_;
    std::vector<std::pair<Vertex, Vertex>> edges_;
  };

  int vertex_count() const { return static_cast<int>(labels_.size()); }
  const std::string& label(Vertex v) const { return labels_[check(v)]; }
  std::optional<Vertex> find(const std::string& label) const;
  const std::vector<Vertex>& neighbors(Vertex v) const {
    return adj_[check(v)];
  }
  bool adjacent(Vertex u, Vertex v) const;
  Vertex root() const { return root_; }
  /// Declared generation radius, or max d(root, v) for finite graphs.
  int radius() const { return radius_; }
  bool is_finite_graph() const { return finite_graph_; }
  int distance(Vertex x, Vertex y) const { return dist_[check(x)][check(y)]; }
  int margin(Vertex v) const { return radius_ - dist_[root_][check(v)]; }

  Vertex check(Vertex v) const {
    if (v < 0 || v >= vertex_count())
      throw Error(Errc::InvalidVertex, "vertex " + std::to_string(v));
    return v;
  }

 private:
  friend class Builder;
  std::vector<std::string> labels_;
  std::vector<std::vector<Vertex>> adj_;
  std::vector<std::vector<int>> dist_;
  Vertex root_ = 0;
  int radius_ = 0;
  bool finite_graph_ = false;
};

struct GeodesicPath {
  std::vector<Vertex> vertices;

  Vertex front() const { return vertices.front(); }
  Vertex back() const { return vertices.back(); }
  int length() const { return static_cast<int>(vertices.size()) - 1; }
};

int distance(const BallGraph& g, Vertex x, Vertex y);

/// I(x,y) = {z : d(x,z)+d(z,y) = d(x,y)}, ascending vertex order.
std::vector<Vertex> interval(const BallGraph& g, Vertex x, Vertex y);

struct GeodesicEnumeration {
  std::vector<GeodesicPath> paths;
  bool overflow = false;
};

/// All geodesics from x to y in lexicographic neighbor order, stopping
/// at `limit` paths with the overflow flag set.
GeodesicEnumeration enumerate_geodesics(const BallGraph& g, Vertex x, Vertex y,
                                        std::size_t limit);

/// The geodesic from x to y that greedily takes the smallest-id
/// distance-decreasing neighbor at every step. Deterministic.
GeodesicPath lex_geodesic(const BallGraph& g, Vertex x, Vertex y);

/// Unique p in Y with d(x,p)+d(p,y) = d(x,y) for all y in Y.
Vertex gate(const BallGraph& g, Vertex x, const std::vector<Vertex>& Y);

bool is_geodesic(const BallGraph& g, const GeodesicPath& p);

/// Validates that p is a walk (consecutive vertices adjacent).
void check_walk(const BallGraph& g, const GeodesicPath& p);

/// Text format: first non-comment line `root <label>`, then one edge
/// per line as `label1 label2`.
BallGraph parse_graph(std::istream& in);

}  // namespace wallkit
