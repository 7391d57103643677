#pragma once

#include <string>
#include <vector>

#include "wallkit/graph.hpp"

namespace testutil {

using wallkit::BallGraph;
using wallkit::Vertex;

// Path with 2r+1 vertices labelled -r..r rooted at 0; the D-infinity
// Cayley ball of radius r up to relabelling.
inline BallGraph line_ball(int r) {
  BallGraph::Builder b;
  std::vector<Vertex> id(2 * r + 1);
  for (int x = -r; x <= r; ++x) id[x + r] = b.add_vertex(std::to_string(x));
  for (int x = -r; x < r; ++x) b.add_edge(id[x + r], id[x + r + 1]);
  return std::move(b).build(id[r], r);
}

// Finite rectangle grid [0,w] x [0,h] rooted at (0,0).
inline BallGraph rect_grid(int w, int h) {
  BallGraph::Builder b;
  auto id = [&](int x, int y) { return y * (w + 1) + x; };
  for (int y = 0; y <= h; ++y)
    for (int x = 0; x <= w; ++x)
      b.add_vertex(std::to_string(x) + "," + std::to_string(y));
  for (int y = 0; y <= h; ++y)
    for (int x = 0; x <= w; ++x) {
      if (x < w) b.add_edge(id(x, y), id(x + 1, y));
      if (y < h) b.add_edge(id(x, y), id(x, y + 1));
    }
  return std::move(b).build(0, wallkit::kFiniteGraph);
}

inline BallGraph cycle(int n) {
  BallGraph::Builder b;
  for (int i = 0; i < n; ++i) b.add_vertex(std::to_string(i));
  for (int i = 0; i < n; ++i) b.add_edge(i, (i + 1) % n);
  return std::move(b).build(0, wallkit::kFiniteGraph);
}

inline BallGraph k3() { return cycle(3); }

inline Vertex at(const BallGraph& g, const std::string& label) {
  auto v = g.find(label);
  REQUIRE(v.has_value());
  return *v;
}

inline Vertex at(const BallGraph& g, int x, int y) {
  return at(g, std::to_string(x) + "," + std::to_string(y));
}

}  // namespace testutil
