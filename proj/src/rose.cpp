#include <deque>
#include <map>
#include <set>
#include <string>

#include "wallkit/fixtures.hpp"

namespace wallkit::fixtures {

namespace {

// Chart address inside one strip. Strips are named by the path of
// crossing blocks from the base strip R; the crossing at block m of
// strip S is strip "S.m". Each crossing identifies the child patch
// x' in [-1,1] with the parent patch x in [4m-1, 4m+1] by
//   child (x', y') = parent (4m + y', x')
// (the strips meet perpendicularly on the shared 3x3 square).
struct Chart {
  std::string strip;
  int x = 0;
  int y = 0;

  bool operator<(const Chart& o) const {
    if (strip != o.strip) return strip < o.strip;
    if (x != o.x) return x < o.x;
    return y < o.y;
  }
};

// Nearest block center 4m with |x - 4m| <= 1, or nullopt.
std::optional<int> block_of(int x) {
  int m = (x + (x >= 0 ? 2 : -2)) / 4;
  if (std::abs(x - 4 * m) <= 1) return m;
  return std::nullopt;
}

// Rewrite patch coordinates of a child strip into the parent chart
// until the address is root-most. Canonical per vertex.
Chart canon(Chart c) {
  while (c.strip != "R" && c.x >= -1 && c.x <= 1) {
    auto dot = c.strip.rfind('.');
    int m = std::stoi(c.strip.substr(dot + 1));
    c = {c.strip.substr(0, dot), 4 * m + c.y, c.x};
  }
  return c;
}

std::vector<Chart> neighbors(const Chart& c) {
  // every chart of the vertex: the canonical one, plus the child chart
  // when the vertex sits on a crossing patch
  std::vector<Chart> charts{c};
  if (auto m = block_of(c.x))
    charts.push_back({c.strip + "." + std::to_string(*m), c.y, c.x - 4 * *m});

  std::set<Chart> out;
  for (const Chart& ch : charts) {
    out.insert(canon({ch.strip, ch.x - 1, ch.y}));
    out.insert(canon({ch.strip, ch.x + 1, ch.y}));
    if (ch.y > -1) out.insert(canon({ch.strip, ch.x, ch.y - 1}));
    if (ch.y < 1) out.insert(canon({ch.strip, ch.x, ch.y + 1}));
  }
  return {out.begin(), out.end()};
}

}  // namespace

BallGraph rose_ball(int radius) {
  BallGraph::Builder b;
  std::map<Chart, Vertex> id;
  auto intern = [&](const Chart& c) {
    auto it = id.find(c);
    if (it != id.end()) return it->second;
    Vertex v = b.add_vertex(c.strip + ":" + std::to_string(c.x) + "," +
                            std::to_string(c.y));
    id.emplace(c, v);
    return v;
  };

  const Chart root{"R", 0, 0};
  std::map<Chart, int> dist{{root, 0}};
  intern(root);
  std::deque<Chart> queue{root};
  std::set<std::pair<Vertex, Vertex>> edges;
  while (!queue.empty()) {
    Chart c = queue.front();
    queue.pop_front();
    for (const Chart& n : neighbors(c)) {
      if (!dist.count(n)) {
        if (dist.at(c) == radius) continue;  // n lies outside the ball
        dist.emplace(n, dist.at(c) + 1);
        intern(n);
        queue.push_back(n);
      }
      auto key = std::minmax(id.at(c), id.at(n));
      if (edges.insert(key).second) b.add_edge(key.first, key.second);
    }
  }
  return std::move(b).build(id.at(root), radius);
}

}  // namespace wallkit::fixtures
