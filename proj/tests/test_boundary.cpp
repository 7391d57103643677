#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "test_util.hpp"
#include "wallkit/boundary.hpp"
#include "wallkit/dynamics.hpp"
#include "wallkit/fixtures.hpp"

using namespace wallkit;
using testutil::at;
using testutil::line_ball;

namespace {

GeodesicPath line_ray(const BallGraph& g, int from, int to) {
  GeodesicPath p;
  int step = to >= from ? 1 : -1;
  for (int x = from;; x += step) {
    p.vertices.push_back(at(g, std::to_string(x)));
    if (x == to) break;
  }
  return p;
}

GeodesicPath rose_ray(const BallGraph& g, std::vector<std::string> labels) {
  GeodesicPath p{{g.root()}};
  for (const auto& l : labels) p.vertices.push_back(at(g, l));
  return p;
}

// every geodesic from the root, grouped by endpoint
std::vector<GeodesicPath> all_rays(const BallGraph& g, int length) {
  std::vector<GeodesicPath> out;
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (g.distance(g.root(), v) == length) {
      auto e = enumerate_geodesics(g, g.root(), v, 64);
      out.insert(out.end(), e.paths.begin(), e.paths.end());
    }
  return out;
}

}  // namespace

TEST_CASE("ray orientations on the line") {
  auto g = line_ball(6);
  auto H = build_hyperplanes(g);

  CHECK(ray_orientation(g, H, {{g.root()}}).decided() == 0);

  auto right = ray_orientation(g, H, line_ray(g, 0, 4));
  CHECK(right.decided() == 4);
  // each decided wall holds the prefix endpoint
  Vertex end = at(g, "4");
  for (const auto& [w, s] : right.sector)
    CHECK(H.sector_of(w, end) == s);

  try {
    ray_orientation(g, H, line_ray(g, 2, 4));
    FAIL("ray away from the root accepted");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotFromRoot);
  }
  GeodesicPath bent{{at(g, "0"), at(g, "1"), at(g, "0"), at(g, "-1")}};
  try {
    ray_orientation(g, H, bent);
    FAIL("non-geodesic walk accepted");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotGeodesic);
  }
}

TEST_CASE("equivalent geodesics give one orientation") {
  WordEngine eng(fixtures::racg_cycle4());
  auto ball = cayley_ball(eng, 5);
  auto H = build_hyperplanes(ball.graph);
  int groups = 0;
  for (Vertex v = 0; v < ball.graph.vertex_count(); ++v) {
    auto e = enumerate_geodesics(ball.graph, ball.graph.root(), v, 64);
    REQUIRE_FALSE(e.overflow);
    if (e.paths.size() < 2) continue;
    ++groups;
    auto ref = ray_orientation(ball.graph, H, e.paths.front());
    for (const auto& p : e.paths)
      CHECK(symmetric_difference(ref, ray_orientation(ball.graph, H, p)) == 0);
  }
  CHECK(groups > 10);  // the grid has plenty of geodesic diamonds
}

TEST_CASE("symmetric difference on the line") {
  auto g = line_ball(6);
  auto H = build_hyperplanes(g);
  auto right4 = ray_orientation(g, H, line_ray(g, 0, 4));
  auto left4 = ray_orientation(g, H, line_ray(g, 0, -4));
  auto right3 = ray_orientation(g, H, line_ray(g, 0, 3));
  auto right5 = ray_orientation(g, H, line_ray(g, 0, 5));
  CHECK(symmetric_difference(right4, right4) == 0);
  CHECK(symmetric_difference(right4, left4) == 8);   // disjoint decided sets
  CHECK(symmetric_difference(right3, right5) == 2);  // nested decided sets
}

TEST_CASE("principal orientations recover the metric") {
  auto g = testutil::rect_grid(4, 3);  // finite graph: nothing truncated
  auto H = build_hyperplanes(g);
  for (Vertex x = 0; x < g.vertex_count(); ++x)
    for (Vertex y = 0; y < g.vertex_count(); ++y) {
      auto sx = principal_orientation(g, H, x);
      auto sy = principal_orientation(g, H, y);
      CHECK(sx.decided() == H.count());
      // both decide every wall, disagreeing exactly on the separators
      CHECK(symmetric_difference(sx, sy) == 2 * g.distance(x, y));
    }
}

TEST_CASE("horofunction vectors") {
  auto g = line_ball(3);
  auto right = horofunction_vector(g, at(g, "3"));
  auto left = horofunction_vector(g, at(g, "-3"));
  CHECK(right.values[g.root()] == 0);
  for (int x = -3; x <= 3; ++x)
    CHECK(right.values[at(g, std::to_string(x))] == -x);
  CHECK(sup_difference(right, left) == 6);
  CHECK(sup_difference(right, left, {g.root()}) == 0);

  // 1-Lipschitz in the graph metric
  auto grid = testutil::rect_grid(3, 3);
  auto b = horofunction_vector(grid, at(grid, 3, 2));
  for (Vertex u = 0; u < grid.vertex_count(); ++u)
    for (Vertex v : grid.neighbors(u))
      CHECK(std::abs(b.values[u] - b.values[v]) <= 1);
}

TEST_CASE("finite difference bridge") {
  // symmetric_difference <= K forces sup_difference <= 2K
  {
    auto g = line_ball(8);
    auto H = build_hyperplanes(g);
    std::vector<GeodesicPath> rays;
    for (int e = -8; e <= 8; ++e)
      if (e != 0) rays.push_back(line_ray(g, 0, e));
    for (const auto& p : rays)
      for (const auto& q : rays) {
        int sym = symmetric_difference(ray_orientation(g, H, p),
                                       ray_orientation(g, H, q));
        int sup = sup_difference(horofunction_vector(g, p.back()),
                                 horofunction_vector(g, q.back()));
        CHECK(sup <= 2 * sym);
      }
  }
  {
    WordEngine eng(fixtures::racg_cycle4());
    auto ball = cayley_ball(eng, 6);
    auto H = build_hyperplanes(ball.graph);
    auto rays = all_rays(ball.graph, 6);
    REQUIRE(rays.size() > 50);
    for (const auto& p : rays)
      for (const auto& q : rays) {
        int sym = symmetric_difference(ray_orientation(ball.graph, H, p),
                                       ray_orientation(ball.graph, H, q));
        int sup = sup_difference(horofunction_vector(ball.graph, p.back()),
                                 horofunction_vector(ball.graph, q.back()));
        CHECK(sup <= 2 * sym);
      }
  }
}

TEST_CASE("chain minimality") {
  auto g = line_ball(8);
  auto H = build_hyperplanes(g);
  CHECK(chain_minimality(g, H, {}).length() == 0);
  // on the line every wall pair is strongly separated
  for (int k : {2, 4, 6})
    CHECK(chain_minimality(g, H, ray_orientation(g, H, line_ray(g, 0, k)))
              .length() == k);
}

TEST_CASE("rose fixture") {
  auto g = fixtures::rose_ball(8);
  CHECK(g.vertex_count() == 181);
  CHECK(g.radius() == 8);
  auto H = build_hyperplanes(g);
  CHECK(H.report().paraclique);
  CHECK(H.count() == 80);

  auto strip_rays = [&](const BallGraph& gr, const WallComplex& HH, int r) {
    std::vector<std::string> m, u, d, c;
    for (int x = 1; x <= r; ++x) m.push_back("R:" + std::to_string(x) + ",0");
    u.push_back("R:0,1");
    d.push_back("R:0,-1");
    for (int x = 1; x <= r - 1; ++x) {
      u.push_back("R:" + std::to_string(x) + ",1");
      d.push_back("R:" + std::to_string(x) + ",-1");
    }
    // leave the base strip through the crossing at x = 4
    for (int x = 1; x <= 4; ++x) c.push_back("R:" + std::to_string(x) + ",0");
    c.push_back("R:4,1");  // = R.1:(1,0) in the crossing chart
    for (int x = 2; x <= r - 4; ++x)
      c.push_back("R.1:" + std::to_string(x) + ",0");
    std::vector<Orientation> out;
    for (auto& labels : {m, u, d, c})
      out.push_back(ray_orientation(gr, HH, rose_ray(gr, labels)));
    return out;
  };

  auto o8 = strip_rays(g, H, 8);
  // the three parallel strip rays stay a bounded symmetric difference
  // apart; the class is constant in the radius
  CHECK(symmetric_difference(o8[0], o8[1]) == 2);
  CHECK(symmetric_difference(o8[0], o8[2]) == 2);
  CHECK(symmetric_difference(o8[1], o8[2]) == 2);
  // while leaving the strip diverges with the radius
  CHECK(symmetric_difference(o8[0], o8[3]) == 8);

  auto g6 = fixtures::rose_ball(6);
  auto H6 = build_hyperplanes(g6);
  auto o6 = strip_rays(g6, H6, 6);
  CHECK(symmetric_difference(o6[0], o6[1]) == 2);
  CHECK(symmetric_difference(o6[0], o6[2]) == 2);
  CHECK(symmetric_difference(o6[1], o6[2]) == 2);
  CHECK(symmetric_difference(o6[0], o6[3]) == 4);

  // the midline boundary point is not minimal: no strongly separated
  // pair among its walls (the strip's long walls transverse them all)
  CHECK(chain_minimality(g, H, o8[0]).length() <= 1);
}

TEST_CASE("myrberg overlap profiles") {
  // a prefix running along the carrier overlaps in its full length
  auto g = line_ball(6);
  std::vector<Vertex> carrier;
  for (int x = -6; x <= 6; ++x) carrier.push_back(at(g, std::to_string(x)));
  auto p = line_ray(g, 0, 5);
  auto prof = myrberg_profile(g, p, {carrier}, 0);
  CHECK(prof.overlap == std::vector<int>{5});

  // a staircase meets a line in at most one vertex
  auto grid = testutil::rect_grid(5, 5);
  std::vector<Vertex> axis;
  for (int x = 0; x <= 5; ++x) axis.push_back(at(grid, x, 0));
  GeodesicPath diag{{at(grid, 0, 0)}};
  for (int k = 1; k <= 5; ++k) {
    diag.vertices.push_back(at(grid, k, k - 1));
    diag.vertices.push_back(at(grid, k, k));
  }
  auto dprof = myrberg_profile(grid, diag, {axis}, 0);
  CHECK(dprof.max_overlap <= 1);
  // with slack R the overlap grows
  CHECK(myrberg_profile(grid, diag, {axis}, 2).max_overlap >
        dprof.max_overlap);
}

TEST_CASE("admissible paths recur on both axes") {
  WordEngine eng(fixtures::triangle(2, 3, 7));
  auto ball = cayley_ball(eng, 10);
  Word h = parse_word(eng.system(), "abc");
  Word u = parse_word(eng.system(), "ca");
  Word k = eng.multiply(eng.multiply(u, h), eng.inverse(u));
  std::vector<Word> cands;
  for (auto f : {"a", "b", "c", "ca", "ac"})
    cands.push_back(parse_word(eng.system(), f));
  auto path = build_admissible_path(eng, ball, {{h, 2}, {k, 2}}, cands, 1, 2);

  // carriers: the h axis at the root and the prefix-translated k axis
  auto ax_h = build_axis(eng, ball, h);
  auto ax_k = build_axis(eng, ball, k);
  Word prefix = eng.multiply(eng.power(h, 2), path.segments[1].element);
  auto img = act(eng, prefix, ball);
  std::vector<Vertex> carrier_k;
  for (Vertex v : ax_k.vertices)
    if (img[v] >= 0) carrier_k.push_back(img[v]);

  auto prof = myrberg_profile(ball.graph, {path.vertices},
                              {ax_h.vertices, carrier_k}, 0);
  CHECK(prof.overlap[0] >= path.L);
  CHECK(prof.overlap[1] >= path.L);
  CHECK(prof.max_overlap >= 6);
}
