#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "test_util.hpp"
#include "wallkit/dynamics.hpp"
#include "wallkit/fixtures.hpp"
#include "wallkit/rng.hpp"

using namespace wallkit;

namespace {

struct Setup {
  WordEngine eng;
  CayleyBall ball;
  WallComplex walls;
  Setup(const CoxeterSystem& sys, int r)
      : eng(sys),
        ball(cayley_ball(eng, r)),
        walls(build_hyperplanes(ball.graph)) {}
  Word w(const std::string& s) { return parse_word(eng.system(), s); }
};

// seeded uniform geodesic ray prefixes from the root
std::vector<GeodesicPath> ray_prefixes(const BallGraph& g, int count, int len,
                                       std::uint64_t seed) {
  CounterRng rng(seed);
  std::vector<GeodesicPath> out;
  while (static_cast<int>(out.size()) < count) {
    GeodesicPath p{{g.root()}};
    for (int i = 0; i < len; ++i) {
      std::vector<Vertex> up;
      for (Vertex u : g.neighbors(p.back()))
        if (g.distance(g.root(), u) == g.distance(g.root(), p.back()) + 1)
          up.push_back(u);
      REQUIRE_FALSE(up.empty());
      p.vertices.push_back(up[rng.below(up.size())]);
    }
    out.push_back(std::move(p));
  }
  return out;
}

}  // namespace

TEST_CASE("axis on the line") {
  Setup s(fixtures::dinfty(), 8);
  auto ax = build_axis(s.eng, s.ball, s.w("st"));
  CHECK(ax.kind == AxisKind::InvariantGeodesic);
  CHECK(ax.period == 1);
  // the invariant geodesic is the whole line
  CHECK(ax.vertices.size() == 17);
  CHECK(is_geodesic(s.ball.graph, {ax.vertices}));
  // h-translation maps axis vertices into the axis where defined
  auto img = act(s.eng, s.w("st"), s.ball);
  std::set<Vertex> on_axis(ax.vertices.begin(), ax.vertices.end());
  for (Vertex v : ax.vertices)
    if (img[v] >= 0) CHECK(on_axis.count(img[v]) == 1);
}

TEST_CASE("axis rejects finite order") {
  Setup s(fixtures::a2(), 3);
  try {
    build_axis(s.eng, s.ball, s.w("ab"));
    FAIL("finite order element produced an axis");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::FiniteOrderElement);
  }
}

TEST_CASE("axis of the hyperbolic coxeter element") {
  Setup s(fixtures::triangle(2, 3, 7), 8);
  auto ax = build_axis(s.eng, s.ball, s.w("abc"));
  CHECK(ax.kind == AxisKind::InvariantGeodesic);
  CHECK(ax.period == 1);
  CHECK(ax.vertices.size() == 13);
  CHECK(is_geodesic(s.ball.graph, {ax.vertices}));
  // root sits on the axis, orbit points at translation distance 3
  auto pos = ax.position_of(s.ball.graph.root());
  REQUIRE(pos >= 0);
  Vertex h1 = s.ball.vertex_of(s.eng.normal_form(s.w("abc")));
  CHECK(ax.position_of(h1) == pos + 3);
}

TEST_CASE("projection profile separates contracting from flat") {
  // line: everything projects to itself, no far pairs at all
  Setup di(fixtures::dinfty(), 8);
  auto dax = build_axis(di.eng, di.ball, di.w("st"));
  auto dpr = projection_profile(di.ball.graph, dax);
  CHECK(dpr.max_vertex_diameter == 0);
  CHECK(dpr.max_far_geodesic_diameter == 0);
  for (Vertex v = 0; v < di.ball.graph.vertex_count(); ++v)
    CHECK(dpr.distance_to_axis[v] == 0);

  // grid: far geodesics shadow unboundedly much of the axis, and the
  // shadow grows with the radius
  Setup g6(fixtures::racg_cycle4(), 6);
  auto a6 = build_axis(g6.eng, g6.ball, g6.w("ac"));
  auto p6 = projection_profile(g6.ball.graph, a6);
  Setup g8(fixtures::racg_cycle4(), 8);
  auto a8 = build_axis(g8.eng, g8.ball, g8.w("ac"));
  auto p8 = projection_profile(g8.ball.graph, a8);
  CHECK(p6.max_vertex_diameter == 0);
  CHECK(p6.max_far_geodesic_diameter == 8);
  CHECK(p8.max_far_geodesic_diameter == 12);

  // hyperbolic: the vertex constant stays put as the ball grows
  Setup t8(fixtures::triangle(2, 3, 7), 8);
  auto x8 = build_axis(t8.eng, t8.ball, t8.w("abc"));
  auto q8 = projection_profile(t8.ball.graph, x8);
  Setup t10(fixtures::triangle(2, 3, 7), 10);
  auto x10 = build_axis(t10.eng, t10.ball, t10.w("abc"));
  auto q10 = projection_profile(t10.ball.graph, x10);
  CHECK(q8.max_vertex_diameter == 6);
  CHECK(q10.max_vertex_diameter == 6);
  CHECK(q8.max_far_geodesic_diameter == 10);
}

TEST_CASE("certification on the line") {
  Setup s(fixtures::dinfty(), 8);
  auto c = certify_contracting(s.eng, s.ball, s.walls, s.w("st"));
  CHECK(c.verdict == Verdict::Certified);
  CHECK(c.crossed.size() == 16);  // every wall of the line is crossed
  CHECK(c.pair_h == 9);
  CHECK(c.pair_k == 8);
  CHECK(c.pair_transversals.count == 0);
  CHECK(c.chain.size() == 3);

  Setup s4(fixtures::dinfty(), 4);
  auto c4 = certify_contracting(s4.eng, s4.ball, s4.walls, s4.w("st"));
  CHECK(c4.verdict == Verdict::Certified);
  CHECK(c4.chain.size() == 2);
}

TEST_CASE("certification contrast across fixtures") {
  Setup hyp(fixtures::triangle(2, 3, 7), 10);
  auto ch = certify_contracting(hyp.eng, hyp.ball, hyp.walls, hyp.w("abc"));
  CHECK(ch.verdict == Verdict::Certified);
  CHECK(ch.pair_h == 13);
  CHECK(ch.pair_k == 18);
  CHECK(ch.pair_transversals.count == 0);
  CHECK(ch.chain.size() >= 2);
  CHECK(ch.crossed.size() == 18);
  CHECK(ch.profile.max_vertex_diameter == 6);
  // the certifying pair really is crossed by the axis, in this order
  auto ih = std::find(ch.crossed.begin(), ch.crossed.end(), ch.pair_h);
  auto ik = std::find(ch.crossed.begin(), ch.crossed.end(), ch.pair_k);
  CHECK(ih != ch.crossed.end());
  CHECK(ik != ch.crossed.end());

  Setup aff(fixtures::triangle(3, 3, 3), 10);
  auto ca = certify_contracting(aff.eng, aff.ball, aff.walls, aff.w("abc"));
  CHECK(ca.verdict == Verdict::Refuted);
  CHECK(ca.pair_h == -1);
  CHECK(ca.profile.max_vertex_diameter == 10);  // grows with the ball

  for (int r : {6, 8}) {
    Setup grid(fixtures::racg_cycle4(), r);
    auto cg = certify_contracting(grid.eng, grid.ball, grid.walls, grid.w("ac"));
    CHECK(cg.verdict == Verdict::Refuted);
  }
}

TEST_CASE("certificate chain is pairwise separated") {
  Setup s(fixtures::dinfty(), 8);
  auto c = certify_contracting(s.eng, s.ball, s.walls, s.w("st"));
  REQUIRE(c.chain.size() >= 2);
  for (std::size_t i = 0; i < c.chain.size(); ++i)
    for (std::size_t j = i + 1; j < c.chain.size(); ++j) {
      auto pc = classify_pair(s.ball.graph, s.walls, c.chain[i], c.chain[j]);
      CHECK(pc.kind == PairClass::Nested);
    }
}

TEST_CASE("admissible path basics") {
  Setup s(fixtures::dinfty(), 8);
  // empty word: the trivial path at the root
  auto t = build_admissible_path(s.eng, s.ball, {}, {}, 2, 1);
  CHECK(t.vertices == std::vector<Vertex>{s.ball.graph.root()});
  CHECK(t.segments.empty());

  // single axis segment, no connector needed
  auto p = build_admissible_path(s.eng, s.ball, {{s.w("st"), 2}}, {}, 2, 1);
  CHECK(p.segments.size() == 1);
  CHECK(p.vertices.size() == 5);
  CHECK(p.fellow_travel_radius == 0);
  CHECK(p.quasi_constant == doctest::Approx(2.0));

  // one wall class only: every connector shadows the single axis, so
  // tau = 0 rejects them all
  try {
    build_admissible_path(s.eng, s.ball, {{s.w("st"), 1}, {s.w("st"), 1}},
                          {s.w("s"), s.w("t")}, 0, 0);
    FAIL("connector accepted on the line");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::AllCandidatesRejected);
  }
}

TEST_CASE("admissible path between independent axes") {
  WordEngine eng(fixtures::triangle(2, 3, 7));
  Word h = parse_word(eng.system(), "abc");
  Word u = parse_word(eng.system(), "ca");
  Word k = eng.multiply(eng.multiply(u, h), eng.inverse(u));
  std::vector<Word> cands;
  for (auto f : {"a", "b", "c", "ca", "ac"})
    cands.push_back(parse_word(eng.system(), f));

  double qc10 = 0;
  for (int r : {10, 12}) {
    auto ball = cayley_ball(eng, r);
    auto p = build_admissible_path(eng, ball, {{h, 2}, {k, 2}}, cands, 1, 2);
    REQUIRE(p.segments.size() == 3);
    CHECK(p.segments[1].connector);
    check_walk(ball.graph, {p.vertices});
    CHECK(p.quasi_constant > 0);
    CHECK(p.fellow_travel_radius == 5);
    if (r == 10)
      qc10 = p.quasi_constant;
    else
      CHECK(p.quasi_constant == doctest::Approx(qc10));  // stable in r
  }
}

TEST_CASE("north-south on the line") {
  Setup s(fixtures::dinfty(), 8);
  Word g = s.w("st");
  Vertex vp = s.ball.vertex_of(s.eng.power(g, 4));
  Vertex vm = s.ball.vertex_of(s.eng.power(g, -4));
  auto att = lex_geodesic(s.ball.graph, s.ball.graph.root(), vp);
  auto rep = lex_geodesic(s.ball.graph, s.ball.graph.root(), vm);
  GeodesicPath att3{{att.vertices.begin(), att.vertices.begin() + 4}};

  auto r = ns_iterate(s.eng, s.ball, s.walls, g, {att3, rep}, 5);
  CHECK(r.max_agreement == 4);

  // the attracting prefix is already at full agreement
  const auto& ta = r.trajectories[0];
  CHECK_FALSE(ta.repelling);
  CHECK(ta.first_n_at_target == 1);
  for (int a : ta.agreement) CHECK(a == r.max_agreement);

  // the full left ray: flagged repelling, agreement pinned at 0 until
  // the pushed prefix leaves the ball
  const auto& tr = r.trajectories[1];
  CHECK(tr.repelling);
  CHECK(tr.domain_exceeded);
  CHECK(tr.last_valid_n == 4);
  for (int a : tr.agreement) CHECK(a == 0);
  CHECK(r.all_monotone);
}

TEST_CASE("north-south sample validation") {
  Setup s(fixtures::dinfty(), 4);
  Word g = s.w("st");
  GeodesicPath not_root{{1, 0}};
  if (s.ball.graph.root() == 1) not_root.vertices = {2, 1};
  try {
    ns_iterate(s.eng, s.ball, s.walls, g, {not_root}, 2);
    FAIL("sample away from the root accepted");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotFromRoot);
  }
  // leaving the ball is reported per sample, not thrown
  auto r = ns_iterate(s.eng, s.ball, s.walls, g,
                      {GeodesicPath{{s.ball.graph.root()}}}, 6);
  CHECK(r.trajectories[0].domain_exceeded);
  CHECK(r.trajectories[0].last_valid_n == 2);
}

TEST_CASE("north-south convergence cohort") {
  Setup s(fixtures::triangle(2, 3, 7), 10);
  auto samples = ray_prefixes(s.ball.graph, 50, 3, 2026);
  auto rep = ns_iterate(s.eng, s.ball, s.walls, s.w("abc"), samples, 6);
  CHECK(rep.max_agreement == 5);
  CHECK(rep.all_monotone);
  int nonrep = 0, reached = 0;
  for (const auto& tr : rep.trajectories) {
    if (tr.repelling) continue;
    ++nonrep;
    CHECK(tr.monotone);
    if (tr.first_n_at_target >= 0) ++reached;
  }
  CHECK(nonrep == 50);
  CHECK(reached == 49);
  CHECK(10 * reached >= 9 * nonrep);
}
