#include "wallkit/dynamics.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace wallkit {

namespace {

// Orbit extent: largest K with h^K o inside the ball. Detects finite
// order on the way (some power reduces to the identity).
int orbit_extent(WordEngine& eng, const CayleyBall& ball, const Word& h) {
  int k = 0;
  while (true) {
    Word p = eng.power(h, k + 1);
    if (p.empty())
      throw Error(Errc::FiniteOrderElement,
                  "orbit returns to the identity at power " +
                      std::to_string(k + 1));
    if (ball.vertex_of(p) < 0) return k;
    ++k;
  }
}

// Left-multiplication images over the ball. Propagates along edges
// (g.(ws) is the s-neighbor of g.w) with a WordEngine fallback for
// vertices the propagation cannot reach.
std::vector<Vertex> act_fast(WordEngine& eng, const CayleyBall& ball,
                             const Word& g) {
  const BallGraph& gr = ball.graph;
  const int n = gr.vertex_count();
  std::vector<Vertex> img(n, -2);  // -2 unknown, -1 outside
  Word gn = eng.normal_form(g);
  img[gr.root()] = ball.vertex_of(gn);

  auto s_neighbor = [&](Vertex v, int s) -> Vertex {
    for (Vertex u : gr.neighbors(v))
      if (ball.generator_of_edge(v, u) == s) return u;
    return -1;
  };

  std::vector<Vertex> queue;
  if (img[gr.root()] >= 0) queue.push_back(gr.root());
  while (!queue.empty()) {
    Vertex v = queue.back();
    queue.pop_back();
    for (Vertex u : gr.neighbors(v)) {
      if (img[u] != -2) continue;
      img[u] = s_neighbor(img[v], ball.generator_of_edge(v, u));
      if (img[u] >= 0) queue.push_back(u);
    }
  }
  for (Vertex v = 0; v < n; ++v)
    if (img[v] == -2)
      img[v] = ball.vertex_of(eng.multiply(gn, ball.elements[v]));
  return img;
}

// Glues translates of a base geodesic o -> h^{n0} o into the longest
// in-ball segment; invariant under h^{n0} by construction.
std::vector<Vertex> assemble_translates(const std::vector<Vertex>& base,
                                        const std::vector<Vertex>& fwd,
                                        const std::vector<Vertex>& bwd) {
  auto shift = [](const std::vector<Vertex>& block,
                  const std::vector<Vertex>& map)
      -> std::optional<std::vector<Vertex>> {
    std::vector<Vertex> out;
    out.reserve(block.size());
    for (Vertex v : block) {
      if (map[v] < 0) return std::nullopt;
      out.push_back(map[v]);
    }
    return out;
  };

  std::vector<std::vector<Vertex>> blocks{base};
  while (auto next = shift(blocks.back(), fwd)) blocks.push_back(*next);
  std::vector<std::vector<Vertex>> rev;
  for (auto cur = shift(blocks.front(), bwd); cur; cur = shift(*cur, bwd))
    rev.push_back(*cur);

  std::vector<Vertex> out;
  for (auto it = rev.rbegin(); it != rev.rend(); ++it)
    out.insert(out.end(), it->begin(), std::prev(it->end()));
  for (const auto& b : blocks) {
    out.insert(out.end(), b.begin(), b.end());
    out.pop_back();
  }
  out.push_back(blocks.back().back());
  return out;
}

}  // namespace

Axis build_axis(WordEngine& eng, const CayleyBall& ball, const Word& h,
                int power_budget) {
  const BallGraph& g = ball.graph;
  const int K = orbit_extent(eng, ball, h);
  if (K < 1)
    throw Error(Errc::BadInput, "orbit leaves the ball at the first step");

  for (int n0 = 1; n0 <= power_budget; ++n0) {
    Word hp = eng.power(h, n0);
    Vertex tgt = ball.vertex_of(hp);
    if (tgt < 0) break;
    auto fwd = act_fast(eng, ball, hp);
    auto bwd = act_fast(eng, ball, eng.inverse(hp));
    auto cands = enumerate_geodesics(g, g.root(), tgt, 256);
    for (const auto& base : cands.paths) {
      auto axis = assemble_translates(base.vertices, fwd, bwd);
      if (is_geodesic(g, {axis}))
        return {eng.normal_form(h), n0, std::move(axis),
                AxisKind::InvariantGeodesic};
    }
  }

  // Quasi-axis over the cyclic orbit, joined by lex-min geodesics.
  std::vector<Vertex> orbit;
  for (int k = -K; k <= K; ++k)
    orbit.push_back(ball.vertex_of(eng.power(h, k)));
  std::vector<Vertex> out{orbit.front()};
  for (std::size_t i = 0; i + 1 < orbit.size(); ++i) {
    auto seg = lex_geodesic(g, orbit[i], orbit[i + 1]);
    out.insert(out.end(), std::next(seg.vertices.begin()),
               seg.vertices.end());
  }
  return {eng.normal_form(h), 1, std::move(out), AxisKind::OrbitQuasiAxis};
}

ProjectionProfile projection_profile(const BallGraph& g, const Axis& axis,
                                     int c_candidate) {
  const int n = g.vertex_count();
  const int m = static_cast<int>(axis.vertices.size());
  ProjectionProfile out;
  out.far_threshold = c_candidate;
  out.distance_to_axis.assign(n, 0);
  out.vertex_diameter.assign(n, 0);

  std::vector<int> pmin(n), pmax(n);
  for (Vertex v = 0; v < n; ++v) {
    int best = g.distance(v, axis.vertices[0]);
    int lo = 0, hi = 0;
    for (int i = 1; i < m; ++i) {
      int d = g.distance(v, axis.vertices[i]);
      if (d < best) {
        best = d;
        lo = hi = i;
      } else if (d == best) {
        hi = i;
      }
    }
    out.distance_to_axis[v] = best;
    pmin[v] = lo;
    pmax[v] = hi;
    out.vertex_diameter[v] = g.distance(axis.vertices[lo], axis.vertices[hi]);
    out.max_vertex_diameter =
        std::max(out.max_vertex_diameter, out.vertex_diameter[v]);
  }

  // Geodesics far from the axis, via vertex-pair intervals: every
  // vertex of I(x,y) must stay >= c_candidate away.
  for (Vertex x = 0; x < n; ++x) {
    if (out.distance_to_axis[x] < c_candidate) continue;
    for (Vertex y = x; y < n; ++y) {
      if (out.distance_to_axis[y] < c_candidate) continue;
      const int d = g.distance(x, y);
      int lo = std::min(pmin[x], pmin[y]), hi = std::max(pmax[x], pmax[y]);
      bool far = true;
      for (Vertex z = 0; z < n && far; ++z) {
        if (g.distance(x, z) + g.distance(z, y) != d) continue;
        if (out.distance_to_axis[z] < c_candidate) {
          far = false;
        } else {
          lo = std::min(lo, pmin[z]);
          hi = std::max(hi, pmax[z]);
        }
      }
      if (!far) continue;
      out.max_far_geodesic_diameter =
          std::max(out.max_far_geodesic_diameter,
                   g.distance(axis.vertices[lo], axis.vertices[hi]));
    }
  }
  return out;
}

namespace {

// All sector combinations of the two walls are realized by trusted
// witnesses. A genuine crossing is witnessed a bounded distance past
// the deeper wall (the crossing polygon), while the sector tables of
// frontier wall fragments mis-assign vertices near the frontier, so
// witnesses are capped at max(depth) + 3. The pad covers square and
// hexagon crossing configurations; it is an empirical calibration.
bool walls_transverse(const BallGraph& g, const WallComplex& H, int a,
                      int b) {
  const int bound = std::min(
      std::max(H.distance_to_root(a), H.distance_to_root(b)) + 3, g.radius());
  const auto na = H.hyperplane(a).sectors.size();
  const auto nb = H.hyperplane(b).sectors.size();
  std::set<std::pair<int, int>> seen;
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (g.distance(g.root(), v) <= bound)
      seen.insert({H.sector_of(a, v), H.sector_of(b, v)});
  return seen.size() == na * nb;
}

bool strongly_separated(const BallGraph& g, const WallComplex& H, int a,
                        int b) {
  if (walls_transverse(g, H, a, b)) return false;
  for (int t = 0; t < H.count(); ++t)
    if (t != a && t != b && walls_transverse(g, H, t, a) &&
        walls_transverse(g, H, t, b))
      return false;
  return true;
}

}  // namespace

ContractingCertificate certify_contracting(WordEngine& eng,
                                           const CayleyBall& ball,
                                           const WallComplex& H, const Word& h,
                                           int power_budget) {
  const BallGraph& g = ball.graph;
  ContractingCertificate cert;
  cert.element = eng.normal_form(h);
  cert.axis = build_axis(eng, ball, h, power_budget);
  cert.radius = g.radius();
  cert.profile = projection_profile(g, cert.axis);

  std::set<int> seen;
  for (std::size_t i = 0; i + 1 < cert.axis.vertices.size(); ++i) {
    int w = H.hyperplane_of_edge(cert.axis.vertices[i],
                                 cert.axis.vertices[i + 1]);
    if (w >= 0 && seen.insert(w).second) cert.crossed.push_back(w);
  }

  auto interior = [&](int w) { return 2 * H.distance_to_root(w) <= cert.radius; };

  // Widest-span pairs first: the best separated candidates.
  std::vector<std::pair<int, int>> pairs;  // (i, j) axis-order indices
  for (std::size_t i = 0; i < cert.crossed.size(); ++i)
    for (std::size_t j = i + 1; j < cert.crossed.size(); ++j)
      pairs.push_back({static_cast<int>(i), static_cast<int>(j)});
  std::sort(pairs.begin(), pairs.end(), [](auto& p, auto& q) {
    if (p.second - p.first != q.second - q.first)
      return p.second - p.first > q.second - q.first;
    return p < q;
  });

  for (auto [i, j] : pairs) {
    int a = cert.crossed[i], b = cert.crossed[j];
    if (!interior(a) || !interior(b)) continue;
    if (walls_transverse(g, H, a, b)) continue;
    int tc = 0;
    for (int t = 0; t < H.count(); ++t)
      if (t != a && t != b && walls_transverse(g, H, t, a) &&
          walls_transverse(g, H, t, b))
        ++tc;
    if (tc != 0) continue;
    cert.verdict = Verdict::Certified;
    cert.pair_h = a;
    cert.pair_k = b;
    cert.pair_transversals = {0, H.hyperplane(a).truncated ||
                                    H.hyperplane(b).truncated};
    break;
  }

  if (cert.verdict == Verdict::Certified) {
    // Descending chain: translate the second wall forward along the
    // axis while pairwise strong separation survives in the ball.
    auto fwd = act_fast(eng, ball, eng.power(h, cert.axis.period));
    auto translate_wall = [&](int w) -> int {
      for (auto [u, v] : H.hyperplane(w).edges) {
        Vertex iu = fwd[u], iv = fwd[v];
        if (iu >= 0 && iv >= 0) return H.hyperplane_of_edge(iu, iv);
      }
      return -1;
    };
    cert.chain = {cert.pair_h, cert.pair_k};
    for (int w = translate_wall(cert.pair_k); w >= 0; w = translate_wall(w)) {
      bool ok = true;
      for (int prev : cert.chain)
        ok = ok && strongly_separated(g, H, prev, w);
      if (!ok) break;
      cert.chain.push_back(w);
    }
    return cert;
  }

  // Refutation: every interior crossed pair either meets or has a
  // common transversal, all witnessed inside the trusted region.
  bool all_blocked = true;
  bool any_interior_pair = false;
  for (std::size_t i = 0; i < cert.crossed.size() && all_blocked; ++i)
    for (std::size_t j = i + 1; j < cert.crossed.size() && all_blocked; ++j) {
      int a = cert.crossed[i], b = cert.crossed[j];
      if (!interior(a) || !interior(b)) continue;
      any_interior_pair = true;
      if (walls_transverse(g, H, a, b)) continue;
      bool blocked = false;
      for (int t = 0; t < H.count() && !blocked; ++t)
        blocked = t != a && t != b && walls_transverse(g, H, t, a) &&
                  walls_transverse(g, H, t, b);
      all_blocked = blocked;
    }
  cert.verdict = any_interior_pair && all_blocked ? Verdict::Refuted
                                                  : Verdict::Inconclusive;
  return cert;
}

namespace {

// Projection of a vertex set onto an ordered carrier: the union of
// nearest-point sets, returned as a position range.
int projection_diameter(const BallGraph& g, const std::vector<Vertex>& q,
                        const std::vector<Vertex>& carrier) {
  int lo = -1, hi = -1;
  for (Vertex v : q) {
    int best = -1;
    for (Vertex c : carrier)
      if (best < 0 || g.distance(v, c) < best) best = g.distance(v, c);
    for (std::size_t i = 0; i < carrier.size(); ++i)
      if (g.distance(v, carrier[i]) == best) {
        if (lo < 0 || static_cast<int>(i) < lo) lo = static_cast<int>(i);
        if (static_cast<int>(i) > hi) hi = static_cast<int>(i);
      }
  }
  return lo < 0 ? 0 : g.distance(carrier[lo], carrier[hi]);
}

}  // namespace

AdmissiblePath build_admissible_path(
    WordEngine& eng, const CayleyBall& ball,
    const std::vector<std::pair<Word, int>>& word,
    const std::vector<Word>& candidates, int L, int tau) {
  const BallGraph& g = ball.graph;
  AdmissiblePath out;
  out.L = L;
  out.tau = tau;
  out.vertices = {g.root()};
  if (word.empty()) return out;

  // In-ball carriers: translated full axes of each letter.
  std::map<Word, Axis> axes;
  for (const auto& [w, k] : word) {
    Word nf = eng.normal_form(w);
    if (!axes.count(nf)) axes.emplace(nf, build_axis(eng, ball, nf));
  }

  Word prefix;  // group element at the current path end
  std::vector<Vertex> prev_carrier;
  auto append = [&](const std::vector<Vertex>& seg) {
    out.vertices.insert(out.vertices.end(), std::next(seg.begin()), seg.end());
  };

  for (std::size_t i = 0; i < word.size(); ++i) {
    auto [w, k] = word[i];
    Word nf = eng.normal_form(w);

    auto place = [&](const Word& pre) -> std::optional<
                      std::pair<std::vector<Vertex>, std::vector<Vertex>>> {
      // carrier = pre . axis(w); segment = its stretch from pre to
      // pre . w^k
      auto img = act_fast(eng, ball, pre);
      std::vector<Vertex> carrier;
      for (Vertex v : axes.at(nf).vertices)
        if (img[v] >= 0) carrier.push_back(img[v]);
      Vertex from = ball.vertex_of(pre);
      Vertex to = ball.vertex_of(eng.multiply(pre, eng.power(nf, k)));
      if (from < 0 || to < 0) return std::nullopt;
      auto fp = std::find(carrier.begin(), carrier.end(), from);
      auto tp = std::find(carrier.begin(), carrier.end(), to);
      if (fp == carrier.end() || tp == carrier.end()) return std::nullopt;
      std::vector<Vertex> seg;
      if (fp <= tp)
        seg.assign(fp, std::next(tp));
      else {
        seg.assign(tp, std::next(fp));
        std::reverse(seg.begin(), seg.end());
      }
      return std::make_pair(std::move(seg), std::move(carrier));
    };

    if (i == 0) {
      auto placed = place(prefix);
      if (!placed)
        throw Error(Errc::DomainExceeded, "path leaves the ball");
      append(placed->first);
      out.segments.push_back({false, eng.power(nf, k), placed->first});
      prev_carrier = placed->second;
      prefix = eng.multiply(prefix, eng.power(nf, k));
      continue;
    }

    bool placed_any = false;
    for (const Word& f : candidates) {
      Word mid = eng.multiply(prefix, f);
      Vertex mv = ball.vertex_of(mid);
      if (mv < 0) continue;
      auto q = lex_geodesic(g, out.vertices.back(), mv);
      auto placed = place(mid);
      if (!placed) continue;
      // bounded projection onto both adjacent carriers
      if (projection_diameter(g, q.vertices, prev_carrier) > tau) continue;
      if (projection_diameter(g, q.vertices, placed->second) > tau) continue;
      append(q.vertices);
      out.segments.push_back({true, eng.normal_form(f), q.vertices});
      append(placed->first);
      out.segments.push_back({false, eng.power(nf, k), placed->first});
      prev_carrier = placed->second;
      prefix = eng.multiply(mid, eng.power(nf, k));
      placed_any = true;
      break;
    }
    if (!placed_any)
      throw Error(Errc::AllCandidatesRejected,
                  "no connector satisfies bounded projection");
  }

  // long local on interior axis segments
  for (std::size_t s = 2; s + 1 < out.segments.size(); ++s)
    if (!out.segments[s].connector &&
        static_cast<int>(out.segments[s].vertices.size()) - 1 <= L)
      throw Error(Errc::BadInput, "interior segment violates long local");

  Vertex start = out.vertices.front(), end = out.vertices.back();
  for (std::size_t t = 1; t < out.vertices.size(); ++t) {
    int d = g.distance(start, out.vertices[t]);
    if (d == 0) continue;
    out.quasi_constant = std::max(
        out.quasi_constant, (static_cast<double>(t) + 1.0) / d);
  }
  auto geo = lex_geodesic(g, start, end);
  int haus = 0;
  for (Vertex v : out.vertices) {
    int best = -1;
    for (Vertex u : geo.vertices)
      if (best < 0 || g.distance(v, u) < best) best = g.distance(v, u);
    haus = std::max(haus, best);
  }
  for (Vertex u : geo.vertices) {
    int best = -1;
    for (Vertex v : out.vertices)
      if (best < 0 || g.distance(v, u) < best) best = g.distance(v, u);
    haus = std::max(haus, best);
  }
  out.fellow_travel_radius = haus;
  return out;
}

namespace {

// Largest r such that the principal orientation at x matches the
// reference on every trusted wall (depth <= radius/2) within depth r.
// Full agreement: the trusted depth itself.
int agreement_radius(const BallGraph& g, const WallComplex& H, Vertex x,
                     const std::vector<int>& ref, int cap) {
  int a = cap;
  for (int w = 0; w < H.count(); ++w) {
    if (2 * H.distance_to_root(w) > g.radius()) continue;
    if (H.sector_of(w, x) != ref[w]) a = std::min(a, H.distance_to_root(w));
  }
  return a;
}

}  // namespace

NsReport ns_iterate(WordEngine& eng, const CayleyBall& ball,
                    const WallComplex& H, const Word& g,
                    const std::vector<GeodesicPath>& samples, int n_max,
                    int target_radius) {
  const BallGraph& gr = ball.graph;
  NsReport report;
  report.target_radius = target_radius;
  report.max_agreement = gr.radius() / 2;

  const int K = orbit_extent(eng, ball, g);
  if (K < 1) throw Error(Errc::BadInput, "element acts outside the ball");
  Vertex v_plus = ball.vertex_of(eng.power(g, K));
  Vertex v_minus = ball.vertex_of(eng.power(g, -K));

  std::vector<int> ref_att(H.count()), ref_rep(H.count());
  for (int w = 0; w < H.count(); ++w) {
    ref_att[w] = H.sector_of(w, v_plus);
    ref_rep[w] = H.sector_of(w, v_minus);
  }

  std::vector<std::vector<Vertex>> img(n_max + 1);
  for (int n = 1; n <= n_max; ++n)
    img[n] = act_fast(eng, ball, eng.power(g, n));

  for (std::size_t s = 0; s < samples.size(); ++s) {
    const auto& p = samples[s];
    if (p.vertices.empty() || p.front() != gr.root())
      throw Error(Errc::NotFromRoot, "sample must start at the root");
    if (!is_geodesic(gr, p))
      throw Error(Errc::NotGeodesic, "sample prefix is not geodesic");

    NsTrajectory tr;
    tr.sample_id = static_cast<int>(s);
    tr.repelling = 2 * agreement_radius(gr, H, p.back(), ref_rep,
                                        report.max_agreement) >=
                   report.max_agreement;

    for (int n = 1; n <= n_max; ++n) {
      // the whole pushed prefix must stay inside the ball
      bool out_of_ball = false;
      for (Vertex v : p.vertices)
        out_of_ball = out_of_ball || img[n][v] < 0;
      if (out_of_ball) {
        tr.domain_exceeded = true;
        break;
      }
      int a = agreement_radius(gr, H, img[n][p.back()], ref_att,
                               report.max_agreement);
      if (!tr.agreement.empty() && a < tr.agreement.back())
        tr.monotone = false;
      tr.agreement.push_back(a);
      tr.last_valid_n = n;
      if (tr.first_n_at_target < 0 && a >= target_radius)
        tr.first_n_at_target = n;
    }
    report.all_monotone = report.all_monotone && tr.monotone;
    report.trajectories.push_back(std::move(tr));
  }
  return report;
}

}  // namespace wallkit
