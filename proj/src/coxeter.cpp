#include "wallkit/coxeter.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

#include <json.hpp>

namespace wallkit {

void CoxeterSystem::validate() const {
  const int n = rank();
  if (static_cast<int>(m.size()) != n)
    throw Error(Errc::BadInput, "label matrix size mismatch");
  std::set<std::string> names(generators.begin(), generators.end());
  if (static_cast<int>(names.size()) != n)
    throw Error(Errc::BadInput, "duplicate generator names");
  for (int s = 0; s < n; ++s) {
    if (static_cast<int>(m[s].size()) != n)
      throw Error(Errc::BadInput, "label matrix row size mismatch");
    if (m[s][s] != 1)
      throw Error(Errc::BadDiagonal, "m_ss must be 1 for " + generators[s]);
    for (int t = 0; t < n; ++t) {
      if (m[s][t] != m[t][s])
        throw Error(Errc::Asymmetric, "label matrix must be symmetric");
      if (s != t && m[s][t] != kInfLabel && m[s][t] < 2)
        throw Error(Errc::BadLabel, "off-diagonal labels must be >= 2 or 0");
    }
  }
}

CoxeterSystem parse_system(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::UnsupportedFormat, e.what());
  }
  CoxeterSystem sys;
  try {
    sys.generators = j.at("generators").get<std::vector<std::string>>();
    sys.m = j.at("m").get<std::vector<std::vector<int>>>();
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::UnsupportedFormat, e.what());
  }
  sys.validate();
  return sys;
}

std::string system_to_json(const CoxeterSystem& sys) {
  nlohmann::json j;
  j["generators"] = sys.generators;
  j["m"] = sys.m;
  return j.dump(2) + "\n";
}

CoxeterSystem racg_from_graph(std::vector<std::string> names,
                              const std::vector<std::pair<int, int>>& edges) {
  CoxeterSystem sys;
  const int n = static_cast<int>(names.size());
  sys.generators = std::move(names);
  sys.m.assign(n, std::vector<int>(n, kInfLabel));
  for (int s = 0; s < n; ++s) sys.m[s][s] = 1;
  for (auto [a, b] : edges) sys.m[a][b] = sys.m[b][a] = 2;
  sys.validate();
  return sys;
}

Word parse_word(const CoxeterSystem& sys, const std::string& text) {
  Word w;
  auto push_name = [&](const std::string& name) {
    for (int s = 0; s < sys.rank(); ++s)
      if (sys.generators[s] == name) {
        w.push_back(s);
        return;
      }
    throw Error(Errc::BadLabel, "unknown generator `" + name + "`");
  };
  if (text.find(' ') != std::string::npos ||
      text.find('.') != std::string::npos) {
    std::string token;
    for (char c : text + " ") {
      if (c == ' ' || c == '.') {
        if (!token.empty()) push_name(token);
        token.clear();
      } else {
        token += c;
      }
    }
  } else {
    for (char c : text) push_name(std::string(1, c));
  }
  return w;
}

std::string word_to_string(const CoxeterSystem& sys, const Word& w) {
  if (w.empty()) return "e";
  bool single = true;
  for (const auto& g : sys.generators) single = single && g.size() == 1;
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i && !single) out += '.';
    out += sys.generators[w[i]];
  }
  return out;
}

namespace {

std::string pack(const Word& w) {
  std::string s;
  s.reserve(w.size());
  for (int x : w) s.push_back(static_cast<char>(x + 1));
  return s;
}

}  // namespace

Word WordEngine::normal_form(const Word& w) {
  for (int s : w)
    if (s < 0 || s >= sys_.rank())
      throw Error(Errc::BadLabel, "letter out of range");
  auto key = pack(w);
  auto it = memo_.find(key);
  if (it != memo_.end()) return it->second;
  Word out = reduce(w);
  memo_.emplace(std::move(key), out);
  return out;
}

Word WordEngine::reduce(const Word& start) {
  // Breadth-first closure under braid moves. If any member carries an
  // adjacent equal pair, delete it and recurse on the shorter word
  // (memoized); otherwise the word is reduced by Tits' theorem and we
  // return the lexicographic minimum of the closure.
  std::set<Word> closure;
  std::deque<Word> queue;
  closure.insert(start);
  queue.push_back(start);
  while (!queue.empty()) {
    Word u = std::move(queue.front());
    queue.pop_front();
    for (std::size_t i = 0; i + 1 < u.size(); ++i)
      if (u[i] == u[i + 1]) {
        Word shorter;
        shorter.reserve(u.size() - 2);
        shorter.insert(shorter.end(), u.begin(), u.begin() + i);
        shorter.insert(shorter.end(), u.begin() + i + 2, u.end());
        return normal_form(shorter);
      }
    for (std::size_t i = 0; i < u.size(); ++i) {
      if (i + 1 >= u.size()) break;
      int s = u[i], t = u[i + 1];
      if (s == t) continue;
      int mm = sys_.label(s, t);
      if (mm == kInfLabel || i + mm > u.size()) continue;
      bool alt = true;
      for (int j = 0; j < mm; ++j)
        if (u[i + j] != ((j % 2 == 0) ? s : t)) alt = false;
      if (!alt) continue;
      Word v = u;
      for (int j = 0; j < mm; ++j) v[i + j] = (j % 2 == 0) ? t : s;
      if (closure.insert(v).second) {
        if (closure.size() > budget_)
          throw Error(Errc::BraidClosureOverflow,
                      "braid closure exceeded " + std::to_string(budget_) +
                          " nodes");
        queue.push_back(v);
      }
    }
  }
  return *closure.begin();
}

Word WordEngine::multiply(const Word& a, const Word& b) {
  Word c = a;
  c.insert(c.end(), b.begin(), b.end());
  return normal_form(c);
}

Word WordEngine::inverse(const Word& a) {
  Word r(a.rbegin(), a.rend());
  return normal_form(r);
}

Word WordEngine::power(const Word& a, int n) {
  Word base = n < 0 ? inverse(a) : normal_form(a);
  Word acc;
  for (int i = 0; i < std::abs(n); ++i) acc = multiply(acc, base);
  return acc;
}

CayleyBall cayley_ball(WordEngine& eng, int radius,
                       std::size_t max_vertices) {
  if (radius < 0) throw Error(Errc::BadInput, "radius must be >= 0");
  CayleyBall ball;
  BallGraph::Builder b;
  const auto& sys = eng.system();

  std::vector<Word> order{Word{}};
  ball.index.emplace(Word{}, 0);
  b.add_vertex("e");
  std::vector<std::pair<Vertex, Vertex>> edges;
  std::size_t level_begin = 0;
  for (int len = 0; len < radius; ++len) {
    std::size_t level_end = order.size();
    for (std::size_t i = level_begin; i < level_end; ++i)
      for (int s = 0; s < sys.rank(); ++s) {
        Word w = order[i];
        w.push_back(s);
        Word nf = eng.normal_form(w);
        if (static_cast<int>(nf.size()) != len + 1) continue;
        auto [it, fresh] = ball.index.emplace(nf, order.size());
        if (fresh) {
          if (order.size() >= max_vertices)
            throw Error(Errc::BallTooLarge, "vertex budget exceeded");
          order.push_back(nf);
          b.add_vertex(word_to_string(sys, nf));
        }
        Vertex u = static_cast<Vertex>(i), v = it->second;
        edges.emplace_back(u, v);
        ball.edge_generator[{u, v}] = s;
        ball.edge_generator[{v, u}] = s;
      }
    level_begin = level_end;
  }
  for (auto [u, v] : edges) b.add_edge(u, v);
  ball.elements = std::move(order);
  ball.graph = std::move(b).build(0, radius);
  return ball;
}

std::vector<Word> inversion_set(WordEngine& eng, const Word& w) {
  Word nf = eng.normal_form(w);
  std::set<Word> refl;
  Word prefix;
  for (int s : nf) {
    Word conj = prefix;
    conj.push_back(s);
    conj.insert(conj.end(), prefix.rbegin(), prefix.rend());
    refl.insert(eng.normal_form(conj));
    prefix.push_back(s);
  }
  return {refl.begin(), refl.end()};
}

std::vector<Vertex> act(WordEngine& eng, const Word& g, const CayleyBall& b) {
  std::vector<Vertex> out(b.elements.size(), -1);
  Word gn = eng.normal_form(g);
  for (std::size_t v = 0; v < b.elements.size(); ++v)
    out[v] = b.vertex_of(eng.multiply(gn, b.elements[v]));
  return out;
}

}  // namespace wallkit
