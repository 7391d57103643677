#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "wallkit/graph.hpp"

namespace wallkit {

/// Coxeter label matrix; 0 encodes infinity, matching the file format.
inline constexpr int kInfLabel = 0;

struct CoxeterSystem {
  std::vector<std::string> generators;
  std::vector<std::vector<int>> m;

  int rank() const { return static_cast<int>(generators.size()); }
  int label(int s, int t) const { return m[s][t]; }
  void validate() const;
};

/// Parse the JSON system format {"generators": [...], "m": [[...]]}.
CoxeterSystem parse_system(const std::string& text);
std::string system_to_json(const CoxeterSystem& sys);

/// Right-angled system from a simple graph: adjacent => m = 2, else
/// infinity.
CoxeterSystem racg_from_graph(std::vector<std::string> names,
                              const std::vector<std::pair<int, int>>& edges);

using Word = std::vector<int>;

/// Generator-index word from a string of generator names (single
/// characters juxtaposed, or names separated by spaces/dots).
Word parse_word(const CoxeterSystem& sys, const std::string& text);
std::string word_to_string(const CoxeterSystem& sys, const Word& w);

/// Exact word problem by Tits reduction: breadth-first closure under
/// braid moves, deleting adjacent equal letters until reduced, then the
/// ShortLex minimum of the braid class. Memoized.
class WordEngine {
 public:
  explicit WordEngine(CoxeterSystem sys, std::size_t closure_budget = 2000000)
      : sys_(std::move(sys)), budget_(closure_budget) {
    sys_.validate();
  }

  const CoxeterSystem& system() const { return sys_; }

  Word normal_form(const Word& w);
  Word multiply(const Word& a, const Word& b);
  Word inverse(const Word& a);
  Word power(const Word& a, int n);
  int length(const Word& w) { return static_cast<int>(normal_form(w).size()); }

 private:
  Word reduce(const Word& w);
  CoxeterSystem sys_;
  std::size_t budget_;
  std::unordered_map<std::string, Word> memo_;
};

struct CayleyBall {
  BallGraph graph;
  std::vector<Word> elements;       // per vertex, normal forms
  std::map<Word, Vertex> index;
  std::map<std::pair<Vertex, Vertex>, int> edge_generator;

  Vertex vertex_of(const Word& nf) const {
    auto it = index.find(nf);
    return it == index.end() ? -1 : it->second;
  }
  /// Generator s with element(u) * s = element(v).
  int generator_of_edge(Vertex u, Vertex v) const {
    return edge_generator.at({u, v});
  }
};

CayleyBall cayley_ball(WordEngine& eng, int radius,
                       std::size_t max_vertices = 200000);

/// Reflections crossed walking the normal form of w from the identity:
/// w_{i-1} s_i w_{i-1}^{-1}, normal-formed. Size = length of w.
std::vector<Word> inversion_set(WordEngine& eng, const Word& w);

/// Left action v -> g.v on ball vertices; -1 where the image leaves the
/// ball.
std::vector<Vertex> act(WordEngine& eng, const Word& g, const CayleyBall& b);

enum class ComponentType { Spherical, Affine, Other, Undecided };

struct Classification {
  struct Component {
    std::vector<int> generators;
    ComponentType type;
  };
  std::vector<Component> components;
  bool irreducible = false;
  /// Components left Undecided because adaptive precision ran out.
  int precision_exhausted = 0;
};

/// Gram-signature classification per irreducible component. Exact
/// arithmetic over Q(sqrt2, sqrt3, sqrt5) when all labels lie in
/// {2,3,4,5,6,inf}; adaptive-precision floating point otherwise.
Classification classify_type(const CoxeterSystem& sys);

}  // namespace wallkit
