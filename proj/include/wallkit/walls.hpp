#pragma once

#include <utility>
#include <variant>
#include <vector>

#include "wallkit/graph.hpp"

namespace wallkit {

struct Clique {
  int id;
  std::vector<Vertex> vertices;  // ascending
};

/// Relation between two maximal cliques per the parallel/antipodal
/// definitions. Parallel carries the bijection realizing the minimal
/// distance; Antipodal the unique closest pair; size-mismatched or
/// otherwise irregular pairs are Other.
struct Parallel {
  std::vector<std::pair<Vertex, Vertex>> matching;
};
struct Antipodal {
  std::pair<Vertex, Vertex> closest;
};
struct OtherRelation {};
using CliquePairRelation = std::variant<Parallel, Antipodal, OtherRelation>;

struct Hyperplane {
  int id = -1;
  std::vector<int> clique_ids;
  std::vector<std::pair<Vertex, Vertex>> edges;  // u < v
  std::vector<std::vector<Vertex>> sectors;      // partition of V
  /// True iff some clique vertex of the class has margin < 2.
  bool truncated = false;
};

struct ParacliqueReport {
  bool triangle_condition = true;
  bool no_shared_edge_triangles = true;
  bool clique_gated = true;  // the two above combined
  int transitivity_violations = 0;
  int interior_transitivity_violations = 0;
  /// Per non-truncated class, failures of the sector <-> gate-preimage
  /// bijection.
  int sector_gate_failures = 0;
  bool paraclique = true;
};

class WallComplex {
 public:
  const std::vector<Clique>& cliques() const { return cliques_; }
  const std::vector<Hyperplane>& hyperplanes() const { return hyperplanes_; }
  const ParacliqueReport& report() const { return report_; }
  int count() const { return static_cast<int>(hyperplanes_.size()); }

  const Hyperplane& hyperplane(int h) const { return hyperplanes_.at(h); }
  /// Index of the sector of hyperplane h containing v.
  int sector_of(int h, Vertex v) const { return sector_of_.at(h)[v]; }
  /// Hyperplane containing the edge {u,v}, or -1.
  int hyperplane_of_edge(Vertex u, Vertex v) const;
  /// min over clique vertices of d(root, .).
  int distance_to_root(int h) const { return root_dist_.at(h); }

 private:
  friend WallComplex detail_build_hyperplanes(const BallGraph& g,
                                              bool lenient);
  std::vector<Clique> cliques_;
  std::vector<Hyperplane> hyperplanes_;
  std::vector<std::vector<int>> sector_of_;
  std::vector<std::vector<std::pair<std::pair<Vertex, Vertex>, int>>>
      edge_index_;  // per min-endpoint bucket
  std::vector<int> root_dist_;
  ParacliqueReport report_;
};

std::vector<Clique> maximal_cliques(const BallGraph& g);

CliquePairRelation clique_pair_relation(const BallGraph& g, const Clique& a,
                                        const Clique& b);

/// Parallel classes by union-find, sectors per class, paraclique
/// verification. Throws NotParaclique only when the graph fails
/// clique-gatedness or interior transitivity; callers wanting the
/// best-effort structure anyway can catch and inspect via
/// build_hyperplanes_lenient.
WallComplex build_hyperplanes(const BallGraph& g);
WallComplex build_hyperplanes_lenient(const BallGraph& g);

std::vector<int> separating_hyperplanes(const BallGraph& g,
                                        const WallComplex& H, Vertex x,
                                        Vertex y);

struct PairClass {
  enum Kind { Transverse, Nested } kind;
  /// For Nested: distinguished sectors (a of h, b of k) such that every
  /// other sector of k is contained in a and vice versa.
  int a_sector = -1;
  int b_sector = -1;
  /// Best-effort flag: either hyperplane truncated.
  bool truncated_pair = false;
};

PairClass classify_pair(const BallGraph& g, const WallComplex& H, int h, int k);

struct TransversalCount {
  int count = 0;
  bool lower_bound_only = false;
};

TransversalCount common_transversals(const BallGraph& g, const WallComplex& H,
                                     int h, int k);

struct Crossing {
  int hyperplane;
  int exit_sector;
  int enter_sector;
};
using CrossingSignature = std::vector<Crossing>;

CrossingSignature crossing_signature(const BallGraph& g, const WallComplex& H,
                                     const GeodesicPath& p);

}  // namespace wallkit
