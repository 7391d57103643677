#include "wallkit/exporters.hpp"

#include <json.hpp>
#include <sstream>

#include "wallkit/coxeter.hpp"

namespace wallkit {

namespace {

// fixed palette, cycled; enough to tell neighboring classes apart
const char* kColors[] = {"red",    "blue",   "darkgreen", "orange",
                         "purple", "brown",  "cadetblue", "magenta",
                         "gold3",  "navy",   "firebrick", "turquoise4"};

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string graph_to_dot(const BallGraph& g) {
  std::ostringstream out;
  out << "graph ball {\n";
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    out << "  n" << v << " [label=" << quote(g.label(v))
        << (v == g.root() ? ", shape=doublecircle" : "") << "];\n";
  for (Vertex u = 0; u < g.vertex_count(); ++u)
    for (Vertex v : g.neighbors(u))
      if (u < v) out << "  n" << u << " -- n" << v << ";\n";
  out << "}\n";
  return out.str();
}

std::string graph_to_dot(const BallGraph& g, const WallComplex& H) {
  std::ostringstream out;
  out << "graph ball {\n";
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    out << "  n" << v << " [label=" << quote(g.label(v))
        << (v == g.root() ? ", shape=doublecircle" : "") << "];\n";
  for (Vertex u = 0; u < g.vertex_count(); ++u)
    for (Vertex v : g.neighbors(u))
      if (u < v) {
        int h = H.hyperplane_of_edge(u, v);
        out << "  n" << u << " -- n" << v;
        if (h >= 0)
          out << " [color=" << kColors[h % 12] << ", label=\"" << h << "\"]";
        out << ";\n";
      }
  out << "}\n";
  return out.str();
}

std::string graph_to_json(const BallGraph& g) {
  nlohmann::ordered_json j;
  j["root"] = g.root();
  j["radius"] = g.is_finite_graph() ? kFiniteGraph : g.radius();
  j["labels"] = nlohmann::json::array();
  for (Vertex v = 0; v < g.vertex_count(); ++v) j["labels"].push_back(g.label(v));
  j["edges"] = nlohmann::json::array();
  for (Vertex u = 0; u < g.vertex_count(); ++u)
    for (Vertex v : g.neighbors(u))
      if (u < v) j["edges"].push_back({u, v});
  return j.dump(2) + "\n";
}

BallGraph graph_from_json(const std::string& text) {
  try {
    auto j = nlohmann::json::parse(text);
    BallGraph::Builder b;
    for (const auto& l : j.at("labels")) b.add_vertex(l.get<std::string>());
    for (const auto& e : j.at("edges"))
      b.add_edge(e.at(0).get<int>(), e.at(1).get<int>());
    return std::move(b).build(j.at("root").get<int>(),
                              j.at("radius").get<int>());
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::UnsupportedFormat, e.what());
  }
}

std::string graph_to_csv(const BallGraph& g) {
  std::ostringstream out;
  out << "u,v,label_u,label_v\n";
  for (Vertex u = 0; u < g.vertex_count(); ++u)
    for (Vertex v : g.neighbors(u))
      if (u < v)
        out << u << "," << v << "," << g.label(u) << "," << g.label(v) << "\n";
  return out.str();
}

std::string verdict_name(Verdict v, int radius) {
  std::string tag = v == Verdict::Certified    ? "CertifiedToRadius"
                    : v == Verdict::Refuted    ? "RefutedToRadius"
                                               : "InconclusiveAtRadius";
  return tag + "(" + std::to_string(radius) + ")";
}

std::string certificate_to_json(const ContractingCertificate& c,
                                const CoxeterSystem& sys) {
  nlohmann::ordered_json j;
  j["element"] = word_to_string(sys, c.element);
  j["radius"] = c.radius;
  j["verdict"] = verdict_name(c.verdict, c.radius);
  j["axis_kind"] = c.axis.kind == AxisKind::InvariantGeodesic
                       ? "InvariantGeodesic"
                       : "OrbitQuasiAxis";
  j["axis_period"] = c.axis.period;
  j["axis_vertices"] = c.axis.vertices;
  j["crossed"] = c.crossed;
  j["pair"] = {c.pair_h, c.pair_k};
  j["pair_transversals"] = c.pair_transversals.count;
  j["chain"] = c.chain;
  j["max_vertex_diameter"] = c.profile.max_vertex_diameter;
  j["max_far_geodesic_diameter"] = c.profile.max_far_geodesic_diameter;
  return j.dump(2) + "\n";
}

std::string certificate_json_reprint(const std::string& text) {
  try {
    return nlohmann::ordered_json::parse(text).dump(2) + "\n";
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::UnsupportedFormat, e.what());
  }
}

}  // namespace wallkit
