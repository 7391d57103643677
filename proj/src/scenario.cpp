#include "wallkit/scenario.hpp"

#include <unistd.h>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <optional>
#include <sstream>

#include "wallkit/boundary.hpp"
#include "wallkit/dynamics.hpp"
#include "wallkit/exporters.hpp"
#include "wallkit/fixtures.hpp"
#include "wallkit/order.hpp"
#include "wallkit/rng.hpp"

namespace wallkit {

namespace fs = std::filesystem;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::BadInput, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  fs::create_directories(fs::path(path).parent_path());
  std::ofstream out(path, std::ios::binary);
  out << text;
  if (!out) throw Error(Errc::BadInput, "cannot write " + path);
}

std::uint64_t fnv1a(const std::string& s, std::uint64_t h = 1469598103934665603ULL) {
  for (unsigned char c : s) h = (h ^ c) * 1099511628211ULL;
  return h;
}

std::string hex64(std::uint64_t x) {
  char buf[17];
  snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(x));
  return buf;
}

std::optional<CoxeterSystem> fixture_system(const std::string& name) {
  if (name == "dinfty") return fixtures::dinfty();
  if (name == "a2") return fixtures::a2();
  if (name == "a3") return fixtures::a3();
  if (name == "b3") return fixtures::b3();
  if (name == "grid") return fixtures::racg_cycle4();
  if (name == "path4") return fixtures::racg_path4();
  if (name.rfind("triangle-", 0) == 0) {
    int p, q, r;
    if (sscanf(name.c_str(), "triangle-%d-%d-%d", &p, &q, &r) == 3)
      return fixtures::triangle(p, q, r);
  }
  return std::nullopt;
}

// Source material resolved once: a Coxeter system, a plain graph, or
// both unset (error). The digest covers the literal input text.
struct Source {
  std::optional<CoxeterSystem> system;
  std::optional<BallGraph> graph;  // graph-file or rose fixture
  std::string digest_material;
};

Source load_source(const Scenario& s) {
  Source src;
  if (!s.system_file.empty()) {
    src.digest_material = read_file(s.system_file);
    src.system = parse_system(src.digest_material);
  } else if (!s.graph_file.empty()) {
    src.digest_material = read_file(s.graph_file);
    if (fs::path(s.graph_file).extension() == ".json") {
      src.graph = graph_from_json(src.digest_material);
    } else {
      std::istringstream in(src.digest_material);
      src.graph = parse_graph(in);
    }
  } else if (s.fixture == "rose") {
    src.digest_material = "fixture:rose";
    src.graph = fixtures::rose_ball(s.radius);
  } else if (auto sys = fixture_system(s.fixture)) {
    src.digest_material = "fixture:" + s.fixture;
    src.system = *sys;
  } else {
    throw Error(Errc::BadInput,
                "no source: need --system, --graph, or a known fixture");
  }
  return src;
}

// Cayley balls are cached as JSON graphs; generation dominates radius
// sweeps. Engine-backed commands regenerate (they need the elements).
BallGraph cached_ball(const Scenario& s, const Source& src) {
  if (src.graph) return *src.graph;
  std::string key = hex64(fnv1a(src.digest_material + "|" +
                                std::to_string(s.radius) + "|" + kVersion));
  fs::path dir = cache_dir(s.out_dir);
  fs::path file = dir / (key + ".json");
  if (fs::exists(file)) return graph_from_json(read_file(file.string()));
  WordEngine eng(*src.system);
  auto ball = cayley_ball(eng, s.radius);
  // create-then-rename: concurrent writers publish atomically
  fs::create_directories(dir);
  fs::path tmp = dir / (key + ".tmp." + std::to_string(::getpid()));
  write_file(tmp.string(), graph_to_json(ball.graph));
  fs::rename(tmp, file);
  return ball.graph;
}

CayleyBall need_ball(WordEngine& eng, const Scenario& s) {
  return cayley_ball(eng, s.radius);
}

const CoxeterSystem& need_system(const Source& src) {
  if (!src.system)
    throw Error(Errc::BadInput, "this command needs a Coxeter system source");
  return *src.system;
}

std::vector<GeodesicPath> seeded_prefixes(const BallGraph& g, int count,
                                          int len, std::uint64_t seed) {
  CounterRng rng(seed);
  std::vector<GeodesicPath> out;
  while (static_cast<int>(out.size()) < count) {
    GeodesicPath p{{g.root()}};
    for (int i = 0; i < len; ++i) {
      std::vector<Vertex> up;
      for (Vertex u : g.neighbors(p.back()))
        if (g.distance(g.root(), u) == g.distance(g.root(), p.back()) + 1)
          up.push_back(u);
      if (up.empty()) throw Error(Errc::DomainExceeded, "ray hit the frontier");
      p.vertices.push_back(up[rng.below(up.size())]);
    }
    out.push_back(std::move(p));
  }
  return out;
}

// Path of the prefixes of a word, validated geodesic from the root.
GeodesicPath word_ray(WordEngine& eng, const CayleyBall& ball,
                      const std::string& text) {
  Word w = parse_word(eng.system(), text);
  GeodesicPath p{{ball.graph.root()}};
  Word pre;
  for (int s : w) {
    pre.push_back(s);
    Vertex v = ball.vertex_of(eng.normal_form(pre));
    if (v < 0) throw Error(Errc::DomainExceeded, "ray leaves the ball");
    p.vertices.push_back(v);
  }
  return p;
}

std::string pair_kind_name(const PairClass& pc) {
  return pc.kind == PairClass::Transverse ? "Transverse" : "Nested";
}

struct Artifacts {
  std::vector<std::pair<std::string, std::string>> files;  // name, content
  void add(std::string name, std::string content) {
    files.emplace_back(std::move(name), std::move(content));
  }
};

Artifacts run_command(const Scenario& s, const Source& src) {
  Artifacts out;
  const std::string& fmt = s.format;
  if (fmt != "dot" && fmt != "csv" && fmt != "json")
    throw Error(Errc::UnsupportedFormat, "format " + fmt);

  if (s.command == "ball") {
    BallGraph g = cached_ball(s, src);
    out.add("ball." + fmt, fmt == "dot"    ? graph_to_dot(g)
                           : fmt == "json" ? graph_to_json(g)
                                           : graph_to_csv(g));
    return out;
  }

  if (s.command == "hyperplanes" || s.command == "pairs" ||
      s.command == "fixture-check" || s.command == "order") {
    BallGraph g = cached_ball(s, src);
    if (s.command == "fixture-check") {
      auto H = build_hyperplanes_lenient(g);
      const auto& r = H.report();
      nlohmann::ordered_json j;
      j["paraclique"] = r.paraclique;
      j["clique_gated"] = r.clique_gated;
      j["transitivity_violations"] = r.transitivity_violations;
      j["interior_transitivity_violations"] = r.interior_transitivity_violations;
      j["sector_gate_failures"] = r.sector_gate_failures;
      j["hyperplanes"] = H.count();
      if (!r.paraclique)
        throw Error(Errc::NotParaclique, "fixture fails paraclique checks");
      out.add("fixture-check.json", j.dump(2) + "\n");
      return out;
    }
    auto H = build_hyperplanes(g);
    if (s.command == "hyperplanes") {
      if (fmt == "dot") {
        out.add("hyperplanes.dot", graph_to_dot(g, H));
      } else {
        std::ostringstream csv;
        csv << "hyperplane,depth,truncated,edges,sectors\n";
        for (int h = 0; h < H.count(); ++h)
          csv << h << "," << H.distance_to_root(h) << ","
              << H.hyperplane(h).truncated << "," << H.hyperplane(h).edges.size()
              << "," << H.hyperplane(h).sectors.size() << "\n";
        out.add("hyperplanes.csv", csv.str());
      }
    } else if (s.command == "pairs") {
      std::ostringstream csv;
      csv << "h,k,kind,transversals,truncated_pair\n";
      for (int h = 0; h < H.count(); ++h)
        for (int k = h + 1; k < H.count(); ++k) {
          auto pc = classify_pair(g, H, h, k);
          auto tc = common_transversals(g, H, h, k);
          csv << h << "," << k << "," << pair_kind_name(pc) << "," << tc.count
              << "," << pc.truncated_pair << "\n";
        }
      out.add("pairs.csv", csv.str());
    } else {  // order
      std::ostringstream csv;
      csv << "x,y,leq\n";
      for (Vertex x = 0; x < g.vertex_count(); ++x)
        for (Vertex y = 0; y < g.vertex_count(); ++y)
          csv << x << "," << y << "," << leq(g, x, y) << "\n";
      out.add("order.csv", csv.str());
    }
    return out;
  }

  // engine-backed commands from here on
  WordEngine eng(need_system(src));
  auto ball = need_ball(eng, s);

  if (s.command == "certify") {
    auto H = build_hyperplanes(ball.graph);
    auto c = certify_contracting(eng, ball, H,
                                 parse_word(eng.system(), s.element));
    if (fmt == "json") {
      out.add("certify.json", certificate_to_json(c, eng.system()));
    } else {
      std::ostringstream csv;
      csv << "radius,verdict,pair_h,pair_k,transversals,max_vertex_diameter,"
             "max_far_geodesic_diameter,chain_length\n";
      csv << c.radius << "," << verdict_name(c.verdict, c.radius) << ","
          << c.pair_h << "," << c.pair_k << "," << c.pair_transversals.count
          << "," << c.profile.max_vertex_diameter << ","
          << c.profile.max_far_geodesic_diameter << "," << c.chain.size()
          << "\n";
      out.add("certify.csv", csv.str());
    }
    return out;
  }

  if (s.command == "nsdyn") {
    auto H = build_hyperplanes(ball.graph);
    auto samples =
        seeded_prefixes(ball.graph, s.samples, s.sample_length, s.seed);
    auto rep = ns_iterate(eng, ball, H, parse_word(eng.system(), s.element),
                          samples, s.iters);
    std::ostringstream csv;
    csv << "sample_id,n,agreement_radius\n";
    for (const auto& tr : rep.trajectories)
      for (std::size_t n = 0; n < tr.agreement.size(); ++n)
        csv << tr.sample_id << "," << n + 1 << "," << tr.agreement[n] << "\n";
    out.add("trajectories.csv", csv.str());
    return out;
  }

  if (s.command == "admissible") {
    std::vector<std::pair<Word, int>> word;
    for (const auto& part : s.word) {
      auto caret = part.find('^');
      int power = caret == std::string::npos
                      ? 1
                      : std::stoi(part.substr(caret + 1));
      word.push_back(
          {parse_word(eng.system(), part.substr(0, caret)), power});
    }
    std::vector<Word> cands;
    for (const auto& c : s.candidates)
      cands.push_back(parse_word(eng.system(), c));
    auto p = build_admissible_path(eng, ball, word, cands, s.L, s.tau);
    std::ostringstream csv;
    csv << "segment,connector,element,length\n";
    for (std::size_t i = 0; i < p.segments.size(); ++i)
      csv << i << "," << p.segments[i].connector << ","
          << word_to_string(eng.system(), p.segments[i].element) << ","
          << p.segments[i].vertices.size() - 1 << "\n";
    csv << "summary,quasi_constant," << p.quasi_constant << ","
        << p.fellow_travel_radius << "\n";
    out.add("admissible.csv", csv.str());
    return out;
  }

  if (s.command == "myrberg") {
    auto ray = word_ray(eng, ball, s.ray);
    if (!is_geodesic(ball.graph, ray))
      throw Error(Errc::NotGeodesic, "ray word is not geodesic");
    std::vector<std::vector<Vertex>> carriers;
    for (const auto& a : s.axes)
      carriers.push_back(
          build_axis(eng, ball, parse_word(eng.system(), a)).vertices);
    auto prof = myrberg_profile(ball.graph, ray, carriers, s.R);
    std::ostringstream csv;
    csv << "axis_id,axis,overlap,R\n";
    for (std::size_t i = 0; i < s.axes.size(); ++i)
      csv << i << "," << s.axes[i] << "," << prof.overlap[i] << "," << s.R
          << "\n";
    out.add("myrberg.csv", csv.str());
    return out;
  }

  throw Error(Errc::BadInput, "unknown command " + s.command);
}

}  // namespace

std::string cache_dir(const std::string& out_dir) {
  if (const char* env = std::getenv("WALLKIT_CACHE_DIR")) return env;
  return (fs::path(out_dir) / ".wallkit-cache").string();
}

Scenario parse_scenario(const std::string& json_text) {
  try {
    auto j = nlohmann::json::parse(json_text);
    Scenario s;
    s.command = j.at("command").get<std::string>();
    auto opt = [&](const char* key, auto& field) {
      if (j.contains(key)) field = j.at(key).get<std::decay_t<decltype(field)>>();
    };
    opt("system", s.system_file);
    opt("graph", s.graph_file);
    opt("fixture", s.fixture);
    opt("radius", s.radius);
    opt("element", s.element);
    opt("ray", s.ray);
    opt("axes", s.axes);
    opt("word", s.word);
    opt("candidates", s.candidates);
    opt("L", s.L);
    opt("tau", s.tau);
    opt("R", s.R);
    opt("samples", s.samples);
    opt("iters", s.iters);
    opt("sample_length", s.sample_length);
    opt("seed", s.seed);
    opt("out", s.out_dir);
    opt("format", s.format);
    return s;
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::UnsupportedFormat, e.what());
  }
}

std::vector<std::string> run_scenario(const Scenario& s) {
  auto start = std::chrono::steady_clock::now();
  Source src = load_source(s);

  std::uint64_t digest = fnv1a(s.command);
  digest = fnv1a(src.digest_material, digest);
  digest = fnv1a(std::to_string(s.radius) + "|" + s.element + "|" + s.ray +
                     "|" + std::to_string(s.seed),
                 digest);

  Artifacts art = run_command(s, src);

  std::vector<std::string> paths;
  for (const auto& [name, content] : art.files) {
    std::string path = (fs::path(s.out_dir) / name).string();
    write_file(path, content);
    paths.push_back(path);
  }

  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                std::chrono::steady_clock::now() - start)
                .count();
  nlohmann::ordered_json manifest;
  manifest["command"] = s.command;
  manifest["inputs_digest"] = hex64(digest);
  manifest["version"] = kVersion;
  manifest["seed"] = s.seed;
  manifest["runtime_ms"] = ms;
  std::string mpath = (fs::path(s.out_dir) / "manifest.json").string();
  write_file(mpath, manifest.dump(2) + "\n");
  paths.push_back(mpath);
  return paths;
}

std::vector<std::string> run_scenario_file(const std::string& path) {
  return run_scenario(parse_scenario(read_file(path)));
}

}  // namespace wallkit
