#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "wallkit/error.hpp"

namespace wallkit {

inline constexpr const char* kVersion = "0.1.0";

/// One runnable unit: a source (system file, graph file, or named
/// fixture), a command, parameters, a seed, and an output directory.
/// The seed fully determines any sampling.
struct Scenario {
  std::string command;  // ball | hyperplanes | pairs | order | certify |
                        // admissible | nsdyn | myrberg | fixture-check
  std::string system_file;
  std::string graph_file;
  std::string fixture;  // dinfty | a2 | a3 | b3 | grid | path4 | rose |
                        // triangle-p-q-r
  int radius = 4;
  std::string element;
  std::string ray;
  std::vector<std::string> axes;        // myrberg
  std::vector<std::string> word;        // admissible, "element^power"
  std::vector<std::string> candidates;  // admissible connectors
  int L = 1;
  int tau = 2;
  int R = 0;
  int samples = 50;
  int iters = 6;
  int sample_length = 3;
  std::uint64_t seed = 0;
  std::string out_dir = ".";
  std::string format = "csv";  // dot | csv | json
};

Scenario parse_scenario(const std::string& json_text);

/// Runs the scenario, writes the artifacts plus manifest.json (inputs
/// digest, version, seed, runtime) into out_dir, and returns the
/// artifact paths. Throws Error on failure; Error::exit_code() maps to
/// the CLI exit codes.
std::vector<std::string> run_scenario(const Scenario& s);

std::vector<std::string> run_scenario_file(const std::string& path);

/// Ball cache location: WALLKIT_CACHE_DIR, or <out_dir>/.wallkit-cache.
std::string cache_dir(const std::string& out_dir);

}  // namespace wallkit
