#include <CLI11.hpp>
#include <cstdio>
#include <json.hpp>

#include "wallkit/scenario.hpp"

using namespace wallkit;

int main(int argc, char** argv) {
  CLI::App app{"wallkit: hyperplane geometry and boundary dynamics on finite balls"};
  app.require_subcommand(1);

  Scenario s;
  std::string scenario_file;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--system", s.system_file, "Coxeter system JSON file");
    cmd->add_option("--graph", s.graph_file, "graph file (text or .json)");
    cmd->add_option("--fixture", s.fixture,
                    "named fixture (dinfty, grid, rose, triangle-p-q-r, ...)");
    cmd->add_option("--radius", s.radius, "ball radius");
    cmd->add_option("--seed", s.seed, "sampling seed");
    cmd->add_option("--out", s.out_dir, "output directory");
    cmd->add_option("--format", s.format, "dot | csv | json");
  };

  for (const char* name : {"ball", "hyperplanes", "pairs", "order",
                           "fixture-check"})
    add_common(app.add_subcommand(name));

  auto* certify = app.add_subcommand("certify");
  add_common(certify);
  certify->add_option("--element", s.element)->required();

  auto* nsdyn = app.add_subcommand("nsdyn");
  add_common(nsdyn);
  nsdyn->add_option("--element", s.element)->required();
  nsdyn->add_option("--samples", s.samples);
  nsdyn->add_option("--iters", s.iters);
  nsdyn->add_option("--sample-length", s.sample_length);

  auto* admissible = app.add_subcommand("admissible");
  add_common(admissible);
  admissible->add_option("--word", s.word, "segments as element^power")
      ->required();
  admissible->add_option("--candidates", s.candidates, "connector words");
  admissible->add_option("--L", s.L);
  admissible->add_option("--tau", s.tau);

  auto* myrberg = app.add_subcommand("myrberg");
  add_common(myrberg);
  myrberg->add_option("--ray", s.ray)->required();
  myrberg->add_option("--axes", s.axes)->required();
  myrberg->add_option("--R", s.R);

  auto* run = app.add_subcommand("run", "run a scenario file");
  run->add_option("file", scenario_file)->required();

  CLI11_PARSE(app, argc, argv);

  try {
    auto* sub = app.get_subcommands().front();
    auto paths = sub->get_name() == "run"
                     ? run_scenario_file(scenario_file)
                     : (s.command = sub->get_name(), run_scenario(s));
    for (const auto& p : paths) printf("%s\n", p.c_str());
    return 0;
  } catch (const Error& e) {
    nlohmann::ordered_json rec;
    rec["code"] = errc_name(e.code());
    rec["module"] = "wallkit";
    rec["message"] = e.what();
    fprintf(stderr, "%s\n", rec.dump().c_str());
    return e.exit_code();
  } catch (const std::exception& e) {
    fprintf(stderr, "{\"code\":\"Unknown\",\"message\":\"%s\"}\n", e.what());
    return 4;
  }
}
