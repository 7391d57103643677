#include "wallkit/fixtures.hpp"

namespace wallkit::fixtures {

namespace {

CoxeterSystem from_labels(std::vector<std::string> names,
                          std::vector<std::tuple<int, int, int>> labels) {
  CoxeterSystem sys;
  const int n = static_cast<int>(names.size());
  sys.generators = std::move(names);
  sys.m.assign(n, std::vector<int>(n, 2));
  for (int s = 0; s < n; ++s) sys.m[s][s] = 1;
  for (auto [s, t, mm] : labels) sys.m[s][t] = sys.m[t][s] = mm;
  sys.validate();
  return sys;
}

}  // namespace

CoxeterSystem dinfty() { return from_labels({"s", "t"}, {{0, 1, kInfLabel}}); }

CoxeterSystem a2() { return from_labels({"a", "b"}, {{0, 1, 3}}); }

CoxeterSystem a3() {
  return from_labels({"a", "b", "c"}, {{0, 1, 3}, {1, 2, 3}});
}

CoxeterSystem b3() {
  return from_labels({"a", "b", "c"}, {{0, 1, 4}, {1, 2, 3}});
}

CoxeterSystem triangle(int p, int q, int r) {
  return from_labels({"a", "b", "c"}, {{0, 1, p}, {1, 2, q}, {0, 2, r}});
}

CoxeterSystem affine_a3() {
  return from_labels({"a", "b", "c", "d"},
                     {{0, 1, 3}, {1, 2, 3}, {2, 3, 3}, {0, 3, 3}});
}

CoxeterSystem racg_cycle4() {
  return racg_from_graph({"a", "b", "c", "d"},
                         {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
}

CoxeterSystem racg_path4() {
  return racg_from_graph({"a", "b", "c", "d"}, {{0, 1}, {1, 2}, {2, 3}});
}

}  // namespace wallkit::fixtures
