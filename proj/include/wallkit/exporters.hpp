#pragma once

#include <string>

#include "wallkit/dynamics.hpp"
#include "wallkit/walls.hpp"

namespace wallkit {

/// DOT graph; with hyperplanes, edges are colored by wall class.
std::string graph_to_dot(const BallGraph& g);
std::string graph_to_dot(const BallGraph& g, const WallComplex& H);

/// JSON graph format, also used by the ball cache. Round trips exactly
/// (labels, edges, root, radius); key order is stable.
std::string graph_to_json(const BallGraph& g);
BallGraph graph_from_json(const std::string& text);

/// Edge-list CSV: header `u,v,label_u,label_v`.
std::string graph_to_csv(const BallGraph& g);

/// Structured certification report; load/save round trips byte for
/// byte. The verdict is spelled radius-indexed: CertifiedToRadius(N),
/// RefutedToRadius(N), InconclusiveAtRadius(N).
std::string certificate_to_json(const ContractingCertificate& c,
                                const CoxeterSystem& sys);
std::string certificate_json_reprint(const std::string& text);

std::string verdict_name(Verdict v, int radius);

}  // namespace wallkit
