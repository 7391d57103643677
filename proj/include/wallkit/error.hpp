#pragma once

#include <stdexcept>
#include <string>

namespace wallkit {

enum class Errc {
  InvalidVertex,
  NotGated,
  NotAWalk,
  NotGeodesic,
  NotFromRoot,
  NotParaclique,
  NoMeet,
  BadDiagonal,
  Asymmetric,
  BadLabel,
  BraidClosureOverflow,
  BallTooLarge,
  FiniteOrderElement,
  AllCandidatesRejected,
  DomainExceeded,
  TruncatedPair,
  PrecisionExhausted,
  InternalInconsistency,
  UnsupportedFormat,
  BadInput,
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::InvalidVertex: return "InvalidVertex";
    case Errc::NotGated: return "NotGated";
    case Errc::NotAWalk: return "NotAWalk";
    case Errc::NotGeodesic: return "NotGeodesic";
    case Errc::NotFromRoot: return "NotFromRoot";
    case Errc::NotParaclique: return "NotParaclique";
    case Errc::NoMeet: return "NoMeet";
    case Errc::BadDiagonal: return "BadDiagonal";
    case Errc::Asymmetric: return "Asymmetric";
    case Errc::BadLabel: return "BadLabel";
    case Errc::BraidClosureOverflow: return "BraidClosureOverflow";
    case Errc::BallTooLarge: return "BallTooLarge";
    case Errc::FiniteOrderElement: return "FiniteOrderElement";
    case Errc::AllCandidatesRejected: return "AllCandidatesRejected";
    case Errc::DomainExceeded: return "DomainExceeded";
    case Errc::TruncatedPair: return "TruncatedPair";
    case Errc::PrecisionExhausted: return "PrecisionExhausted";
    case Errc::InternalInconsistency: return "InternalInconsistency";
    case Errc::UnsupportedFormat: return "UnsupportedFormat";
    case Errc::BadInput: return "BadInput";
  }
  return "Unknown";
}

/// Library-wide error type. `code()` maps onto the CLI exit codes:
/// validation errors exit 2, budget overruns exit 3, internal
/// inconsistencies exit 4.
class Error : public std::runtime_error {
 public:
  Error(Errc code, std::string msg)
      : std::runtime_error(std::string(errc_name(code)) + ": " + msg),
        code_(code) {}
  Errc code() const { return code_; }

  int exit_code() const {
    switch (code_) {
      case Errc::BraidClosureOverflow:
      case Errc::BallTooLarge:
        return 3;
      case Errc::InternalInconsistency:
        return 4;
      default:
        return 2;
    }
  }

 private:
  Errc code_;
};

}  // namespace wallkit
