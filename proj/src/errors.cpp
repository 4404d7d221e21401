#include "ttkh/errors.hpp"

namespace ttkh {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::MalformedToken: return "MalformedToken";
    case ErrorKind::EdgeDegree: return "EdgeDegree";
    case ErrorKind::NonSpherical: return "NonSpherical";
    case ErrorKind::InconsistentOrientation: return "InconsistentOrientation";
    case ErrorKind::SplitInput: return "SplitInput";
    case ErrorKind::NotBipartite: return "NotBipartite";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::ZeroDenominator: return "ZeroDenominator";
    case ErrorKind::NotInvertible: return "NotInvertible";
    case ErrorKind::DegenerateCrossing: return "DegenerateCrossing";
    case ErrorKind::TooLarge: return "TooLarge";
  }
  return "Unknown";
}

}  // namespace ttkh
