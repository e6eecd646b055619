#include "dstar/error.hpp"

namespace dstar {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotAssociative: return "NotAssociative";
    case ErrorKind::NotUnital: return "NotUnital";
    case ErrorKind::NotLocalBlock: return "NotLocalBlock";
    case ErrorKind::RankedBasisViolation: return "RankedBasisViolation";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::UnknownBuiltin: return "UnknownBuiltin";
    case ErrorKind::AlgebraMismatch: return "AlgebraMismatch";
    case ErrorKind::ConstantPolynomial: return "ConstantPolynomial";
    case ErrorKind::ConstantDivisor: return "ConstantDivisor";
    case ErrorKind::DuplicateLeaders: return "DuplicateLeaders";
    case ErrorKind::NotAutoreduced: return "NotAutoreduced";
    case ErrorKind::InconsistentSystem: return "InconsistentSystem";
    case ErrorKind::SeparantDegenerate: return "SeparantDegenerate";
    case ErrorKind::BadWitness: return "BadWitness";
    case ErrorKind::InvalidRanking: return "InvalidRanking";
    case ErrorKind::WrongAlgebra: return "WrongAlgebra";
    case ErrorKind::SchemaError: return "SchemaError";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::RoundLimit: return "RoundLimit";
  }
  return "Unknown";
}

}  // namespace dstar
