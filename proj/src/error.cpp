#include "sigcol/error.hpp"

namespace sigcol {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::LoopEdge: return "LoopEdge";
    case ErrorKind::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorKind::DuplicateEdge: return "DuplicateEdge";
    case ErrorKind::BadSizeField: return "BadSizeField";
    case ErrorKind::TruncatedRecord: return "TruncatedRecord";
    case ErrorKind::NonCanonicalByte: return "NonCanonicalByte";
    case ErrorKind::FormatError: return "FormatError";
    case ErrorKind::MissingHeader: return "MissingHeader";
    case ErrorKind::AsymmetricAdjacency: return "AsymmetricAdjacency";
    case ErrorKind::UnsupportedSize: return "UnsupportedSize";
    case ErrorKind::GraphMismatch: return "GraphMismatch";
    case ErrorKind::InvalidK: return "InvalidK";
    case ErrorKind::PartialAssignment: return "PartialAssignment";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::AmbiguousModel: return "AmbiguousModel";
    case ErrorKind::MissingList: return "MissingList";
    case ErrorKind::InvalidList: return "InvalidList";
    case ErrorKind::WrongColourSet: return "WrongColourSet";
    case ErrorKind::WitnessFailure: return "WitnessFailure";
    case ErrorKind::MissingCertificate: return "MissingCertificate";
    case ErrorKind::TooManyClasses: return "TooManyClasses";
    case ErrorKind::Io: return "Io";
    }
    return "Unknown";
}

}  // namespace sigcol
