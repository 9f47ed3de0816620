#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace sigcol {

enum class ErrorKind {
    LoopEdge,
    VertexOutOfRange,
    DuplicateEdge,
    BadSizeField,
    TruncatedRecord,
    NonCanonicalByte,
    FormatError,
    MissingHeader,
    AsymmetricAdjacency,
    UnsupportedSize,
    GraphMismatch,
    InvalidK,
    PartialAssignment,
    BudgetExceeded,
    AmbiguousModel,
    MissingList,
    InvalidList,
    WrongColourSet,
    WitnessFailure,
    MissingCertificate,
    TooManyClasses,
    Io,
};

std::string_view to_string(ErrorKind kind);

/// All toolkit failures are reported through this type; `kind()` is stable
/// and printed by the CLI as the machine-readable part of a diagnostic.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace sigcol
