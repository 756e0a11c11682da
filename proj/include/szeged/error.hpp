#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace szeged {

enum class ErrorCode {
    SelfLoop,
    DuplicateEdge,
    IdOutOfRange,
    NegativeWeight,
    Disconnected,
    NotATree,
    NotAPartitionOfClasses,
    NotEdgePartition,
    SplitsThetaClass,
    GroupNotSubsetOfEdges,
    DivisionByZero,
    SymmetryViolation,
    SyntaxError,
    UnknownIdentifier,
    UnknownIndex,
    DisconnectedCells,
    HasHole,
    NotCatacondensed,
    InvalidDocument,
};

std::string_view to_string(ErrorCode code);

/// Disconnected input and non-tree input to the tree method are structural
/// problems with the graph; everything else is a validation failure.
bool is_structural(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

/// Parse failure inside a regular-function expression; `position` is the
/// zero-based byte offset into the source string.
class SyntaxError : public Error {
public:
    SyntaxError(std::size_t position, const std::string& message)
        : Error(ErrorCode::SyntaxError, "at position " + std::to_string(position) + ": " + message),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

}  // namespace szeged
