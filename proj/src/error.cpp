#include "szeged/error.hpp"

namespace szeged {

std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::SelfLoop: return "SelfLoop";
        case ErrorCode::DuplicateEdge: return "DuplicateEdge";
        case ErrorCode::IdOutOfRange: return "IdOutOfRange";
        case ErrorCode::NegativeWeight: return "NegativeWeight";
        case ErrorCode::Disconnected: return "Disconnected";
        case ErrorCode::NotATree: return "NotATree";
        case ErrorCode::NotAPartitionOfClasses: return "NotAPartitionOfClasses";
        case ErrorCode::NotEdgePartition: return "NotEdgePartition";
        case ErrorCode::SplitsThetaClass: return "SplitsThetaClass";
        case ErrorCode::GroupNotSubsetOfEdges: return "GroupNotSubsetOfEdges";
        case ErrorCode::DivisionByZero: return "DivisionByZero";
        case ErrorCode::SymmetryViolation: return "SymmetryViolation";
        case ErrorCode::SyntaxError: return "SyntaxError";
        case ErrorCode::UnknownIdentifier: return "UnknownIdentifier";
        case ErrorCode::UnknownIndex: return "UnknownIndex";
        case ErrorCode::DisconnectedCells: return "DisconnectedCells";
        case ErrorCode::HasHole: return "HasHole";
        case ErrorCode::NotCatacondensed: return "NotCatacondensed";
        case ErrorCode::InvalidDocument: return "InvalidDocument";
    }
    return "Unknown";
}

bool is_structural(ErrorCode code) {
    return code == ErrorCode::Disconnected || code == ErrorCode::NotATree;
}

}  // namespace szeged
