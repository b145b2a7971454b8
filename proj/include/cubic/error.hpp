#pragma once

#include <stdexcept>
#include <string>

namespace cubic {

enum class ErrorKind {
    SelfLoop,
    DuplicateEdge,
    VertexOutOfRange,
    TooManyVertices,
    NotConnected,
    NotCubic,
    NotLadderBridge,
    PreconditionViolated,
    ParameterOutOfRange,
    CyclomaticTooLarge,
    EdgeCountTooLarge,
    NotDivisible,
    NonIntegerResult,
    MalformedInput,
};

inline const char* to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::SelfLoop: return "SelfLoop";
        case ErrorKind::DuplicateEdge: return "DuplicateEdge";
        case ErrorKind::VertexOutOfRange: return "VertexOutOfRange";
        case ErrorKind::TooManyVertices: return "TooManyVertices";
        case ErrorKind::NotConnected: return "NotConnected";
        case ErrorKind::NotCubic: return "NotCubic";
        case ErrorKind::NotLadderBridge: return "NotLadderBridge";
        case ErrorKind::PreconditionViolated: return "PreconditionViolated";
        case ErrorKind::ParameterOutOfRange: return "ParameterOutOfRange";
        case ErrorKind::CyclomaticTooLarge: return "CyclomaticTooLarge";
        case ErrorKind::EdgeCountTooLarge: return "EdgeCountTooLarge";
        case ErrorKind::NotDivisible: return "NotDivisible";
        case ErrorKind::NonIntegerResult: return "NonIntegerResult";
        case ErrorKind::MalformedInput: return "MalformedInput";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

  private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
    throw Error(kind, message);
}

}  // namespace cubic
