#pragma once

#include <stdexcept>
#include <string>

namespace treelike {

enum class ErrorCode {
    Parse,
    SelfLoop,
    Disconnected,
    Empty,
    InvalidArgument,
    NotShortestPathTree,
    NotATree,
    DiameterOverflow,
    TreeMismatch,
    ApproxViolation,
    TooLarge,
    PreprocessRequired,
};

inline const char* to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::Parse: return "Parse";
        case ErrorCode::SelfLoop: return "SelfLoop";
        case ErrorCode::Disconnected: return "Disconnected";
        case ErrorCode::Empty: return "Empty";
        case ErrorCode::InvalidArgument: return "InvalidArgument";
        case ErrorCode::NotShortestPathTree: return "NotShortestPathTree";
        case ErrorCode::NotATree: return "NotATree";
        case ErrorCode::DiameterOverflow: return "DiameterOverflow";
        case ErrorCode::TreeMismatch: return "TreeMismatch";
        case ErrorCode::ApproxViolation: return "ApproxViolation";
        case ErrorCode::TooLarge: return "TooLarge";
        case ErrorCode::PreprocessRequired: return "PreprocessRequired";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace treelike
