#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace weingarten {

enum class ErrorCode {
    DomainError,
    InvalidArgument,
    DegenerateParams,
    NoSolution,
    NonConvergence,
    RadicandNegative,
    SlopeBlowup,
    DegenerateParabolic,
    StoppedVertical,
    TooFewNodes,
    NotParabolic,
    ZeroB,
    EmptyDomain,
    GridTooCoarse,
    NotDirichlet,
    DegenerateProfile,
    ParseError,
    IoError,
};

constexpr std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::DegenerateParams: return "DegenerateParams";
    case ErrorCode::NoSolution: return "NoSolution";
    case ErrorCode::NonConvergence: return "NonConvergence";
    case ErrorCode::RadicandNegative: return "RadicandNegative";
    case ErrorCode::SlopeBlowup: return "SlopeBlowup";
    case ErrorCode::DegenerateParabolic: return "DegenerateParabolic";
    case ErrorCode::StoppedVertical: return "StoppedVertical";
    case ErrorCode::TooFewNodes: return "TooFewNodes";
    case ErrorCode::NotParabolic: return "NotParabolic";
    case ErrorCode::ZeroB: return "ZeroB";
    case ErrorCode::EmptyDomain: return "EmptyDomain";
    case ErrorCode::GridTooCoarse: return "GridTooCoarse";
    case ErrorCode::NotDirichlet: return "NotDirichlet";
    case ErrorCode::DegenerateProfile: return "DegenerateProfile";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::IoError: return "IoError";
    }
    return "Unknown";
}

/// Every failure raised by the library carries one of the codes above so that
/// callers (the CLI in particular) can map it to an exit status.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

    [[nodiscard]] ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
    throw Error(code, message);
}

inline void require(bool condition, ErrorCode code, const std::string& message) {
    if (!condition) {
        fail(code, message);
    }
}

} // namespace weingarten
