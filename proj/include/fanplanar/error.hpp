#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace fanplanar {

enum class ErrorCode {
    Degeneracy,
    Format,
    DuplicateId,
    UnknownVertex,
    MalformedRational,
    Precondition,
    CapExceeded,
    TooLarge,
    NotChordless,
    NoSharedEndpoint,
    StructureViolation,
    NoGroundEdge,
    KeyLemmaViolation,
    OddCycleSurvives,
    NotFanPlanar,
    MissingEdge,
    KTooSmall,
    UnknownName,
    Io,
};

constexpr std::string_view to_string(ErrorCode code) {
    switch (code) {
    case ErrorCode::Degeneracy: return "DEGENERACY";
    case ErrorCode::Format: return "FORMAT";
    case ErrorCode::DuplicateId: return "DUPLICATE_ID";
    case ErrorCode::UnknownVertex: return "UNKNOWN_VERTEX";
    case ErrorCode::MalformedRational: return "MALFORMED_RATIONAL";
    case ErrorCode::Precondition: return "PRECONDITION";
    case ErrorCode::CapExceeded: return "CAP_EXCEEDED";
    case ErrorCode::TooLarge: return "TOO_LARGE";
    case ErrorCode::NotChordless: return "NOT_CHORDLESS";
    case ErrorCode::NoSharedEndpoint: return "NO_SHARED_ENDPOINT";
    case ErrorCode::StructureViolation: return "STRUCTURE_VIOLATION";
    case ErrorCode::NoGroundEdge: return "NO_GROUND_EDGE";
    case ErrorCode::KeyLemmaViolation: return "KEY_LEMMA_VIOLATION";
    case ErrorCode::OddCycleSurvives: return "ODD_CYCLE_SURVIVES";
    case ErrorCode::NotFanPlanar: return "NOT_FAN_PLANAR";
    case ErrorCode::MissingEdge: return "MISSING_EDGE";
    case ErrorCode::KTooSmall: return "K_TOO_SMALL";
    case ErrorCode::UnknownName: return "UNKNOWN_NAME";
    case ErrorCode::Io: return "IO";
    }
    return "UNKNOWN";
}

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

} // namespace fanplanar
