#ifndef TREEPLEX_ERROR_HPP
#define TREEPLEX_ERROR_HPP

#include <stdexcept>
#include <string>

namespace treeplex {

// Every failure mode of the library is identified by one of these codes.
// Functions that merely *query* validity (validate, checks) return a code;
// functions that must produce a value throw Error instead.
enum class ErrorCode {
    None = 0,
    // signature parsing
    EmptyInput,
    IllegalCharacter,
    NoOutgoingLabel,
    TooShort,
    // tree validation
    CrossingDiagonals,
    SpineMismatch,
    SinkVertex,
    BadExternalLabel,
    SignatureMismatch,
    // polygon construction
    NonConvex,
    CollinearTriple,
    // geometric maps
    NotATriangulation,
    AmbiguousFlow,
    DimensionMismatch,
    NotInLambda,
    ZeroDenominator,
    NotInSimplex,
    NotMaxExpanded,
    // counting
    NonIntegerResult,
    NegativeInput,
    RangeViolation,
    CapExceeded,
    // export
    FormatUnsupported,
    IoError,
};

inline const char* error_name(ErrorCode c) {
    switch (c) {
        case ErrorCode::None: return "None";
        case ErrorCode::EmptyInput: return "EmptyInput";
        case ErrorCode::IllegalCharacter: return "IllegalCharacter";
        case ErrorCode::NoOutgoingLabel: return "NoOutgoingLabel";
        case ErrorCode::TooShort: return "TooShort";
        case ErrorCode::CrossingDiagonals: return "CrossingDiagonals";
        case ErrorCode::SpineMismatch: return "SpineMismatch";
        case ErrorCode::SinkVertex: return "SinkVertex";
        case ErrorCode::BadExternalLabel: return "BadExternalLabel";
        case ErrorCode::SignatureMismatch: return "SignatureMismatch";
        case ErrorCode::NonConvex: return "NonConvex";
        case ErrorCode::CollinearTriple: return "CollinearTriple";
        case ErrorCode::NotATriangulation: return "NotATriangulation";
        case ErrorCode::AmbiguousFlow: return "AmbiguousFlow";
        case ErrorCode::DimensionMismatch: return "DimensionMismatch";
        case ErrorCode::NotInLambda: return "NotInLambda";
        case ErrorCode::ZeroDenominator: return "ZeroDenominator";
        case ErrorCode::NotInSimplex: return "NotInSimplex";
        case ErrorCode::NotMaxExpanded: return "NotMaxExpanded";
        case ErrorCode::NonIntegerResult: return "NonIntegerResult";
        case ErrorCode::NegativeInput: return "NegativeInput";
        case ErrorCode::RangeViolation: return "RangeViolation";
        case ErrorCode::CapExceeded: return "CapExceeded";
        case ErrorCode::FormatUnsupported: return "FormatUnsupported";
        case ErrorCode::IoError: return "IoError";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code) {}

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

} // namespace treeplex

#endif
