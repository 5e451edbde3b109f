#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace iet3 {

enum class Errc {
    DegenerateField,
    FieldMismatch,
    NotInLattice,
    PerfectSquare,
    DivisionByZero,
    RationalSlope,
    OutOfDomain,
    InvalidSpec,
    InvalidWindow,
    DangerousEta,
    UnknownLetter,
    StraddlesDiscontinuity,
    StepBudgetExceeded,
    NotApplicable,
    SynthesisFailed,
    ParseError,
};

constexpr std::string_view errc_name(Errc code) noexcept {
    switch (code) {
        case Errc::DegenerateField: return "DegenerateField";
        case Errc::FieldMismatch: return "FieldMismatch";
        case Errc::NotInLattice: return "NotInLattice";
        case Errc::PerfectSquare: return "PerfectSquare";
        case Errc::DivisionByZero: return "DivisionByZero";
        case Errc::RationalSlope: return "RationalSlope";
        case Errc::OutOfDomain: return "OutOfDomain";
        case Errc::InvalidSpec: return "InvalidSpec";
        case Errc::InvalidWindow: return "InvalidWindow";
        case Errc::DangerousEta: return "DangerousEta";
        case Errc::UnknownLetter: return "UnknownLetter";
        case Errc::StraddlesDiscontinuity: return "StraddlesDiscontinuity";
        case Errc::StepBudgetExceeded: return "StepBudgetExceeded";
        case Errc::NotApplicable: return "NotApplicable";
        case Errc::SynthesisFailed: return "SynthesisFailed";
        case Errc::ParseError: return "ParseError";
    }
    return "Unknown";
}

/// Every failure raised by the library carries one of the codes above; the
/// message names the violated precondition.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

}  // namespace iet3
