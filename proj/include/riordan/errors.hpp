#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace riordan {

enum class Errc {
    DoublePole,
    InexactWindow,
    NonformalComposition,
    NotInvertible,
    NonSquareConstantTerm,
    OutOfWindow,
    WindowTooSmall,
    LaurentRealization,
    MismatchedF,
    NotProper,
    ResidualPole,
    UnknownTail,
    DimensionMismatch,
    NotInvolution,
    NotPseudoInvolution,
    NotAppellForm,
    NotMinusOneAppell,
    NonpositiveDiagonal,
    SyntaxError,
    UnknownName,
    InvalidArgument,
};

std::string_view errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

} // namespace riordan
