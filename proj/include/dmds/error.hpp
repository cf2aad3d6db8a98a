#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace dmds {

/// Stable diagnostic codes. The CLI prints these names verbatim, so do not
/// rename existing entries.
enum class Errc {
    NotPrime,
    NotMonic,
    Reducible,
    Unsupported,
    DivisionByZero,
    MixedContexts,
    ZeroElement,
    NoSuchRoot,
    IndexOutOfRange,
    DuplicateIndex,
    LengthMismatch,
    CharDividesOrder,
    EvenN,
    RootUnavailable,
    SingularTransform,
    InvalidRowSpec,
    BadOrder,
    BetaIsNthRoot,
    NotCoprime,
    CapExceeded,
    UnsupportedStyle,
    EmptyCode,
    Parse,
    InvalidArgument,
};

std::string_view errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

}  // namespace dmds
