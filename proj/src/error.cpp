#include "dmds/error.hpp"

namespace dmds {

std::string_view errc_name(Errc code) noexcept {
    switch (code) {
        case Errc::NotPrime: return "NotPrime";
        case Errc::NotMonic: return "NotMonic";
        case Errc::Reducible: return "Reducible";
        case Errc::Unsupported: return "Unsupported";
        case Errc::DivisionByZero: return "DivisionByZero";
        case Errc::MixedContexts: return "MixedContexts";
        case Errc::ZeroElement: return "ZeroElement";
        case Errc::NoSuchRoot: return "NoSuchRoot";
        case Errc::IndexOutOfRange: return "IndexOutOfRange";
        case Errc::DuplicateIndex: return "DuplicateIndex";
        case Errc::LengthMismatch: return "LengthMismatch";
        case Errc::CharDividesOrder: return "CharDividesOrder";
        case Errc::EvenN: return "EvenN";
        case Errc::RootUnavailable: return "RootUnavailable";
        case Errc::SingularTransform: return "SingularTransform";
        case Errc::InvalidRowSpec: return "InvalidRowSpec";
        case Errc::BadOrder: return "BadOrder";
        case Errc::BetaIsNthRoot: return "BetaIsNthRoot";
        case Errc::NotCoprime: return "NotCoprime";
        case Errc::CapExceeded: return "CapExceeded";
        case Errc::UnsupportedStyle: return "UnsupportedStyle";
        case Errc::EmptyCode: return "EmptyCode";
        case Errc::Parse: return "Parse";
        case Errc::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

}  // namespace dmds
