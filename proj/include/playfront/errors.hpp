#pragma once

#include <stdexcept>
#include <string>

namespace playfront {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InfeasibleInitialState : Error { using Error::Error; };
struct InfeasibleState        : Error { using Error::Error; };
struct InfeasibleData         : Error { using Error::Error; };
struct MismatchedBreakpoints  : Error { using Error::Error; };
struct DomainError            : Error { using Error::Error; };
struct DegenerateData         : Error { using Error::Error; };
struct DegenerateJump         : Error { using Error::Error; };
struct NonAdmissiblePair      : Error { using Error::Error; };
struct StaleEvent             : Error { using Error::Error; };
struct WindowMismatch         : Error { using Error::Error; };
struct UnboundedSupport       : Error { using Error::Error; };
struct SpecParseError         : Error { using Error::Error; };

}  // namespace playfront
