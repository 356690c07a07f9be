#pragma once

#include <stdexcept>
#include <string>

namespace photospin {

/// Base class for all domain errors thrown by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DuplicateLabelError : Error { using Error::Error; };
struct UnknownLabelError : Error { using Error::Error; };
struct LabelMismatchError : Error { using Error::Error; };
struct EmptyRemainderError : Error { using Error::Error; };
struct NonPureTargetError : Error { using Error::Error; };
struct InvalidStateError : Error { using Error::Error; };
struct InvalidChannelError : Error { using Error::Error; };
struct UnsortedSequenceError : Error { using Error::Error; };
struct InvalidEfficiencyError : Error { using Error::Error; };
struct InvalidParameterError : Error { using Error::Error; };
struct ConfigParseError : Error { using Error::Error; };
struct IoError : Error { using Error::Error; };

} // namespace photospin
