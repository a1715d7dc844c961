#pragma once

#include <stdexcept>
#include <string>

namespace nbres {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// graph construction / generation
struct NotRegularError : Error { using Error::Error; };
struct HasLoopError : Error { using Error::Error; };
struct HasMultiEdgeError : Error { using Error::Error; };
struct DisconnectedError : Error { using Error::Error; };
struct UnknownNameError : Error { using Error::Error; };
struct ParamOutOfRangeError : Error { using Error::Error; };
struct ParityViolationError : Error { using Error::Error; };
struct GenerationTimeoutError : Error { using Error::Error; };

// shift space / pairings
struct OrientationMismatchError : Error { using Error::Error; };
struct GraphMismatchError : Error { using Error::Error; };

// spectra
struct ConvergenceFailureError : Error { using Error::Error; };
struct NotAResonanceError : Error { using Error::Error; };

// pairing formula
struct ZeroEigenvalueError : Error { using Error::Error; };
struct PoleAtZSquaredOneError : Error { using Error::Error; };
struct EigenResidualTooLargeError : Error { using Error::Error; };

// tree cover
struct DepthTooSmallError : Error { using Error::Error; };
struct InvalidTargetError : Error { using Error::Error; };
struct GeodesicLeavesTruncationError : Error { using Error::Error; };
struct InsideSnError : Error { using Error::Error; };

// io
struct IoError : Error { using Error::Error; };
struct FormatError : Error { using Error::Error; };

} // namespace nbres
