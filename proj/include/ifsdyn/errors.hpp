#pragma once

#include <stdexcept>
#include <string>

namespace ifsdyn {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Argument outside the mathematical domain of an operation.
struct DomainError : Error {
    using Error::Error;
};

// Value outside the range of an inverse map.
struct RangeError : Error {
    using Error::Error;
};

// Moebius denominator c*x+d vanishes somewhere on [0,1].
struct SingularError : Error {
    using Error::Error;
};

// Mask point outside the open overlap interval (f1(0), f0(1)).
struct MaskRangeError : Error {
    using Error::Error;
};

// Critical itineraries too short for the requested word length.
struct DepthError : Error {
    using Error::Error;
};

struct LengthMismatch : Error {
    using Error::Error;
};

struct VariantMismatch : Error {
    using Error::Error;
};

struct DimensionError : Error {
    using Error::Error;
};

struct InsufficientData : Error {
    using Error::Error;
};

struct NotCertified : Error {
    using Error::Error;
};

struct ParseError : Error {
    using Error::Error;
};

struct IoError : Error {
    using Error::Error;
};

}  // namespace ifsdyn
