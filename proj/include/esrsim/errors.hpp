#pragma once

#include <stdexcept>
#include <string>

namespace esrsim {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Evaluation point coincides (within guard radius) with a current-carrying line.
struct SingularPoint : Error {
    using Error::Error;
};

struct EmptyInput : Error {
    using Error::Error;
};

struct AllZero : Error {
    using Error::Error;
};

struct BadDiscretization : Error {
    using Error::Error;
};

struct BeamIntersectsSample : Error {
    using Error::Error;
};

struct StepTooLarge : Error {
    using Error::Error;
};

struct QuasiStaticViolation : Error {
    using Error::Error;
};

struct NoConvergence : Error {
    using Error::Error;
};

struct DegenerateData : Error {
    using Error::Error;
};

struct BothZero : Error {
    using Error::Error;
};

// Config file could not be read or tokenized; message carries line/field context.
struct ParseError : Error {
    using Error::Error;
};

// A structurally valid config violates a domain invariant; message names the field.
struct ValidationError : Error {
    using Error::Error;
};

}  // namespace esrsim
