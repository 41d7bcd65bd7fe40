#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace wco {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Parse failure; offset is the byte position in the source text.
struct SyntaxError : Error {
    std::size_t offset;
    SyntaxError(const std::string& msg, std::size_t off)
        : Error(msg + " (at offset " + std::to_string(off) + ")"), offset(off) {}
};

struct DivisionByZeroStructure : Error {
    using Error::Error;
};

struct PoleOnDomain : Error {
    using Error::Error;
};

struct AnchorNotInterior : Error {
    using Error::Error;
};

struct NotFixedPoint : Error {
    using Error::Error;
};

struct NoConvergence : Error {
    using Error::Error;
};

struct UnsupportedRepresentation : Error {
    using Error::Error;
};

struct HypothesisUnmet : Error {
    using Error::Error;
};

struct PreconditionViolation : Error {
    using Error::Error;
};

}  // namespace wco
