#pragma once

#include <stdexcept>
#include <string>

namespace dsbo {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Gamma ratio with a genuine pole.
struct PoleError : Error {
    using Error::Error;
};

// Input outside an operation's domain (bad parity, out-of-range index, ...).
struct DomainError : Error {
    using Error::Error;
};

struct ParseError : Error {
    using Error::Error;
};

// |m| <= N.
struct UnsupportedRegime : Error {
    UnsupportedRegime() : Error("regime |m| ≤ N unsupported") {}
};

// Requested a generator or operator where the solution space is zero.
struct EmptySolutionSpace : Error {
    using Error::Error;
};

}  // namespace dsbo
