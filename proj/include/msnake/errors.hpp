#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace msnake {

// Base class for every error raised by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// polyarith
struct NotDivisible : Error {
    using Error::Error;
};
struct DivisionByZero : Error {
    using Error::Error;
};

// words
struct MalformedWord : Error {
    using Error::Error;
};

// snake / matchings
struct IndexOutOfRange : Error {
    using Error::Error;
};
struct UnknownEdge : Error {
    using Error::Error;
};
struct NotPerfect : Error {
    using Error::Error;
};
struct CapExceeded : Error {
    std::uint64_t count;
    explicit CapExceeded(std::uint64_t n)
        : Error("matching cap exceeded; " + std::to_string(n) + " matchings found so far"),
          count(n) {}
};

// constructor
struct AlreadySwapped : Error {
    using Error::Error;
};
struct NoSuchRegion : Error {
    using Error::Error;
};
struct DescentExhausted : Error {
    using Error::Error;
};
struct EndOfDiagonal : Error {
    using Error::Error;
};
struct PointOutsidePolygon : Error {
    using Error::Error;
};

// newton
struct NoSuchDiagonal : Error {
    using Error::Error;
};

}  // namespace msnake
