#pragma once

#include <stdexcept>
#include <string>

namespace hurwitz {

// Base class for every domain error raised by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// A constructor argument breaks a representation invariant (order < 2,
// zero branch exponent, exponent sum not divisible by n, ...).
class InvalidDatum : public Error {
    using Error::Error;
};

// A multiplier that must lie in (Z/nZ)^* is not coprime to n.
class NotAUnit : public Error {
    using Error::Error;
};

// The Riemann-Hurwitz right-hand side is odd. Valid data can never
// produce this; it signals an internal inconsistency.
class NonIntegralGenus : public Error {
    using Error::Error;
};

// The Riemann-Hurwitz genus came out negative: no curve carries the datum.
class NegativeGenus : public Error {
    using Error::Error;
};

// Some marking count exceeds the number of branch points of its class.
class InvalidMarking : public Error {
    using Error::Error;
};

// An exponent list with no entries pins nothing; reported explicitly so a
// caller cannot mistake an etale cover for one with determined exponent.
class EmptyInertia : public Error {
    using Error::Error;
};

// Internal inconsistency: an Euler characteristic came out odd.
class OddEulerCharacteristic : public Error {
    using Error::Error;
};

// The requested (g, m) violates 2g - 2 + m > 0.
class NotHyperbolic : public Error {
    using Error::Error;
};

// A cross-check that must hold by construction failed.
class ConsistencyFailure : public Error {
    using Error::Error;
};

} // namespace hurwitz
