#pragma once

#include <stdexcept>
#include <string>

namespace clusterchar {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

/// A variable raised to a negative power was mapped to a non-monomial.
class NonInvertibleImage : public Error {
public:
    using Error::Error;
};

class NotExactlyDivisible : public Error {
public:
    using Error::Error;
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

class QuiverMismatch : public Error {
public:
    using Error::Error;
};

class InvalidQuiver : public Error {
public:
    using Error::Error;
};

class InvalidParams : public Error {
public:
    using Error::Error;
};

class DimOutOfRange : public Error {
public:
    using Error::Error;
};

class ExcludedPrime : public Error {
public:
    using Error::Error;
};

/// Held-out primes disagree with the interpolated counting polynomial.
class NonPolynomialCount : public Error {
public:
    using Error::Error;
};

class InsufficientPrimes : public Error {
public:
    using Error::Error;
};

class IdentityFailed : public Error {
public:
    using Error::Error;
};

class PreconditionViolation : public Error {
public:
    using Error::Error;
};

/// Exchange relation left a remainder. Never expected to fire.
class NonLaurentResult : public Error {
public:
    using Error::Error;
};

class UnsupportedQuiver : public Error {
public:
    using Error::Error;
};

}  // namespace clusterchar
