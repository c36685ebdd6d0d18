#pragma once

#include <stdexcept>
#include <string>

namespace obstruct {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidInput : public Error {
public:
    using Error::Error;
};

class NotASimplex : public Error {
public:
    using Error::Error;
};

class NotASubcomplex : public Error {
public:
    using Error::Error;
};

class JoinOverlap : public Error {
public:
    using Error::Error;
};

/// Raised when an operation would have to enumerate simplices of a flag
/// complex above the dimension ceiling it was given.
class EnumerationRefused : public Error {
public:
    using Error::Error;
};

class EmptyComplex : public Error {
public:
    using Error::Error;
};

class GluingMismatch : public Error {
public:
    using Error::Error;
};

class CoverError : public Error {
public:
    using Error::Error;
};

}  // namespace obstruct
