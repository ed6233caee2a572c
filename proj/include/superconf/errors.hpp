#pragma once

#include <stdexcept>
#include <string>

namespace superconf {

/// Root of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Operands live over different generator counts, or a requested L is out of range.
class DimensionError : public Error {
public:
    using Error::Error;
};

class NotInvertible : public Error {
public:
    using Error::Error;
};

/// Evaluation hit a point where the denominator body vanishes.
class PoleAtPoint : public Error {
public:
    using Error::Error;
};

/// A substituted denominator has identically vanishing body.
class SingularComposition : public Error {
public:
    using Error::Error;
};

class NotSuperconformal : public Error {
public:
    using Error::Error;
};

class NotInvertibleComponent : public Error {
public:
    using Error::Error;
};

class InvalidParams : public Error {
public:
    using Error::Error;
};

/// A superconformal map does not have the shape of the automorphism family for its n.
class NotInFamily : public Error {
public:
    using Error::Error;
};

class ParityError : public Error {
public:
    using Error::Error;
};

/// Semidirect-product element tagged with the wrong component.
class MembershipError : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

class UsageError : public Error {
public:
    using Error::Error;
};

}  // namespace superconf
