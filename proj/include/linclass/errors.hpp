#pragma once

#include <stdexcept>
#include <string>

namespace linclass {

// Base class for everything this library throws on purpose.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class NonFiniteValue : public Error {
public:
    using Error::Error;
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

class NotSymmetric : public Error {
public:
    using Error::Error;
};

// Pivot fell below tolerance: the matrix is not (numerically) positive
// definite, i.e. the design matrix columns are linearly dependent.
class NotPositiveDefinite : public Error {
public:
    using Error::Error;
};

class RankDeficient : public Error {
public:
    using Error::Error;
};

class NonPositiveGamma : public Error {
public:
    using Error::Error;
};

class DegreeZero : public Error {
public:
    using Error::Error;
};

class NegativeFeature : public Error {
public:
    using Error::Error;
};

class OutOfRange : public Error {
public:
    using Error::Error;
};

class BracketInvalid : public Error {
public:
    using Error::Error;
};

class DegenerateIterate : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

class MissingColumn : public Error {
public:
    using Error::Error;
};

class EmptyGrid : public Error {
public:
    using Error::Error;
};

}  // namespace linclass
