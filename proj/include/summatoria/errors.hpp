#pragma once

#include <stdexcept>
#include <string>

namespace summatoria {

// Validation failures (bad input, out-of-range arguments) map to CLI exit
// status 1; numeric and capacity failures map to exit status 2.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
    virtual bool is_validation() const noexcept { return true; }
};

class ArgumentError : public Error {
public:
    using Error::Error;
};

class BoundError : public Error {
public:
    using Error::Error;
};

class RangeError : public Error {
public:
    using Error::Error;
};

class UnsupportedArityError : public Error {
public:
    using Error::Error;
};

class CapacityError : public Error {
public:
    using Error::Error;
    bool is_validation() const noexcept override { return false; }
};

class NumericError : public Error {
public:
    using Error::Error;
    bool is_validation() const noexcept override { return false; }
};

class DegenerateSampleError : public NumericError {
public:
    using NumericError::NumericError;
};

} // namespace summatoria
