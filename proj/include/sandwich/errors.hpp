#pragma once

#include <stdexcept>
#include <string>

namespace sandwich {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Bad input: malformed tables, out-of-range parameters, unusable configs.
/// The CLI maps these to exit code 2.
class ValidationError : public Error {
public:
    using Error::Error;
};

/// Estimation failed on otherwise well-formed input.
/// The CLI maps these to exit code 3.
class EstimationError : public Error {
public:
    using Error::Error;
};

class NonFiniteError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class DegenerateBinaryError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class MissingBinaryColumnError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class BadGroupSizesError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class BadMuError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class CollinearError : public EstimationError {
public:
    using EstimationError::EstimationError;
};

class LeverageOneError : public EstimationError {
public:
    using EstimationError::EstimationError;
};

class DegenerateSampleError : public EstimationError {
public:
    using EstimationError::EstimationError;
};

class DivideByZeroError : public EstimationError {
public:
    using EstimationError::EstimationError;
};

}  // namespace sandwich
