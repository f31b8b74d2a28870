#pragma once

#include <stdexcept>
#include <string>

namespace eimq {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// --- numeric failures ---

class AllSnapshotsZeroError : public Error {
public:
    using Error::Error;
};

class NonFiniteSampleError : public Error {
public:
    using Error::Error;
};

class QuadratureNonConvergenceError : public Error {
public:
    using Error::Error;
};

class PoleError : public Error {
public:
    using Error::Error;
};

class RhoTooSmallError : public Error {
public:
    using Error::Error;
};

/// A family evaluator returned a non-finite value, or a family registered as
/// real-valued produced a non-negligible imaginary part.
class FamilyValueError : public Error {
public:
    using Error::Error;
};

// --- configuration / precondition failures ---

class ConfigError : public Error {
public:
    using Error::Error;
};

// --- persistence failures ---

class IoError : public Error {
public:
    using Error::Error;
};

class ChecksumMismatchError : public IoError {
public:
    using IoError::IoError;
};

class UnsupportedVersionError : public IoError {
public:
    using IoError::IoError;
};

class MalformedFieldError : public IoError {
public:
    using IoError::IoError;
};

} // namespace eimq
