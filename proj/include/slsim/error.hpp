#pragma once

#include <stdexcept>
#include <string>

namespace slsim {

// Base class for everything thrown by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Tensor/layer shape mismatch.
class DimensionError : public Error {
public:
    using Error::Error;
};

// Bad argument value (lo >= hi, zero divisor, ...).
class ArgumentError : public Error {
public:
    using Error::Error;
};

// Invalid experiment configuration (bad cut index, empty shard, unknown field).
class ConfigError : public Error {
public:
    using Error::Error;
};

// Bad data fed to an operation (empty dataset, out-of-range label).
class DataError : public Error {
public:
    using Error::Error;
};

// Malformed container file.
class FormatError : public Error {
public:
    using Error::Error;
};

// Message-sequence or cache-lifecycle violation.
class ProtocolError : public Error {
public:
    using Error::Error;
};

// Non-finite values where finite ones are required.
class NumericError : public Error {
public:
    using Error::Error;
};

// Metric has no defined value on this input (e.g. p_e = 1 for kappa).
class MetricUndefinedError : public Error {
public:
    using Error::Error;
};

// Process exit codes: 0 success, 2 configuration, 3 data/format, 4 protocol/internal.
inline int exit_code_for(const std::exception& e) {
    if (dynamic_cast<const ConfigError*>(&e) || dynamic_cast<const ArgumentError*>(&e)) return 2;
    if (dynamic_cast<const DataError*>(&e) || dynamic_cast<const FormatError*>(&e) ||
        dynamic_cast<const MetricUndefinedError*>(&e))
        return 3;
    return 4;
}

} // namespace slsim
