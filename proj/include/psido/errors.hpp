#pragma once

#include <stdexcept>
#include <string>

namespace psido {

// Exit codes used by the CLI: 2 config, 3 accuracy, 4 I/O.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
    [[nodiscard]] virtual int exit_code() const noexcept = 0;
};

class ConfigError : public Error {
public:
    using Error::Error;
    [[nodiscard]] int exit_code() const noexcept override { return 2; }
};

// Argument outside the domain where a quantity is defined (no extrapolation).
class DomainError : public ConfigError {
public:
    using ConfigError::ConfigError;
};

// Operation not available for this kind of input, e.g. high derivatives of a
// tabulated potential.
class UnsupportedError : public ConfigError {
public:
    using ConfigError::ConfigError;
};

class AccuracyError : public Error {
public:
    AccuracyError(const std::string& what, double achieved)
        : Error(what), achieved_(achieved) {}
    [[nodiscard]] int exit_code() const noexcept override { return 3; }
    [[nodiscard]] double achieved() const noexcept { return achieved_; }

private:
    double achieved_;
};

class IoError : public Error {
public:
    using Error::Error;
    [[nodiscard]] int exit_code() const noexcept override { return 4; }
};

} // namespace psido
