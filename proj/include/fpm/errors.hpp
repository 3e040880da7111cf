#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fpm {

// Base class for every error thrown by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Invalid or unusable input data. The CLI maps these to exit code 2.
class DataError : public Error {
public:
    using Error::Error;
};

class InvalidItemError : public DataError {
public:
    using DataError::DataError;
};

class EmptyUniverseError : public DataError {
public:
    using DataError::DataError;
};

class InvalidItemsetError : public DataError {
public:
    using DataError::DataError;
};

class InvalidArityError : public DataError {
public:
    using DataError::DataError;
};

class EncodingError : public DataError {
public:
    using DataError::DataError;
};

// Parse failure in a transaction file; remembers the 1-based line number.
class ParseError : public DataError {
public:
    ParseError(std::size_t line, const std::string& what)
        : DataError("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

class GeneratorSpecError : public DataError {
public:
    using DataError::DataError;
};

class OracleScaleError : public DataError {
public:
    using DataError::DataError;
};

}  // namespace fpm
