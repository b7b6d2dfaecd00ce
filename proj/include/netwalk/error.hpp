#pragma once

#include <stdexcept>
#include <string>

namespace netwalk {

/// Bad user input: flags, specs, parameters. Maps to CLI exit code 2.
class ArgumentError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Malformed or inconsistent data on disk or in memory. Maps to CLI exit code 3.
class DataError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace netwalk
