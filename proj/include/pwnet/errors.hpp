#pragma once

#include <stdexcept>
#include <string>

namespace pwnet {

// Bad argument or violated precondition. CLI exit code 1.
class ArgumentError : public std::invalid_argument {
public:
    explicit ArgumentError(const std::string& what) : std::invalid_argument(what) {}
};

// Malformed input data, empty corpora, I/O failures. CLI exit code 2.
class DataError : public std::runtime_error {
public:
    explicit DataError(const std::string& what) : std::runtime_error(what) {}
};

// A configured size or budget guard tripped. CLI exit code 3.
class ResourceError : public std::runtime_error {
public:
    explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace pwnet
