#pragma once

#include <stdexcept>
#include <string>

namespace cogsim {

// Base for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// An argument fell outside the domain of a model formula.
class DomainError : public Error {
public:
    using Error::Error;
};

// A configuration document or value is malformed or violates an invariant.
class ConfigError : public Error {
public:
    using Error::Error;
};

// Reading or writing a file failed.
class IoError : public Error {
public:
    IoError(const std::string& path, const std::string& what)
        : Error(path + ": " + what), path_(path) {}

    const std::string& path() const noexcept { return path_; }

private:
    std::string path_;
};

// Adaptive integration did not reach the requested tolerance.
class QuadratureError : public Error {
public:
    using Error::Error;
};

}  // namespace cogsim
