#pragma once

#include <stdexcept>
#include <string>

namespace rtdlite {

/// Input data violates a structural contract (shape, symmetry, sign, NaN).
class ValidationError : public std::invalid_argument {
public:
    explicit ValidationError(const std::string& what) : std::invalid_argument(what) {}
};

/// Two inputs that must share a vertex/point count do not.
class DimensionMismatchError : public std::invalid_argument {
public:
    explicit DimensionMismatchError(const std::string& what) : std::invalid_argument(what) {}
};

/// A graph required to be connected via finite-weight edges is not.
class DisconnectedInputError : public std::runtime_error {
public:
    explicit DisconnectedInputError(const std::string& what) : std::runtime_error(what) {}
};

/// File access or format failure.
class IoError : public std::runtime_error {
public:
    explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace rtdlite
