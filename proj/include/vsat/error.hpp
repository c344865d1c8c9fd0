#pragma once

#include <stdexcept>
#include <string>

namespace vsat {

// Bad input: malformed files, non-permutations, invalid rule parameters.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// A configured size guard was hit (PUT bound, enumeration bound, LP size).
class BoundExceeded : public std::runtime_error {
public:
    explicit BoundExceeded(const std::string& what) : std::runtime_error(what) {}
};

} // namespace vsat
