#pragma once

#include <stdexcept>
#include <string>

namespace qleaf {

/// Bad user input: malformed files, mismatched dimensions, violated
/// preconditions. CLI exit code 2.
struct input_error : std::runtime_error {
    explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

/// The requested vector admits no decomposition into simple dimension
/// vectors for the given parameter. CLI exit code 3.
struct not_representable_error : std::runtime_error {
    explicit not_representable_error(const std::string& what)
        : std::runtime_error(what) {}
};

/// An identity the library asserts at runtime failed; indicates a bug,
/// never a bad input. CLI exit code 4.
struct internal_error : std::logic_error {
    explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

}  // namespace qleaf
