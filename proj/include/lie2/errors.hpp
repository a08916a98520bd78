#ifndef LIE2_ERRORS_HPP
#define LIE2_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace lie2 {

/// Malformed input data: shape mismatch, broken antisymmetry, bad file contents.
struct StructuralError : std::runtime_error {
    explicit StructuralError(const std::string& what) : std::runtime_error(what) {}
};

/// A documented operation precondition failed (e.g. an unverified morphism).
struct PreconditionError : std::runtime_error {
    explicit PreconditionError(const std::string& what) : std::runtime_error(what) {}
};

/// Input is outside the supported restricted case of a solver.
struct UnsupportedError : std::runtime_error {
    explicit UnsupportedError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace lie2

#endif
