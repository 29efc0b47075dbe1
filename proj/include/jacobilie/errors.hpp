#pragma once

#include <stdexcept>
#include <string>

namespace jacobilie {

// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// |det| below tolerance in a 2x2 inversion.
struct SingularMatrix : Error {
    explicit SingularMatrix(const std::string& what) : Error(what) {}
};

// |cos(theta)| below the degeneracy tolerance: the bi-orthogonal
// construction breaks down and the omega division is meaningless.
struct DegenerateSystem : Error {
    explicit DegenerateSystem(const std::string& what) : Error(what) {}
};

// Deformation parameter outside [-1, 1].
struct OutOfRange : Error {
    explicit OutOfRange(const std::string& what) : Error(what) {}
};

// Elliptic modulus outside [0, 1).
struct ModulusOutOfRange : Error {
    explicit ModulusOutOfRange(const std::string& what) : Error(what) {}
};

// Adaptive step controller drove the step size to zero.
struct StepFailure : Error {
    explicit StepFailure(const std::string& what) : Error(what) {}
};

// Argument outside the domain of an integral or mean.
struct DomainError : Error {
    explicit DomainError(const std::string& what) : Error(what) {}
};

// Iteration cap reached before the requested accuracy.
struct ConvergenceFailure : Error {
    explicit ConvergenceFailure(const std::string& what) : Error(what) {}
};

} // namespace jacobilie
