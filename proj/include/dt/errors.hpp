#pragma once

#include <stdexcept>
#include <string>

namespace dt {

/// Base class for every error this library reports deliberately.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct ZeroConstantTerm : Error {
    explicit ZeroConstantTerm(const std::string& w = "series has zero constant term") : Error(w) {}
};

struct BadConstantTerm : Error {
    explicit BadConstantTerm(const std::string& w = "series has unsuitable constant term") : Error(w) {}
};

struct OutOfRange : Error {
    explicit OutOfRange(const std::string& w = "index out of range") : Error(w) {}
};

struct DimensionTooSmall : Error {
    explicit DimensionTooSmall(const std::string& w = "dimension must be at least 2") : Error(w) {}
};

struct DimensionMismatch : Error {
    explicit DimensionMismatch(const std::string& w = "operands live in different dimensions") : Error(w) {}
};

struct NegativeDimension : Error {
    explicit NegativeDimension(const std::string& w = "dimension gap must be nonnegative") : Error(w) {}
};

struct RouteMismatch : Error {
    explicit RouteMismatch(const std::string& w = "independent computation routes disagree") : Error(w) {}
};

struct AmbientMismatch : Error {
    explicit AmbientMismatch(const std::string& w = "classes live on different ambients") : Error(w) {}
};

struct NonUnit : Error {
    explicit NonUnit(const std::string& w = "class is not invertible (degree-0 part != 1)") : Error(w) {}
};

struct BadEpsilon : Error {
    explicit BadEpsilon(const std::string& w = "epsilon parameters must be 0 or 1") : Error(w) {}
};

struct BadWindow : Error {
    explicit BadWindow(const std::string& w = "r0 outside the admissible window") : Error(w) {}
};

struct BadPunctualSeries : Error {
    explicit BadPunctualSeries(const std::string& w = "punctual series must have constant term 1") : Error(w) {}
};

struct OnWallUnsupported : Error {
    explicit OnWallUnsupported(const std::string& w = "polarization sits on a wall; no series is defined there") : Error(w) {}
};

struct AboveUpperUnsupported : Error {
    explicit AboveUpperUnsupported(const std::string& w = "polarization at or above the upper bound is not covered") : Error(w) {}
};

struct IntegralityViolation : Error {
    explicit IntegralityViolation(const std::string& w = "coefficient expected to be an integer is not") : Error(w) {}
};

struct NonIntegerResult : Error {
    explicit NonIntegerResult(const std::string& w = "intersection number failed to be an integer") : Error(w) {}
};

} // namespace dt
