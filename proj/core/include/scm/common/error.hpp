#pragma once

#include <stdexcept>
#include <string>

namespace scm {

// Base of all library errors. Callers that do not care about the category
// can catch this one type.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

class ShapeError : public Error {
public:
    using Error::Error;
};

// Rotation part of an extrinsic fails the orthonormality tolerance.
class InvalidRotationError : public Error {
public:
    using Error::Error;
};

// Empty or inverted sampling range, bad probability simplex, etc.
class ConstraintError : public Error {
public:
    using Error::Error;
};

// Two-view geometry with (near) zero baseline, coplanar degeneracies.
class DegenerateGeometryError : public Error {
public:
    using Error::Error;
};

// Camera placed at (or directly above) the reference target.
class UndefinedAzimuthError : public Error {
public:
    using Error::Error;
};

// Zero translation where a direction is required.
class UndefinedDirectionError : public Error {
public:
    using Error::Error;
};

// A boolean attention mask excludes every key for some query.
class FullyMaskedRowError : public Error {
public:
    using Error::Error;
};

// An ODE solve produced non-finite values.
class DivergenceError : public Error {
public:
    using Error::Error;
};

// Frame/view subset construction cannot satisfy its constraints.
class SamplingError : public Error {
public:
    using Error::Error;
};

// No admissible view subset under the active curriculum bounds.
class CurriculumExhaustedError : public Error {
public:
    using Error::Error;
};

// A scene subject left every camera frustum.
class VisibilityError : public Error {
public:
    using Error::Error;
};

// Relative pose estimation failed.
class EstimationError : public Error {
public:
    using Error::Error;
};

class ConfigError : public Error {
public:
    using Error::Error;
};

class IoError : public Error {
public:
    using Error::Error;
};

}  // namespace scm
