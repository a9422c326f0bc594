#ifndef PWC_CORE_HPP
#define PWC_CORE_HPP

#include <cmath>
#include <stdexcept>
#include <string>

namespace pwc {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;
};

inline Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
inline Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
inline Vec2 operator*(double s, Vec2 v) { return {s * v.x, s * v.y}; }
inline Vec2 operator*(Vec2 v, double s) { return {s * v.x, s * v.y}; }
inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double norm(Vec2 v) { return std::hypot(v.x, v.y); }

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A first integral or field was evaluated outside its domain.
struct DomainError : Error {
    using Error::Error;
};

/// A construction required a hyperbolic (negative-discriminant) linear part.
struct DegenerateError : Error {
    using Error::Error;
};

/// The closing equations are structurally contradictory for these parameters.
struct DegenerateConfig : Error {
    using Error::Error;
};

/// A stated hypothesis of the configuration does not hold (reported, not ignored).
struct HypothesisViolation : Error {
    using Error::Error;
};

/// A separatrix misses a ray (parallel, or meets it outside the sector).
struct NoIntersection : Error {
    using Error::Error;
};

/// No grid point produced a usable map sample.
struct EmptyDomain : Error {
    using Error::Error;
};

/// File could not be parsed; message carries a line number.
struct ParseError : Error {
    using Error::Error;
};

// Degeneracy tolerance: a pivot or discriminant counts as zero when its
// magnitude is below kZeroTol * max(1, scale of the inputs).
inline constexpr double kZeroTol = 1e-12;

inline bool near_zero(double value, double scale = 1.0) {
    return std::abs(value) <= kZeroTol * std::max(1.0, std::abs(scale));
}

}  // namespace pwc

#endif
