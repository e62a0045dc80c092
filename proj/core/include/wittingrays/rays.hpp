#pragma once

#include <array>
#include <complex>
#include <span>
#include <stdexcept>
#include <vector>

#include "wittingrays/eisenstein.hpp"
#include "wittingrays/numerics.hpp"

namespace wittingrays {

/// Thrown by exact canonicalization when the leading component does not
/// divide every component of the ray.
struct NonUnitLeadingError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

using ExactRay = std::array<Eisenstein, 4>;
using FloatRay = std::array<std::complex<double>, 4>;

/// Brace-elision-proof constructor.
inline constexpr ExactRay make_ray(Eisenstein c0, Eisenstein c1, Eisenstein c2,
                                   Eisenstein c3) {
    return ExactRay{c0, c1, c2, c3};
}

/// A component of a float ray counts as zero below this threshold; the
/// systems in scope keep nonzero components above ~0.2 on unit vectors.
inline constexpr double kFloatZeroTol = 1e-7;

// --- exact path ---------------------------------------------------------

/// Hermitian inner product sum conj(u_i) v_i over Z[w].
Eisenstein eis_inner(std::span<const Eisenstein> u, std::span<const Eisenstein> v);

inline Eisenstein eis_inner(const ExactRay& u, const ExactRay& v) {
    return eis_inner(std::span<const Eisenstein>(u), std::span<const Eisenstein>(v));
}

/// Rescale so the leading (first nonzero) component is exactly 1.
/// Idempotent; throws NonUnitLeadingError when impossible in Z[w] and
/// std::invalid_argument on the zero ray.
ExactRay canonicalize(const ExactRay& v);

bool proj_equal(const ExactRay& u, const ExactRay& v);

// --- float path ---------------------------------------------------------

std::complex<double> complex_inner(const FloatRay& u, const FloatRay& v);

FloatRay canonicalize(const FloatRay& v);

bool proj_equal(const FloatRay& u, const FloatRay& v, double tol = 1e-9);

/// Euclidean norm of the component vector.
double float_norm(const FloatRay& v);

/// v / |v|.
FloatRay normalized(const FloatRay& v);

}  // namespace wittingrays
