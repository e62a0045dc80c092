#pragma once

#include <array>
#include <complex>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "wittingrays/rays.hpp"

namespace wittingrays {

/// Thrown when a pipeline component is not within tolerance of any exact
/// candidate value; indicates a construction bug, not bad input.
struct SnapFailureError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// The 20 dodecahedron vertices, lettered A..U with O omitted.
enum class VertexLabel : std::uint8_t {
    A, B, C, D, E, F, G, H, I, J, K, L, M, N, P, Q, R, S, T, U
};
inline constexpr int kVertexCount = 20;

std::array<VertexLabel, 20> all_vertices();
char vertex_letter(VertexLabel v);
std::optional<VertexLabel> vertex_from_letter(char c);

/// A ray label: either the explicit ray of a vertex ("A") or the implicit
/// ray completing its neighbors' tetrad ("A'").
struct RayLabel {
    VertexLabel vertex;
    bool primed = false;

    friend bool operator==(const RayLabel&, const RayLabel&) = default;
    friend auto operator<=>(const RayLabel&, const RayLabel&) = default;
};
std::string to_string(RayLabel l);
std::optional<RayLabel> ray_label_from_string(const std::string& s);

struct SphericalDirection {
    double theta = 0.0;  // polar angle in [0, pi]
    double phi = 0.0;    // azimuth in [0, 2*pi)
};

/// Vertex directions of the regular dodecahedron, with the z-axis through A
/// and the x-axis in the half-plane of A and F. The letter assignment is the
/// one the published ray and basis tables use; see the note in penrose.cpp.
struct DodecahedronModel {
    double theta0, theta1, phi1, phi2;
    std::map<VertexLabel, SphericalDirection> directions;
};

DodecahedronModel build_dodecahedron();

/// The three vertices nearest to v (all at angular distance arccos(sqrt(5)/3)).
std::array<VertexLabel, 3> neighbors(const DodecahedronModel& m, VertexLabel v);

VertexLabel antipode(const DodecahedronModel& m, VertexLabel v);

/// A point of the Majorana sphere as a projective pair (a : b), value a/b;
/// (1 : 0) is the point at infinity (the south pole).
struct MajoranaPoint {
    std::complex<double> a{0.0, 0.0};
    std::complex<double> b{1.0, 0.0};
};

/// Stereographic projection alpha = tan(theta/2) exp(i phi) from the south pole.
MajoranaPoint stereographic(SphericalDirection d);

/// Spin-3/2 state with the given Majorana constellation, as a projective ray
/// [e0, e1/sqrt(3), e2/sqrt(3), e3] over the homogeneous elementary symmetric
/// polynomials of the three points. Symmetric in its arguments.
FloatRay majorana_ray(const MajoranaPoint& p1, const MajoranaPoint& p2, const MajoranaPoint& p3);

/// Explicit ray of vertex v: two Majorana points at v, one at its antipode.
FloatRay explicit_ray(const DodecahedronModel& m, VertexLabel v);

/// Implicit ray of vertex v: the unique ray orthogonal to the explicit rays
/// of v's three neighbors (conjugated cofactor expansion).
FloatRay implicit_ray(const DodecahedronModel& m, VertexLabel v);

/// Independent oracle: rotate |j=3/2, m=+1/2> by R_z(phi) R_y(theta) using
/// the standard Wigner rotation matrix.
FloatRay wigner_projection_ray(SphericalDirection d);

using UnitaryMatrix4 = std::array<std::array<std::complex<double>, 4>, 4>;

/// Basis change onto the natural basis F, B, E, A'; unitary to 1e-12.
UnitaryMatrix4 omega_matrix();

FloatRay omega_transform(const FloatRay& r);

/// Snap a canonical float component to the nearest of {0, +-1, +-w, +-w^2};
/// throws SnapFailureError beyond tolerance (default 1e-6).
Eisenstein snap_component(std::complex<double> c, double tol = 1e-6);

struct LabeledExactRay {
    RayLabel label;
    ExactRay ray;
};

/// The full pipeline: 40 float rays -> omega basis change -> canonicalize ->
/// snap to exact Eisenstein rays. Ordered A..U then A'..U'.
std::vector<LabeledExactRay> canonical_penrose_system();

/// The published presentation order of the 40 canonical rays (F, B, E, A',
/// N, U, S, T', ...), used for golden data and exports.
std::array<RayLabel, 40> canonical_presentation_order();

/// All 40 rays of the geometric pipeline in the angular-momentum basis
/// (before the omega transform), ordered A..U then A'..U'.
struct LabeledFloatRay {
    RayLabel label;
    FloatRay ray;
};
std::vector<LabeledFloatRay> angular_momentum_system();

/// Reference transcription of the published explicit-ray components in the
/// angular-momentum basis. `unambiguous` is false for the four entries whose
/// printed grouping is ambiguous (M, P, Q, R); the imaginary sign of I's
/// second component is corrected (see penrose.cpp).
struct ReferenceRay {
    VertexLabel vertex;
    FloatRay ray;
    bool unambiguous;
};
std::vector<ReferenceRay> angular_momentum_reference();

/// The published value of ray I before the sign correction; kept so tests can
/// show it is inconsistent with the basis table (I and H share a basis but
/// this value is not orthogonal to H).
FloatRay reference_ray_i_as_published();

}  // namespace wittingrays
