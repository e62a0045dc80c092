#pragma once

#include <array>
#include <string>
#include <vector>

#include "wittingrays/numerics.hpp"
#include "wittingrays/rays.hpp"

namespace wittingrays {

/// A vertex of the Witting polytope: four exact scalars, Hermitian norm 3.
struct WittingVertex {
    WittingVector c{};
    friend bool operator==(const WittingVertex&, const WittingVertex&) = default;
    friend auto operator<=>(const WittingVertex&, const WittingVertex&) = default;
};

/// All 240 vertices in a fixed order: the four one-zero blocks (27 exponent
/// choices x 2 overall signs each), then the 24 axis vertices +-i*sqrt(3)*w^l.
std::vector<WittingVertex> generate_witting_vertices();

/// Pattern label for the vertex at `index` of generate_witting_vertices():
/// "b<block><sign><mu><nu><lambda>" or "s<position><sign><lambda>".
std::string witting_vertex_label(std::size_t index);

struct CollapseResult {
    std::vector<ExactRay> rays;    // canonical, sorted
    std::vector<int> fiber_sizes;  // vertices mapping to each ray
};

/// The 6-to-1 projection of vertices onto rays of CP^3.
CollapseResult collapse_to_rays(const std::vector<WittingVertex>& vertices);

/// Realification (Re z1, Im z1, ..., Re z4, Im z4), squared length exactly 3.
using GossetVertex = std::array<QuadraticCoord, 8>;

GossetVertex realify(const WittingVertex& v);
std::vector<GossetVertex> realify(const std::vector<WittingVertex>& vs);

/// Exact real dot product of two realified vertices. Throws std::logic_error
/// if the value leaves the half-integers (cannot happen for realifications).
HalfInteger gosset_dot(const GossetVertex& u, const GossetVertex& v);

/// A ray of RP^7: the +-v class of a vertex, represented sign-canonically
/// (first nonzero realified coordinate positive).
struct RealRay8 {
    GossetVertex coords{};
    WittingVertex preimage{};  // the vertex realifying to coords
    friend bool operator==(const RealRay8& a, const RealRay8& b) { return a.coords == b.coords; }
};

/// The 120 rays of the realified system, sorted by coordinates.
std::vector<RealRay8> e8_rays(const std::vector<WittingVertex>& vertices);

/// Index into the 144-ray extension family F1..F4.
struct F148Index {
    int family;  // 1..4
    int i, j;    // sign exponents, 0..1
    int k, l;    // omega exponents, 0..2
};

/// The family ray [..., (-1)^i w^k, (-1)^j w^l, ...] with the zero in the
/// slot complementary to the family's leading pattern.
ExactRay f148_ray(const F148Index& idx);

struct LabeledRay {
    std::string label;
    ExactRay ray;
};

/// The 148-ray system: the four coordinate rays e1..e4 followed by the four
/// families in odometer order over (i, j, k, l).
std::vector<LabeledRay> f148_system();

/// One of the eight 40-ray subsystems: the coordinate rays plus the 36 rays
/// of the given line (families with fixed signs, omega exponents free).
/// `line` is 1-based; throws std::out_of_range otherwise.
std::vector<LabeledRay> f148_subsystem(int line);

/// Sign pattern (i, j) used by each family in the given subsystem line.
std::array<std::array<int, 2>, 4> f148_line_signs(int line);

}  // namespace wittingrays
