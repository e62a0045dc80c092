#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <map>
#include <numbers>
#include <random>
#include <set>

#include "wittingrays/penrose.hpp"
#include "wittingrays/serialize.hpp"

using namespace wittingrays;

namespace {

constexpr double kPi = std::numbers::pi;
const double kTau = Constants::tau;
using V = VertexLabel;

double angular_distance(const SphericalDirection& a, const SphericalDirection& b) {
    const double ca = std::cos(a.theta), sa = std::sin(a.theta);
    const double cb = std::cos(b.theta), sb = std::sin(b.theta);
    return std::acos(std::clamp(sa * sb * std::cos(a.phi - b.phi) + ca * cb, -1.0, 1.0));
}

FloatRay reference_of(V v) {
    for (const auto& r : angular_momentum_reference())
        if (r.vertex == v) return r.ray;
    throw std::logic_error("missing reference");
}

}  // namespace

TEST_CASE("model angles") {
    const auto m = build_dodecahedron();
    CHECK(std::sin(m.theta0) == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
    CHECK(std::sin(m.theta1) == doctest::Approx(2.0 * std::sqrt(2.0) / 3.0).epsilon(1e-12));
    CHECK(std::sin(m.phi1) == doctest::Approx(std::sqrt(3.0 / 8.0)).epsilon(1e-12));
    CHECK(std::sin(m.phi2) ==
          doctest::Approx(std::sqrt(3.0) * (1.0 + std::sqrt(5.0)) / 8.0).epsilon(1e-12));
    // ring constraint pinning the phi2 reading
    CHECK(m.phi2 == doctest::Approx(2.0 * kPi / 3.0 - 2.0 * m.phi1).epsilon(1e-12));

    CHECK(m.directions.at(V::A).theta == doctest::Approx(0.0));
    CHECK(m.directions.at(V::A).phi == doctest::Approx(0.0));
    CHECK(m.directions.at(V::T).theta == doctest::Approx(kPi));
    CHECK(m.directions.at(V::F).theta == doctest::Approx(m.theta0));
    CHECK(m.directions.at(V::F).phi == doctest::Approx(0.0));
}

TEST_CASE("every vertex has three equidistant nearest neighbors and an antipode") {
    const auto m = build_dodecahedron();
    const double expected = std::acos(std::sqrt(5.0) / 3.0);
    for (auto v : all_vertices()) {
        const auto ns = neighbors(m, v);
        std::set<V> distinct(ns.begin(), ns.end());
        CHECK(distinct.size() == 3);
        for (auto n : ns)
            CHECK(angular_distance(m.directions.at(v), m.directions.at(n)) ==
                  doctest::Approx(expected).epsilon(1e-9));
        const auto a = antipode(m, v);
        const auto da = m.directions.at(a), dv = m.directions.at(v);
        CHECK(da.theta == doctest::Approx(kPi - dv.theta).epsilon(1e-9));
        if (dv.theta > 1e-9 && dv.theta < kPi - 1e-9)
            CHECK(std::abs(std::remainder(da.phi - dv.phi - kPi, 2.0 * kPi)) < 1e-9);
        CHECK(antipode(m, a) == v);
    }
}

TEST_CASE("named neighbor and antipode facts") {
    const auto m = build_dodecahedron();
    auto nbset = [&](V v) {
        const auto ns = neighbors(m, v);
        return std::set<V>(ns.begin(), ns.end());
    };
    CHECK(nbset(V::A) == std::set<V>{V::F, V::E, V::B});
    CHECK(nbset(V::T) == std::set<V>{V::S, V::N, V::U});
    CHECK(nbset(V::F) == std::set<V>{V::A, V::L, V::K});
    CHECK(antipode(m, V::A) == V::T);
    // antipodal pairs as the published basis table has them
    const std::map<V, V> pairs{{V::A, V::T}, {V::B, V::U}, {V::C, V::Q}, {V::D, V::R},
                               {V::E, V::S}, {V::F, V::N}, {V::G, V::P}, {V::H, V::K},
                               {V::I, V::L}, {V::J, V::M}};
    for (const auto& [x, y] : pairs) {
        CHECK(antipode(m, x) == y);
        CHECK(antipode(m, y) == x);
    }
}

TEST_CASE("stereographic projection") {
    const auto m = build_dodecahedron();
    const auto north = stereographic({0.0, 1.234});
    CHECK(std::abs(north.a) == doctest::Approx(0.0));
    CHECK(std::abs(north.b) == doctest::Approx(1.0));
    const auto south = stereographic({kPi, 0.0});
    CHECK(std::abs(south.b) == doctest::Approx(0.0));
    const auto f = stereographic({m.theta0, 0.0});
    // tan(theta0/2) = (3 - sqrt 5)/2 = 1/tau^2
    CHECK((f.a / f.b).real() == doctest::Approx((3.0 - std::sqrt(5.0)) / 2.0).epsilon(1e-12));
    CHECK((f.a / f.b).imag() == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("majorana examples") {
    const MajoranaPoint zero{{0, 0}, {1, 0}};
    const MajoranaPoint inf{{1, 0}, {0, 0}};
    CHECK(proj_equal(majorana_ray(zero, zero, inf),
                     FloatRay{std::complex<double>{0, 0}, {1, 0}, {0, 0}, {0, 0}}, 1e-12));
    CHECK(proj_equal(majorana_ray(inf, inf, zero),
                     FloatRay{std::complex<double>{0, 0}, {0, 0}, {1, 0}, {0, 0}}, 1e-12));

    const MajoranaPoint p{{(3.0 - std::sqrt(5.0)) / 2.0, 0}, {1, 0}};
    const MajoranaPoint q{{-(kTau * kTau), 0}, {1, 0}};
    CHECK(proj_equal(majorana_ray(p, p, q), reference_of(V::F), 1e-9));
}

TEST_CASE("majorana ray is symmetric in its points") {
    std::mt19937_64 rng(41);
    std::uniform_real_distribution<double> d(-2.0, 2.0);
    for (int i = 0; i < 500; ++i) {
        const MajoranaPoint a{{d(rng), d(rng)}, {d(rng), d(rng)}};
        const MajoranaPoint b{{d(rng), d(rng)}, {d(rng), d(rng)}};
        const MajoranaPoint c{{d(rng), d(rng)}, {d(rng), d(rng)}};
        const FloatRay base = majorana_ray(a, b, c);
        if (float_norm(base) < 1e-3) continue;
        for (const auto& r : {majorana_ray(a, c, b), majorana_ray(b, a, c),
                              majorana_ray(b, c, a), majorana_ray(c, a, b),
                              majorana_ray(c, b, a)})
            CHECK(proj_equal(base, r, 1e-12));
    }
}

TEST_CASE("explicit rays match the published reference values") {
    const auto m = build_dodecahedron();
    CHECK(proj_equal(explicit_ray(m, V::A),
                     FloatRay{std::complex<double>{0, 0}, {1, 0}, {0, 0}, {0, 0}}, 1e-12));
    CHECK(proj_equal(explicit_ray(m, V::F), reference_of(V::F), 1e-9));
    CHECK(proj_equal(explicit_ray(m, V::N), reference_of(V::N), 1e-9));
    int unambiguous = 0;
    for (const auto& ref : angular_momentum_reference()) {
        if (!ref.unambiguous) continue;
        ++unambiguous;
        CAPTURE(vertex_letter(ref.vertex));
        CHECK(proj_equal(explicit_ray(m, ref.vertex), ref.ray, 1e-9));
    }
    CHECK(unambiguous == 16);
    // the ambiguous four still match under the unit-norm reading
    for (const auto& ref : angular_momentum_reference())
        if (!ref.unambiguous) CHECK(proj_equal(explicit_ray(m, ref.vertex), ref.ray, 1e-9));
}

TEST_CASE("the published value of I breaks the basis table; the correction fixes it") {
    // H, I and T share a basis with N', so <I, H> must vanish.
    const FloatRay h = reference_of(V::H);
    const FloatRay i_corrected = reference_of(V::I);
    const FloatRay i_published = reference_ray_i_as_published();
    CHECK(std::abs(complex_inner(i_corrected, h)) < 1e-9);
    CHECK(std::abs(complex_inner(i_published, h)) > 0.1);
}

TEST_CASE("implicit rays complete orthogonal tetrads") {
    const auto m = build_dodecahedron();
    for (auto v : all_vertices()) {
        const FloatRay impl = normalized(implicit_ray(m, v));
        for (auto n : neighbors(m, v))
            CHECK(std::abs(complex_inner(impl, normalized(explicit_ray(m, n)))) < 1e-9);
    }
    // A' is proportional to [1, 0, 0, tau^2]
    const FloatRay a_impl = implicit_ray(m, V::A);
    CHECK(proj_equal(a_impl, FloatRay{std::complex<double>{1, 0}, {0, 0}, {0, 0},
                                      {kTau * kTau, 0}},
                     1e-9));
}

TEST_CASE("rotation oracle") {
    CHECK(proj_equal(wigner_projection_ray({0.0, 0.0}),
                     FloatRay{std::complex<double>{0, 0}, {1, 0}, {0, 0}, {0, 0}}, 1e-12));
    CHECK(proj_equal(wigner_projection_ray({kPi, 0.0}),
                     FloatRay{std::complex<double>{0, 0}, {0, 0}, {1, 0}, {0, 0}}, 1e-9));
    const auto m = build_dodecahedron();
    CHECK(proj_equal(wigner_projection_ray({m.theta0, 0.0}), reference_of(V::F), 1e-9));
    for (auto v : all_vertices())
        CHECK(proj_equal(wigner_projection_ray(m.directions.at(v)), explicit_ray(m, v),
                         1e-9));
}

TEST_CASE("omega matrix is unitary and maps the natural basis to coordinates") {
    const auto om = omega_matrix();
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            std::complex<double> dot{};
            for (int k = 0; k < 4; ++k) dot += om[i][k] * std::conj(om[j][k]);
            CHECK(std::abs(dot - (i == j ? 1.0 : 0.0)) < 1e-12);
        }
    FloatRay e0{std::complex<double>{1, 0}, {0, 0}, {0, 0}, {0, 0}};
    CHECK(proj_equal(omega_transform(reference_of(V::F)), e0, 1e-9));
    const auto m = build_dodecahedron();
    FloatRay e3{std::complex<double>{0, 0}, {0, 0}, {0, 0}, {1, 0}};
    CHECK(proj_equal(omega_transform(implicit_ray(m, V::A)), e3, 1e-9));
}

TEST_CASE("snapping") {
    CHECK(snap_component({1.0 + 1e-9, -1e-9}) == Eisenstein{1, 0});
    CHECK(snap_component({-0.5, 0.8660254037844386}) == Eisenstein{0, 1});
    CHECK(snap_component({1e-8, -1e-8}) == Eisenstein{0, 0});
    CHECK_THROWS_AS(snap_component({0.5, 0.0}), SnapFailureError);
}

TEST_CASE("canonical system equals the golden table with labels") {
    const auto golden = load_penrose_golden_rays(std::string(WR_DATA_DIR) + "/penrose_rays.json");
    REQUIRE(golden.size() == 40);
    const auto system = canonical_penrose_system();
    REQUIRE(system.size() == 40);
    std::map<std::string, ExactRay> by_label;
    for (const auto& r : system) by_label[to_string(r.label)] = r.ray;
    for (const auto& g : golden) {
        CAPTURE(to_string(g.label));
        CHECK(by_label.at(to_string(g.label)) == g.ray);
    }
    // named rows
    CHECK(by_label.at("N") == make_ray({}, {1, 0}, {-1, 0}, {1, 0}));
    CHECK(by_label.at("A") == make_ray({1, 0}, {-1, -1}, {0, 1}, {}));
    CHECK(by_label.at("H'") == make_ray({1, 0}, {-1, -1}, {-1, -1}, {}));
}

TEST_CASE("canonical system structure") {
    const auto system = canonical_penrose_system();
    int coordinate = 0, unit_rays = 0;
    std::map<int, int> zero_position;
    for (const auto& r : system) {
        int zeros = 0, units = 0, zero_at = -1;
        for (int i = 0; i < 4; ++i) {
            if (r.ray[i].is_zero()) { ++zeros; zero_at = i; }
            else if (r.ray[i].is_unit()) ++units;
        }
        if (zeros == 3) ++coordinate;
        else {
            CHECK(zeros == 1);
            CHECK(units == 3);
            ++unit_rays;
            ++zero_position[zero_at];
        }
    }
    CHECK(coordinate == 4);
    CHECK(unit_rays == 36);
    // nine rays with the zero in each position
    for (const auto& [pos, count] : zero_position) CHECK(count == 9);
    CHECK(zero_position.size() == 4);
}

TEST_CASE("presentation order starts with the natural basis") {
    const auto order = canonical_presentation_order();
    CHECK(to_string(order[0]) == "F");
    CHECK(to_string(order[1]) == "B");
    CHECK(to_string(order[2]) == "E");
    CHECK(to_string(order[3]) == "A'");
    std::set<std::string> all;
    for (const auto& l : order) all.insert(to_string(l));
    CHECK(all.size() == 40);
}

TEST_CASE("ray labels") {
    CHECK(to_string(RayLabel{V::A, false}) == "A");
    CHECK(to_string(RayLabel{V::Q, true}) == "Q'");
    CHECK(ray_label_from_string("T'") == RayLabel{V::T, true});
    CHECK_FALSE(ray_label_from_string("O").has_value());
    CHECK_FALSE(ray_label_from_string("Ax").has_value());
    int count = 0;
    for (char c = 'A'; c <= 'U'; ++c)
        if (vertex_from_letter(c)) ++count;
    CHECK(count == 20);
}
