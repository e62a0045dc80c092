#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>

#include "wittingrays/serialize.hpp"
#include "wittingrays/systems.hpp"

using namespace wittingrays;

namespace {

std::vector<LabeledExactRay> golden_rays() {
    return load_penrose_golden_rays(std::string(WR_DATA_DIR) + "/penrose_rays.json");
}

std::vector<std::array<std::string, 4>> golden_bases() {
    return load_penrose_golden_bases(std::string(WR_DATA_DIR) + "/penrose_bases.json");
}

}  // namespace

TEST_CASE("orthogonality graph of the canonical system") {
    const auto system = build_orthogonality_graph(golden_rays());
    REQUIRE(system.size() == 40);
    for (int i = 0; i < 40; ++i) {
        CHECK(system.degree(i) == 12);
        CHECK_FALSE(system.adjacency[i].test(static_cast<std::size_t>(i)));
        for (int j = 0; j < 40; ++j)
            CHECK(system.adjacency[i].test(static_cast<std::size_t>(j)) ==
                  system.adjacency[j].test(static_cast<std::size_t>(i)));
    }
    // the four coordinate rays are mutually adjacent
    std::vector<int> coord;
    for (int i = 0; i < 40; ++i) {
        int zeros = 0;
        for (const auto& c : system.exact[static_cast<std::size_t>(i)])
            zeros += c.is_zero() ? 1 : 0;
        if (zeros == 3) coord.push_back(i);
    }
    REQUIRE(coord.size() == 4);
    for (int a : coord)
        for (int b : coord)
            if (a != b) CHECK(system.adjacency[a].test(static_cast<std::size_t>(b)));
}

TEST_CASE("graph construction validates its input") {
    std::vector<LabeledRay> bad{{"x", make_ray({2, 0}, {}, {}, {})}};
    CHECK_THROWS_AS(build_orthogonality_graph(bad), std::invalid_argument);
    std::vector<LabeledRay> dup{{"a", make_ray({1, 0}, {}, {}, {})},
                                {"b", make_ray({1, 0}, {}, {}, {})}};
    CHECK_THROWS_AS(build_orthogonality_graph(dup), std::invalid_argument);
}

TEST_CASE("basis enumeration matches the published table and the brute-force oracle") {
    const auto rays = golden_rays();
    const auto system = build_orthogonality_graph(rays);
    const auto bases = enumerate_bases(system);
    REQUIRE(bases.bases.size() == 40);
    CHECK(brute_force_bases_dim4(system).bases == bases.bases);

    std::set<std::set<std::string>> enumerated;
    for (const auto& b : bases.bases) {
        std::set<std::string> labels;
        for (int i : b) labels.insert(system.labels[static_cast<std::size_t>(i)]);
        enumerated.insert(labels);
    }
    std::set<std::set<std::string>> published;
    for (const auto& b : golden_bases())
        published.insert(std::set<std::string>(b.begin(), b.end()));
    CHECK(enumerated == published);

    for (const auto& b : bases.bases)
        for (std::size_t x = 0; x < b.size(); ++x)
            for (std::size_t y = x + 1; y < b.size(); ++y)
                CHECK(eis_inner(system.exact[static_cast<std::size_t>(b[x])],
                                system.exact[static_cast<std::size_t>(b[y])])
                          .is_zero());
}

TEST_CASE("e8 and f148 basis counts") {
    const auto e8 = system_graph(SystemId::E8);
    const auto e8_bases = enumerate_bases(e8);
    CHECK(e8_bases.bases.size() == 2025);
    for (const auto& b : e8_bases.bases) CHECK(b.size() == 8);
    CHECK(signature(e8, e8_bases).to_string() == "120_135-2025_8");

    const auto f = system_graph(SystemId::F148);
    const auto f_bases = enumerate_bases(f);
    CHECK(f_bases.bases.size() == 265);
    CHECK(signature(f, f_bases).to_string() == "4_13 144_7-265_4");
    CHECK(brute_force_bases_dim4(f).bases == f_bases.bases);
}

TEST_CASE("signature identity holds on every system") {
    for (const auto& name : all_system_id_names()) {
        const auto id = *parse_system_id(name);
        const auto graph = system_graph(id);
        const auto bases = enumerate_bases(graph);
        const auto sig = signature(graph, bases);  // throws if the identity fails
        std::int64_t total = 0;
        for (const auto& [occ, count] : sig.ray_occurrence_profile) total += occ * count;
        CHECK(total == sig.basis_count * sig.basis_size);
    }
}

TEST_CASE("maximal cliques coincide with bases on the systems in scope") {
    for (const auto& name : {"penrose-canonical", "f148", "e8"}) {
        const auto graph = system_graph(*parse_system_id(name));
        const auto bases = enumerate_bases(graph);
        const auto cliques = maximal_cliques(graph);
        CHECK(cliques == bases.bases);
    }
}

TEST_CASE("float graph agrees with the exact one") {
    const auto float_graph = system_graph(SystemId::PenroseEq3);
    REQUIRE(float_graph.size() == 40);
    for (int i = 0; i < 40; ++i) CHECK(float_graph.degree(i) == 12);
    CHECK(enumerate_bases(float_graph).bases.size() == 40);
}

TEST_CASE("monomial map application") {
    const MonomialMap identity;
    const ExactRay r = make_ray({0, 0}, {1, 0}, {0, -1}, {1, 0});
    CHECK(apply_monomial_map(identity, r) == r);

    // a permutation with sign flips keeps rays canonical
    MonomialMap m;
    m.perm = {2, 0, 3, 1};
    m.phase = {0, 0, 6, 6};
    const ExactRay img = apply_monomial_map(m, r);
    CHECK(canonicalize(img) == img);

    // odd zeta powers leave the Eisenstein lattice
    MonomialMap odd;
    odd.phase = {0, 3, 0, 0};
    CHECK_THROWS_AS(apply_monomial_map(odd, r), std::domain_error);
}

TEST_CASE("monomial self-equivalence finds the identity first") {
    const auto sys = build_orthogonality_graph(f148_subsystem(1));
    const auto m = find_monomial_equivalence(sys, sys);
    REQUIRE(m.has_value());
    CHECK(m->perm == std::array<int, 4>{0, 1, 2, 3});
    CHECK(m->phase == std::array<int, 4>{0, 0, 0, 0});
}

TEST_CASE("all 28 subsystem pairs are monomially equivalent") {
    std::vector<RaySystem> lines;
    for (int l = 1; l <= 8; ++l) lines.push_back(build_orthogonality_graph(f148_subsystem(l)));
    for (int a = 0; a < 8; ++a)
        for (int b = a + 1; b < 8; ++b) {
            CAPTURE(a + 1);
            CAPTURE(b + 1);
            const auto m = find_monomial_equivalence(lines[a], lines[b]);
            REQUIRE(m.has_value());
            CHECK(monomial_map_sends(lines[a], lines[b], *m));
            CHECK(m->phase[0] == 0);

            // found maps carry bases onto bases
            const auto bases_a = enumerate_bases(lines[a]);
            const auto bases_b = enumerate_bases(lines[b]);
            std::map<ExactRay, int> index_b;
            for (int i = 0; i < lines[b].size(); ++i)
                index_b[lines[b].exact[static_cast<std::size_t>(i)]] = i;
            std::set<std::vector<int>> bset(bases_b.bases.begin(), bases_b.bases.end());
            for (const auto& basis : bases_a.bases) {
                std::vector<int> image;
                for (int i : basis)
                    image.push_back(index_b.at(apply_monomial_map(
                        *m, lines[a].exact[static_cast<std::size_t>(i)])));
                std::sort(image.begin(), image.end());
                CHECK(bset.count(image) == 1);
            }
        }
}

TEST_CASE("the published line-1 to line-6 permutation works") {
    const auto a = build_orthogonality_graph(f148_subsystem(1));
    const auto b = build_orthogonality_graph(f148_subsystem(6));
    const auto m = find_phases_for_permutation(a, b, {2, 0, 3, 1});
    REQUIRE(m.has_value());
    CHECK(monomial_map_sends(a, b, *m));
}

TEST_CASE("published label sets verify structurally") {
    const auto rays = golden_rays();
    const auto system = build_orthogonality_graph(rays);
    const auto bases = enumerate_bases(system);
    const auto report = match_penrose_labels(rays, bases, golden_bases());
    CHECK(report.all_found);
    CHECK(report.neighborhood_bases == 20);
    CHECK(report.antipodal_bases == 10);
    CHECK(report.implicit_bases == 10);
    CHECK(report.missing.empty());
    CHECK(report.extra.empty());

    // specific published bases
    std::set<std::set<std::string>> enumerated;
    for (const auto& b : bases.bases) {
        std::set<std::string> labels;
        for (int i : b) labels.insert(system.labels[static_cast<std::size_t>(i)]);
        enumerated.insert(labels);
    }
    CHECK(enumerated.count({"F", "B", "E", "A'"}) == 1);
    CHECK(enumerated.count({"A", "A'", "T", "T'"}) == 1);
    CHECK(enumerated.count({"S", "N", "U", "T'"}) == 1);

    // a corrupted table is reported
    auto corrupted = golden_bases();
    corrupted[0] = {"F", "B", "E", "T'"};
    const auto bad = match_penrose_labels(rays, bases, corrupted);
    CHECK_FALSE(bad.all_found);
    CHECK(bad.missing.size() == 1);
    CHECK(bad.extra.size() == 1);
}

TEST_CASE("projective equality is an equivalence relation on the 40 rays") {
    const auto rays = golden_rays();
    for (const auto& a : rays)
        for (const auto& b : rays) {
            const bool ab = proj_equal(a.ray, b.ray);
            CHECK(ab == proj_equal(b.ray, a.ray));
            CHECK(ab == (a.label == b.label));  // all 40 are distinct classes
        }
}
