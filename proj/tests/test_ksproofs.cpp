#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "wittingrays/ksproofs.hpp"
#include "wittingrays/serialize.hpp"

using namespace wittingrays;

namespace {

RaySystem penrose_system() { return system_graph(SystemId::PenroseCanonical); }

/// A single orthogonal basis as a toy system.
RaySystem single_basis_system() {
    std::vector<LabeledRay> rays;
    for (int p = 0; p < 4; ++p) {
        ExactRay e{};
        e[p] = Eisenstein::one();
        rays.push_back({"e" + std::to_string(p + 1), e});
    }
    return build_orthogonality_graph(rays);
}

}  // namespace

TEST_CASE("incidence matrices") {
    const auto penrose = penrose_system();
    const auto bases = enumerate_bases(penrose);
    const auto m = incidence_matrix(bases, penrose.size());
    CHECK(m.rows == 40);
    CHECK(m.cols == 40);
    std::vector<int> col_weight(40, 0);
    for (const auto& row : m.row_bits) {
        CHECK(row.count() == 4);
        row.for_each([&](int c) { ++col_weight[static_cast<std::size_t>(c)]; });
    }
    for (int w : col_weight) CHECK(w == 4);

    const auto e8 = system_graph(SystemId::E8);
    const auto e8_bases = enumerate_bases(e8);
    const auto m8 = incidence_matrix(e8_bases, e8.size());
    CHECK(m8.rows == 2025);
    CHECK(m8.cols == 120);
    std::vector<int> w8(120, 0);
    for (const auto& row : m8.row_bits) {
        CHECK(row.count() == 8);
        row.for_each([&](int c) { ++w8[static_cast<std::size_t>(c)]; });
    }
    for (int w : w8) CHECK(w == 135);

    const auto toy = single_basis_system();
    const auto toy_bases = enumerate_bases(toy);
    const auto mt = incidence_matrix(toy_bases, 4);
    CHECK(mt.rows == 1);
    CHECK(mt.row_bits[0].count() == 4);
}

TEST_CASE("pow2 decimal") {
    CHECK(pow2_decimal(0) == "1");
    CHECK(pow2_decimal(10) == "1024");
    CHECK(pow2_decimal(64) == "18446744073709551616");
    CHECK(decimal_greater_than("1024", 1023));
    CHECK_FALSE(decimal_greater_than("1024", 1024));
    CHECK(decimal_greater_than(pow2_decimal(31), 1000000000ull));
    CHECK_FALSE(decimal_greater_than("999999999", 1000000000ull));
}

TEST_CASE("penrose parity: nontrivial kernel but not a single odd vector") {
    const auto penrose = penrose_system();
    const auto bases = enumerate_bases(penrose);
    const auto analysis = parity_analysis(incidence_matrix(bases, penrose.size()));
    CHECK(analysis.rank == 25);
    CHECK(analysis.kernel_dim == 15);
    CHECK_FALSE(analysis.odd_weight_exists);
    CHECK(analysis.proof_count == "0");
    CHECK(analysis.rank + analysis.kernel_dim == static_cast<int>(bases.bases.size()));

    // every kernel basis vector re-verified by direct counting
    for (const auto& v : analysis.kernel_basis) {
        std::vector<int> occurrence(40, 0);
        v.for_each([&](int bi) {
            for (int r : bases.bases[static_cast<std::size_t>(bi)])
                ++occurrence[static_cast<std::size_t>(r)];
        });
        for (int o : occurrence) CHECK(o % 2 == 0);
    }

    // brute force over all 2^15 kernel vectors agrees
    CHECK(brute_force_odd_kernel_count(analysis) == 0);
    CHECK(enumerate_parity_proofs(analysis, 100, 0).empty());
}

TEST_CASE("e8 parity: over a billion proofs with verifiable certificates") {
    const auto e8 = system_graph(SystemId::E8);
    const auto bases = enumerate_bases(e8);
    const auto analysis = parity_analysis(incidence_matrix(bases, e8.size()));
    CHECK(analysis.rank == 84);
    CHECK(analysis.kernel_dim == 1941);
    CHECK(analysis.odd_weight_exists);
    CHECK(analysis.proof_count == pow2_decimal(1940));
    CHECK(decimal_greater_than(analysis.proof_count, 1000000000ull));

    const auto certs = enumerate_parity_proofs(analysis, 100, 0);
    REQUIRE(certs.size() == 100);
    std::size_t last_weight = 0;
    std::set<std::vector<int>> distinct;
    for (const auto& cert : certs) {
        CHECK(cert.basis_indices.size() >= last_weight);  // nondecreasing weight
        last_weight = cert.basis_indices.size();
        CHECK(cert.basis_indices.size() % 2 == 1);
        distinct.insert(cert.basis_indices);
        const auto v = verify_parity_proof(bases, e8.size(), cert.basis_indices);
        CHECK(v.valid);
    }
    CHECK(distinct.size() == 100);

    // max-weight bound is respected
    for (const auto& cert : enumerate_parity_proofs(analysis, 100, 9))
        CHECK(cert.basis_indices.size() <= 9);
    CHECK(enumerate_parity_proofs(analysis, 0, 0).empty());
}

TEST_CASE("verify_parity_proof counts independently") {
    const auto e8 = system_graph(SystemId::E8);
    const auto bases = enumerate_bases(e8);
    CHECK_FALSE(verify_parity_proof(bases, e8.size(), {}).valid);

    // all 2025 bases: odd cardinality but every ray occurs 135 times
    std::vector<int> all(bases.bases.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
    const auto v = verify_parity_proof(bases, e8.size(), all);
    CHECK_FALSE(v.valid);
    CHECK(v.reason.find("odd number") != std::string::npos);

    CHECK_THROWS_AS(verify_parity_proof(bases, e8.size(), {9999}), std::out_of_range);
}

TEST_CASE("single-basis toy system") {
    const auto toy = single_basis_system();
    const auto bases = enumerate_bases(toy);
    const auto analysis = parity_analysis(incidence_matrix(bases, 4));
    CHECK(analysis.kernel_dim == 0);
    CHECK(analysis.proof_count == "0");

    const auto outcome = ks_colorable(toy, bases);
    CHECK(outcome.colorable);
    CHECK(coloring_satisfies(toy, bases, outcome.assignment));
    int ones = 0;
    for (auto b : outcome.assignment) ones += b;
    CHECK(ones == 1);
}

TEST_CASE("penrose system is not colorable") {
    const auto penrose = penrose_system();
    const auto bases = enumerate_bases(penrose);
    const auto outcome = ks_colorable(penrose, bases);
    CHECK_FALSE(outcome.colorable);
    CHECK(outcome.complete);
    CHECK(outcome.nodes_explored > 0);

    // randomized variable orders agree
    for (std::uint64_t seed : {1ull, 42ull, 20240810ull}) {
        ColoringOptions opts;
        opts.order_seed = seed;
        const auto shuffled = ks_colorable(penrose, bases, opts);
        CHECK_FALSE(shuffled.colorable);
        CHECK(shuffled.complete);
    }

    // thread split explores the same tree
    ColoringOptions par;
    par.threads = 4;
    const auto parallel = ks_colorable(penrose, bases, par);
    CHECK_FALSE(parallel.colorable);
    CHECK(parallel.complete);
    CHECK(parallel.nodes_explored == outcome.nodes_explored);
}

TEST_CASE("f148 system is not colorable") {
    const auto f = system_graph(SystemId::F148);
    const auto bases = enumerate_bases(f);
    const auto outcome = ks_colorable(f, bases);
    CHECK_FALSE(outcome.colorable);
    CHECK(outcome.complete);
}

TEST_CASE("removing one basis leaves the parity kernel all-even") {
    const auto penrose = penrose_system();
    auto bases = enumerate_bases(penrose);
    bases.bases.erase(bases.bases.begin());
    const auto analysis = parity_analysis(incidence_matrix(bases, penrose.size()));
    CHECK_FALSE(analysis.odd_weight_exists);
    CHECK(analysis.proof_count == "0");
    // the coloring engine still proves noncolorability from the full table;
    // the 39-basis restriction is undetermined by parity alone.
    CHECK(analysis.kernel_dim > 0);
}

TEST_CASE("colorable example keeps rule (b) under adjacency beyond bases") {
    // two disjoint bases plus a cross orthogonality: still colorable, and the
    // assignment respects the cross edge
    std::vector<LabeledRay> rays;
    const Eisenstein one = Eisenstein::one();
    const Eisenstein w = Eisenstein::omega();
    // basis 1: coordinate rays
    for (int p = 0; p < 4; ++p) {
        ExactRay e{};
        e[p] = one;
        rays.push_back({"a" + std::to_string(p), e});
    }
    // basis 2: a rotated orthogonal tetrad sharing orthogonalities with basis 1
    rays.push_back({"b0", ExactRay{one, one, one, {}}});
    rays.push_back({"b1", ExactRay{one, w, w * w, {}}});
    rays.push_back({"b2", ExactRay{one, w * w, w, {}}});
    const auto system = build_orthogonality_graph(rays);
    const auto bases = enumerate_bases(system);
    const auto outcome = ks_colorable(system, bases);
    if (outcome.colorable) CHECK(coloring_satisfies(system, bases, outcome.assignment));
}
