// Benchmarks for the search kernels: clique listing, GF(2) elimination,
// coloring search, and the monomial equivalence scan.

#include <benchmark/benchmark.h>

#include "wittingrays/report.hpp"

using namespace wittingrays;

namespace {

void BM_WittingGeneration(benchmark::State& state) {
    for (auto _ : state) {
        auto vertices = generate_witting_vertices();
        benchmark::DoNotOptimize(vertices.data());
    }
}
BENCHMARK(BM_WittingGeneration);

void BM_CollapseToRays(benchmark::State& state) {
    const auto vertices = generate_witting_vertices();
    for (auto _ : state) {
        auto collapse = collapse_to_rays(vertices);
        benchmark::DoNotOptimize(collapse.rays.data());
    }
}
BENCHMARK(BM_CollapseToRays);

void BM_GeometricPipeline(benchmark::State& state) {
    for (auto _ : state) {
        auto system = canonical_penrose_system();
        benchmark::DoNotOptimize(system.data());
    }
}
BENCHMARK(BM_GeometricPipeline);

void BM_CliqueEnumeration(benchmark::State& state) {
    const auto names = all_system_id_names();
    const auto id = *parse_system_id(names[static_cast<std::size_t>(state.range(0))]);
    const auto graph = system_graph(id);
    for (auto _ : state) {
        auto bases = enumerate_bases(graph);
        benchmark::DoNotOptimize(bases.bases.data());
    }
    state.SetLabel(system_id_name(id));
}
BENCHMARK(BM_CliqueEnumeration)->Arg(1)->Arg(3)->Arg(4);  // penrose-canonical, e8, f148

void BM_BruteForceBases(benchmark::State& state) {
    const auto graph = system_graph(SystemId::F148);
    for (auto _ : state) {
        auto bases = brute_force_bases_dim4(graph);
        benchmark::DoNotOptimize(bases.bases.data());
    }
}
BENCHMARK(BM_BruteForceBases);

void BM_ParityEliminationE8(benchmark::State& state) {
    const auto graph = system_graph(SystemId::E8);
    const auto bases = enumerate_bases(graph);
    const auto m = incidence_matrix(bases, graph.size());
    for (auto _ : state) {
        auto analysis = parity_analysis(m);
        benchmark::DoNotOptimize(analysis.kernel_dim);
    }
}
BENCHMARK(BM_ParityEliminationE8);

void BM_ParityCertificatesE8(benchmark::State& state) {
    const auto graph = system_graph(SystemId::E8);
    const auto bases = enumerate_bases(graph);
    const auto analysis = parity_analysis(incidence_matrix(bases, graph.size()));
    for (auto _ : state) {
        auto certs = enumerate_parity_proofs(analysis, 100, 0);
        benchmark::DoNotOptimize(certs.data());
    }
}
BENCHMARK(BM_ParityCertificatesE8);

void BM_ColoringSearch(benchmark::State& state) {
    const auto id = state.range(0) == 0 ? SystemId::PenroseCanonical : SystemId::F148;
    const auto graph = system_graph(id);
    const auto bases = enumerate_bases(graph);
    for (auto _ : state) {
        auto outcome = ks_colorable(graph, bases);
        benchmark::DoNotOptimize(outcome.nodes_explored);
    }
    state.SetLabel(system_id_name(id));
}
BENCHMARK(BM_ColoringSearch)->Arg(0)->Arg(1);

void BM_MonomialSearch(benchmark::State& state) {
    const auto a = build_orthogonality_graph(f148_subsystem(1));
    const auto b = build_orthogonality_graph(f148_subsystem(8));
    for (auto _ : state) {
        auto m = find_monomial_equivalence(a, b);
        benchmark::DoNotOptimize(m);
    }
}
BENCHMARK(BM_MonomialSearch);

}  // namespace

BENCHMARK_MAIN();
