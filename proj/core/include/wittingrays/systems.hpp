#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wittingrays/bitvec.hpp"
#include "wittingrays/penrose.hpp"
#include "wittingrays/rays.hpp"
#include "wittingrays/witting.hpp"

namespace wittingrays {

enum class ScalarKind { Eisenstein, Real8, Float };

/// A labeled ray family with its orthogonality graph. Adjacency is exact for
/// the Eisenstein and realified kinds and tolerance-based (1e-9 on unit
/// vectors) for the float kind.
struct RaySystem {
    int dim = 4;  // basis size
    ScalarKind kind = ScalarKind::Eisenstein;
    std::vector<std::string> labels;
    std::vector<ExactRay> exact;    // kind == Eisenstein
    std::vector<RealRay8> real8;    // kind == Real8
    std::vector<FloatRay> floats;   // kind == Float
    std::vector<BitVec> adjacency;  // symmetric, no self loops

    int size() const { return static_cast<int>(labels.size()); }
    int degree(int i) const { return static_cast<int>(adjacency[i].count()); }
};

/// Build from canonical exact rays; throws std::invalid_argument on
/// non-canonical or duplicate rays.
RaySystem build_orthogonality_graph(const std::vector<LabeledRay>& rays);
RaySystem build_orthogonality_graph(const std::vector<LabeledExactRay>& rays);
RaySystem build_orthogonality_graph(const std::vector<RealRay8>& rays);
RaySystem build_orthogonality_graph(const std::vector<LabeledFloatRay>& rays,
                                    double tol = 1e-9);

struct BasisTable {
    std::vector<std::vector<int>> bases;  // sorted index tuples, lexicographic
};

/// Every mutually-orthogonal dim-subset, via clique listing over the
/// degeneracy order. Output sorted lexicographically.
BasisTable enumerate_bases(const RaySystem& system);

/// Independent oracle for dim-4 systems: literal scan of all 4-subsets.
BasisTable brute_force_bases_dim4(const RaySystem& system);

/// All maximal cliques (Bron-Kerbosch with pivoting); used to verify that
/// maximal cliques and dim-subsets coincide on the systems in scope.
std::vector<std::vector<int>> maximal_cliques(const RaySystem& system);

struct SystemSignature {
    // (occurrence count, number of rays with that count), descending by
    // occurrence.
    std::vector<std::pair<std::int64_t, std::int64_t>> ray_occurrence_profile;
    std::int64_t basis_count = 0;
    int basis_size = 0;

    /// e.g. "40_4-40_4" or "4_13 144_7-265_4".
    std::string to_string() const;
};

SystemSignature signature(const RaySystem& system, const BasisTable& bases);

/// A monomial unitary acting on dim-4 rays: out[i] = zeta12^phase[i] * in[perm[i]]
/// with zeta12 = exp(i pi/6) and phase[0] pinned to 0.
struct MonomialMap {
    std::array<int, 4> perm{0, 1, 2, 3};
    std::array<int, 4> phase{0, 0, 0, 0};  // zeta12 exponents
    friend bool operator==(const MonomialMap&, const MonomialMap&) = default;
};

/// Apply to an exact ray whose components are zeros and units, then
/// re-canonicalize. Throws std::domain_error when the image leaves Z[w].
ExactRay apply_monomial_map(const MonomialMap& map, const ExactRay& ray);

/// Exhaustive search over 24 permutations x 12^3 phase triples in canonical
/// order; returns the first map sending A's ray set onto B's, or nullopt.
std::optional<MonomialMap> find_monomial_equivalence(const RaySystem& a,
                                                     const RaySystem& b);

/// Same search restricted to a fixed permutation.
std::optional<MonomialMap> find_phases_for_permutation(const RaySystem& a,
                                                       const RaySystem& b,
                                                       const std::array<int, 4>& perm);

/// True when the map bijects A's rays onto B's projectively.
bool monomial_map_sends(const RaySystem& a, const RaySystem& b, const MonomialMap& map);

/// Structural verification of the published 40-basis table against the
/// labeled canonical system.
struct PenroseLabelReport {
    bool all_found = false;
    int neighborhood_bases = 0;  // implicit ray + three neighbor explicit rays
    int antipodal_bases = 0;     // X X' Y Y' for antipodal pairs
    int implicit_bases = 0;      // all-implicit tetrahedra
    std::vector<std::string> missing;  // published sets not enumerated
    std::vector<std::string> extra;    // enumerated sets not published
};

PenroseLabelReport match_penrose_labels(
    const std::vector<LabeledExactRay>& system, const BasisTable& bases,
    const std::vector<std::array<std::string, 4>>& published_sets);

}  // namespace wittingrays
