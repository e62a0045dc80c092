#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wittingrays/bitvec.hpp"
#include "wittingrays/systems.hpp"

namespace wittingrays {

/// Basis-by-ray incidence over GF(2), rows packed as bit vectors.
struct IncidenceMatrixGF2 {
    int rows = 0;  // bases
    int cols = 0;  // rays
    std::vector<BitVec> row_bits;
};

IncidenceMatrixGF2 incidence_matrix(const BasisTable& bases, int ray_count);

/// GF(2) kernel summary of the left null space {x : x^T M = 0}. A parity
/// proof is an odd-weight kernel vector, so the proof count is either 0 or
/// 2^(kernel_dim - 1) depending on whether weight parity (a linear functional
/// on the kernel) is identically even.
struct ParityAnalysis {
    int rank = 0;
    int kernel_dim = 0;
    bool odd_weight_exists = false;
    /// Exact decimal value of the proof count (0 or 2^(kernel_dim-1)).
    std::string proof_count;
    std::vector<BitVec> kernel_basis;
};

ParityAnalysis parity_analysis(const IncidenceMatrixGF2& m);

/// 2^k as a decimal string.
std::string pow2_decimal(int k);

/// True when the decimal string exceeds the given threshold.
bool decimal_greater_than(const std::string& decimal, std::uint64_t threshold);

struct ParityProofCertificate {
    std::vector<int> basis_indices;  // sorted, odd cardinality
};

/// Odd-weight kernel vectors in nondecreasing weight order, at most `limit`,
/// each of weight <= max_weight (0 = no bound). Exhaustive over the kernel
/// when kernel_dim <= 20; otherwise a bounded branch-and-bound over single
/// and pairwise kernel-basis combinations.
std::vector<ParityProofCertificate> enumerate_parity_proofs(const ParityAnalysis& analysis,
                                                            std::size_t limit = 100,
                                                            std::size_t max_weight = 0);

struct ParityVerification {
    bool valid = false;
    std::string reason;  // set when invalid
};

/// Independent check by direct counting: odd cardinality and every ray
/// occurring an even number of times within the subset.
ParityVerification verify_parity_proof(const BasisTable& bases, int ray_count,
                                       const std::vector<int>& subset);

/// Count of odd-weight kernel vectors by enumerating all 2^k combinations;
/// only valid for kernel_dim <= 24.
std::uint64_t brute_force_odd_kernel_count(const ParityAnalysis& analysis);

struct ColoringOptions {
    /// 0 keeps the natural variable order; any other value shuffles the
    /// branching order deterministically.
    std::uint64_t order_seed = 0;
    int threads = 1;
};

/// Outcome of the {0,1} coloring search under the two rules: exactly one ray
/// valued 1 per basis, and no two orthogonal rays both valued 1.
struct ColoringOutcome {
    bool colorable = false;
    std::vector<std::uint8_t> assignment;  // per ray, when colorable
    std::uint64_t nodes_explored = 0;
    bool complete = false;  // true when the whole tree was exhausted
};

ColoringOutcome ks_colorable(const RaySystem& system, const BasisTable& bases,
                             const ColoringOptions& options = {});

/// Re-check an assignment against both coloring rules.
bool coloring_satisfies(const RaySystem& system, const BasisTable& bases,
                        const std::vector<std::uint8_t>& assignment);

}  // namespace wittingrays
