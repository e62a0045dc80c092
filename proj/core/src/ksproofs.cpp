#include "wittingrays/ksproofs.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <numeric>
#include <random>
#include <stdexcept>
#include <thread>
#include <tuple>

namespace wittingrays {

IncidenceMatrixGF2 incidence_matrix(const BasisTable& bases, int ray_count) {
    IncidenceMatrixGF2 m;
    m.rows = static_cast<int>(bases.bases.size());
    m.cols = ray_count;
    m.row_bits.reserve(bases.bases.size());
    for (const auto& b : bases.bases) {
        BitVec row(static_cast<std::size_t>(ray_count));
        for (int r : b) row.set(static_cast<std::size_t>(r));
        m.row_bits.push_back(std::move(row));
    }
    return m;
}

ParityAnalysis parity_analysis(const IncidenceMatrixGF2& m) {
    const int nb = m.rows, nr = m.cols;
    // Work on the transpose: one row per ray over basis-index bits; the left
    // kernel of M is the kernel of this matrix.
    std::vector<BitVec> a(static_cast<std::size_t>(nr), BitVec(static_cast<std::size_t>(nb)));
    for (int b = 0; b < nb; ++b)
        m.row_bits[static_cast<std::size_t>(b)].for_each(
            [&](int r) { a[static_cast<std::size_t>(r)].set(static_cast<std::size_t>(b)); });

    std::map<int, BitVec> pivots;  // pivot column -> reduced row
    for (int r = 0; r < nr; ++r) {
        BitVec row = a[static_cast<std::size_t>(r)];
        for (const auto& [pc, prow] : pivots)
            if (row.test(static_cast<std::size_t>(pc))) row ^= prow;
        if (!row.any()) continue;
        const int pc = row.highest_bit();
        for (auto& [c, prow] : pivots)
            if (prow.test(static_cast<std::size_t>(pc))) prow ^= row;
        pivots.emplace(pc, std::move(row));
    }

    ParityAnalysis out;
    out.rank = static_cast<int>(pivots.size());
    out.kernel_dim = nb - out.rank;
    for (int f = 0; f < nb; ++f) {
        if (pivots.count(f)) continue;
        BitVec v(static_cast<std::size_t>(nb));
        v.set(static_cast<std::size_t>(f));
        for (const auto& [pc, prow] : pivots)
            if (prow.test(static_cast<std::size_t>(f))) v.set(static_cast<std::size_t>(pc));
        out.kernel_basis.push_back(std::move(v));
    }
    for (const auto& v : out.kernel_basis)
        if (v.count() % 2 == 1) out.odd_weight_exists = true;
    out.proof_count = out.odd_weight_exists ? pow2_decimal(out.kernel_dim - 1) : "0";
    return out;
}

std::string pow2_decimal(int k) {
    if (k < 0) throw std::invalid_argument("pow2_decimal: negative exponent");
    std::vector<int> digits{1};  // little-endian decimal digits
    for (int i = 0; i < k; ++i) {
        int carry = 0;
        for (auto& d : digits) {
            const int v = 2 * d + carry;
            d = v % 10;
            carry = v / 10;
        }
        if (carry) digits.push_back(carry);
    }
    std::string s;
    for (auto it = digits.rbegin(); it != digits.rend(); ++it)
        s += static_cast<char>('0' + *it);
    return s;
}

bool decimal_greater_than(const std::string& decimal, std::uint64_t threshold) {
    const std::string t = std::to_string(threshold);
    if (decimal.size() != t.size()) return decimal.size() > t.size();
    return decimal > t;
}

namespace {

std::vector<int> sorted_support(const BitVec& v) { return v.support(); }

}  // namespace

std::vector<ParityProofCertificate> enumerate_parity_proofs(const ParityAnalysis& analysis,
                                                            std::size_t limit,
                                                            std::size_t max_weight) {
    std::vector<ParityProofCertificate> out;
    if (limit == 0 || !analysis.odd_weight_exists) return out;
    const std::size_t k = analysis.kernel_basis.size();
    const std::size_t bound = max_weight == 0 ? SIZE_MAX : max_weight;

    if (k <= 20) {
        // Exhaustive walk of the kernel in Gray-code order.
        using Entry = std::pair<std::size_t, std::vector<int>>;  // (weight, support)
        std::vector<Entry> found;
        BitVec acc(analysis.kernel_basis.empty() ? 0 : analysis.kernel_basis[0].size());
        std::uint32_t gray = 0;
        for (std::uint64_t i = 1; i < (std::uint64_t{1} << k); ++i) {
            const std::uint32_t g = static_cast<std::uint32_t>(i ^ (i >> 1));
            const std::uint32_t diff = g ^ gray;
            acc ^= analysis.kernel_basis[static_cast<std::size_t>(std::countr_zero(diff))];
            gray = g;
            const std::size_t w = acc.count();
            if (w % 2 == 1 && w <= bound) found.emplace_back(w, sorted_support(acc));
        }
        std::sort(found.begin(), found.end());
        if (found.size() > limit) found.resize(limit);
        out.reserve(found.size());
        for (auto& [w, support] : found) out.push_back({std::move(support)});
        return out;
    }

    // Bounded branch-and-bound over single kernel-basis vectors and pairwise
    // sums; w(a^b) >= |w(a)-w(b)| prunes pairs over the weight bound. The
    // combinations are all distinct because the basis is independent.
    using Combo = std::tuple<std::size_t, std::size_t, std::size_t>;  // weight, i, j
    constexpr std::size_t kNone = SIZE_MAX;
    std::vector<Combo> combos;
    std::vector<std::size_t> weights(k);
    for (std::size_t i = 0; i < k; ++i) weights[i] = analysis.kernel_basis[i].count();
    for (std::size_t i = 0; i < k; ++i)
        if (weights[i] % 2 == 1 && weights[i] <= bound) combos.emplace_back(weights[i], i, kNone);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j) {
            if ((weights[i] + weights[j]) % 2 == 0) continue;  // even sum parity
            const std::size_t lo = weights[i] < weights[j] ? weights[j] - weights[i]
                                                           : weights[i] - weights[j];
            if (lo > bound) continue;
            const std::size_t w = (analysis.kernel_basis[i] ^ analysis.kernel_basis[j]).count();
            if (w <= bound) combos.emplace_back(w, i, j);
        }
    std::sort(combos.begin(), combos.end());
    if (combos.size() > limit) combos.resize(limit);
    out.reserve(combos.size());
    for (const auto& [w, i, j] : combos) {
        BitVec v = analysis.kernel_basis[i];
        if (j != kNone) v ^= analysis.kernel_basis[j];
        out.push_back({sorted_support(v)});
    }
    return out;
}

ParityVerification verify_parity_proof(const BasisTable& bases, int ray_count,
                                       const std::vector<int>& subset) {
    for (int b : subset)
        if (b < 0 || b >= static_cast<int>(bases.bases.size()))
            throw std::out_of_range("verify_parity_proof: basis index out of range");
    if (subset.size() % 2 == 0)
        return {false, "subset cardinality is even"};
    std::vector<int> occurrence(static_cast<std::size_t>(ray_count), 0);
    for (int b : subset)
        for (int r : bases.bases[static_cast<std::size_t>(b)])
            ++occurrence[static_cast<std::size_t>(r)];
    for (int r = 0; r < ray_count; ++r)
        if (occurrence[static_cast<std::size_t>(r)] % 2 != 0)
            return {false, "ray " + std::to_string(r) + " occurs an odd number of times"};
    return {true, ""};
}

std::uint64_t brute_force_odd_kernel_count(const ParityAnalysis& analysis) {
    const std::size_t k = analysis.kernel_basis.size();
    if (k > 24) throw std::invalid_argument("brute_force_odd_kernel_count: kernel too large");
    std::uint64_t odd = 0;
    BitVec acc(analysis.kernel_basis.empty() ? 0 : analysis.kernel_basis[0].size());
    std::uint32_t gray = 0;
    for (std::uint64_t i = 1; i < (std::uint64_t{1} << k); ++i) {
        const std::uint32_t g = static_cast<std::uint32_t>(i ^ (i >> 1));
        acc ^= analysis.kernel_basis[static_cast<std::size_t>(std::countr_zero(g ^ gray))];
        gray = g;
        if (acc.count() % 2 == 1) ++odd;
    }
    return odd;
}

namespace {

struct Searcher {
    const std::vector<BitVec>& adj;
    const std::vector<std::vector<int>>& bases;
    std::vector<int> ray_rank;    // branching order rank per ray
    std::vector<int> basis_rank;  // tie-break order per basis
    std::vector<std::uint8_t> state;  // 0 unset, 1 true, 2 false
    std::uint64_t nodes = 0;

    static constexpr std::uint8_t kUnset = 0, kTrue = 1, kFalse = 2;

    bool assign_true(int r, std::vector<int>& trail);

    bool set_false(int r, std::vector<int>& trail) {
        if (state[static_cast<std::size_t>(r)] == kTrue) return false;
        if (state[static_cast<std::size_t>(r)] == kUnset) {
            state[static_cast<std::size_t>(r)] = kFalse;
            trail.push_back(r);
        }
        return true;
    }

    bool propagate(std::vector<int>& trail) {
        bool changed = true;
        while (changed) {
            changed = false;
            for (const auto& basis : bases) {
                int n_true = 0, n_unset = 0, unset_ray = -1;
                for (int r : basis) {
                    const auto s = state[static_cast<std::size_t>(r)];
                    if (s == kTrue) ++n_true;
                    else if (s == kUnset) { ++n_unset; unset_ray = r; }
                }
                if (n_true > 1) return false;
                if (n_true == 1) {
                    for (int r : basis)
                        if (state[static_cast<std::size_t>(r)] == kUnset) {
                            state[static_cast<std::size_t>(r)] = kFalse;
                            trail.push_back(r);
                            changed = true;
                        }
                } else if (n_unset == 0) {
                    return false;  // basis has no true ray left
                } else if (n_unset == 1) {
                    if (!assign_true(unset_ray, trail)) return false;
                    changed = true;
                }
            }
        }
        return true;
    }

    bool search(std::optional<std::vector<std::uint8_t>>& solution) {
        ++nodes;
        // pick the basis without a true ray having the fewest undecided rays
        int best_basis = -1;
        std::size_t best_count = SIZE_MAX;
        for (std::size_t bi = 0; bi < bases.size(); ++bi) {
            int n_true = 0, n_unset = 0;
            for (int r : bases[bi]) {
                const auto s = state[static_cast<std::size_t>(r)];
                if (s == kTrue) { n_true = 1; break; }
                if (s == kUnset) ++n_unset;
            }
            if (n_true) continue;
            const std::size_t key = static_cast<std::size_t>(n_unset) * bases.size() +
                                    static_cast<std::size_t>(basis_rank[bi]);
            if (key < best_count) { best_count = key; best_basis = static_cast<int>(bi); }
        }
        if (best_basis < 0) {
            std::vector<std::uint8_t> assignment(state.size(), 0);
            for (std::size_t i = 0; i < state.size(); ++i)
                assignment[i] = state[i] == kTrue ? 1 : 0;
            solution = std::move(assignment);
            return true;
        }
        std::vector<int> candidates;
        for (int r : bases[static_cast<std::size_t>(best_basis)])
            if (state[static_cast<std::size_t>(r)] == kUnset) candidates.push_back(r);
        std::sort(candidates.begin(), candidates.end(), [&](int a, int b) {
            return ray_rank[static_cast<std::size_t>(a)] < ray_rank[static_cast<std::size_t>(b)];
        });
        for (int r : candidates) {
            std::vector<int> trail;
            if (assign_true(r, trail) && propagate(trail) && search(solution)) return true;
            for (int t : trail) state[static_cast<std::size_t>(t)] = kUnset;
        }
        return false;
    }
};

bool Searcher::assign_true(int r, std::vector<int>& trail) {
    state[static_cast<std::size_t>(r)] = kTrue;
    trail.push_back(r);
    bool ok = true;
    adj[static_cast<std::size_t>(r)].for_each([&](int o) {
        if (!ok) return;
        if (state[static_cast<std::size_t>(o)] == kTrue) { ok = false; return; }
        if (state[static_cast<std::size_t>(o)] == kUnset) {
            state[static_cast<std::size_t>(o)] = kFalse;
            trail.push_back(o);
        }
    });
    return ok;
}

}  // namespace

ColoringOutcome ks_colorable(const RaySystem& system, const BasisTable& bases,
                             const ColoringOptions& options) {
    const int n = system.size();
    std::vector<int> ray_rank(static_cast<std::size_t>(n));
    std::iota(ray_rank.begin(), ray_rank.end(), 0);
    std::vector<int> basis_rank(bases.bases.size());
    std::iota(basis_rank.begin(), basis_rank.end(), 0);
    if (options.order_seed != 0) {
        std::mt19937_64 rng(options.order_seed);
        std::shuffle(ray_rank.begin(), ray_rank.end(), rng);
        std::shuffle(basis_rank.begin(), basis_rank.end(), rng);
    }

    ColoringOutcome outcome;
    Searcher root{system.adjacency, bases.bases, ray_rank, basis_rank,
                  std::vector<std::uint8_t>(static_cast<std::size_t>(n), 0)};
    ++root.nodes;  // the root itself

    {
        std::vector<int> trail;
        if (!root.propagate(trail)) {
            outcome.complete = true;
            outcome.nodes_explored = root.nodes;
            return outcome;
        }
    }

    // Root split: branch on the first decision; each branch is explored to
    // its own completion so the totals do not depend on the thread count.
    int root_basis = -1;
    std::size_t best_count = SIZE_MAX;
    for (std::size_t bi = 0; bi < bases.bases.size(); ++bi) {
        int n_true = 0, n_unset = 0;
        for (int r : bases.bases[bi]) {
            const auto s = root.state[static_cast<std::size_t>(r)];
            if (s == Searcher::kTrue) { n_true = 1; break; }
            if (s == Searcher::kUnset) ++n_unset;
        }
        if (n_true) continue;
        const std::size_t key = static_cast<std::size_t>(n_unset) * bases.bases.size() +
                                static_cast<std::size_t>(basis_rank[bi]);
        if (key < best_count) { best_count = key; root_basis = static_cast<int>(bi); }
    }
    if (root_basis < 0) {
        outcome.colorable = true;
        outcome.assignment.assign(static_cast<std::size_t>(n), 0);
        for (int i = 0; i < n; ++i)
            outcome.assignment[static_cast<std::size_t>(i)] =
                root.state[static_cast<std::size_t>(i)] == Searcher::kTrue ? 1 : 0;
        outcome.nodes_explored = root.nodes;
        return outcome;
    }

    std::vector<int> branch_rays;
    for (int r : bases.bases[static_cast<std::size_t>(root_basis)])
        if (root.state[static_cast<std::size_t>(r)] == Searcher::kUnset)
            branch_rays.push_back(r);
    std::sort(branch_rays.begin(), branch_rays.end(), [&](int a, int b) {
        return ray_rank[static_cast<std::size_t>(a)] < ray_rank[static_cast<std::size_t>(b)];
    });

    struct BranchResult {
        std::optional<std::vector<std::uint8_t>> solution;
        std::uint64_t nodes = 0;
    };
    std::vector<BranchResult> results(branch_rays.size());

    auto run_branch = [&](std::size_t bi) {
        Searcher sub{system.adjacency, bases.bases, ray_rank, basis_rank, root.state};
        std::vector<int> trail;
        std::optional<std::vector<std::uint8_t>> solution;
        if (sub.assign_true(branch_rays[bi], trail) && sub.propagate(trail))
            sub.search(solution);
        results[bi].solution = std::move(solution);
        results[bi].nodes = sub.nodes;
    };

    const int threads = std::max(1, options.threads);
    if (threads == 1 || branch_rays.size() <= 1) {
        for (std::size_t i = 0; i < branch_rays.size(); ++i) run_branch(i);
    } else {
        std::vector<std::thread> pool;
        std::atomic<std::size_t> next{0};
        for (int t = 0; t < threads; ++t)
            pool.emplace_back([&] {
                for (std::size_t i = next.fetch_add(1); i < branch_rays.size();
                     i = next.fetch_add(1))
                    run_branch(i);
            });
        for (auto& th : pool) th.join();
    }

    outcome.nodes_explored = root.nodes;
    for (const auto& r : results) outcome.nodes_explored += r.nodes;
    for (const auto& r : results) {
        if (r.solution) {
            outcome.colorable = true;
            outcome.assignment = *r.solution;
            break;  // lowest branch index wins, independent of scheduling
        }
    }
    outcome.complete = !outcome.colorable;
    return outcome;
}

bool coloring_satisfies(const RaySystem& system, const BasisTable& bases,
                        const std::vector<std::uint8_t>& assignment) {
    if (assignment.size() != static_cast<std::size_t>(system.size())) return false;
    for (const auto& b : bases.bases) {
        int n_true = 0;
        for (int r : b) n_true += assignment[static_cast<std::size_t>(r)] ? 1 : 0;
        if (n_true != 1) return false;
    }
    for (int i = 0; i < system.size(); ++i) {
        if (!assignment[static_cast<std::size_t>(i)]) continue;
        bool bad = false;
        system.adjacency[static_cast<std::size_t>(i)].for_each([&](int j) {
            if (assignment[static_cast<std::size_t>(j)]) bad = true;
        });
        if (bad) return false;
    }
    return true;
}

}  // namespace wittingrays
