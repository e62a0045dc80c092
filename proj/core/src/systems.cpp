#include "wittingrays/systems.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace wittingrays {

namespace {

std::vector<BitVec> adjacency_from(const std::vector<bool>& orth, int n) {
    std::vector<BitVec> adj(n, BitVec(static_cast<std::size_t>(n)));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (orth[static_cast<std::size_t>(i) * n + j]) {
                adj[i].set(j);
                adj[j].set(i);
            }
    return adj;
}

void require_canonical_distinct(const std::vector<ExactRay>& rays) {
    std::set<ExactRay> seen;
    for (const auto& r : rays) {
        if (canonicalize(r) != r)
            throw std::invalid_argument("build_orthogonality_graph: ray not canonical");
        if (!seen.insert(r).second)
            throw std::invalid_argument("build_orthogonality_graph: duplicate ray");
    }
}

}  // namespace

RaySystem build_orthogonality_graph(const std::vector<LabeledRay>& rays) {
    RaySystem s;
    s.dim = 4;
    s.kind = ScalarKind::Eisenstein;
    const int n = static_cast<int>(rays.size());
    for (const auto& r : rays) {
        s.labels.push_back(r.label);
        s.exact.push_back(r.ray);
    }
    require_canonical_distinct(s.exact);
    std::vector<bool> orth(static_cast<std::size_t>(n) * n, false);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            orth[static_cast<std::size_t>(i) * n + j] =
                eis_inner(s.exact[i], s.exact[j]).is_zero();
    s.adjacency = adjacency_from(orth, n);
    return s;
}

RaySystem build_orthogonality_graph(const std::vector<LabeledExactRay>& rays) {
    std::vector<LabeledRay> named;
    named.reserve(rays.size());
    for (const auto& r : rays) named.push_back({to_string(r.label), r.ray});
    return build_orthogonality_graph(named);
}

RaySystem build_orthogonality_graph(const std::vector<RealRay8>& rays) {
    RaySystem s;
    s.dim = 8;
    s.kind = ScalarKind::Real8;
    const int n = static_cast<int>(rays.size());
    s.real8 = rays;
    for (int i = 0; i < n; ++i) {
        std::ostringstream os;
        os << 'r';
        if (i < 100) os << '0';
        if (i < 10) os << '0';
        os << i;
        s.labels.push_back(os.str());
    }
    std::vector<bool> orth(static_cast<std::size_t>(n) * n, false);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            orth[static_cast<std::size_t>(i) * n + j] =
                realified_inner(rays[i].preimage.c, rays[j].preimage.c) == HalfInteger{0};
    s.adjacency = adjacency_from(orth, n);
    return s;
}

RaySystem build_orthogonality_graph(const std::vector<LabeledFloatRay>& rays, double tol) {
    RaySystem s;
    s.dim = 4;
    s.kind = ScalarKind::Float;
    const int n = static_cast<int>(rays.size());
    std::vector<FloatRay> unit;
    for (const auto& r : rays) {
        s.labels.push_back(to_string(r.label));
        s.floats.push_back(r.ray);
        unit.push_back(normalized(r.ray));
    }
    std::vector<bool> orth(static_cast<std::size_t>(n) * n, false);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            orth[static_cast<std::size_t>(i) * n + j] =
                std::abs(complex_inner(unit[i], unit[j])) < tol;
    s.adjacency = adjacency_from(orth, n);
    return s;
}

namespace {

/// Degeneracy order: repeatedly remove a minimum-degree vertex (lowest index
/// on ties).
std::vector<int> degeneracy_order(const std::vector<BitVec>& adj) {
    const int n = static_cast<int>(adj.size());
    std::vector<int> deg(n), order;
    std::vector<bool> removed(n, false);
    for (int i = 0; i < n; ++i) deg[i] = static_cast<int>(adj[i].count());
    order.reserve(n);
    for (int step = 0; step < n; ++step) {
        int best = -1;
        for (int i = 0; i < n; ++i)
            if (!removed[i] && (best == -1 || deg[i] < deg[best])) best = i;
        removed[best] = true;
        order.push_back(best);
        adj[best].for_each([&](int j) {
            if (!removed[j]) --deg[j];
        });
    }
    return order;
}

void list_cliques(const std::vector<BitVec>& later, std::vector<int>& clique,
                  const BitVec& cand, int need, std::vector<std::vector<int>>& out) {
    if (need == 0) {
        out.push_back(clique);
        return;
    }
    if (cand.count() < static_cast<std::size_t>(need)) return;
    cand.for_each([&](int v) {
        clique.push_back(v);
        list_cliques(later, clique, cand & later[v], need - 1, out);
        clique.pop_back();
    });
}

}  // namespace

BasisTable enumerate_bases(const RaySystem& system) {
    const int n = system.size();
    const auto order = degeneracy_order(system.adjacency);
    std::vector<int> rank(n);
    for (int i = 0; i < n; ++i) rank[order[i]] = i;
    // later[v] = neighbors of v that come after v in the degeneracy order,
    // expressed in order positions so candidate sets shrink monotonically.
    std::vector<BitVec> later(n, BitVec(static_cast<std::size_t>(n)));
    for (int v = 0; v < n; ++v)
        system.adjacency[v].for_each([&](int u) {
            if (rank[u] > rank[v]) later[rank[v]].set(rank[u]);
        });

    std::vector<std::vector<int>> found;
    std::vector<int> clique;
    for (int p = 0; p < n; ++p) {
        clique.push_back(p);
        list_cliques(later, clique, later[p], system.dim - 1, found);
        clique.pop_back();
    }
    BasisTable table;
    table.bases.reserve(found.size());
    for (auto& c : found) {
        for (auto& p : c) p = order[p];
        std::sort(c.begin(), c.end());
        table.bases.push_back(std::move(c));
    }
    std::sort(table.bases.begin(), table.bases.end());
    return table;
}

BasisTable brute_force_bases_dim4(const RaySystem& system) {
    if (system.dim != 4)
        throw std::invalid_argument("brute_force_bases_dim4: dim must be 4");
    const int n = system.size();
    const auto& adj = system.adjacency;
    BasisTable table;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            if (!adj[a].test(b)) continue;
            for (int c = b + 1; c < n; ++c) {
                if (!adj[a].test(c) || !adj[b].test(c)) continue;
                for (int d = c + 1; d < n; ++d)
                    if (adj[a].test(d) && adj[b].test(d) && adj[c].test(d))
                        table.bases.push_back({a, b, c, d});
            }
        }
    std::sort(table.bases.begin(), table.bases.end());
    return table;
}

namespace {

void bron_kerbosch(const std::vector<BitVec>& adj, BitVec r, BitVec p, BitVec x,
                   std::vector<std::vector<int>>& out) {
    if (!p.any() && !x.any()) {
        out.push_back(r.support());
        return;
    }
    // pivot: vertex of P u X with the most neighbors in P
    int pivot = -1;
    std::size_t best = 0;
    auto consider = [&](int v) {
        const std::size_t k = (p & adj[v]).count();
        if (pivot == -1 || k > best) { pivot = v; best = k; }
    };
    p.for_each(consider);
    x.for_each(consider);
    BitVec ext = p;
    if (pivot >= 0) {
        BitVec masked = ext;
        adj[pivot].for_each([&](int u) {
            if (masked.test(u)) masked.reset(u);
        });
        ext = masked;
    }
    ext.for_each([&](int v) {
        BitVec r2 = r;
        r2.set(v);
        bron_kerbosch(adj, r2, p & adj[v], x & adj[v], out);
        p.reset(v);
        x.set(v);
    });
}

}  // namespace

std::vector<std::vector<int>> maximal_cliques(const RaySystem& system) {
    const int n = system.size();
    BitVec p(static_cast<std::size_t>(n)), x(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) p.set(i);
    std::vector<std::vector<int>> out;
    bron_kerbosch(system.adjacency, BitVec(static_cast<std::size_t>(n)), p, x, out);
    for (auto& c : out) std::sort(c.begin(), c.end());
    std::sort(out.begin(), out.end());
    return out;
}

std::string SystemSignature::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& [occ, count] : ray_occurrence_profile) {
        if (!first) os << ' ';
        os << count << '_' << occ;
        first = false;
    }
    os << '-' << basis_count << '_' << basis_size;
    return os.str();
}

SystemSignature signature(const RaySystem& system, const BasisTable& bases) {
    std::vector<std::int64_t> occ(static_cast<std::size_t>(system.size()), 0);
    for (const auto& b : bases.bases)
        for (int i : b) ++occ[static_cast<std::size_t>(i)];
    std::map<std::int64_t, std::int64_t> profile;
    for (auto o : occ) ++profile[o];
    SystemSignature sig;
    for (auto it = profile.rbegin(); it != profile.rend(); ++it)
        sig.ray_occurrence_profile.emplace_back(it->first, it->second);
    sig.basis_count = static_cast<std::int64_t>(bases.bases.size());
    sig.basis_size = system.dim;
    std::int64_t lhs = 0;
    for (const auto& [o, c] : sig.ray_occurrence_profile) lhs += o * c;
    if (lhs != sig.basis_count * sig.basis_size)
        throw std::logic_error("signature: occurrence identity violated");
    return sig;
}

namespace {

// Unit rays as zeta12 exponents; -1 encodes a zero component. The Z[w] units
// are the even powers of zeta12 = exp(i pi/6).
using UnitRay = std::array<std::int8_t, 4>;

std::int8_t unit_exponent(const Eisenstein& e) {
    if (e == Eisenstein{1, 0}) return 0;
    if (e == Eisenstein{1, 1}) return 2;    // -w^2
    if (e == Eisenstein{0, 1}) return 4;    // w
    if (e == Eisenstein{-1, 0}) return 6;   // -1
    if (e == Eisenstein{-1, -1}) return 8;  // w^2
    if (e == Eisenstein{0, -1}) return 10;  // -w
    throw std::domain_error("monomial search: component is not a unit");
}

Eisenstein unit_from_exponent(int e) {
    switch (((e % 12) + 12) % 12) {
        case 0: return {1, 0};
        case 2: return {1, 1};
        case 4: return {0, 1};
        case 6: return {-1, 0};
        case 8: return {-1, -1};
        case 10: return {0, -1};
        default:
            throw std::domain_error("monomial map image leaves Z[w]");
    }
}

UnitRay to_unit_ray(const ExactRay& r) {
    UnitRay u{};
    for (int i = 0; i < 4; ++i)
        u[i] = r[i].is_zero() ? std::int8_t{-1} : unit_exponent(r[i]);
    return u;
}

UnitRay apply_unit(const MonomialMap& m, const UnitRay& r) {
    UnitRay out{};
    for (int i = 0; i < 4; ++i) {
        const std::int8_t c = r[m.perm[i]];
        out[i] = c < 0 ? std::int8_t{-1}
                       : static_cast<std::int8_t>((c + m.phase[i]) % 12);
    }
    for (int i = 0; i < 4; ++i) {
        if (out[i] >= 0) {
            const std::int8_t lead = out[i];
            for (int j = i; j < 4; ++j)
                if (out[j] >= 0) out[j] = static_cast<std::int8_t>((out[j] - lead + 12) % 12);
            break;
        }
    }
    return out;
}

std::vector<UnitRay> to_unit_rays(const RaySystem& s) {
    if (s.kind != ScalarKind::Eisenstein || s.dim != 4)
        throw std::invalid_argument("monomial search needs exact dim-4 systems");
    std::vector<UnitRay> out;
    out.reserve(s.exact.size());
    for (const auto& r : s.exact) out.push_back(to_unit_ray(r));
    return out;
}

bool maps_onto(const MonomialMap& m, const std::vector<UnitRay>& a,
               const std::set<UnitRay>& bset) {
    for (const auto& r : a)
        if (!bset.count(apply_unit(m, r))) return false;
    return true;
}

}  // namespace

ExactRay apply_monomial_map(const MonomialMap& map, const ExactRay& ray) {
    const UnitRay img = apply_unit(map, to_unit_ray(ray));
    ExactRay out{};
    for (int i = 0; i < 4; ++i)
        out[i] = img[i] < 0 ? Eisenstein::zero() : unit_from_exponent(img[i]);
    return canonicalize(out);
}

std::optional<MonomialMap> find_phases_for_permutation(const RaySystem& a,
                                                       const RaySystem& b,
                                                       const std::array<int, 4>& perm) {
    const auto ua = to_unit_rays(a);
    const auto ub = to_unit_rays(b);
    if (ua.size() != ub.size()) return std::nullopt;
    const std::set<UnitRay> bset(ub.begin(), ub.end());
    MonomialMap m;
    m.perm = perm;
    for (int p1 = 0; p1 < 12; ++p1)
        for (int p2 = 0; p2 < 12; ++p2)
            for (int p3 = 0; p3 < 12; ++p3) {
                m.phase = {0, p1, p2, p3};
                if (maps_onto(m, ua, bset)) return m;
            }
    return std::nullopt;
}

std::optional<MonomialMap> find_monomial_equivalence(const RaySystem& a,
                                                     const RaySystem& b) {
    if (a.size() != 40 || b.size() != 40)
        throw std::invalid_argument("find_monomial_equivalence: expected 40-ray systems");
    std::array<int, 4> perm{0, 1, 2, 3};
    do {
        if (auto m = find_phases_for_permutation(a, b, perm)) return m;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return std::nullopt;
}

bool monomial_map_sends(const RaySystem& a, const RaySystem& b, const MonomialMap& map) {
    const auto ua = to_unit_rays(a);
    const auto ub = to_unit_rays(b);
    if (ua.size() != ub.size()) return false;
    const std::set<UnitRay> bset(ub.begin(), ub.end());
    std::set<UnitRay> image;
    for (const auto& r : ua) image.insert(apply_unit(map, r));
    return image == bset;
}

PenroseLabelReport match_penrose_labels(
    const std::vector<LabeledExactRay>& system, const BasisTable& bases,
    const std::vector<std::array<std::string, 4>>& published_sets) {
    PenroseLabelReport report;
    std::map<std::string, int> index;
    for (std::size_t i = 0; i < system.size(); ++i)
        index[to_string(system[i].label)] = static_cast<int>(i);

    std::set<std::vector<int>> enumerated(bases.bases.begin(), bases.bases.end());
    std::set<std::vector<int>> published;
    auto set_to_string = [&](const std::vector<int>& b) {
        std::string s;
        for (int i : b) {
            if (!s.empty()) s += ' ';
            s += to_string(system[static_cast<std::size_t>(i)].label);
        }
        return s;
    };
    for (const auto& labels : published_sets) {
        std::vector<int> b;
        for (const auto& l : labels) b.push_back(index.at(l));
        std::sort(b.begin(), b.end());
        published.insert(b);
    }
    for (const auto& b : published)
        if (!enumerated.count(b)) report.missing.push_back(set_to_string(b));
    for (const auto& b : enumerated)
        if (!published.count(b)) report.extra.push_back(set_to_string(b));
    report.all_found = report.missing.empty() && report.extra.empty();

    // Structural families from the dodecahedron model.
    const auto model = build_dodecahedron();
    auto idx_of = [&](RayLabel l) { return index.at(to_string(l)); };
    for (auto v : all_vertices()) {
        const auto ns = neighbors(model, v);
        std::vector<int> b{idx_of({v, true}), idx_of({ns[0], false}),
                           idx_of({ns[1], false}), idx_of({ns[2], false})};
        std::sort(b.begin(), b.end());
        if (enumerated.count(b)) ++report.neighborhood_bases;
    }
    std::set<std::vector<int>> antipodal_seen;
    for (auto v : all_vertices()) {
        const auto a = antipode(model, v);
        std::vector<int> b{idx_of({v, false}), idx_of({v, true}), idx_of({a, false}),
                           idx_of({a, true})};
        std::sort(b.begin(), b.end());
        if (enumerated.count(b)) antipodal_seen.insert(b);
    }
    report.antipodal_bases = static_cast<int>(antipodal_seen.size());
    for (const auto& b : enumerated) {
        bool all_primed = true;
        for (int i : b)
            if (to_string(system[static_cast<std::size_t>(i)].label).back() != '\'')
                all_primed = false;
        if (all_primed) ++report.implicit_bases;
    }
    return report;
}

}  // namespace wittingrays
