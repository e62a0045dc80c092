#include "wittingrays/witting.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace wittingrays {

namespace {

WittingScalar unit_ws(int pow, int sign) {
    Eisenstein e = Eisenstein::omega_pow(pow);
    return WittingScalar::from_eisenstein(sign < 0 ? -e : e);
}

constexpr WittingScalar kZeroWS{};

}  // namespace

std::vector<WittingVertex> generate_witting_vertices() {
    std::vector<WittingVertex> out;
    out.reserve(240);
    // One-zero blocks. Signs are linked: the whole pattern is taken with the
    // upper signs or with all of them flipped, giving 2 x 27 vertices each.
    // Block patterns (upper signs): [0, +, -, +], [-, 0, +, +], [+, -, 0, +]
    // and [-, -, -, 0]; the zero occupies a different slot in each block.
    for (int block = 1; block <= 4; ++block) {
        for (int s = 0; s < 2; ++s) {
            const int sign = s == 0 ? 1 : -1;
            for (int mu = 0; mu < 3; ++mu)
                for (int nu = 0; nu < 3; ++nu)
                    for (int lam = 0; lam < 3; ++lam) {
                        WittingVertex v;
                        switch (block) {
                            case 1:
                                v.c = {kZeroWS, unit_ws(mu, sign), unit_ws(nu, -sign),
                                       unit_ws(lam, sign)};
                                break;
                            case 2:
                                v.c = {unit_ws(mu, -sign), kZeroWS, unit_ws(nu, sign),
                                       unit_ws(lam, sign)};
                                break;
                            case 3:
                                v.c = {unit_ws(mu, sign), unit_ws(nu, -sign), kZeroWS,
                                       unit_ws(lam, sign)};
                                break;
                            case 4:
                                v.c = {unit_ws(mu, -sign), unit_ws(nu, -sign),
                                       unit_ws(lam, -sign), kZeroWS};
                                break;
                        }
                        out.push_back(v);
                    }
        }
    }
    // Axis vertices +-i*sqrt(3)*w^lambda at each of the four positions.
    for (int pos = 0; pos < 4; ++pos) {
        for (int s = 0; s < 2; ++s) {
            const int sign = s == 0 ? 1 : -1;
            for (int lam = 0; lam < 3; ++lam) {
                WittingVertex v;
                Eisenstein y = Eisenstein::omega_pow(lam);
                v.c[pos] = WittingScalar::i_sqrt3(sign < 0 ? -y : y);
                out.push_back(v);
            }
        }
    }
    return out;
}

std::string witting_vertex_label(std::size_t index) {
    if (index < 216) {
        const int block = static_cast<int>(index / 54) + 1;
        const int rest = static_cast<int>(index % 54);
        const char sign = rest < 27 ? '+' : '-';
        const int e = rest % 27;
        std::string s = "b";
        s += static_cast<char>('0' + block);
        s += sign;
        s += static_cast<char>('0' + e / 9);
        s += static_cast<char>('0' + (e / 3) % 3);
        s += static_cast<char>('0' + e % 3);
        return s;
    }
    if (index < 240) {
        const int rest = static_cast<int>(index - 216);
        const int pos = rest / 6 + 1;
        const char sign = (rest % 6) < 3 ? '+' : '-';
        const int lam = rest % 3;
        std::string s = "s";
        s += static_cast<char>('0' + pos);
        s += sign;
        s += static_cast<char>('0' + lam);
        return s;
    }
    throw std::out_of_range("witting_vertex_label: index out of range");
}

CollapseResult collapse_to_rays(const std::vector<WittingVertex>& vertices) {
    std::map<ExactRay, int> fibers;
    for (const auto& v : vertices) {
        ExactRay e;
        for (int i = 0; i < 4; ++i) e[i] = v.c[i].to_eisenstein();
        ++fibers[canonicalize(e)];
    }
    CollapseResult res;
    res.rays.reserve(fibers.size());
    res.fiber_sizes.reserve(fibers.size());
    for (const auto& [ray, count] : fibers) {
        res.rays.push_back(ray);
        res.fiber_sizes.push_back(count);
    }
    return res;
}

GossetVertex realify(const WittingVertex& v) {
    GossetVertex g;
    for (int i = 0; i < 4; ++i) {
        const auto re_im = v.c[i].realify();
        g[2 * i] = re_im[0];
        g[2 * i + 1] = re_im[1];
    }
    return g;
}

std::vector<GossetVertex> realify(const std::vector<WittingVertex>& vs) {
    std::vector<GossetVertex> out;
    out.reserve(vs.size());
    for (const auto& v : vs) out.push_back(realify(v));
    return out;
}

HalfInteger gosset_dot(const GossetVertex& u, const GossetVertex& v) {
    // Accumulate 4*(sum u_i v_i) as P + Q*sqrt(3); Q vanishes because every
    // slot is purely rational or purely a sqrt(3)-multiple.
    std::int64_t P = 0, Q = 0;
    for (int i = 0; i < 8; ++i) {
        P += u[i].p * v[i].p + 3 * u[i].q * v[i].q;
        Q += u[i].p * v[i].q + u[i].q * v[i].p;
    }
    if (Q != 0 || P % 2 != 0)
        throw std::logic_error("gosset_dot: product left the half-integers");
    return HalfInteger{P / 2};
}

std::vector<RealRay8> e8_rays(const std::vector<WittingVertex>& vertices) {
    std::map<GossetVertex, WittingVertex> canon;
    for (const auto& v : vertices) {
        GossetVertex g = realify(v);
        WittingVertex pre = v;
        int sign = 0;
        for (const auto& c : g) {
            sign = c.sign();
            if (sign != 0) break;
        }
        if (sign < 0) {
            for (auto& c : g) c = -c;
            for (auto& c : pre.c) c = -c;
        }
        canon.emplace(g, pre);
    }
    std::vector<RealRay8> out;
    out.reserve(canon.size());
    for (const auto& [g, pre] : canon) out.push_back({g, pre});
    return out;
}

ExactRay f148_ray(const F148Index& idx) {
    if (idx.family < 1 || idx.family > 4 || idx.i < 0 || idx.i > 1 || idx.j < 0 ||
        idx.j > 1 || idx.k < 0 || idx.k > 2 || idx.l < 0 || idx.l > 2)
        throw std::out_of_range("f148_ray: bad index");
    const Eisenstein one = Eisenstein::one();
    Eisenstein a = Eisenstein::omega_pow(idx.k);
    Eisenstein b = Eisenstein::omega_pow(idx.l);
    if (idx.i) a = -a;
    if (idx.j) b = -b;
    switch (idx.family) {
        case 1: return {Eisenstein::zero(), one, a, b};
        case 2: return {one, Eisenstein::zero(), a, b};
        case 3: return {one, a, Eisenstein::zero(), b};
        default: return {one, a, b, Eisenstein::zero()};
    }
}

namespace {

std::string f148_label(const F148Index& idx) {
    std::string s = "F";
    s += static_cast<char>('0' + idx.family);
    s += '(';
    s += static_cast<char>('0' + idx.i);
    s += ',';
    s += static_cast<char>('0' + idx.j);
    s += ',';
    s += static_cast<char>('0' + idx.k);
    s += ',';
    s += static_cast<char>('0' + idx.l);
    s += ')';
    return s;
}

std::vector<LabeledRay> coordinate_rays() {
    std::vector<LabeledRay> out;
    for (int pos = 0; pos < 4; ++pos) {
        ExactRay r{};
        r[pos] = Eisenstein::one();
        out.push_back({"e" + std::to_string(pos + 1), r});
    }
    return out;
}

}  // namespace

std::vector<LabeledRay> f148_system() {
    std::vector<LabeledRay> out = coordinate_rays();
    out.reserve(148);
    for (int family = 1; family <= 4; ++family)
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                for (int k = 0; k < 3; ++k)
                    for (int l = 0; l < 3; ++l) {
                        F148Index idx{family, i, j, k, l};
                        out.push_back({f148_label(idx), f148_ray(idx)});
                    }
    return out;
}

std::array<std::array<int, 2>, 4> f148_line_signs(int line) {
    static constexpr std::array<std::array<std::array<int, 2>, 4>, 8> kLines{{
        {{{0, 0}, {0, 1}, {1, 0}, {0, 1}}},
        {{{0, 0}, {1, 0}, {0, 1}, {1, 0}}},
        {{{0, 1}, {0, 0}, {1, 1}, {0, 1}}},
        {{{0, 1}, {1, 1}, {0, 0}, {1, 0}}},
        {{{1, 0}, {0, 0}, {0, 1}, {1, 1}}},
        {{{1, 0}, {1, 1}, {1, 0}, {0, 0}}},
        {{{1, 1}, {0, 1}, {0, 0}, {1, 1}}},
        {{{1, 1}, {1, 0}, {1, 1}, {0, 0}}},
    }};
    if (line < 1 || line > 8) throw std::out_of_range("f148_subsystem: line must be 1..8");
    return kLines[line - 1];
}

std::vector<LabeledRay> f148_subsystem(int line) {
    const auto signs = f148_line_signs(line);
    std::vector<LabeledRay> out = coordinate_rays();
    out.reserve(40);
    for (int family = 1; family <= 4; ++family) {
        const auto [i, j] = signs[family - 1];
        for (int k = 0; k < 3; ++k)
            for (int l = 0; l < 3; ++l) {
                F148Index idx{family, i, j, k, l};
                out.push_back({f148_label(idx), f148_ray(idx)});
            }
    }
    return out;
}

}  // namespace wittingrays
