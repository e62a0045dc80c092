#include "wittingrays/rays.hpp"

#include <cmath>

namespace wittingrays {

Eisenstein eis_inner(std::span<const Eisenstein> u, std::span<const Eisenstein> v) {
    if (u.size() != v.size())
        throw std::invalid_argument("eis_inner: dimension mismatch");
    Eisenstein acc{};
    for (std::size_t i = 0; i < u.size(); ++i) acc += u[i].conj() * v[i];
    return acc;
}

ExactRay canonicalize(const ExactRay& v) {
    const Eisenstein* lead = nullptr;
    for (const auto& c : v) {
        if (!c.is_zero()) { lead = &c; break; }
    }
    if (!lead) throw std::invalid_argument("canonicalize: zero ray");
    ExactRay out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (!divides(*lead, v[i]))
            throw NonUnitLeadingError(
                "canonicalize: leading component is not a unit times a common factor");
        out[i] = exact_div(v[i], *lead);
    }
    return out;
}

bool proj_equal(const ExactRay& u, const ExactRay& v) {
    return canonicalize(u) == canonicalize(v);
}

std::complex<double> complex_inner(const FloatRay& u, const FloatRay& v) {
    std::complex<double> acc{};
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (!std::isfinite(u[i].real()) || !std::isfinite(u[i].imag()) ||
            !std::isfinite(v[i].real()) || !std::isfinite(v[i].imag()))
            throw std::invalid_argument("complex_inner: non-finite component");
        acc += std::conj(u[i]) * v[i];
    }
    return acc;
}

FloatRay canonicalize(const FloatRay& v) {
    const std::complex<double>* lead = nullptr;
    for (const auto& c : v) {
        if (std::abs(c) > kFloatZeroTol) { lead = &c; break; }
    }
    if (!lead) throw std::invalid_argument("canonicalize: zero ray");
    FloatRay out;
    const std::complex<double> l = *lead;
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] / l;
    return out;
}

bool proj_equal(const FloatRay& u, const FloatRay& v, double tol) {
    const FloatRay cu = canonicalize(u), cv = canonicalize(v);
    for (std::size_t i = 0; i < cu.size(); ++i)
        if (std::abs(cu[i] - cv[i]) > tol) return false;
    return true;
}

double float_norm(const FloatRay& v) {
    double s = 0.0;
    for (const auto& c : v) s += std::norm(c);
    return std::sqrt(s);
}

FloatRay normalized(const FloatRay& v) {
    const double n = float_norm(v);
    if (n == 0.0) throw std::invalid_argument("normalized: zero ray");
    FloatRay out;
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] / n;
    return out;
}

}  // namespace wittingrays
