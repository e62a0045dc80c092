#include "wittingrays/serialize.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace wittingrays {

using nlohmann::json;

std::optional<SystemId> parse_system_id(const std::string& s) {
    if (s == "penrose-eq3") return SystemId::PenroseEq3;
    if (s == "penrose-canonical") return SystemId::PenroseCanonical;
    if (s == "witting") return SystemId::Witting;
    if (s == "e8") return SystemId::E8;
    if (s == "f148") return SystemId::F148;
    for (int i = 1; i <= 8; ++i)
        if (s == "f148-sub-" + std::to_string(i))
            return static_cast<SystemId>(static_cast<int>(SystemId::F148Sub1) + i - 1);
    return std::nullopt;
}

std::string system_id_name(SystemId id) {
    switch (id) {
        case SystemId::PenroseEq3: return "penrose-eq3";
        case SystemId::PenroseCanonical: return "penrose-canonical";
        case SystemId::Witting: return "witting";
        case SystemId::E8: return "e8";
        case SystemId::F148: return "f148";
        default:
            return "f148-sub-" + std::to_string(static_cast<int>(id) -
                                                 static_cast<int>(SystemId::F148Sub1) + 1);
    }
}

std::vector<std::string> all_system_id_names() {
    std::vector<std::string> out{"penrose-eq3", "penrose-canonical", "witting", "e8", "f148"};
    for (int i = 1; i <= 8; ++i) out.push_back("f148-sub-" + std::to_string(i));
    return out;
}

namespace {

std::vector<LabeledExactRay> canonical_in_presentation_order() {
    const auto system = canonical_penrose_system();
    std::vector<LabeledExactRay> out;
    out.reserve(40);
    for (const auto label : canonical_presentation_order()) {
        for (const auto& r : system)
            if (r.label == label) { out.push_back(r); break; }
    }
    return out;
}

}  // namespace

ExportSystem materialize_system(SystemId id) {
    ExportSystem sys;
    sys.id = id;
    switch (id) {
        case SystemId::PenroseEq3: {

            for (const auto& r : angular_momentum_system()) {
                sys.labels.push_back(to_string(r.label));
                sys.floats.push_back(normalized(r.ray));
            }
            return sys;
        }
        case SystemId::PenroseCanonical: {

            for (const auto& r : canonical_in_presentation_order()) {
                sys.labels.push_back(to_string(r.label));
                sys.exact.push_back(r.ray);
            }
            return sys;
        }
        case SystemId::Witting: {

            sys.witting = generate_witting_vertices();
            for (std::size_t i = 0; i < sys.witting.size(); ++i)
                sys.labels.push_back(witting_vertex_label(i));
            return sys;
        }
        case SystemId::E8: {

            sys.real8 = e8_rays(generate_witting_vertices());
            for (std::size_t i = 0; i < sys.real8.size(); ++i) {
                std::ostringstream os;
                os << 'r';
                if (i < 100) os << '0';
                if (i < 10) os << '0';
                os << i;
                sys.labels.push_back(os.str());
            }
            return sys;
        }
        case SystemId::F148: {

            for (const auto& r : f148_system()) {
                sys.labels.push_back(r.label);
                sys.exact.push_back(r.ray);
            }
            return sys;
        }
        default: {
            const int line = static_cast<int>(id) - static_cast<int>(SystemId::F148Sub1) + 1;

            for (const auto& r : f148_subsystem(line)) {
                sys.labels.push_back(r.label);
                sys.exact.push_back(r.ray);
            }
            return sys;
        }
    }
}

RaySystem system_graph(SystemId id) {
    switch (id) {
        case SystemId::PenroseEq3:
            return build_orthogonality_graph(angular_momentum_system());
        case SystemId::PenroseCanonical:
            return build_orthogonality_graph(canonical_penrose_system());
        case SystemId::Witting: {
            const auto collapsed = collapse_to_rays(generate_witting_vertices());
            std::vector<LabeledRay> named;
            for (std::size_t i = 0; i < collapsed.rays.size(); ++i)
                named.push_back({"w" + std::to_string(i), collapsed.rays[i]});
            return build_orthogonality_graph(named);
        }
        case SystemId::E8:
            return build_orthogonality_graph(e8_rays(generate_witting_vertices()));
        case SystemId::F148:
            return build_orthogonality_graph(f148_system());
        default: {
            const int line = static_cast<int>(id) - static_cast<int>(SystemId::F148Sub1) + 1;
            return build_orthogonality_graph(f148_subsystem(line));
        }
    }
}

double round12(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", x);
    return std::strtod(buf, nullptr);
}

namespace {

json eisenstein_json(const Eisenstein& e) { return json::array({e.a, e.b}); }

json witting_scalar_json(const WittingScalar& w) {
    return json::array({eisenstein_json(w.x), eisenstein_json(w.y)});
}

json quadratic_json(const QuadraticCoord& q) { return json::array({q.p, q.q}); }

json complex_json(const std::complex<double>& c) {
    return json::array({round12(c.real()), round12(c.imag())});
}

std::string scalar_kind_name(const ExportSystem& sys) {
    switch (sys.id) {
        case SystemId::PenroseEq3: return "float";
        case SystemId::Witting:
        case SystemId::E8: return "witting";
        default: return "eisenstein";
    }
}

}  // namespace

json rays_to_json(const ExportSystem& sys) {
    json rays = json::array();
    for (std::size_t i = 0; i < sys.size(); ++i) {
        json rec;
        rec["label"] = sys.labels[i];
        json comps = json::array();
        switch (sys.id) {
            case SystemId::PenroseEq3:
                for (const auto& c : sys.floats[i]) comps.push_back(complex_json(c));
                break;
            case SystemId::Witting:
                for (const auto& c : sys.witting[i].c) comps.push_back(witting_scalar_json(c));
                break;
            case SystemId::E8: {
                for (const auto& c : sys.real8[i].preimage.c)
                    comps.push_back(witting_scalar_json(c));
                json realified = json::array();
                for (const auto& q : sys.real8[i].coords) realified.push_back(quadratic_json(q));
                rec["realified"] = realified;
                break;
            }
            default:
                for (const auto& c : sys.exact[i]) comps.push_back(eisenstein_json(c));
        }
        rec["components"] = comps;
        rays.push_back(rec);
    }
    json out;
    out["system"] = system_id_name(sys.id);
    out["scalar_kind"] = scalar_kind_name(sys);
    out["rays"] = rays;
    return out;
}

std::string rays_to_csv(const ExportSystem& sys) {
    std::ostringstream os;
    auto fmt = [&](double x) {
        char buf[40];
        std::snprintf(buf, sizeof(buf), "%.12g", x);
        return std::string(buf);
    };
    switch (sys.id) {
        case SystemId::PenroseEq3: {
            os << "label";
            for (int i = 0; i < 4; ++i) os << ",c" << i << "_re,c" << i << "_im";
            os << '\n';
            for (std::size_t i = 0; i < sys.size(); ++i) {
                os << sys.labels[i];
                for (const auto& c : sys.floats[i])
                    os << ',' << fmt(c.real()) << ',' << fmt(c.imag());
                os << '\n';
            }
            break;
        }
        case SystemId::Witting:
        case SystemId::E8: {
            os << "label";
            for (int i = 0; i < 4; ++i)
                os << ",c" << i << "_xa,c" << i << "_xb,c" << i << "_ya,c" << i << "_yb";
            os << '\n';
            for (std::size_t i = 0; i < sys.size(); ++i) {
                os << sys.labels[i];
                const auto& v =
                    sys.id == SystemId::Witting ? sys.witting[i].c : sys.real8[i].preimage.c;
                for (const auto& c : v)
                    os << ',' << c.x.a << ',' << c.x.b << ',' << c.y.a << ',' << c.y.b;
                os << '\n';
            }
            break;
        }
        default: {
            os << "label";
            for (int i = 0; i < 4; ++i) os << ",c" << i << "_a,c" << i << "_b";
            os << '\n';
            for (std::size_t i = 0; i < sys.size(); ++i) {
                os << sys.labels[i];
                for (const auto& c : sys.exact[i]) os << ',' << c.a << ',' << c.b;
                os << '\n';
            }
        }
    }
    return os.str();
}

json bases_to_json(const ExportSystem& sys, const BasisTable& bases,
                   const SystemSignature& sig) {
    json out;
    out["system"] = system_id_name(sys.id);
    json b = json::array();
    for (const auto& basis : bases.bases) b.push_back(basis);
    out["bases"] = b;
    out["signature"] = sig.to_string();
    return out;
}

std::string bases_to_csv(const BasisTable& bases, const SystemSignature& sig) {
    std::ostringstream os;
    for (const auto& b : bases.bases) {
        for (std::size_t i = 0; i < b.size(); ++i) os << (i ? "," : "") << b[i];
        os << '\n';
    }
    os << "# signature," << sig.to_string() << '\n';
    return os.str();
}

std::vector<LabeledRay> exact_rays_from_json(const json& j) {
    if (!j.contains("rays") || !j["rays"].is_array())
        throw std::invalid_argument("ray document: missing rays array");
    std::vector<LabeledRay> out;
    for (const auto& rec : j["rays"]) {
        LabeledRay r;
        r.label = rec.at("label").get<std::string>();
        const auto& comps = rec.at("components");
        if (comps.size() != 4)
            throw std::invalid_argument("ray document: expected 4 components");
        for (int i = 0; i < 4; ++i)
            r.ray[i] = Eisenstein{comps[i].at(0).get<std::int64_t>(),
                                  comps[i].at(1).get<std::int64_t>()};
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<LabeledExactRay> load_penrose_golden_rays(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open golden ray file: " + path);
    json j = json::parse(in);
    std::vector<LabeledExactRay> out;
    for (const auto& r : exact_rays_from_json(j)) {
        const auto label = ray_label_from_string(r.label);
        if (!label) throw std::runtime_error("golden ray file: bad label " + r.label);
        out.push_back({*label, r.ray});
    }
    return out;
}

std::vector<std::array<std::string, 4>> load_penrose_golden_bases(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open golden basis file: " + path);
    json j = json::parse(in);
    std::vector<std::array<std::string, 4>> out;
    for (const auto& b : j.at("bases_labels")) {
        if (b.size() != 4) throw std::runtime_error("golden basis file: bad basis size");
        out.push_back({b[0].get<std::string>(), b[1].get<std::string>(),
                       b[2].get<std::string>(), b[3].get<std::string>()});
    }
    return out;
}

std::string fnv1a_hex(const std::string& payload) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : payload) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[20];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

}  // namespace wittingrays
