#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "wittingrays/ksproofs.hpp"
#include "wittingrays/systems.hpp"

namespace wittingrays {

/// Identifiers accepted by the command-line surface.
enum class SystemId {
    PenroseEq3,        // float rays in the angular-momentum basis
    PenroseCanonical,  // 40 exact rays
    Witting,           // 240 vertices
    E8,                // 120 realified rays
    F148,              // 148-ray extension
    F148Sub1, F148Sub2, F148Sub3, F148Sub4,
    F148Sub5, F148Sub6, F148Sub7, F148Sub8,
};

std::optional<SystemId> parse_system_id(const std::string& s);
std::string system_id_name(SystemId id);
std::vector<std::string> all_system_id_names();

/// Materialized system ready for export: rays with labels plus the scalar
/// payloads (discriminated by id). Witting vertices are exported as vertex
/// records, not rays.
struct ExportSystem {
    SystemId id;
    std::vector<std::string> labels;
    std::vector<ExactRay> exact;
    std::vector<WittingVertex> witting;
    std::vector<RealRay8> real8;
    std::vector<FloatRay> floats;

    std::size_t size() const { return labels.size(); }
};

ExportSystem materialize_system(SystemId id);

/// Orthogonality graph of the materialized system (Witting vertices collapse
/// to their 40 rays first; the eq3 float system uses the 1e-9 tolerance).
RaySystem system_graph(SystemId id);

nlohmann::json rays_to_json(const ExportSystem& sys);
std::string rays_to_csv(const ExportSystem& sys);

nlohmann::json bases_to_json(const ExportSystem& sys, const BasisTable& bases,
                             const SystemSignature& sig);
std::string bases_to_csv(const BasisTable& bases, const SystemSignature& sig);

/// Round-trip: read an exact ray export back (throws on malformed input).
std::vector<LabeledRay> exact_rays_from_json(const nlohmann::json& j);

/// Golden reference data shipped under data/.
std::vector<LabeledExactRay> load_penrose_golden_rays(const std::string& path);
std::vector<std::array<std::string, 4>> load_penrose_golden_bases(const std::string& path);

/// Float formatting used across exports: 12 significant digits.
double round12(double x);

std::string fnv1a_hex(const std::string& payload);

}  // namespace wittingrays
