#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "wittingrays/ksproofs.hpp"
#include "wittingrays/serialize.hpp"
#include "wittingrays/systems.hpp"

namespace wittingrays {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct VerificationGroup {
    std::string name;
    std::vector<CheckResult> checks;

    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

/// Witting collapse vs the canonical table vs the geometric pipeline, plus
/// the rotation-oracle and reference-ray checks.
VerificationGroup verify_equivalence(const std::string& data_dir);

/// The 40 published basis label sets against the enumerated ones, with the
/// structural families.
VerificationGroup verify_tables(const std::string& data_dir);

/// Monomial equivalence of all 28 subsystem pairs and the published
/// line-1 -> line-6 basis permutation.
VerificationGroup verify_monomial();

/// Realified-system checks: norms, reflection closure, ray/basis counts.
VerificationGroup verify_gosset();

nlohmann::json verification_to_json(const VerificationGroup& group);

struct ParityRun {
    ParityAnalysis analysis;
    std::vector<ParityProofCertificate> certificates;
    int verified_certificates = 0;
};

ParityRun run_parity(SystemId id, std::size_t limit, std::size_t max_weight);

ColoringOutcome run_coloring(SystemId id, const ColoringOptions& options = {});

struct Report {
    nlohmann::json document;
    bool all_claims_hold = false;
};

/// Runs every construction and verification and assembles the deterministic
/// report document (digest included).
Report build_report(const std::string& data_dir, int threads = 1);

}  // namespace wittingrays
