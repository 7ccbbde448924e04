#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "degenstir/rational.hpp"

namespace degenstir {

/// Sweep limits for the identity suite. Every case additionally carries its
/// own hard cap (the range it is meaningful and affordable on), so raising
/// these beyond the caps does not grow the sweeps.
struct SweepBounds {
    int n_max = 10;
    int r_max = 10;
    int order = 32;
    int sample_points = 20;
    std::optional<Rational> alpha_filter;  // restricts the alpha-parameterized cases
};

/// Orders used by the Bernoulli cross-route case when no filter is given.
std::vector<Rational> default_alpha_set();

enum class CaseStatus { Pass, Fail, Skipped };

const char* status_name(CaseStatus status);

struct CaseResult {
    std::string id;
    std::string anchor;         // the identity, in plain notation
    std::string param_domain;   // the sweep actually run
    CaseStatus status = CaseStatus::Pass;
    std::string counterexample; // smallest failing tuple (lexicographic), on Fail
    std::string reason;         // on Skipped
    long long millis = 0;
};

struct VerifyReport {
    SweepBounds bounds;
    std::uint64_t seed = 0;
    std::vector<CaseResult> cases;  // ordered by id

    bool all_passed() const;
};

/// Ids of every registered identity case, sorted.
std::vector<std::string> registry_ids();

/// Runs the whole registry (or the given subset of ids). Deterministic for a
/// fixed seed: sample points derive from the seed and the case id only, so
/// results do not depend on execution order. Throws std::invalid_argument for
/// an unknown id.
VerifyReport run_suite(const SweepBounds& bounds, std::uint64_t seed,
                       const std::vector<std::string>& only_ids = {});

std::string report_json(const VerifyReport& report, bool include_timing);
std::string report_markdown(const VerifyReport& report, bool include_timing);

}  // namespace degenstir
