#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "votelace/guard.hpp"

namespace votelace {

inline constexpr std::uint64_t kDefaultSeed = 20240611;

struct VerifyOptions {
    std::uint64_t seed = kDefaultSeed;
    ExhaustionLimits limits{};
};

/// Outcome of one cross-formulation suite. `lines` holds per-cell progress
/// and the full counterexample for every failing case (capped per suite).
struct SuiteResult {
    std::string name;
    bool passed = true;
    std::uint64_t cases = 0;
    std::uint64_t mismatches = 0;
    std::vector<std::string> lines;
};

/// bh-equivalence, thm32, prop33, thm41, cor43, recurrence, closed-forms,
/// weak-bruhat, bound3, gamma-link.
const std::vector<std::string_view>& suite_names();

/// Throws std::invalid_argument for an unknown suite name.
SuiteResult run_suite(std::string_view name, const VerifyOptions& options = {});

}  // namespace votelace
