#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace votelace {

/// Raised when an exhaustive search would exceed its configured size cap.
class GuardExceeded : public std::runtime_error {
public:
    explicit GuardExceeded(const std::string& what) : std::runtime_error(what) {}
};

/// Raised on malformed textual input (permutations, pairs, elections).
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// Size caps for the exhaustive kernels plus the worker count used when
/// they partition their outer loop.
struct ExhaustionLimits {
    std::size_t max_permutation_length = 9;
    std::size_t max_pair_length = 6;
    // Pair enumeration at length 7 takes minutes; it must be requested.
    bool allow_pair_length_7 = false;
    std::uint64_t max_elections = 100'000'000;
    std::size_t max_candidates = 8;
    std::size_t max_voters = 6;
    unsigned jobs = 1;
};

/// Default limits, with `max_elections` taken from VOTELACE_GUARD when set.
/// Throws ParseError if the variable is not a positive integer.
ExhaustionLimits limits_from_environment();

std::uint64_t factorial_u64(std::size_t n);

}  // namespace votelace
