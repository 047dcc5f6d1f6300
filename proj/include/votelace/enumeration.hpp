#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "votelace/domains.hpp"
#include "votelace/election.hpp"
#include "votelace/guard.hpp"
#include "votelace/pair_pattern.hpp"
#include "votelace/permutation.hpp"

namespace votelace {

using BigInt = boost::multiprecision::cpp_int;

enum class CountMethod { brute_force, recurrence, closed_form, formula };

std::string_view method_name(CountMethod method);

struct CountReport {
    std::size_t m = 0;
    std::size_t n = 0;
    std::string label;
    BigInt count;
    CountMethod method = CountMethod::brute_force;

    /// {"m":…,"n":…,"label":…,"count":"<decimal>","method":…} on one line.
    std::string to_json() const;
    /// Inverse of to_json; throws ParseError on malformed input.
    static CountReport from_json(std::string_view text);

    friend bool operator==(const CountReport&, const CountReport&) = default;
};

using Recognizer = std::function<bool(const Election&)>;

/// Elections of all_elections(m, n) accepted by `accepts`, partitioned by the
/// first voter's ranking. Throws GuardExceeded when (m!)^n > limits.max_elections.
CountReport brute_force_count(std::size_t m, std::size_t n, const Recognizer& accepts, std::string label,
                              const ExhaustionLimits& limits = {});

CountReport brute_force_count(std::size_t m, std::size_t n, Domain domain, const ExhaustionLimits& limits = {});

/// Enriched elections with the first preference fixed:
/// f_r(m) = 2^n f_r(m-1) - 2^(n-1) f_r(m-2), f_r(0) = f_r(1) = 1.
/// Requires n >= 1 (std::invalid_argument otherwise).
BigInt f_r(std::size_t m, std::size_t n);

/// m! * f_r(m, n).
BigInt f_count(std::size_t m, std::size_t n);

/// The coefficient sqrt(2^(n-1) (2^(n-1) - 1)) of the closed form.
class PhiContext {
public:
    explicit PhiContext(std::size_t n);
    std::size_t n() const noexcept { return n_; }
    long double phi() const noexcept { return phi_; }
    long double half_power() const noexcept { return half_power_; }  // 2^(n-1)

private:
    std::size_t n_;
    long double half_power_;
    long double phi_;
};

/// Floating-point closed form of f_r. At n = 1 the two roots coincide and the
/// expression is taken at its limit (every term equals 1).
long double f_r_closed(std::size_t m, std::size_t n);

enum class CorollaryFormula { f3, f4, f5, fm2 };

std::string_view corollary_name(CorollaryFormula which);
std::optional<CorollaryFormula> parse_corollary(std::string_view name);

/// f3/f4/f5 take n and are exact; fm2 takes m, is evaluated in floating
/// point and rounded half away from zero after a relative error check
/// (std::runtime_error if the unrounded value is not within 1e-6 of an
/// integer).
BigInt corollary_value(CorollaryFormula which, std::size_t index);
long double corollary_fm2_unrounded(std::size_t m);

/// {[t,s], [s,t], [t^-1, t^-1 s], [t^-1 s, t^-1], [s^-1, s^-1 t], [s^-1 t, s^-1]}
/// with composition as in compose(); deduplicated.
PairPatternSet theorem41_pattern_set(const Permutation& tau, const Permutation& sigma);

/// Whether [pi, rho] strongly contains a member of theorem41_pattern_set(tau, sigma).
/// Throws std::invalid_argument unless |tau| = |sigma| <= |pi| = |rho|.
bool contains_3voter(const Permutation& pi, const Permutation& rho, const Permutation& tau,
                     const Permutation& sigma);

/// The election (id, pi, rho) and configuration (id, tau, sigma) that
/// contains_3voter speaks about.
Election three_voter_election(const Permutation& pi, const Permutation& rho);
Configuration three_voter_configuration(const Permutation& tau, const Permutation& sigma);

/// |S_m(theorem41_pattern_set(tau, sigma))|.
CountReport count_avoiding_pairs(std::size_t m, const Permutation& tau, const Permutation& sigma,
                                 const ExhaustionLimits& limits = {});

/// m! * |S_m(pi_set)|^C(n-1, 2). Requires n >= 1.
BigInt upper_bound_3config(std::size_t m, std::size_t n, const PairPatternSet& pi_set,
                           const ExhaustionLimits& limits = {});

/// The six length-4 pairs that single-crossing elections must avoid.
const PairPatternSet& single_crossing_pi();

/// f_n = 4 f_(n-1) - 2 f_(n-2), f_0 = f_1 = 1.
BigInt av_gamma_count(std::size_t n);

BigInt factorial(std::size_t n);
BigInt binomial(std::size_t n, std::size_t k);

}  // namespace votelace
