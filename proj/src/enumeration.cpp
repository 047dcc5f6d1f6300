#include "votelace/enumeration.hpp"

#include <cmath>
#include <stdexcept>

#include <json.hpp>

#include "votelace/parallel.hpp"

namespace votelace {

std::string_view method_name(CountMethod method) {
    switch (method) {
        case CountMethod::brute_force: return "brute-force";
        case CountMethod::recurrence: return "recurrence";
        case CountMethod::closed_form: return "closed-form";
        case CountMethod::formula: return "formula";
    }
    return "unknown";
}

std::string CountReport::to_json() const {
    nlohmann::ordered_json j;
    j["m"] = m;
    j["n"] = n;
    j["label"] = label;
    j["count"] = count.str();
    j["method"] = std::string(method_name(method));
    return j.dump();
}

CountReport CountReport::from_json(std::string_view text) {
    try {
        const auto j = nlohmann::json::parse(text);
        CountReport r;
        r.m = j.at("m").get<std::size_t>();
        r.n = j.at("n").get<std::size_t>();
        r.label = j.at("label").get<std::string>();
        const auto count = j.at("count").get<std::string>();
        if (count.empty() || count.find_first_not_of("0123456789") != std::string::npos) {
            throw ParseError("count must be a decimal string, got '" + count + "'");
        }
        r.count = BigInt(count);
        const auto method = j.at("method").get<std::string>();
        bool known = false;
        for (auto candidate : {CountMethod::brute_force, CountMethod::recurrence, CountMethod::closed_form,
                               CountMethod::formula}) {
            if (method_name(candidate) == method) {
                r.method = candidate;
                known = true;
            }
        }
        if (!known) throw ParseError("unknown count method '" + method + "'");
        return r;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed count report: ") + e.what());
    }
}

CountReport brute_force_count(std::size_t m, std::size_t n, const Recognizer& accepts, std::string label,
                              const ExhaustionLimits& limits) {
    if (m == 0 || n == 0) throw std::invalid_argument("brute_force_count needs m >= 1 and n >= 1");
    check_election_guard(m, n, limits);
    const auto firsts = all_permutations(m);
    const auto total = parallel_sum(firsts.size(), limits.jobs, [&](std::size_t part) -> std::uint64_t {
        std::uint64_t count = 0;
        for_each_election_with_first(m, n, Ranking(firsts[part]), [&](const Election& e) {
            if (accepts(e)) ++count;
            return true;
        });
        return count;
    });
    return CountReport{m, n, std::move(label), BigInt(total), CountMethod::brute_force};
}

CountReport brute_force_count(std::size_t m, std::size_t n, Domain domain, const ExhaustionLimits& limits) {
    return brute_force_count(
        m, n, [&](const Election& e) { return check_domain(domain, e, limits).holds; },
        std::string(domain_name(domain)), limits);
}

BigInt f_r(std::size_t m, std::size_t n) {
    if (n == 0) throw std::invalid_argument("f_r needs at least one voter");
    const BigInt grow = BigInt(1) << n;
    const BigInt shrink = BigInt(1) << (n - 1);
    BigInt before = 1;  // f_r(0, n)
    BigInt current = 1;  // f_r(1, n)
    if (m == 0) return before;
    for (std::size_t k = 2; k <= m; ++k) {
        BigInt next = grow * current - shrink * before;
        before = std::move(current);
        current = std::move(next);
    }
    return current;
}

BigInt f_count(std::size_t m, std::size_t n) { return factorial(m) * f_r(m, n); }

PhiContext::PhiContext(std::size_t n) : n_(n) {
    if (n == 0) throw std::invalid_argument("PhiContext needs n >= 1");
    half_power_ = std::ldexp(1.0L, static_cast<int>(n) - 1);
    phi_ = std::sqrt(half_power_ * (half_power_ - 1.0L));
}

long double f_r_closed(std::size_t m, std::size_t n) {
    const PhiContext ctx(n);
    const long double phi = ctx.phi();
    const long double h = ctx.half_power();
    const long double shift = 1.0L - h;
    // phi = 0 only at n = 1; both coefficients then tend to 1/2.
    const long double lead = phi == 0.0L ? 0.5L : (phi + shift) / (2.0L * phi);
    const long double tail = phi == 0.0L ? 0.5L : (phi - shift) / (2.0L * phi);
    const auto mm = static_cast<int>(m);
    return lead * std::pow(h + phi, mm) + tail * std::pow(h - phi, mm);
}

std::string_view corollary_name(CorollaryFormula which) {
    switch (which) {
        case CorollaryFormula::f3: return "f3";
        case CorollaryFormula::f4: return "f4";
        case CorollaryFormula::f5: return "f5";
        case CorollaryFormula::fm2: return "fm2";
    }
    return "unknown";
}

std::optional<CorollaryFormula> parse_corollary(std::string_view name) {
    for (auto which : {CorollaryFormula::f3, CorollaryFormula::f4, CorollaryFormula::f5, CorollaryFormula::fm2}) {
        if (corollary_name(which) == name) return which;
    }
    return std::nullopt;
}

long double corollary_fm2_unrounded(std::size_t m) {
    const long double r2 = std::sqrt(2.0L);
    const auto mm = static_cast<int>(m);
    const long double bracket = (2.0L + r2) * std::pow(2.0L - r2, mm) + (2.0L - r2) * std::pow(2.0L + r2, mm);
    long double fact = 1.0L;
    for (std::size_t i = 2; i <= m; ++i) fact *= static_cast<long double>(i);
    return fact / 4.0L * bracket;
}

BigInt corollary_value(CorollaryFormula which, std::size_t index) {
    const auto pow2 = [](std::size_t e) { return BigInt(1) << e; };
    const std::size_t n = index;
    switch (which) {
        case CorollaryFormula::f3:
            if (n == 0) throw std::invalid_argument("f3 needs n >= 1");
            return 6 * pow2(n - 1) * (pow2(n) - 1);
        case CorollaryFormula::f4:
            if (n == 0) throw std::invalid_argument("f4 needs n >= 1");
            return 24 * pow2(2 * (n - 1)) * (pow2(n + 1) - 3);
        case CorollaryFormula::f5:
            if (n == 0) throw std::invalid_argument("f5 needs n >= 1");
            return 120 * pow2(2 * (n - 1)) * (pow2(2 * n + 1) - pow2(n + 2) + 1);
        case CorollaryFormula::fm2: {
            const long double raw = corollary_fm2_unrounded(index);
            const long double rounded = std::round(raw);  // half away from zero
            if (std::fabs(raw - rounded) > 1e-6L * std::max(1.0L, std::fabs(rounded))) {
                throw std::runtime_error("fm2 value is not within tolerance of an integer");
            }
            // Exact for the magnitudes in play (below 2^64).
            return BigInt(static_cast<unsigned long long>(rounded));
        }
    }
    throw std::invalid_argument("unknown corollary selector");
}

PairPatternSet theorem41_pattern_set(const Permutation& tau, const Permutation& sigma) {
    if (tau.size() != sigma.size()) {
        throw std::invalid_argument("theorem41_pattern_set: tau and sigma differ in length");
    }
    const auto tau_inv = tau.inverse();
    const auto sigma_inv = sigma.inverse();
    const auto tau_inv_sigma = compose(tau_inv, sigma);
    const auto sigma_inv_tau = compose(sigma_inv, tau);
    return PairPatternSet{
        PairPattern(tau, sigma),
        PairPattern(sigma, tau),
        PairPattern(tau_inv, tau_inv_sigma),
        PairPattern(tau_inv_sigma, tau_inv),
        PairPattern(sigma_inv, sigma_inv_tau),
        PairPattern(sigma_inv_tau, sigma_inv),
    };
}

bool contains_3voter(const Permutation& pi, const Permutation& rho, const Permutation& tau,
                     const Permutation& sigma) {
    if (tau.size() != sigma.size() || pi.size() != rho.size() || tau.size() > pi.size()) {
        throw std::invalid_argument("contains_3voter needs |tau| = |sigma| <= |pi| = |rho|");
    }
    return first_contained(theorem41_pattern_set(tau, sigma), PairPattern(pi, rho)) != nullptr;
}

Election three_voter_election(const Permutation& pi, const Permutation& rho) {
    return Election({identity(pi.size()), pi, rho});
}

Configuration three_voter_configuration(const Permutation& tau, const Permutation& sigma) {
    return Configuration({identity(tau.size()), tau, sigma});
}

CountReport count_avoiding_pairs(std::size_t m, const Permutation& tau, const Permutation& sigma,
                                 const ExhaustionLimits& limits) {
    const auto count = count_pair_avoiders(m, theorem41_pattern_set(tau, sigma), limits);
    return CountReport{m, 3, "avoid-3voter:" + tau.compact() + "," + sigma.compact(), BigInt(count),
                       CountMethod::brute_force};
}

BigInt upper_bound_3config(std::size_t m, std::size_t n, const PairPatternSet& pi_set,
                           const ExhaustionLimits& limits) {
    if (n == 0) throw std::invalid_argument("upper_bound_3config needs n >= 1");
    const auto exponent = binomial(n - 1, 2);
    if (exponent == 0) return factorial(m);
    const BigInt avoiders = count_pair_avoiders(m, pi_set, limits);
    return factorial(m) * boost::multiprecision::pow(avoiders, exponent.convert_to<unsigned>());
}

const PairPatternSet& single_crossing_pi() {
    static const PairPatternSet pi{
        PairPattern(Permutation{4, 2, 3, 1}, Permutation{4, 1, 3, 2}),
        PairPattern(Permutation{4, 1, 3, 2}, Permutation{4, 2, 3, 1}),
        PairPattern(Permutation{4, 2, 3, 1}, Permutation{1, 4, 3, 2}),
        PairPattern(Permutation{1, 4, 3, 2}, Permutation{4, 2, 3, 1}),
        PairPattern(Permutation{2, 4, 3, 1}, Permutation{1, 4, 3, 2}),
        PairPattern(Permutation{1, 4, 3, 2}, Permutation{2, 4, 3, 1}),
    };
    return pi;
}

BigInt av_gamma_count(std::size_t n) {
    BigInt before = 1;
    BigInt current = 1;
    if (n == 0) return before;
    for (std::size_t k = 2; k <= n; ++k) {
        BigInt next = 4 * current - 2 * before;
        before = std::move(current);
        current = std::move(next);
    }
    return current;
}

BigInt factorial(std::size_t n) {
    BigInt f = 1;
    for (std::size_t i = 2; i <= n; ++i) f *= i;
    return f;
}

BigInt binomial(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    BigInt r = 1;
    for (std::size_t i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
    return r;
}

}  // namespace votelace
