#include "votelace/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

#include "votelace/domains.hpp"
#include "votelace/election.hpp"
#include "votelace/enumeration.hpp"
#include "votelace/pair_pattern.hpp"
#include "votelace/permutation.hpp"

namespace votelace {

namespace {

constexpr std::size_t kMaxReportedFailures = 20;

class Recorder {
public:
    explicit Recorder(std::string name) { result_.name = std::move(name); }

    void check(bool ok, const std::function<std::string()>& describe) {
        ++result_.cases;
        if (ok) return;
        ++result_.mismatches;
        result_.passed = false;
        if (result_.mismatches <= kMaxReportedFailures) result_.lines.push_back("FAIL " + describe());
    }

    void note(std::string line) { result_.lines.push_back(std::move(line)); }

    SuiteResult finish() {
        std::ostringstream summary;
        summary << (result_.passed ? "PASS " : "FAIL ") << result_.name << ": " << result_.cases << " cases, "
                << result_.mismatches << " mismatches";
        result_.lines.push_back(summary.str());
        return std::move(result_);
    }

private:
    SuiteResult result_;
};

std::string inline_election(const Election& e) {
    std::string out;
    for (std::size_t i = 0; i < e.num_voters(); ++i) {
        if (i) out += " / ";
        out += e.voter(i).to_string();
    }
    return out;
}

Election random_election(std::size_t m, std::size_t n, std::mt19937_64& rng) {
    std::vector<Ranking> rankings;
    std::vector<int> order(m);
    for (std::size_t v = 0; v < n; ++v) {
        std::iota(order.begin(), order.end(), 1);
        std::shuffle(order.begin(), order.end(), rng);
        rankings.emplace_back(order);
    }
    return Election(m, std::move(rankings));
}

Permutation random_permutation(std::size_t n, std::mt19937_64& rng) {
    std::vector<int> values(n);
    std::iota(values.begin(), values.end(), 1);
    std::shuffle(values.begin(), values.end(), rng);
    return Permutation(values);
}

// Runs `compare` over every election of each (m, n) cell and notes the cell.
void sweep(Recorder& rec, std::size_t m, std::size_t n, const ExhaustionLimits& limits,
           const std::function<bool(const Election&)>& agree, const char* what) {
    std::uint64_t cell = 0;
    std::uint64_t bad = 0;
    for_each_election(m, n, [&](const Election& e) {
        ++cell;
        const bool ok = agree(e);
        if (!ok) ++bad;
        rec.check(ok, [&] { return std::string(what) + " disagree on " + inline_election(e); });
        return true;
    }, limits);
    rec.note("(m,n)=(" + std::to_string(m) + "," + std::to_string(n) + "): " + std::to_string(cell) +
             " elections, " + std::to_string(bad) + " mismatches");
}

SuiteResult bh_equivalence(const VerifyOptions& opt) {
    Recorder rec("bh-equivalence");
    auto agree = [](const Election& e) {
        return is_group_separable_direct(e).holds == is_group_separable_bh(e).holds;
    };
    for (std::size_t m = 1; m <= 4; ++m) {
        for (std::size_t n = 1; n <= 3; ++n) sweep(rec, m, n, opt.limits, agree, "direct and forbidden-configuration group-separability");
    }
    std::mt19937_64 rng(opt.seed);
    std::uint64_t accepted = 0;
    for (int i = 0; i < 10'000; ++i) {
        const auto e = random_election(5, 4, rng);
        const bool direct = is_group_separable_direct(e).holds;
        accepted += direct ? 1 : 0;
        rec.check(direct == is_group_separable_bh(e).holds,
                  [&] { return "group-separability disagree on " + inline_election(e); });
    }
    rec.note("(m,n)=(5,4): 10000 seeded samples, " + std::to_string(accepted) + " group-separable");
    return rec.finish();
}

SuiteResult thm32(const VerifyOptions& opt) {
    Recorder rec("thm32");
    auto agree = [](const Election& e) {
        return is_enriched_recursive(e).holds == is_enriched_group_separable(e).holds;
    };
    for (std::size_t m = 1; m <= 4; ++m) {
        for (std::size_t n = 1; n <= 3; ++n) sweep(rec, m, n, opt.limits, agree, "recursive and configuration enrichment");
    }
    sweep(rec, 5, 2, opt.limits, agree, "recursive and configuration enrichment");
    return rec.finish();
}

bool avoids_enriched_configurations(const Election& e) {
    const auto& configs = enriched_forbidden_configurations();
    return std::none_of(configs.begin(), configs.end(),
                        [&](const Configuration& c) { return contains_configuration(e, c); });
}

SuiteResult prop33(const VerifyOptions& opt) {
    Recorder rec("prop33");
    auto agree = [](const Election& e) { return em_condition(e).holds == avoids_enriched_configurations(e); };
    for (std::size_t m = 1; m <= 4; ++m) {
        for (std::size_t n = 1; n <= 3; ++n) sweep(rec, m, n, opt.limits, agree, "E/M condition and configuration avoidance");
    }
    sweep(rec, 5, 2, opt.limits, agree, "E/M condition and configuration avoidance");
    return rec.finish();
}

SuiteResult thm41(const VerifyOptions& opt) {
    Recorder rec("thm41");
    auto one = [&](const Permutation& pi, const Permutation& rho, const Permutation& tau, const Permutation& sigma) {
        const bool fast = contains_3voter(pi, rho, tau, sigma);
        const bool generic =
            contains_configuration(three_voter_election(pi, rho), three_voter_configuration(tau, sigma));
        rec.check(fast == generic, [&] {
            std::ostringstream os;
            os << "pi=" << pi << " rho=" << rho << " tau=" << tau << " sigma=" << sigma
               << ": pattern set says " << fast << ", configuration search says " << generic;
            return os.str();
        });
    };
    for (auto [h, m] : {std::pair<std::size_t, std::size_t>{2, 3}, {2, 4}, {3, 4}}) {
        const auto big = all_permutations(m);
        const auto small = all_permutations(h);
        std::uint64_t cell = 0;
        for (const auto& pi : big)
            for (const auto& rho : big)
                for (const auto& tau : small)
                    for (const auto& sigma : small) {
                        one(pi, rho, tau, sigma);
                        ++cell;
                    }
        rec.note("(h,m)=(" + std::to_string(h) + "," + std::to_string(m) + "): " + std::to_string(cell) +
                 " exhaustive cases");
    }
    std::mt19937_64 rng(opt.seed);
    for (int i = 0; i < 1000; ++i) {
        const auto pi = random_permutation(5, rng);
        const auto rho = random_permutation(5, rng);
        const auto tau = random_permutation(3, rng);
        const auto sigma = random_permutation(3, rng);
        one(pi, rho, tau, sigma);
    }
    rec.note("(h,m)=(3,5): 1000 seeded random cases");
    return rec.finish();
}

SuiteResult cor43(const VerifyOptions& opt) {
    Recorder rec("cor43");
    std::vector<std::pair<Permutation, Permutation>> configs;
    for (std::size_t h : {2, 3}) {
        const auto perms = all_permutations(h);
        for (const auto& tau : perms)
            for (const auto& sigma : perms) configs.emplace_back(tau, sigma);
    }
    for (std::size_t m = 1; m <= 4; ++m) {
        const auto perms = all_permutations(m);
        for (const auto& [tau, sigma] : configs) {
            const auto cfg = three_voter_configuration(tau, sigma);
            std::uint64_t direct = 0;
            for (const auto& v2 : perms)
                for (const auto& v3 : perms) {
                    if (!contains_configuration(three_voter_election(v2, v3), cfg)) ++direct;
                }
            const auto via_pairs = count_pair_avoiders(m, theorem41_pattern_set(tau, sigma), opt.limits);
            rec.check(direct == via_pairs, [&] {
                std::ostringstream os;
                os << "m=" << m << " tau=" << tau << " sigma=" << sigma << ": direct " << direct
                   << " vs |S_m(Pi)| " << via_pairs;
                return os.str();
            });
        }
        rec.note("m=" + std::to_string(m) + ": " + std::to_string(configs.size()) + " configurations compared");
    }
    return rec.finish();
}

SuiteResult recurrence(const VerifyOptions& opt) {
    Recorder rec("recurrence");
    std::vector<std::pair<std::size_t, std::size_t>> cells;
    for (std::size_t m = 1; m <= 4; ++m)
        for (std::size_t n = 1; n <= 3; ++n) cells.emplace_back(m, n);
    cells.emplace_back(5, 2);
    cells.emplace_back(5, 3);
    for (auto [m, n] : cells) {
        const auto brute = brute_force_count(m, n, Domain::enriched, opt.limits).count;
        const auto formula = f_count(m, n);
        rec.check(brute == formula, [&, m = m, n = n] {
            return "(m,n)=(" + std::to_string(m) + "," + std::to_string(n) + "): brute force " + brute.str() +
                   " vs f(m,n) " + formula.str();
        });
        rec.note("(m,n)=(" + std::to_string(m) + "," + std::to_string(n) + "): brute force " + brute.str() +
                 ", m!*f_r " + formula.str());
    }
    return rec.finish();
}

SuiteResult closed_forms(const VerifyOptions&) {
    Recorder rec("closed-forms");
    long double worst = 0;
    for (std::size_t m = 0; m <= 10; ++m) {
        for (std::size_t n = 1; n <= 8; ++n) {
            const auto exact = f_r(m, n);
            const long double closed = f_r_closed(m, n);
            const long double exact_ld = exact.convert_to<long double>();
            const long double rel = std::fabs(closed - exact_ld) / exact_ld;
            worst = std::max(worst, rel);
            rec.check(rel <= 1e-9L, [&] {
                std::ostringstream os;
                os << "f_r_closed(" << m << "," << n << ") = " << static_cast<double>(closed) << " vs "
                   << exact.str() << " (relative error " << static_cast<double>(rel) << ")";
                return os.str();
            });
        }
    }
    {
        std::ostringstream os;
        os << "closed form vs recurrence, m<=10, n<=8: worst relative error " << static_cast<double>(worst);
        rec.note(os.str());
    }
    const std::pair<CorollaryFormula, std::size_t> fixed_m[] = {
        {CorollaryFormula::f3, 3}, {CorollaryFormula::f4, 4}, {CorollaryFormula::f5, 5}};
    for (auto [which, m] : fixed_m) {
        for (std::size_t n = 1; n <= 10; ++n) {
            const auto value = corollary_value(which, n);
            const auto expected = f_count(m, n);
            rec.check(value == expected, [&, which = which, m = m] {
                return std::string(corollary_name(which)) + "(n=" + std::to_string(n) + ") = " + value.str() +
                       " vs f(" + std::to_string(m) + "," + std::to_string(n) + ") = " + expected.str();
            });
        }
    }
    for (std::size_t m = 0; m <= 12; ++m) {
        const auto expected = f_count(m, 2);
        const long double raw = corollary_fm2_unrounded(m);
        const long double rel = std::fabs(raw - expected.convert_to<long double>()) / expected.convert_to<long double>();
        rec.check(rel <= 1e-6L && corollary_value(CorollaryFormula::fm2, m) == expected, [&] {
            std::ostringstream os;
            os << "fm2(m=" << m << ") = " << static_cast<double>(raw) << " vs f(m,2) = " << expected.str();
            return os.str();
        });
    }
    rec.note("corollary formulas f3/f4/f5 (n<=10) and fm2 (m<=12) compared with m!*f_r");
    return rec.finish();
}

SuiteResult weak_bruhat(const VerifyOptions& opt) {
    Recorder rec("weak-bruhat");
    const PairPatternSet forbidden{PairPattern(Permutation{1, 2}, Permutation{2, 1})};
    for (std::size_t m = 0; m <= 5; ++m) {
        const auto perms = all_permutations(m);
        std::uint64_t avoiding = 0;
        std::uint64_t right_comparable = 0;
        std::uint64_t positional_disagreements = 0;
        for (const auto& pi : perms) {
            for (const auto& rho : perms) {
                const bool avoids = !strong_contains(*forbidden.begin(), PairPattern(pi, rho));
                avoiding += avoids ? 1 : 0;
                const bool right = weak_bruhat_le(rho, pi);
                right_comparable += right ? 1 : 0;
                positional_disagreements += avoids != right ? 1 : 0;
                rec.check(avoids == left_weak_le(rho, pi), [&] {
                    std::ostringstream os;
                    os << "pi=" << pi << " rho=" << rho << ": avoids [12,21] is " << avoids
                       << " but Inv(rho^-1) subset Inv(pi^-1) is " << !avoids;
                    return os.str();
                });
            }
        }
        const auto via_count = count_pair_avoiders(m, forbidden, opt.limits);
        rec.check(via_count == avoiding && avoiding == right_comparable, [&] {
            return "m=" + std::to_string(m) + ": count_pair_avoiders " + std::to_string(via_count) +
                   ", direct " + std::to_string(avoiding) + ", comparable pairs " + std::to_string(right_comparable);
        });
        rec.note("m=" + std::to_string(m) + ": " + std::to_string(avoiding) + " avoiding pairs = " +
                 std::to_string(right_comparable) + " weak-order comparable pairs; positional inversion sets "
                 "disagree pairwise on " + std::to_string(positional_disagreements) + " pairs");
    }
    return rec.finish();
}

SuiteResult bound3(const VerifyOptions& opt) {
    Recorder rec("bound3");
    for (auto [m, n] : {std::pair<std::size_t, std::size_t>{1, 1}, {2, 1}, {3, 1}, {4, 1}, {3, 3}, {4, 3}, {5, 3}}) {
        const auto count = brute_force_count(m, n, Domain::single_crossing, opt.limits).count;
        const auto bound = upper_bound_3config(m, n, single_crossing_pi(), opt.limits);
        rec.check(count <= bound, [&, m = m, n = n] {
            return "(m,n)=(" + std::to_string(m) + "," + std::to_string(n) + "): " + count.str() +
                   " single-crossing elections exceed the bound " + bound.str();
        });
        rec.note("(m,n)=(" + std::to_string(m) + "," + std::to_string(n) + "): single-crossing " + count.str() +
                 " <= bound " + bound.str());
    }
    return rec.finish();
}

SuiteResult gamma_link(const VerifyOptions& opt) {
    Recorder rec("gamma-link");
    for (std::size_t m = 1; m <= 6; ++m) {
        const auto brute = brute_force_count(m, 2, Domain::enriched, opt.limits).count;
        const BigInt via_patterns = factorial(m) * count_avoiders(m, gamma_patterns(), opt.limits);
        rec.check(brute == via_patterns, [&] {
            return "m=" + std::to_string(m) + ": enriched (m,2) count " + brute.str() + " vs m!|Av_m(Gamma)| " +
                   via_patterns.str();
        });
        rec.note("m=" + std::to_string(m) + ": enriched (m,2) elections " + brute.str() + " = m!*" +
                 std::to_string(count_avoiders(m, gamma_patterns(), opt.limits)));
    }
    return rec.finish();
}

}  // namespace

const std::vector<std::string_view>& suite_names() {
    static const std::vector<std::string_view> names{
        "bh-equivalence", "thm32", "prop33", "thm41", "cor43", "recurrence", "closed-forms", "weak-bruhat", "bound3",
        "gamma-link"};
    return names;
}

SuiteResult run_suite(std::string_view name, const VerifyOptions& options) {
    if (name == "bh-equivalence") return bh_equivalence(options);
    if (name == "thm32") return thm32(options);
    if (name == "prop33") return prop33(options);
    if (name == "thm41") return thm41(options);
    if (name == "cor43") return cor43(options);
    if (name == "recurrence") return recurrence(options);
    if (name == "closed-forms") return closed_forms(options);
    if (name == "weak-bruhat") return weak_bruhat(options);
    if (name == "bound3") return bound3(options);
    if (name == "gamma-link") return gamma_link(options);
    throw std::invalid_argument("unknown verify suite '" + std::string(name) + "'");
}

}  // namespace votelace
