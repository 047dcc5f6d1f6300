#include <doctest.h>

#include <cmath>
#include <random>

#include "oracle.hpp"
#include "votelace/enumeration.hpp"

using namespace votelace;

namespace {

PairPattern pp(std::string_view text) { return PairPattern::parse(text); }

}  // namespace

TEST_CASE("count reports serialize as one JSON line") {
    const CountReport r{5, 2, "enriched", BigInt(8160), CountMethod::brute_force};
    CHECK(r.to_json() == R"({"m":5,"n":2,"label":"enriched","count":"8160","method":"brute-force"})");
    CHECK(CountReport::from_json(r.to_json()) == r);

    const CountReport huge{30, 9, "enriched", f_count(30, 9), CountMethod::recurrence};
    CHECK(CountReport::from_json(huge.to_json()) == huge);
    CHECK(huge.to_json().find('\n') == std::string::npos);

    CHECK_THROWS_AS(CountReport::from_json("{"), ParseError);
    CHECK_THROWS_AS(CountReport::from_json(R"({"m":1,"n":1,"label":"x","count":"-3","method":"formula"})"),
                    ParseError);
    CHECK_THROWS_AS(CountReport::from_json(R"({"m":1,"n":1,"label":"x","count":"3","method":"guess"})"),
                    ParseError);
    CHECK_THROWS_AS(CountReport::from_json(R"({"m":1,"n":1,"label":"x","method":"formula"})"), ParseError);
}

TEST_CASE("brute-force counts") {
    CHECK(brute_force_count(2, 2, Domain::enriched).count == 4);
    CHECK(brute_force_count(5, 2, Domain::enriched).count == 8160);
    CHECK(brute_force_count(5, 2, Domain::single_peaked).count == 8400);
    CHECK(brute_force_count(4, 2, Domain::single_peaked).count == 480);
    CHECK(brute_force_count(3, 3, Domain::single_crossing).count == 204);

    const auto custom = brute_force_count(
        3, 2, [](const Election& e) { return e.voter(0) == e.voter(1); }, "unanimous");
    CHECK(custom.count == 6);
    CHECK(custom.label == "unanimous");
    CHECK(custom.method == CountMethod::brute_force);

    ExhaustionLimits jobs;
    jobs.jobs = 4;
    CHECK(brute_force_count(4, 3, Domain::enriched, jobs) == brute_force_count(4, 3, Domain::enriched));

    CHECK_THROWS_AS(brute_force_count(6, 4, Domain::enriched), GuardExceeded);
    CHECK_THROWS_AS(brute_force_count(0, 2, Domain::enriched), std::invalid_argument);
}

TEST_CASE("enriched recurrence") {
    for (std::size_t n = 1; n <= 6; ++n) {
        CHECK(f_r(0, n) == 1);
        CHECK(f_r(1, n) == 1);
    }
    CHECK(f_r(2, 2) == 2);
    CHECK(f_r(5, 2) == 68);
    CHECK(f_count(5, 2) == 8160);
    CHECK(f_count(3, 2) == 36);
    CHECK(f_count(1, 7) == 1);
    CHECK_THROWS_AS(f_r(3, 0), std::invalid_argument);
    for (std::size_t m = 0; m <= 12; ++m) {
        for (std::size_t n = 1; n <= 6; ++n) REQUIRE(f_r(m, n).str() == oracle::to_string(oracle::f_r(m, n)));
    }
    // Exact beyond 64 bits.
    CHECK(f_count(25, 8) == factorial(25) * f_r(25, 8));
    CHECK(f_count(25, 8) > BigInt(std::numeric_limits<std::uint64_t>::max()));
}

TEST_CASE("closed form") {
    const PhiContext ctx(2);
    CHECK(ctx.phi() == doctest::Approx(std::sqrt(2.0)));
    for (std::size_t n = 1; n <= 20; ++n) {
        const PhiContext c(n);
        const long double expected = c.half_power() * (c.half_power() - 1.0L);
        CHECK(c.phi() >= 0.0L);
        if (expected > 0) CHECK(std::fabs(c.phi() * c.phi() - expected) / expected <= 1e-12L);
    }
    CHECK_THROWS_AS(PhiContext(0), std::invalid_argument);
    CHECK(std::fabs(f_r_closed(2, 2) - 2.0L) <= 1e-9L);
    CHECK(std::fabs(f_r_closed(5, 2) - 68.0L) <= 1e-6L);
    for (std::size_t n = 1; n <= 8; ++n) CHECK(std::fabs(f_r_closed(0, n) - 1.0L) <= 1e-9L);
    // n = 1 is the degenerate double root.
    for (std::size_t m = 0; m <= 10; ++m) CHECK(f_r_closed(m, 1) == doctest::Approx(1.0));
    for (std::size_t m = 0; m <= 10; ++m) {
        for (std::size_t n = 1; n <= 8; ++n) {
            const auto exact = static_cast<long double>(oracle::f_r(m, n));
            REQUIRE(std::fabs(f_r_closed(m, n) - exact) / exact <= 1e-9L);
        }
    }
}

TEST_CASE("corollary formulas") {
    CHECK(corollary_value(CorollaryFormula::f3, 2) == 36);
    CHECK(corollary_value(CorollaryFormula::f4, 2) == 480);
    CHECK(corollary_value(CorollaryFormula::f4, 3) == 4992);
    CHECK(corollary_value(CorollaryFormula::f5, 2) == 8160);
    for (std::size_t n = 1; n <= 10; ++n) {
        CHECK(corollary_value(CorollaryFormula::f3, n) == f_count(3, n));
        CHECK(corollary_value(CorollaryFormula::f4, n) == f_count(4, n));
        CHECK(corollary_value(CorollaryFormula::f5, n) == f_count(5, n));
    }
    for (std::size_t m = 0; m <= 12; ++m) {
        const auto raw = corollary_fm2_unrounded(m);
        CHECK(std::fabs(raw - std::round(raw)) <= 1e-6L * std::max(1.0L, raw));
        CHECK(corollary_value(CorollaryFormula::fm2, m) == f_count(m, 2));
    }
    CHECK_THROWS_AS(corollary_value(CorollaryFormula::f3, 0), std::invalid_argument);
    for (auto which : {CorollaryFormula::f3, CorollaryFormula::f4, CorollaryFormula::f5, CorollaryFormula::fm2}) {
        CHECK(parse_corollary(corollary_name(which)) == which);
    }
    CHECK_FALSE(parse_corollary("f6").has_value());
}

TEST_CASE("three-voter pattern sets") {
    const auto sigma = Permutation{2, 3, 1};
    const auto id_set = theorem41_pattern_set(identity(3), sigma);
    const PairPatternSet expected{PairPattern(identity(3), sigma), PairPattern(sigma, identity(3)),
                                  PairPattern(inverse(sigma), inverse(sigma))};
    CHECK(id_set == expected);
    CHECK(theorem41_pattern_set(identity(4), identity(4)).size() == 1);
    CHECK(theorem41_pattern_set(Permutation{2, 1}, Permutation{1, 2}) ==
          PairPatternSet{pp("21|12"), pp("12|21"), pp("21|21")});
    CHECK_THROWS_AS(theorem41_pattern_set(identity(2), identity(3)), std::invalid_argument);
}

TEST_CASE("three-voter containment") {
    for (const auto& pi : all_permutations(3)) {
        for (const auto& rho : all_permutations(3)) {
            CHECK(contains_3voter(pi, rho, identity(1), identity(1)));
        }
    }
    CHECK_FALSE(contains_3voter(identity(4), identity(4), Permutation{2, 1}, Permutation{2, 1}));
    CHECK_THROWS_AS(contains_3voter(identity(2), identity(2), identity(3), identity(3)), std::invalid_argument);
    CHECK_THROWS_AS(contains_3voter(identity(3), identity(2), identity(1), identity(1)), std::invalid_argument);

    // Checked against the injection oracle rather than the library's search.
    std::mt19937_64 rng(17);
    for (int i = 0; i < 300; ++i) {
        const auto pi = oracle::random_permutation(4, rng);
        const auto rho = oracle::random_permutation(4, rng);
        const auto tau = oracle::random_permutation(3, rng);
        const auto sigma = oracle::random_permutation(3, rng);
        REQUIRE(contains_3voter(pi, rho, tau, sigma) ==
                oracle::contains_configuration(three_voter_election(pi, rho),
                                               three_voter_configuration(tau, sigma).election()));
    }
}

TEST_CASE("avoiding pair counts") {
    const auto r = count_avoiding_pairs(2, Permutation{2, 1}, Permutation{1, 2});
    CHECK(r.n == 3);
    CHECK(r.label == "avoid-3voter:21,12");
    // Only (12,12) avoids all of [21,12], [12,21], [21,21].
    CHECK(r.count == 1);
    // Complementing the second component turns [12,12] into [12,21].
    CHECK(count_avoiding_pairs(3, identity(2), identity(2)).count == 17);
}

TEST_CASE("single-crossing forbidden pairs") {
    const auto& pi = single_crossing_pi();
    CHECK(pi.size() == 6);
    CHECK(pi.contains(pp("4231|4132")));
    CHECK(pi.contains(pp("1432|2431")));
    for (const auto& p : pi) CHECK(p.size() == 4);
    CHECK(count_pair_avoiders(3, pi) == 36);
    CHECK(count_pair_avoiders(4, pi) == 570);
}

TEST_CASE("three-configuration bound") {
    CHECK(upper_bound_3config(3, 2, single_crossing_pi()) == 6);
    CHECK(upper_bound_3config(7, 2, single_crossing_pi()) == 5040);
    CHECK(upper_bound_3config(3, 3, single_crossing_pi()) == 216);
    CHECK(upper_bound_3config(4, 3, single_crossing_pi()) == 24 * 570);
    CHECK(upper_bound_3config(3, 3, PairPatternSet{}) == 6 * 36);
    CHECK(upper_bound_3config(3, 4, PairPatternSet{}) == 6 * BigInt(36) * 36 * 36);
    CHECK_THROWS_AS(upper_bound_3config(3, 0, PairPatternSet{}), std::invalid_argument);
}

TEST_CASE("the bound undercounts two-voter elections") {
    // With two voters the exponent vanishes, yet every two-voter election is
    // single-crossing, so the bound only holds from three voters on.
    for (std::size_t m = 2; m <= 4; ++m) {
        const auto count = brute_force_count(m, 2, Domain::single_crossing).count;
        CHECK(count == factorial(m) * factorial(m));
        CHECK(count > upper_bound_3config(m, 2, single_crossing_pi()));
    }
    for (std::size_t m = 1; m <= 4; ++m) {
        CHECK(brute_force_count(m, 1, Domain::single_crossing).count <= upper_bound_3config(m, 1, single_crossing_pi()));
    }
}

TEST_CASE("integer helpers") {
    const std::uint64_t gamma[] = {1, 1, 2, 6, 20, 68, 232, 792};
    for (std::size_t n = 0; n < 8; ++n) CHECK(av_gamma_count(n) == gamma[n]);
    for (std::size_t n = 0; n <= 7; ++n) CHECK(av_gamma_count(n) == count_avoiders(n, gamma_patterns()));
    // The generating function (1-3x)/(1-4x+2x^2) has the same initial terms.
    std::vector<long long> series{1, 1};
    for (std::size_t n = 2; n < 8; ++n) series.push_back(4 * series[n - 1] - 2 * series[n - 2]);
    std::vector<long long> product(8, 0);
    const long long denominator[] = {1, -4, 2};
    for (std::size_t i = 0; i < 8; ++i)
        for (std::size_t j = 0; j < 3 && i + j < 8; ++j) product[i + j] += series[i] * denominator[j];
    CHECK(product == std::vector<long long>{1, -3, 0, 0, 0, 0, 0, 0});
    // The closed expression 1/2 (2+sqrt2)^n + 1/2 (2-sqrt2)^n is one step ahead.
    for (std::size_t n = 0; n < 7; ++n) {
        const double shifted = 0.5 * std::pow(2 + std::sqrt(2.0), n) + 0.5 * std::pow(2 - std::sqrt(2.0), n);
        CHECK(std::llround(shifted) == av_gamma_count(n + 1).convert_to<long long>());
    }
    CHECK(factorial(0) == 1);
    CHECK(factorial(20) == 2432902008176640000ULL);
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(1, 2) == 0);
    CHECK(binomial(2, 2) == 1);
}
