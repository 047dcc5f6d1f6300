#include <doctest.h>

#include <random>

#include "oracle.hpp"
#include "votelace/domains.hpp"

using namespace votelace;

namespace {

Election el(std::string_view inline_text) { return parse_inline_election(inline_text); }

bool holds(Domain d, std::string_view inline_text) { return check_domain(d, el(inline_text)).holds; }

}  // namespace

TEST_CASE("domain names round trip") {
    CHECK(all_domains().size() == 8);
    for (auto d : all_domains()) CHECK(parse_domain(domain_name(d)) == d);
    CHECK(parse_domain("enriched") == Domain::enriched);
    CHECK_FALSE(parse_domain("condorcet").has_value());
}

TEST_CASE("medium restriction") {
    CHECK(holds(Domain::medium_restricted, "1 2 3 / 1 2 3 / 1 2 3"));
    CHECK_FALSE(holds(Domain::medium_restricted, "1 2 3 / 2 3 1 / 3 1 2"));
    for (const auto& e : all_elections(4, 2)) REQUIRE(is_medium_restricted(e).holds);

    const auto v = is_medium_restricted(el("1 2 3 / 2 3 1 / 3 1 2"));
    REQUIRE(v.witness.has_value());
    // Voter i of the witness has candidate i of the witness in the middle.
    CHECK(v.witness->voters == std::vector<std::size_t>{2, 0, 1});
    CHECK(v.witness->candidates == std::vector<int>{1, 2, 3});
}

TEST_CASE("group separability, direct") {
    CHECK(holds(Domain::group_separable, "2 4 1 3"));
    CHECK_FALSE(holds(Domain::group_separable, "1 2 3 4 / 2 4 1 3"));
    CHECK(holds(Domain::group_separable, "1 2 3 4 / 4 3 2 1"));
    for (const auto& p : all_permutations(5)) REQUIRE(is_group_separable_direct(Election({p})).holds);
}

TEST_CASE("group separability through medium restriction and 2413") {
    const auto v = is_group_separable_bh(el("1 2 3 4 / 2 4 1 3"));
    CHECK_FALSE(v.holds);
    REQUIRE(v.witness.has_value());
    CHECK(v.witness->voters == std::vector<std::size_t>{0, 1});
    CHECK(v.witness->candidates == std::vector<int>{1, 2, 3, 4});
    const auto e = el("1 2 3 / 3 2 1 / 2 1 3");
    CHECK(is_group_separable_bh(e).holds == is_group_separable_direct(e).holds);
}

TEST_CASE("enriched group separability") {
    CHECK_FALSE(holds(Domain::enriched, "1 2 3 4 / 2 1 4 3"));
    CHECK(holds(Domain::enriched, "3 1 2 / 3 1 2 / 3 1 2"));
    CHECK(holds(Domain::enriched, "1 2 3 4 5 / 5 4 3 2 1"));
    CHECK(holds(Domain::enriched, "1 2 / 2 1"));
}

TEST_CASE("recursive characterization") {
    CHECK(holds(Domain::enriched_recursive, "1 2 3 / 3 2 1"));
    CHECK(holds(Domain::enriched_recursive, "1 2 3 4 / 1 2 4 3"));
    CHECK_FALSE(holds(Domain::enriched_recursive, "1 2 3 4 / 2 1 4 3"));
    CHECK(holds(Domain::enriched_recursive, "1"));
}

TEST_CASE("E/M condition") {
    CHECK_FALSE(holds(Domain::em_condition, "1 2 3 4 / 2 4 1 3"));
    CHECK(holds(Domain::em_condition, "2 4 1 3"));
    CHECK(holds(Domain::em_condition, "1 2 3"));
}

TEST_CASE("single-peakedness") {
    for (const auto& e : all_elections(2, 3)) REQUIRE(is_single_peaked(e).holds);
    CHECK(holds(Domain::single_peaked, "1 2 3 / 3 2 1 / 2 1 3"));
    // Every candidate is ranked last by someone, so no axis has room for all three.
    CHECK_FALSE(holds(Domain::single_peaked, "1 2 3 / 2 3 1 / 3 1 2"));
}

TEST_CASE("single-crossing") {
    for (const auto& p : all_permutations(4)) REQUIRE(is_single_crossing(Election({p})).holds);
    for (const auto& e : all_elections(3, 2)) REQUIRE(is_single_crossing(e).holds);
    // Put the odd voter in the middle and 1 vs 2 switches twice.
    CHECK(holds(Domain::single_crossing, "1 2 3 / 2 3 1 / 1 2 3"));
    CHECK_FALSE(holds(Domain::single_crossing, "1 2 3 / 2 3 1 / 3 1 2"));
    const auto v = is_single_crossing(el("1 2 3 4 / 2 1 4 3 / 1 3 2 4 / 4 3 2 1"));
    CHECK_FALSE(v.holds);
    REQUIRE(v.witness.has_value());
    CHECK(v.witness->voters == std::vector<std::size_t>{1, 2, 3});
}

TEST_CASE("recognizers agree with definitional oracles on every small election") {
    for (std::size_t m = 1; m <= 4; ++m) {
        for (std::size_t n = 1; n <= 3; ++n) {
            for (const auto& e : all_elections(m, n)) {
                REQUIRE(is_group_separable_direct(e).holds == oracle::group_separable(e));
                REQUIRE(is_medium_restricted(e).holds == oracle::medium_restricted(e));
                REQUIRE(is_single_peaked(e).holds == oracle::single_peaked(e));
                REQUIRE(is_single_crossing(e).holds == oracle::single_crossing(e));
            }
        }
    }
}

TEST_CASE("recognizers agree with oracles on random larger elections") {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 300; ++i) {
        const auto e = oracle::random_election(5, 4, rng);
        REQUIRE(is_group_separable_direct(e).holds == oracle::group_separable(e));
        REQUIRE(is_medium_restricted(e).holds == oracle::medium_restricted(e));
        REQUIRE(is_single_peaked(e).holds == oracle::single_peaked(e));
        REQUIRE(is_single_crossing(e).holds == oracle::single_crossing(e));
    }
}

TEST_CASE("witnesses are present exactly on failure and replay to violations") {
    for (std::size_t m = 1; m <= 4; ++m) {
        for (std::size_t n = 1; n <= 3; ++n) {
            for (const auto& e : all_elections(m, n)) {
                for (auto d : all_domains()) {
                    const auto v = check_domain(d, e);
                    REQUIRE(v.witness.has_value() == !v.holds);
                    if (v.witness) REQUIRE(witness_violates(d, e, *v.witness));
                }
            }
        }
    }
}

TEST_CASE("containment chain enriched, group-separable, medium") {
    std::mt19937_64 rng(13);
    for (int i = 0; i < 2000; ++i) {
        const auto e = oracle::random_election(1 + rng() % 5, 1 + rng() % 4, rng);
        if (is_enriched_group_separable(e).holds) REQUIRE(is_group_separable_direct(e).holds);
        if (is_group_separable_direct(e).holds) REQUIRE(is_medium_restricted(e).holds);
    }
}

TEST_CASE("forbidden configurations") {
    CHECK(enriched_forbidden_configurations().size() == 4);
    CHECK(contains_configuration(el("1 2 3 4 / 2 4 1 3"), bh_forbidden_configuration()));
    CHECK_FALSE(contains_configuration(el("1 2 3 4 / 4 3 2 1"), bh_forbidden_configuration()));
}

TEST_CASE("verdict report") {
    const auto text = format_verdict(Domain::group_separable_bh, is_group_separable_bh(el("1 2 3 4 / 2 4 1 3")));
    CHECK(text.find("domain: group-separable-bh\n") == 0);
    CHECK(text.find("holds: false\n") != std::string::npos);
    CHECK(text.find("witness voters: 1 2\n") != std::string::npos);
    CHECK(text.find("witness candidates: 1 2 3 4\n") != std::string::npos);
    CHECK(format_verdict(Domain::enriched, is_enriched_group_separable(el("1 2 / 2 1"))) ==
          "domain: enriched\nholds: true\n");
}

TEST_CASE("recognizer guard") {
    const Election big({identity(9)});
    CHECK_THROWS_AS(check_domain(Domain::single_peaked, big), GuardExceeded);
    const Election many({identity(2), identity(2), identity(2), identity(2), identity(2), identity(2), identity(2)});
    CHECK_THROWS_AS(check_domain(Domain::medium_restricted, many), GuardExceeded);
    CHECK(check_domain(Domain::medium_restricted, Election({identity(8)})).holds);
}
