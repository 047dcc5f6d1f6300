#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "votelace/election.hpp"
#include "votelace/guard.hpp"

namespace votelace {

/// Recognized domain restrictions. Several are alternative formulations of
/// the same class so they can be checked against each other.
enum class Domain {
    medium_restricted,
    group_separable,     // subset/partition definition
    group_separable_bh,  // medium-restricted plus the (abcd,bdac) configuration
    enriched,            // configuration form
    enriched_recursive,  // block decomposition around the first voter
    em_condition,
    single_peaked,
    single_crossing,
};

/// Command-line names: medium, group-separable, group-separable-bh, enriched,
/// enriched-recursive, em, single-peaked, single-crossing.
std::string_view domain_name(Domain d);
std::optional<Domain> parse_domain(std::string_view name);
const std::vector<Domain>& all_domains();

/// Evidence that an election lies outside a domain. Voters are 0-based
/// indices, candidates are the election's own identifiers.
struct Witness {
    std::vector<std::size_t> voters;
    std::vector<int> candidates;
    std::string reason;
};

struct DomainVerdict {
    bool holds = true;
    std::optional<Witness> witness;

    static DomainVerdict pass() { return {}; }
    static DomainVerdict fail(Witness w) { return {false, std::move(w)}; }
    explicit operator bool() const noexcept { return holds; }
};

/// Throws GuardExceeded above limits.max_candidates / limits.max_voters.
void check_recognizer_guard(const Election& e, const ExhaustionLimits& limits);

DomainVerdict is_medium_restricted(const Election& e);
DomainVerdict is_group_separable_direct(const Election& e);
DomainVerdict is_group_separable_bh(const Election& e);
DomainVerdict is_enriched_group_separable(const Election& e);
DomainVerdict is_enriched_recursive(const Election& e);
DomainVerdict em_condition(const Election& e);
DomainVerdict is_single_peaked(const Election& e);
DomainVerdict is_single_crossing(const Election& e);

/// Dispatches to the recognizer for `d` after checking the size guard.
DomainVerdict check_domain(Domain d, const Election& e, const ExhaustionLimits& limits = {});

/// Replays a witness against the defining condition of `d`; true when the
/// witness really exhibits a violation.
bool witness_violates(Domain d, const Election& e, const Witness& w);

/// "domain: ...\nholds: ...\n" plus 1-based witness voters and candidates.
std::string format_verdict(Domain d, const DomainVerdict& v);

/// The four (4,2)-configurations (abcd,badc), (abcd,bdac), (acbd,badc),
/// (acbd,bdac) with a=1, b=2, c=3, d=4.
const std::vector<Configuration>& enriched_forbidden_configurations();

/// The (abcd,bdac) configuration from the group-separable characterization.
const Configuration& bh_forbidden_configuration();

}  // namespace votelace
