#include "votelace/domains.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <numeric>
#include <sstream>

namespace votelace {

std::string_view domain_name(Domain d) {
    switch (d) {
        case Domain::medium_restricted: return "medium";
        case Domain::group_separable: return "group-separable";
        case Domain::group_separable_bh: return "group-separable-bh";
        case Domain::enriched: return "enriched";
        case Domain::enriched_recursive: return "enriched-recursive";
        case Domain::em_condition: return "em";
        case Domain::single_peaked: return "single-peaked";
        case Domain::single_crossing: return "single-crossing";
    }
    return "unknown";
}

const std::vector<Domain>& all_domains() {
    static const std::vector<Domain> domains{
        Domain::medium_restricted, Domain::group_separable, Domain::group_separable_bh,
        Domain::enriched,          Domain::enriched_recursive, Domain::em_condition,
        Domain::single_peaked,     Domain::single_crossing,
    };
    return domains;
}

std::optional<Domain> parse_domain(std::string_view name) {
    for (auto d : all_domains()) {
        if (domain_name(d) == name) return d;
    }
    return std::nullopt;
}

void check_recognizer_guard(const Election& e, const ExhaustionLimits& limits) {
    if (e.num_candidates() > limits.max_candidates || e.num_voters() > limits.max_voters) {
        throw GuardExceeded("recognizers are capped at m <= " + std::to_string(limits.max_candidates) +
                            ", n <= " + std::to_string(limits.max_voters) + "; got m = " +
                            std::to_string(e.num_candidates()) + ", n = " + std::to_string(e.num_voters()));
    }
}

namespace {

std::vector<int> mask_members(unsigned mask) {
    std::vector<int> out;
    for (int c = 1; mask != 0; ++c, mask >>= 1) {
        if (mask & 1u) out.push_back(c);
    }
    return out;
}

unsigned members_mask(std::span<const int> candidates) {
    unsigned mask = 0;
    for (int c : candidates) mask |= 1u << (c - 1);
    return mask;
}

// The ranking filtered to the candidates in `mask`, best first.
std::vector<int> restricted_order(const Ranking& r, unsigned mask) {
    std::vector<int> out;
    for (int c : r.order()) {
        if (mask & (1u << (c - 1))) out.push_back(c);
    }
    return out;
}

Election sub_election(const Election& e, std::span<const std::size_t> voters, std::span<const int> candidates) {
    std::vector<Ranking> picked;
    for (auto v : voters) picked.push_back(e.voter(v));
    return restrict(Election(e.num_candidates(), std::move(picked)), candidates);
}

std::vector<std::size_t> all_voter_indices(const Election& e) {
    std::vector<std::size_t> v(e.num_voters());
    std::iota(v.begin(), v.end(), 0);
    return v;
}

std::vector<int> all_candidates(const Election& e) {
    std::vector<int> c(e.num_candidates());
    std::iota(c.begin(), c.end(), 1);
    return c;
}

// Drops voters, then candidates, one at a time while the sub-election still
// fails `holds`. Valid for hereditary domains, where failure of a
// sub-election implies failure of the whole.
template <typename Holds>
Witness shrink_witness(const Election& e, std::vector<std::size_t> voters, std::vector<int> candidates,
                       Holds holds, std::string reason) {
    for (std::size_t i = 0; i < voters.size() && voters.size() > 1;) {
        auto trial = voters;
        trial.erase(trial.begin() + static_cast<std::ptrdiff_t>(i));
        if (!holds(sub_election(e, trial, candidates))) {
            voters = std::move(trial);
        } else {
            ++i;
        }
    }
    for (std::size_t i = 0; i < candidates.size() && candidates.size() > 1;) {
        auto trial = candidates;
        trial.erase(trial.begin() + static_cast<std::ptrdiff_t>(i));
        if (!holds(sub_election(e, voters, trial))) {
            candidates = std::move(trial);
        } else {
            ++i;
        }
    }
    return Witness{std::move(voters), std::move(candidates), std::move(reason)};
}

std::string join(std::span<const int> xs, const char* sep = " ") {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out += sep;
        out += std::to_string(xs[i]);
    }
    return out;
}

// ---- medium restriction -------------------------------------------------

int middle_of(const Ranking& r, std::array<int, 3> triple) {
    std::sort(triple.begin(), triple.end(), [&](int x, int y) { return r.prefers(x, y); });
    return triple[1];
}

std::optional<Witness> medium_violation(const Election& e) {
    const int m = static_cast<int>(e.num_candidates());
    if (e.num_voters() < 3) return std::nullopt;
    for (int a = 1; a <= m; ++a) {
        for (int b = a + 1; b <= m; ++b) {
            for (int c = b + 1; c <= m; ++c) {
                const std::array<int, 3> triple{a, b, c};
                std::array<std::optional<std::size_t>, 3> voter_with_middle;
                for (std::size_t v = 0; v < e.num_voters(); ++v) {
                    const int mid = middle_of(e.voter(v), triple);
                    const auto slot = static_cast<std::size_t>(std::find(triple.begin(), triple.end(), mid) - triple.begin());
                    if (!voter_with_middle[slot]) voter_with_middle[slot] = v;
                }
                if (voter_with_middle[0] && voter_with_middle[1] && voter_with_middle[2]) {
                    return Witness{{*voter_with_middle[0], *voter_with_middle[1], *voter_with_middle[2]},
                                   {a, b, c},
                                   "each listed voter ranks the matching candidate in the middle of the triple"};
                }
            }
        }
    }
    return std::nullopt;
}

bool replay_medium(const Election& e, const Witness& w) {
    if (w.voters.size() != 3 || w.candidates.size() != 3) return false;
    const std::array<int, 3> triple{w.candidates[0], w.candidates[1], w.candidates[2]};
    if (triple[0] == triple[1] || triple[0] == triple[2] || triple[1] == triple[2]) return false;
    if (w.voters[0] == w.voters[1] || w.voters[0] == w.voters[2] || w.voters[1] == w.voters[2]) return false;
    for (std::size_t i = 0; i < 3; ++i) {
        if (middle_of(e.voter(w.voters[i]), triple) != triple[i]) return false;
    }
    return true;
}

// ---- group separability, direct definition -------------------------------

bool is_prefix_or_suffix(const std::vector<int>& order, unsigned block) {
    const auto size = static_cast<std::size_t>(std::popcount(block));
    auto in_block = [&](int c) { return (block & (1u << (c - 1))) != 0; };
    return std::all_of(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(size), in_block) ||
           std::all_of(order.end() - static_cast<std::ptrdiff_t>(size), order.end(), in_block);
}

// Tries every split of `subset` into two nonempty blocks.
bool subset_splits(const Election& e, unsigned subset) {
    std::vector<std::vector<int>> orders;
    for (const auto& r : e.preferences()) orders.push_back(restricted_order(r, subset));
    const unsigned lowest = subset & (~subset + 1);
    for (unsigned block = (subset - 1) & subset; block != 0; block = (block - 1) & subset) {
        // Each unordered split is visited once: the block holding the lowest member.
        if (!(block & lowest)) continue;
        if (std::all_of(orders.begin(), orders.end(), [&](const auto& o) { return is_prefix_or_suffix(o, block); })) {
            return true;
        }
    }
    return false;
}

std::optional<unsigned> unsplittable_subset(const Election& e) {
    const unsigned full = (1u << e.num_candidates()) - 1;
    for (unsigned subset = 1; subset <= full; ++subset) {
        if (std::popcount(subset) < 2) continue;
        if (!subset_splits(e, subset)) return subset;
    }
    return std::nullopt;
}

// ---- pairwise pattern conditions ----------------------------------------

// Two voters (i, j) and four candidates listed in voter i's order whose
// pattern in voter j lies in `forbidden`.
std::optional<Witness> pair_pattern_violation(const Election& e, const PatternSet& forbidden, const char* reason) {
    for (std::size_t i = 0; i < e.num_voters(); ++i) {
        for (std::size_t j = 0; j < e.num_voters(); ++j) {
            if (i == j) continue;
            const auto& vi = e.voter(i);
            const auto& vj = e.voter(j);
            const auto p = pair_permutation(vi, vj);
            for (const auto& pattern : forbidden) {
                std::optional<Witness> found;
                for_each_occurrence(pattern, p, [&](std::span<const std::size_t> idx) {
                    std::vector<int> cands;
                    for (auto pos : idx) cands.push_back(vj.at_rank(pos - 1));
                    std::sort(cands.begin(), cands.end(), [&](int x, int y) { return vi.prefers(x, y); });
                    found = Witness{{i, j}, std::move(cands),
                                    std::string(reason) + " (pattern " + pattern.compact() + ")"};
                    return false;
                });
                if (found) return found;
            }
        }
    }
    return std::nullopt;
}

// Pattern formed in voter j by the witness candidates, read in voter i's order.
std::optional<Permutation> witness_pattern(const Election& e, const Witness& w) {
    if (w.voters.size() != 2 || w.voters[0] == w.voters[1]) return std::nullopt;
    const auto& vi = e.voter(w.voters[0]);
    const auto& vj = e.voter(w.voters[1]);
    auto cands = w.candidates;
    for (std::size_t t = 1; t < cands.size(); ++t) {
        if (!vi.prefers(cands[t - 1], cands[t])) return std::nullopt;
    }
    std::vector<int> ranks;
    for (int c : cands) ranks.push_back(static_cast<int>(vj.rank_of(c)));
    // Position t of the pattern holds the voter-i index of voter j's t-th pick.
    std::vector<std::size_t> by_j(cands.size());
    std::iota(by_j.begin(), by_j.end(), 0);
    std::sort(by_j.begin(), by_j.end(), [&](auto x, auto y) { return ranks[x] < ranks[y]; });
    std::vector<int> values;
    for (auto t : by_j) values.push_back(static_cast<int>(t + 1));
    return Permutation(values);
}

// ---- enriched, recursive characterization --------------------------------

using Word = std::vector<int>;

bool is_increasing_run(const Word& p, std::size_t from, std::size_t to, int first_value) {
    for (std::size_t i = from; i < to; ++i) {
        if (p[i] != first_value + static_cast<int>(i - from)) return false;
    }
    return true;
}

bool is_decreasing_run(const Word& p, std::size_t from, std::size_t to, int first_value) {
    for (std::size_t i = from; i < to; ++i) {
        if (p[i] != first_value - static_cast<int>(i - from)) return false;
    }
    return true;
}

enum class Branch { keep_low_prefix, keep_high_suffix };

// Shape test for one preference; identity and reverse identity form the first
// block and fit every (k, branch).
bool fits_shape(const Word& p, std::size_t k, Branch branch) {
    const auto m = p.size();
    if (is_increasing_run(p, 0, m, 1) || is_decreasing_run(p, 0, m, static_cast<int>(m))) return true;
    if (branch == Branch::keep_low_prefix) {
        // 1..k followed by anything on {k+1..m}, or anything followed by k..1.
        return is_increasing_run(p, 0, k, 1) || is_decreasing_run(p, m - k, m, static_cast<int>(k));
    }
    // anything on {1..k} followed by k+1..m, or m..k+1 followed by anything.
    return is_increasing_run(p, k, m, static_cast<int>(k) + 1) ||
           is_decreasing_run(p, 0, m - k, static_cast<int>(m));
}

bool all_fit(const std::vector<Word>& prefs, std::size_t k, Branch branch) {
    return std::all_of(prefs.begin(), prefs.end(), [&](const Word& p) { return fits_shape(p, k, branch); });
}

std::vector<Word> restrict_words(const std::vector<Word>& prefs, int low, int high) {
    std::vector<Word> out;
    for (const auto& p : prefs) {
        Word q;
        for (int v : p) {
            if (v >= low && v <= high) q.push_back(v - low + 1);
        }
        out.push_back(std::move(q));
    }
    return out;
}

// Returns the candidate labels of a sub-election where no (k, branch) shape
// fits, or nullopt if the decomposition succeeds all the way down.
std::optional<std::vector<int>> recursive_failure(const std::vector<Word>& prefs, const std::vector<int>& labels) {
    const auto m = labels.size();
    if (m <= 1) return std::nullopt;
    std::optional<std::vector<int>> deeper;
    bool any_fit = false;
    for (std::size_t k = 1; k < m; ++k) {
        for (auto branch : {Branch::keep_low_prefix, Branch::keep_high_suffix}) {
            if (!all_fit(prefs, k, branch)) continue;
            any_fit = true;
            const int low = branch == Branch::keep_low_prefix ? static_cast<int>(k) + 1 : 1;
            const int high = branch == Branch::keep_low_prefix ? static_cast<int>(m) : static_cast<int>(k);
            std::vector<int> sub_labels(labels.begin() + (low - 1), labels.begin() + high);
            auto failure = recursive_failure(restrict_words(prefs, low, high), sub_labels);
            if (!failure) return std::nullopt;
            if (!deeper) deeper = std::move(failure);
        }
    }
    if (!any_fit) return labels;
    return deeper;
}

// Preferences relabelled so the first voter reads 1..m, plus the candidate
// behind each relabelled value.
std::pair<std::vector<Word>, std::vector<int>> relabel_by_first(const Election& e) {
    const auto& first = e.voter(0);
    std::vector<Word> prefs;
    for (const auto& r : e.preferences()) {
        const auto p = pair_permutation(first, r);
        prefs.emplace_back(p.values().begin(), p.values().end());
    }
    return {std::move(prefs), std::vector<int>(first.order().begin(), first.order().end())};
}

bool no_shape_fits(const Election& e) {
    auto [prefs, labels] = relabel_by_first(e);
    const auto m = labels.size();
    if (m <= 1) return false;
    for (std::size_t k = 1; k < m; ++k) {
        if (all_fit(prefs, k, Branch::keep_low_prefix) || all_fit(prefs, k, Branch::keep_high_suffix)) return false;
    }
    return true;
}

// ---- E/M condition -------------------------------------------------------

std::optional<Witness> em_violation(const Election& e) {
    const unsigned full = (1u << e.num_candidates()) - 1;
    for (unsigned subset = 1; subset <= full; ++subset) {
        if (std::popcount(subset) != 4) continue;
        std::vector<unsigned> ends;
        std::vector<unsigned> middles;
        for (const auto& r : e.preferences()) {
            const auto o = restricted_order(r, subset);
            const unsigned end_mask = (1u << (o[0] - 1)) | (1u << (o[3] - 1));
            ends.push_back(end_mask);
            middles.push_back(subset & ~end_mask);
        }
        for (std::size_t g = 0; g < ends.size(); ++g) {
            for (std::size_t d = 0; d < middles.size(); ++d) {
                if (ends[g] == middles[d]) {
                    return Witness{{g, d}, mask_members(subset),
                                   "top and bottom of the first voter are the middle pair of the second"};
                }
            }
        }
    }
    return std::nullopt;
}

bool replay_em(const Election& e, const Witness& w) {
    if (w.voters.size() != 2 || w.candidates.size() != 4) return false;
    const unsigned subset = members_mask(w.candidates);
    if (std::popcount(subset) != 4) return false;
    const auto og = restricted_order(e.voter(w.voters[0]), subset);
    const auto od = restricted_order(e.voter(w.voters[1]), subset);
    const unsigned ends = (1u << (og[0] - 1)) | (1u << (og[3] - 1));
    const unsigned middles = (1u << (od[1] - 1)) | (1u << (od[2] - 1));
    return ends == middles;
}

// ---- single-peaked -------------------------------------------------------

// Every prefix of the ranking must be a contiguous stretch of the axis.
bool peaked_on_axis(const Ranking& r, const std::vector<std::size_t>& axis_position) {
    std::size_t lo = axis_position[r.at_rank(0)];
    std::size_t hi = lo;
    for (std::size_t i = 1; i < r.size(); ++i) {
        const auto p = axis_position[r.at_rank(i)];
        if (p + 1 == lo) {
            lo = p;
        } else if (p == hi + 1) {
            hi = p;
        } else {
            return false;
        }
    }
    return true;
}

bool single_peaked_holds(const Election& e) {
    const auto m = e.num_candidates();
    if (m <= 2) return true;
    std::vector<int> axis(m);
    std::iota(axis.begin(), axis.end(), 1);
    std::vector<std::size_t> position(m + 1);
    do {
        // An axis and its mirror image accept the same rankings.
        if (axis.front() > axis.back()) continue;
        for (std::size_t i = 0; i < m; ++i) position[axis[i]] = i;
        if (std::all_of(e.preferences().begin(), e.preferences().end(),
                        [&](const Ranking& r) { return peaked_on_axis(r, position); })) {
            return true;
        }
    } while (std::next_permutation(axis.begin(), axis.end()));
    return false;
}

// ---- single-crossing -----------------------------------------------------

bool single_crossing_holds(const Election& e) {
    const auto n = e.num_voters();
    const int m = static_cast<int>(e.num_candidates());
    if (n <= 2) return true;
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    do {
        bool ok = true;
        for (int a = 1; a <= m && ok; ++a) {
            for (int b = a + 1; b <= m && ok; ++b) {
                int switches = 0;
                for (std::size_t t = 1; t < n; ++t) {
                    if (e.voter(order[t - 1]).prefers(a, b) != e.voter(order[t]).prefers(a, b)) ++switches;
                }
                ok = switches <= 1;
            }
        }
        if (ok) return true;
    } while (std::next_permutation(order.begin(), order.end()));
    return false;
}

const ExhaustionLimits kDefaultLimits{};

}  // namespace

DomainVerdict is_medium_restricted(const Election& e) {
    check_recognizer_guard(e, kDefaultLimits);
    if (auto w = medium_violation(e)) return DomainVerdict::fail(std::move(*w));
    return DomainVerdict::pass();
}

DomainVerdict is_group_separable_direct(const Election& e) {
    check_recognizer_guard(e, kDefaultLimits);
    auto subset = unsplittable_subset(e);
    if (!subset) return DomainVerdict::pass();
    auto holds = [](const Election& sub) { return sub.num_candidates() < 2 || subset_splits(sub, (1u << sub.num_candidates()) - 1); };
    auto w = shrink_witness(e, all_voter_indices(e), mask_members(*subset), holds,
                            "no split into two blocks ranked wholesale above or below each other");
    return DomainVerdict::fail(std::move(w));
}

DomainVerdict is_group_separable_bh(const Election& e) {
    check_recognizer_guard(e, kDefaultLimits);
    if (auto w = medium_violation(e)) return DomainVerdict::fail(std::move(*w));
    static const PatternSet bdac{Permutation{2, 4, 1, 3}};
    if (auto w = pair_pattern_violation(e, bdac, "configuration (abcd,bdac)")) return DomainVerdict::fail(std::move(*w));
    return DomainVerdict::pass();
}

DomainVerdict is_enriched_group_separable(const Election& e) {
    auto gs = is_group_separable_bh(e);
    if (!gs.holds) return gs;
    if (auto w = pair_pattern_violation(e, gamma_patterns(), "pair permutation contains a forbidden pattern")) {
        return DomainVerdict::fail(std::move(*w));
    }
    return DomainVerdict::pass();
}

DomainVerdict is_enriched_recursive(const Election& e) {
    check_recognizer_guard(e, kDefaultLimits);
    auto [prefs, labels] = relabel_by_first(e);
    auto failure = recursive_failure(prefs, labels);
    if (!failure) return DomainVerdict::pass();
    std::sort(failure->begin(), failure->end());
    // Every voter takes part in the block decomposition.
    std::vector<std::size_t> voters(e.num_voters());
    std::iota(voters.begin(), voters.end(), std::size_t{0});
    return DomainVerdict::fail(Witness{std::move(voters), std::move(*failure),
                                       "no block decomposition of the restriction to these candidates"});
}

DomainVerdict em_condition(const Election& e) {
    check_recognizer_guard(e, kDefaultLimits);
    if (auto w = em_violation(e)) return DomainVerdict::fail(std::move(*w));
    return DomainVerdict::pass();
}

DomainVerdict is_single_peaked(const Election& e) {
    check_recognizer_guard(e, kDefaultLimits);
    if (single_peaked_holds(e)) return DomainVerdict::pass();
    return DomainVerdict::fail(shrink_witness(e, all_voter_indices(e), all_candidates(e), single_peaked_holds,
                                              "no common axis makes these voters single-peaked"));
}

DomainVerdict is_single_crossing(const Election& e) {
    check_recognizer_guard(e, kDefaultLimits);
    if (single_crossing_holds(e)) return DomainVerdict::pass();
    return DomainVerdict::fail(shrink_witness(e, all_voter_indices(e), all_candidates(e), single_crossing_holds,
                                              "no voter order switches each candidate pair at most once"));
}

DomainVerdict check_domain(Domain d, const Election& e, const ExhaustionLimits& limits) {
    check_recognizer_guard(e, limits);
    switch (d) {
        case Domain::medium_restricted: return is_medium_restricted(e);
        case Domain::group_separable: return is_group_separable_direct(e);
        case Domain::group_separable_bh: return is_group_separable_bh(e);
        case Domain::enriched: return is_enriched_group_separable(e);
        case Domain::enriched_recursive: return is_enriched_recursive(e);
        case Domain::em_condition: return em_condition(e);
        case Domain::single_peaked: return is_single_peaked(e);
        case Domain::single_crossing: return is_single_crossing(e);
    }
    return DomainVerdict::pass();
}

bool witness_violates(Domain d, const Election& e, const Witness& w) {
    for (auto v : w.voters) {
        if (v >= e.num_voters()) return false;
    }
    for (int c : w.candidates) {
        if (c < 1 || static_cast<std::size_t>(c) > e.num_candidates()) return false;
    }
    if (std::popcount(members_mask(w.candidates)) != static_cast<int>(w.candidates.size())) return false;
    switch (d) {
        case Domain::medium_restricted: return replay_medium(e, w);
        case Domain::group_separable: {
            if (w.voters.empty() || w.candidates.size() < 2) return false;
            const auto sub = sub_election(e, w.voters, w.candidates);
            return !subset_splits(sub, (1u << sub.num_candidates()) - 1);
        }
        case Domain::group_separable_bh:
        case Domain::enriched: {
            if (w.voters.size() == 3) return replay_medium(e, w);
            if (w.candidates.size() != 4) return false;
            const auto p = witness_pattern(e, w);
            if (!p) return false;
            if (d == Domain::group_separable_bh) return *p == Permutation{2, 4, 1, 3};
            return gamma_patterns().contains(*p);
        }
        case Domain::enriched_recursive:
            if (w.candidates.size() < 3) return false;
            return no_shape_fits(restrict(e, w.candidates));
        case Domain::em_condition: return replay_em(e, w);
        case Domain::single_peaked:
            return !w.voters.empty() && !single_peaked_holds(sub_election(e, w.voters, w.candidates));
        case Domain::single_crossing:
            return !w.voters.empty() && !single_crossing_holds(sub_election(e, w.voters, w.candidates));
    }
    return false;
}

std::string format_verdict(Domain d, const DomainVerdict& v) {
    std::ostringstream out;
    out << "domain: " << domain_name(d) << '\n';
    out << "holds: " << (v.holds ? "true" : "false") << '\n';
    if (v.witness) {
        std::vector<int> voters;
        for (auto i : v.witness->voters) voters.push_back(static_cast<int>(i + 1));
        out << "witness voters: " << join(voters) << '\n';
        out << "witness candidates: " << join(v.witness->candidates) << '\n';
        out << "reason: " << v.witness->reason << '\n';
    }
    return out.str();
}

const std::vector<Configuration>& enriched_forbidden_configurations() {
    // a=1, b=2, c=3, d=4
    static const std::vector<Configuration> configs{
        Configuration({Permutation{1, 2, 3, 4}, Permutation{2, 1, 4, 3}}),
        Configuration({Permutation{1, 2, 3, 4}, Permutation{2, 4, 1, 3}}),
        Configuration({Permutation{1, 3, 2, 4}, Permutation{2, 1, 4, 3}}),
        Configuration({Permutation{1, 3, 2, 4}, Permutation{2, 4, 1, 3}}),
    };
    return configs;
}

const Configuration& bh_forbidden_configuration() {
    static const Configuration config({Permutation{1, 2, 3, 4}, Permutation{2, 4, 1, 3}});
    return config;
}

}  // namespace votelace
