#include "votelace/election.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace votelace {

namespace {

void validate_ranking(const std::vector<int>& order) {
    const auto m = order.size();
    std::vector<bool> seen(m + 1, false);
    for (int c : order) {
        if (c < 1 || static_cast<std::size_t>(c) > m) {
            throw std::invalid_argument("ranking candidate " + std::to_string(c) + " outside 1.." + std::to_string(m));
        }
        if (seen[c]) throw std::invalid_argument("duplicate candidate " + std::to_string(c) + " in ranking");
        seen[c] = true;
    }
}

}  // namespace

Ranking::Ranking(std::vector<int> order) : order_(std::move(order)), rank_(order_.size() + 1, 0) {
    validate_ranking(order_);
    for (std::size_t r = 0; r < order_.size(); ++r) rank_[order_[r]] = r;
}

Ranking::Ranking(const Permutation& order) : Ranking(std::vector<int>(order.values().begin(), order.values().end())) {}

std::string Ranking::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < order_.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(order_[i]);
    }
    return out;
}

Election::Election(std::size_t num_candidates, std::vector<Ranking> preferences)
    : m_(num_candidates), preferences_(std::move(preferences)) {
    if (m_ == 0) throw std::invalid_argument("an election needs at least one candidate");
    if (preferences_.empty()) throw std::invalid_argument("an election needs at least one voter");
    for (const auto& r : preferences_) {
        if (r.size() != m_) {
            throw std::invalid_argument("ranking '" + r.to_string() + "' is not over 1.." + std::to_string(m_));
        }
    }
}

namespace {

std::size_t leading_size(const std::vector<Ranking>& preferences) {
    return preferences.empty() ? 0 : preferences.front().size();
}

std::vector<Ranking> to_rankings(const std::vector<Permutation>& preferences) {
    std::vector<Ranking> rankings;
    rankings.reserve(preferences.size());
    for (const auto& p : preferences) rankings.emplace_back(p);
    return rankings;
}

}  // namespace

// The size is read before the vector is moved into the delegated constructor.
Election::Election(std::vector<Ranking> preferences) : Election(leading_size(preferences), preferences) {}

Election::Election(const std::vector<Permutation>& preferences) : Election(to_rankings(preferences)) {}

std::string Election::to_string() const {
    std::string out;
    for (const auto& r : preferences_) out += r.to_string() + '\n';
    return out;
}

namespace {

std::vector<int> parse_voter_line(std::string_view line, std::size_t line_number) {
    std::vector<int> order;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        const auto start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
        if (i == start) break;
        const auto token = line.substr(start, i - start);
        int c = 0;
        auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), c);
        if (ec != std::errc{} || end != token.data() + token.size() || c < 1) {
            throw ParseError("line " + std::to_string(line_number) + ": malformed candidate '" +
                             std::string(token) + "'");
        }
        if (std::find(order.begin(), order.end(), c) != order.end()) {
            throw ParseError("line " + std::to_string(line_number) + ": duplicate candidate " + std::to_string(c));
        }
        order.push_back(c);
    }
    return order;
}

Election parse_lines(const std::vector<std::pair<std::string_view, std::size_t>>& lines) {
    std::vector<Ranking> rankings;
    std::size_t m = 0;
    for (const auto& [line, number] : lines) {
        auto order = parse_voter_line(line, number);
        if (rankings.empty()) {
            m = order.size();
        } else if (order.size() != m) {
            throw ParseError("line " + std::to_string(number) + ": inconsistent candidate sets (" +
                             std::to_string(order.size()) + " candidates, expected " + std::to_string(m) + ")");
        }
        if (*std::max_element(order.begin(), order.end()) != static_cast<int>(m)) {
            throw ParseError("line " + std::to_string(number) + ": inconsistent candidate sets (expected 1.." +
                             std::to_string(m) + ")");
        }
        rankings.emplace_back(std::move(order));
    }
    if (rankings.empty()) throw ParseError("election has no voters");
    return Election(m, std::move(rankings));
}

}  // namespace

Election parse_election(std::string_view text) {
    std::vector<std::pair<std::string_view, std::size_t>> lines;
    std::size_t start = 0;
    std::size_t number = 0;
    while (start <= text.size()) {
        auto end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        ++number;
        auto line = text.substr(start, end - start);
        const auto first = line.find_first_not_of(" \t\r");
        if (first != std::string_view::npos && line[first] != '#') lines.emplace_back(line, number);
        start = end + 1;
    }
    return parse_lines(lines);
}

Election parse_inline_election(std::string_view text) {
    std::vector<std::pair<std::string_view, std::size_t>> lines;
    std::size_t start = 0;
    std::size_t number = 0;
    while (start <= text.size()) {
        auto end = text.find_first_of("/;\n", start);
        if (end == std::string_view::npos) end = text.size();
        ++number;
        auto part = text.substr(start, end - start);
        if (part.find_first_not_of(" \t\r") != std::string_view::npos) lines.emplace_back(part, number);
        start = end + 1;
    }
    return parse_lines(lines);
}

Election restrict(const Election& e, std::span<const int> subset) {
    if (subset.empty()) throw std::invalid_argument("restrict: empty candidate subset");
    const auto m = e.num_candidates();
    std::vector<int> label(m + 1, 0);
    for (int c : subset) {
        if (c < 1 || static_cast<std::size_t>(c) > m) {
            throw std::invalid_argument("restrict: candidate " + std::to_string(c) + " outside 1.." + std::to_string(m));
        }
        label[c] = 1;
    }
    int next = 0;
    for (std::size_t c = 1; c <= m; ++c) {
        if (label[c]) label[c] = ++next;
    }
    std::vector<Ranking> rankings;
    rankings.reserve(e.num_voters());
    for (const auto& r : e.preferences()) {
        std::vector<int> order;
        order.reserve(next);
        for (int c : r.order()) {
            if (label[c]) order.push_back(label[c]);
        }
        rankings.emplace_back(std::move(order));
    }
    return Election(static_cast<std::size_t>(next), std::move(rankings));
}

namespace {

class EmbeddingSearch {
public:
    EmbeddingSearch(const Election& e, const Configuration& cfg)
        : e_(e), cfg_(cfg.election()), voter_map_(cfg_.num_voters()), used_voter_(e.num_voters(), false),
          candidate_map_(cfg_.num_candidates() + 1, 0), used_candidate_(e.num_candidates() + 1, false) {}

    std::optional<Embedding> run() {
        if (cfg_.num_voters() > e_.num_voters() || cfg_.num_candidates() > e_.num_candidates()) return std::nullopt;
        if (!assign_voter(0)) return std::nullopt;
        Embedding found;
        found.voters = voter_map_;
        found.candidates.assign(candidate_map_.begin() + 1, candidate_map_.end());
        return found;
    }

private:
    bool assign_voter(std::size_t t) {
        if (t == cfg_.num_voters()) return assign_candidate(1);
        for (std::size_t v = 0; v < e_.num_voters(); ++v) {
            if (used_voter_[v]) continue;
            used_voter_[v] = true;
            voter_map_[t] = v;
            const bool ok = assign_voter(t + 1);
            used_voter_[v] = false;
            if (ok) return true;
        }
        return false;
    }

    bool assign_candidate(int s) {
        const auto h = static_cast<int>(cfg_.num_candidates());
        if (s > h) return true;
        for (int c = 1; c <= static_cast<int>(e_.num_candidates()); ++c) {
            if (used_candidate_[c] || !consistent(s, c)) continue;
            used_candidate_[c] = true;
            candidate_map_[s] = c;
            if (assign_candidate(s + 1)) return true;
            used_candidate_[c] = false;
        }
        candidate_map_[s] = 0;
        return false;
    }

    // Every configuration voter must order s against each earlier-assigned
    // candidate the way its image voter orders the images.
    bool consistent(int s, int c) const {
        for (std::size_t t = 0; t < cfg_.num_voters(); ++t) {
            const auto& source = cfg_.voter(t);
            const auto& target = e_.voter(voter_map_[t]);
            for (int prev = 1; prev < s; ++prev) {
                if (source.prefers(prev, s) != target.prefers(candidate_map_[prev], c)) return false;
            }
        }
        return true;
    }

    const Election& e_;
    const Election& cfg_;
    std::vector<std::size_t> voter_map_;
    std::vector<bool> used_voter_;
    std::vector<int> candidate_map_;
    std::vector<bool> used_candidate_;
};

}  // namespace

std::optional<Embedding> find_embedding(const Election& e, const Configuration& cfg) {
    return EmbeddingSearch(e, cfg).run();
}

Permutation pair_permutation(const Ranking& reference, const Ranking& other) {
    if (reference.size() != other.size()) {
        throw std::invalid_argument("pair_permutation: rankings over different candidate sets");
    }
    std::vector<int> values(other.size());
    for (std::size_t i = 0; i < other.size(); ++i) {
        values[i] = static_cast<int>(reference.rank_of(other.at_rank(i)) + 1);
    }
    return Permutation(std::move(values));
}

std::uint64_t election_count(std::size_t m, std::size_t n) {
    const auto per_voter = factorial_u64(m);
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < n; ++i) {
        if (per_voter != 0 && total > std::numeric_limits<std::uint64_t>::max() / per_voter) {
            return std::numeric_limits<std::uint64_t>::max();
        }
        total *= per_voter;
    }
    return total;
}

void check_election_guard(std::size_t m, std::size_t n, const ExhaustionLimits& limits) {
    if (m > 20 || election_count(m, n) > limits.max_elections) {
        throw GuardExceeded("(" + std::to_string(m) + "!)^" + std::to_string(n) +
                            " elections exceed the guard of " + std::to_string(limits.max_elections));
    }
}

namespace {

bool enumerate_rest(std::size_t m, std::size_t n, std::vector<Ranking>& prefix, const std::vector<Ranking>& rankings,
                    const std::function<bool(const Election&)>& visit) {
    if (prefix.size() == n) return visit(Election(m, prefix));
    for (const auto& r : rankings) {
        prefix.push_back(r);
        const bool keep_going = enumerate_rest(m, n, prefix, rankings, visit);
        prefix.pop_back();
        if (!keep_going) return false;
    }
    return true;
}

std::vector<Ranking> all_rankings(std::size_t m) {
    std::vector<Ranking> out;
    for (const auto& p : all_permutations(m)) out.emplace_back(p);
    return out;
}

}  // namespace

void for_each_election(std::size_t m, std::size_t n, const std::function<bool(const Election&)>& visit,
                       const ExhaustionLimits& limits) {
    if (m == 0 || n == 0) throw std::invalid_argument("elections need m >= 1 and n >= 1");
    check_election_guard(m, n, limits);
    const auto rankings = all_rankings(m);
    std::vector<Ranking> prefix;
    prefix.reserve(n);
    enumerate_rest(m, n, prefix, rankings, visit);
}

void for_each_election_with_first(std::size_t m, std::size_t n, const Ranking& first,
                                  const std::function<bool(const Election&)>& visit) {
    if (m == 0 || n == 0) throw std::invalid_argument("elections need m >= 1 and n >= 1");
    if (first.size() != m) throw std::invalid_argument("first ranking is not over 1..m");
    const auto rankings = all_rankings(m);
    std::vector<Ranking> prefix{first};
    prefix.reserve(n);
    enumerate_rest(m, n, prefix, rankings, visit);
}

std::vector<Election> all_elections(std::size_t m, std::size_t n, const ExhaustionLimits& limits) {
    std::vector<Election> out;
    for_each_election(m, n, [&](const Election& e) {
        out.push_back(e);
        return true;
    }, limits);
    return out;
}

}  // namespace votelace
