#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "votelace/guard.hpp"
#include "votelace/permutation.hpp"

namespace votelace {

/// One voter's strict preference over candidates 1..m, best first.
class Ranking {
public:
    Ranking() = default;
    /// Throws std::invalid_argument unless `order` is a rearrangement of 1..m.
    explicit Ranking(std::vector<int> order);
    explicit Ranking(const Permutation& order);

    std::size_t size() const noexcept { return order_.size(); }
    std::span<const int> order() const noexcept { return order_; }
    int at_rank(std::size_t rank) const noexcept { return order_[rank]; }
    /// 0-based rank of `candidate` (0 = most preferred).
    std::size_t rank_of(int candidate) const noexcept { return rank_[candidate]; }
    bool prefers(int x, int y) const noexcept { return rank_[x] < rank_[y]; }

    Permutation as_permutation() const { return Permutation(order_); }
    std::string to_string() const;

    friend bool operator==(const Ranking& a, const Ranking& b) { return a.order_ == b.order_; }

private:
    std::vector<int> order_;
    std::vector<std::size_t> rank_;  // indexed by candidate id, slot 0 unused
};

/// Candidates [m] and an ordered tuple of n >= 1 rankings; voter order matters.
class Election {
public:
    /// Throws std::invalid_argument if m == 0, there are no voters, or a
    /// ranking is not over exactly 1..m.
    Election(std::size_t num_candidates, std::vector<Ranking> preferences);
    explicit Election(std::vector<Ranking> preferences);
    /// Convenience: each permutation is taken as a best-to-worst ranking.
    explicit Election(const std::vector<Permutation>& preferences);

    std::size_t num_candidates() const noexcept { return m_; }
    std::size_t num_voters() const noexcept { return preferences_.size(); }
    const std::vector<Ranking>& preferences() const noexcept { return preferences_; }
    const Ranking& voter(std::size_t index) const { return preferences_[index]; }

    /// One voter per line, candidates separated by spaces.
    std::string to_string() const;

    friend bool operator==(const Election&, const Election&) = default;

private:
    std::size_t m_;
    std::vector<Ranking> preferences_;
};

/// A small election used as a forbidden sub-structure.
class Configuration {
public:
    explicit Configuration(Election election) : election_(std::move(election)) {}
    explicit Configuration(const std::vector<Permutation>& preferences) : election_(preferences) {}

    const Election& election() const noexcept { return election_; }
    std::size_t num_candidates() const noexcept { return election_.num_candidates(); }
    std::size_t num_voters() const noexcept { return election_.num_voters(); }

private:
    Election election_;
};

/// Election text: one voter per line, best-to-worst, blank lines and lines
/// starting with '#' ignored. Every line must be a permutation of 1..m for
/// one common m. Throws ParseError describing the first offending line.
Election parse_election(std::string_view text);

/// Inline form used on the command line: voters separated by '/' or ';'.
Election parse_inline_election(std::string_view text);

/// Keeps only `subset` in every ranking and relabels it 1..k preserving
/// identifier order. Throws std::invalid_argument on an empty subset or an
/// identifier outside [m].
Election restrict(const Election& e, std::span<const int> subset);

/// Voter map f (0-based voter indices of the election, one per configuration
/// voter) and candidate map g (election candidate for each configuration
/// candidate 1..h, stored at index h-1).
struct Embedding {
    std::vector<std::size_t> voters;
    std::vector<int> candidates;
};

/// Exhaustive search over injective voter maps, then candidate maps with
/// pruning on the first violated order constraint.
std::optional<Embedding> find_embedding(const Election& e, const Configuration& cfg);

inline bool contains_configuration(const Election& e, const Configuration& cfg) {
    return find_embedding(e, cfg).has_value();
}

/// Relabels candidates so `reference` reads 1..m and returns `other` in that
/// labelling. Throws std::invalid_argument if the rankings have different sizes.
Permutation pair_permutation(const Ranking& reference, const Ranking& other);

/// Visits every ordered n-tuple of rankings over [m] in lexicographic order.
/// Return false from the visitor to stop. Throws GuardExceeded when (m!)^n
/// exceeds limits.max_elections.
void for_each_election(std::size_t m, std::size_t n, const std::function<bool(const Election&)>& visit,
                       const ExhaustionLimits& limits = {});

/// Same enumeration restricted to tuples whose first ranking is `first`,
/// the unit of work when the stream is split across workers.
void for_each_election_with_first(std::size_t m, std::size_t n, const Ranking& first,
                                  const std::function<bool(const Election&)>& visit);

std::vector<Election> all_elections(std::size_t m, std::size_t n, const ExhaustionLimits& limits = {});

/// (m!)^n, saturating at UINT64_MAX.
std::uint64_t election_count(std::size_t m, std::size_t n);

void check_election_guard(std::size_t m, std::size_t n, const ExhaustionLimits& limits);

}  // namespace votelace
