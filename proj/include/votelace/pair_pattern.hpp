#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "votelace/guard.hpp"
#include "votelace/permutation.hpp"

namespace votelace {

/// An ordered pair of equal-length permutations; the unit of the strong order.
class PairPattern {
public:
    PairPattern() = default;
    /// Throws std::invalid_argument if the components differ in length.
    PairPattern(Permutation first, Permutation second);

    /// Parses "2 1 3 | 1 3 2" (compact components such as "213|132" work too).
    static PairPattern parse(std::string_view text);

    const Permutation& first() const noexcept { return first_; }
    const Permutation& second() const noexcept { return second_; }
    std::size_t size() const noexcept { return first_.size(); }
    PairPattern swapped() const { return PairPattern(second_, first_); }

    std::string to_string() const;

    friend auto operator<=>(const PairPattern&, const PairPattern&) = default;
    friend bool operator==(const PairPattern&, const PairPattern&) = default;

private:
    Permutation first_;
    Permutation second_;
};

std::ostream& operator<<(std::ostream& os, const PairPattern& p);

/// Sorted, duplicate-free collection of pair patterns of any lengths.
class PairPatternSet {
public:
    PairPatternSet() = default;
    PairPatternSet(std::initializer_list<PairPattern> pairs);
    explicit PairPatternSet(std::vector<PairPattern> pairs);

    /// One pair per line; blank lines and lines starting with '#' are skipped.
    static PairPatternSet parse(std::string_view text);

    bool contains(const PairPattern& p) const;
    std::size_t size() const noexcept { return pairs_.size(); }
    bool empty() const noexcept { return pairs_.empty(); }
    auto begin() const noexcept { return pairs_.begin(); }
    auto end() const noexcept { return pairs_.end(); }

    std::string to_string() const;

    friend bool operator==(const PairPatternSet&, const PairPatternSet&) = default;

private:
    std::vector<PairPattern> pairs_;
};

/// Receives the witnessing values in increasing order; return false to stop.
using ValueSetVisitor = std::function<bool(std::span<const int>)>;

/// Visits each value set that realizes small.first inside big.first and, with
/// the same values, small.second inside big.second. Returns false if the
/// visitor stopped early.
bool for_each_strong_occurrence(const PairPattern& small, const PairPattern& big,
                                const ValueSetVisitor& visit);

std::vector<std::vector<int>> strong_occurrences(const PairPattern& small, const PairPattern& big);

bool strong_contains(const PairPattern& small, const PairPattern& big);

/// First member of `forbidden` strongly contained in `big`, if any.
const PairPattern* first_contained(const PairPatternSet& forbidden, const PairPattern& big);

/// Number of (pi, rho) in S_m x S_m avoiding every member of `forbidden`.
/// The outer loop over pi is partitioned across limits.jobs workers.
/// Throws GuardExceeded above limits.max_pair_length (7 needs allow_pair_length_7).
std::uint64_t count_pair_avoiders(std::size_t m, const PairPatternSet& forbidden,
                                  const ExhaustionLimits& limits = {});

/// Positional inversions (i, j), 1 <= i < j <= n, with p[i] > p[j], sorted.
class InversionSet {
public:
    explicit InversionSet(const Permutation& p);

    const std::vector<std::pair<int, int>>& pairs() const noexcept { return pairs_; }
    std::size_t size() const noexcept { return pairs_.size(); }
    bool contains(std::pair<int, int> inversion) const;
    bool subset_of(const InversionSet& other) const;

    friend bool operator==(const InversionSet&, const InversionSet&) = default;

private:
    std::vector<std::pair<int, int>> pairs_;
};

inline InversionSet inversion_set(const Permutation& p) { return InversionSet(p); }

/// Right weak order: inversion_set(lo) is a subset of inversion_set(hi).
/// Throws std::invalid_argument on length mismatch.
bool weak_bruhat_le(const Permutation& lo, const Permutation& hi);

/// Left weak order, comparing the inversion sets of the inverses; this is the
/// order characterized by strong avoidance of [12,21].
bool left_weak_le(const Permutation& lo, const Permutation& hi);

}  // namespace votelace
