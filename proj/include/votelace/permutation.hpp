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
#include <vector>

#include "votelace/guard.hpp"

namespace votelace {

/// A permutation of {1..n} in one-line notation. Positions and values are
/// both 1-based in the mathematical sense; `operator[]` takes a 0-based
/// offset and returns the 1-based value stored there.
class Permutation {
public:
    Permutation() = default;

    /// Throws std::invalid_argument unless `values` is a rearrangement of 1..n.
    explicit Permutation(std::vector<int> values);
    Permutation(std::initializer_list<int> values);

    /// Parses "2 4 1 3". The empty string is the empty permutation. A single
    /// run of digits with no spaces ("2413") is read digit by digit, which
    /// only makes sense for n <= 9.
    static Permutation parse(std::string_view text);

    std::size_t size() const noexcept { return values_.size(); }
    bool empty() const noexcept { return values_.empty(); }
    int operator[](std::size_t offset) const noexcept { return values_[offset]; }
    std::span<const int> values() const noexcept { return values_; }

    Permutation reverse() const;
    Permutation inverse() const;
    bool is_identity() const noexcept;

    /// Space separated one-line notation, "" for the empty permutation.
    std::string to_string() const;
    /// Concatenated digits ("2413"); falls back to to_string() when n > 9.
    std::string compact() const;

    friend auto operator<=>(const Permutation&, const Permutation&) = default;
    friend bool operator==(const Permutation&, const Permutation&) = default;

private:
    struct Unchecked {};
    Permutation(std::vector<int> values, Unchecked) : values_(std::move(values)) {}

    std::vector<int> values_;

    friend Permutation identity(std::size_t n);
    friend Permutation compose(const Permutation& outer, const Permutation& inner);
    friend Permutation standardize(std::span<const int> word);
};

std::ostream& operator<<(std::ostream& os, const Permutation& p);

Permutation identity(std::size_t n);
inline Permutation reverse(const Permutation& p) { return p.reverse(); }
inline Permutation inverse(const Permutation& p) { return p.inverse(); }

/// result[i] = outer[inner[i]]. Throws std::invalid_argument on length mismatch.
Permutation compose(const Permutation& outer, const Permutation& inner);

/// The permutation order-isomorphic to a word of distinct integers.
Permutation standardize(std::span<const int> word);

/// All permutations of length n in lexicographic order.
std::vector<Permutation> all_permutations(std::size_t n);

/// Receives a 1-based, strictly increasing index tuple; return false to stop.
using OccurrenceVisitor = std::function<bool(std::span<const std::size_t>)>;

/// Visits every occurrence of `pattern` in `host`. Returns false if the
/// visitor stopped the search early.
bool for_each_occurrence(const Permutation& pattern, const Permutation& host,
                         const OccurrenceVisitor& visit);

std::vector<std::vector<std::size_t>> occurrences(const Permutation& pattern,
                                                  const Permutation& host);

bool contains_pattern(const Permutation& pattern, const Permutation& host);

/// A finite, duplicate-free, sorted set of classical patterns.
class PatternSet {
public:
    PatternSet() = default;
    PatternSet(std::initializer_list<Permutation> patterns);
    explicit PatternSet(std::vector<Permutation> patterns);

    bool contains(const Permutation& p) const;
    std::size_t size() const noexcept { return patterns_.size(); }
    bool empty() const noexcept { return patterns_.empty(); }
    auto begin() const noexcept { return patterns_.begin(); }
    auto end() const noexcept { return patterns_.end(); }

    /// True iff `host` avoids every pattern in the set.
    bool avoided_by(const Permutation& host) const;

private:
    std::vector<Permutation> patterns_;
};

/// {2413, 3142, 2143, 3412}: the pair permutations forbidden in enriched
/// group-separable elections.
const PatternSet& gamma_patterns();

/// |S_n(forbidden)| by exhaustive generation, partitioned by first entry.
/// Throws GuardExceeded when n > limits.max_permutation_length.
std::uint64_t count_avoiders(std::size_t n, const PatternSet& forbidden,
                             const ExhaustionLimits& limits = {});

}  // namespace votelace

template <>
struct std::hash<votelace::Permutation> {
    std::size_t operator()(const votelace::Permutation& p) const noexcept;
};
