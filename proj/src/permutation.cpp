#include "votelace/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "votelace/parallel.hpp"

namespace votelace {

namespace {

void validate_one_line(const std::vector<int>& values) {
    const auto n = values.size();
    std::vector<bool> seen(n + 1, false);
    for (int v : values) {
        if (v < 1 || static_cast<std::size_t>(v) > n) {
            throw std::invalid_argument("permutation value " + std::to_string(v) +
                                        " outside 1.." + std::to_string(n));
        }
        if (seen[v]) throw std::invalid_argument("permutation value " + std::to_string(v) + " repeated");
        seen[v] = true;
    }
}

}  // namespace

Permutation::Permutation(std::vector<int> values) : values_(std::move(values)) {
    validate_one_line(values_);
}

Permutation::Permutation(std::initializer_list<int> values) : values_(values) {
    validate_one_line(values_);
}

Permutation Permutation::parse(std::string_view text) {
    std::vector<std::string_view> tokens;
    std::size_t i = 0;
    while (i < text.size()) {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
        const auto start = i;
        while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) ++i;
        if (i > start) tokens.push_back(text.substr(start, i - start));
    }
    std::vector<int> values;
    if (tokens.size() == 1 && tokens[0].size() > 1) {
        for (char c : tokens[0]) {
            if (!std::isdigit(static_cast<unsigned char>(c))) {
                throw ParseError("malformed permutation '" + std::string(text) + "'");
            }
            values.push_back(c - '0');
        }
    } else {
        for (auto token : tokens) {
            int v = 0;
            auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
            if (ec != std::errc{} || end != token.data() + token.size()) {
                throw ParseError("malformed permutation token '" + std::string(token) + "'");
            }
            values.push_back(v);
        }
    }
    try {
        return Permutation(std::move(values));
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

Permutation Permutation::reverse() const {
    return Permutation(std::vector<int>(values_.rbegin(), values_.rend()), Unchecked{});
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(values_.size());
    for (std::size_t i = 0; i < values_.size(); ++i) inv[values_[i] - 1] = static_cast<int>(i + 1);
    return Permutation(std::move(inv), Unchecked{});
}

bool Permutation::is_identity() const noexcept {
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (values_[i] != static_cast<int>(i + 1)) return false;
    }
    return true;
}

std::string Permutation::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(values_[i]);
    }
    return out;
}

std::string Permutation::compact() const {
    if (values_.size() > 9) return to_string();
    std::string out;
    for (int v : values_) out += static_cast<char>('0' + v);
    return out;
}

std::ostream& operator<<(std::ostream& os, const Permutation& p) { return os << p.compact(); }

Permutation identity(std::size_t n) {
    std::vector<int> values(n);
    std::iota(values.begin(), values.end(), 1);
    return Permutation(std::move(values), Permutation::Unchecked{});
}

Permutation compose(const Permutation& outer, const Permutation& inner) {
    if (outer.size() != inner.size()) {
        throw std::invalid_argument("compose: length mismatch (" + std::to_string(outer.size()) +
                                    " vs " + std::to_string(inner.size()) + ")");
    }
    std::vector<int> result(inner.size());
    for (std::size_t i = 0; i < inner.size(); ++i) result[i] = outer[inner[i] - 1];
    return Permutation(std::move(result), Permutation::Unchecked{});
}

Permutation standardize(std::span<const int> word) {
    std::vector<std::size_t> order(word.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](auto a, auto b) { return word[a] < word[b]; });
    std::vector<int> result(word.size());
    for (std::size_t rank = 0; rank < order.size(); ++rank) result[order[rank]] = static_cast<int>(rank + 1);
    return Permutation(std::move(result), Permutation::Unchecked{});
}

std::vector<Permutation> all_permutations(std::size_t n) {
    std::vector<Permutation> out;
    std::vector<int> values(n);
    std::iota(values.begin(), values.end(), 1);
    do {
        out.emplace_back(values);
    } while (std::next_permutation(values.begin(), values.end()));
    return out;
}

namespace {

// Extends a partial occurrence one host index at a time; an extension is kept
// only if the new value sits in the same relative order to every chosen value
// as the corresponding pattern entries do.
class OccurrenceSearch {
public:
    OccurrenceSearch(const Permutation& pattern, const Permutation& host, const OccurrenceVisitor& visit)
        : pattern_(pattern), host_(host), visit_(visit), chosen_(pattern.size()) {}

    bool run() { return extend(0, 0); }

private:
    bool extend(std::size_t depth, std::size_t from) {
        const auto k = pattern_.size();
        if (depth == k) {
            std::vector<std::size_t> one_based(k);
            for (std::size_t t = 0; t < k; ++t) one_based[t] = chosen_[t] + 1;
            return visit_(one_based);
        }
        const auto n = host_.size();
        for (std::size_t pos = from; pos + (k - depth) <= n; ++pos) {
            const int v = host_[pos];
            bool consistent = true;
            for (std::size_t t = 0; t < depth && consistent; ++t) {
                consistent = (pattern_[t] < pattern_[depth]) == (host_[chosen_[t]] < v);
            }
            if (!consistent) continue;
            chosen_[depth] = pos;
            if (!extend(depth + 1, pos + 1)) return false;
        }
        return true;
    }

    const Permutation& pattern_;
    const Permutation& host_;
    const OccurrenceVisitor& visit_;
    std::vector<std::size_t> chosen_;
};

}  // namespace

bool for_each_occurrence(const Permutation& pattern, const Permutation& host, const OccurrenceVisitor& visit) {
    if (pattern.size() > host.size()) return true;
    return OccurrenceSearch(pattern, host, visit).run();
}

std::vector<std::vector<std::size_t>> occurrences(const Permutation& pattern, const Permutation& host) {
    std::vector<std::vector<std::size_t>> out;
    for_each_occurrence(pattern, host, [&](std::span<const std::size_t> idx) {
        out.emplace_back(idx.begin(), idx.end());
        return true;
    });
    return out;
}

bool contains_pattern(const Permutation& pattern, const Permutation& host) {
    bool found = false;
    for_each_occurrence(pattern, host, [&](std::span<const std::size_t>) {
        found = true;
        return false;
    });
    return found;
}

PatternSet::PatternSet(std::initializer_list<Permutation> patterns)
    : PatternSet(std::vector<Permutation>(patterns)) {}

PatternSet::PatternSet(std::vector<Permutation> patterns) : patterns_(std::move(patterns)) {
    std::sort(patterns_.begin(), patterns_.end());
    patterns_.erase(std::unique(patterns_.begin(), patterns_.end()), patterns_.end());
}

bool PatternSet::contains(const Permutation& p) const {
    return std::binary_search(patterns_.begin(), patterns_.end(), p);
}

bool PatternSet::avoided_by(const Permutation& host) const {
    return std::none_of(patterns_.begin(), patterns_.end(),
                        [&](const Permutation& pattern) { return contains_pattern(pattern, host); });
}

const PatternSet& gamma_patterns() {
    static const PatternSet gamma{Permutation{2, 4, 1, 3}, Permutation{3, 1, 4, 2},
                                  Permutation{2, 1, 4, 3}, Permutation{3, 4, 1, 2}};
    return gamma;
}

std::uint64_t count_avoiders(std::size_t n, const PatternSet& forbidden, const ExhaustionLimits& limits) {
    if (n > limits.max_permutation_length) {
        throw GuardExceeded("count_avoiders: n = " + std::to_string(n) + " exceeds cap " +
                            std::to_string(limits.max_permutation_length));
    }
    if (n == 0) return forbidden.avoided_by(Permutation{}) ? 1 : 0;
    // Part i holds the permutations starting with i + 1, in lexicographic order.
    return parallel_sum(n, limits.jobs, [&](std::size_t part) -> std::uint64_t {
        std::vector<int> rest;
        for (std::size_t v = 1; v <= n; ++v) {
            if (v != part + 1) rest.push_back(static_cast<int>(v));
        }
        std::uint64_t count = 0;
        std::vector<int> values(n);
        do {
            values[0] = static_cast<int>(part + 1);
            std::copy(rest.begin(), rest.end(), values.begin() + 1);
            if (forbidden.avoided_by(Permutation(values))) ++count;
        } while (std::next_permutation(rest.begin(), rest.end()));
        return count;
    });
}

}  // namespace votelace

std::size_t std::hash<votelace::Permutation>::operator()(const votelace::Permutation& p) const noexcept {
    std::size_t h = p.size();
    for (int v : p.values()) h = h * 31 + static_cast<std::size_t>(v);
    return h;
}
