#include "votelace/pair_pattern.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

#include "votelace/parallel.hpp"

namespace votelace {

PairPattern::PairPattern(Permutation first, Permutation second)
    : first_(std::move(first)), second_(std::move(second)) {
    if (first_.size() != second_.size()) {
        throw std::invalid_argument("pair pattern components differ in length: " + first_.to_string() +
                                    " | " + second_.to_string());
    }
}

PairPattern PairPattern::parse(std::string_view text) {
    const auto bar = text.find('|');
    if (bar == std::string_view::npos || text.find('|', bar + 1) != std::string_view::npos) {
        throw ParseError("pair pattern needs exactly one '|': '" + std::string(text) + "'");
    }
    auto first = Permutation::parse(text.substr(0, bar));
    auto second = Permutation::parse(text.substr(bar + 1));
    if (first.size() != second.size()) {
        throw ParseError("pair pattern components differ in length: '" + std::string(text) + "'");
    }
    return PairPattern(std::move(first), std::move(second));
}

std::string PairPattern::to_string() const { return first_.to_string() + " | " + second_.to_string(); }

std::ostream& operator<<(std::ostream& os, const PairPattern& p) {
    return os << '[' << p.first() << ',' << p.second() << ']';
}

PairPatternSet::PairPatternSet(std::initializer_list<PairPattern> pairs)
    : PairPatternSet(std::vector<PairPattern>(pairs)) {}

PairPatternSet::PairPatternSet(std::vector<PairPattern> pairs) : pairs_(std::move(pairs)) {
    std::sort(pairs_.begin(), pairs_.end());
    pairs_.erase(std::unique(pairs_.begin(), pairs_.end()), pairs_.end());
}

PairPatternSet PairPatternSet::parse(std::string_view text) {
    std::vector<PairPattern> pairs;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        auto line = text.substr(start, end - start);
        const auto first = line.find_first_not_of(" \t\r");
        if (first != std::string_view::npos && line[first] != '#') pairs.push_back(PairPattern::parse(line));
        start = end + 1;
    }
    return PairPatternSet(std::move(pairs));
}

bool PairPatternSet::contains(const PairPattern& p) const {
    return std::binary_search(pairs_.begin(), pairs_.end(), p);
}

std::string PairPatternSet::to_string() const {
    std::string out;
    for (const auto& p : pairs_) out += p.to_string() + '\n';
    return out;
}

namespace {

// Walks index-increasing occurrences of small.first in big.first. The k-th
// chosen value plays the role small.first[k]; in big.second it must sit where
// small.second places that role, which is checked pairwise as values are added.
class StrongSearch {
public:
    StrongSearch(const PairPattern& small, const PairPattern& big, const ValueSetVisitor& visit)
        : small_(small), big_(big), visit_(visit), chosen_(small.size()), slot_(small.size()) {
        const auto n = big.size();
        position_in_second_.resize(n + 1);
        for (std::size_t i = 0; i < n; ++i) position_in_second_[big.second()[i]] = i;
        const auto second_inverse = small.second().inverse();
        for (std::size_t k = 0; k < small.size(); ++k) slot_[k] = second_inverse[small.first()[k] - 1];
    }

    bool run() { return extend(0, 0); }

private:
    bool extend(std::size_t depth, std::size_t from) {
        const auto h = small_.size();
        const auto& host = big_.first();
        if (depth == h) {
            std::vector<int> values(h);
            for (std::size_t t = 0; t < h; ++t) values[t] = host[chosen_[t]];
            std::sort(values.begin(), values.end());
            return visit_(values);
        }
        const auto& pattern = small_.first();
        for (std::size_t pos = from; pos + (h - depth) <= host.size(); ++pos) {
            const int v = host[pos];
            bool consistent = true;
            for (std::size_t t = 0; t < depth && consistent; ++t) {
                const int u = host[chosen_[t]];
                consistent = (pattern[t] < pattern[depth]) == (u < v) &&
                             (slot_[t] < slot_[depth]) == (position_in_second_[u] < position_in_second_[v]);
            }
            if (!consistent) continue;
            chosen_[depth] = pos;
            if (!extend(depth + 1, pos + 1)) return false;
        }
        return true;
    }

    const PairPattern& small_;
    const PairPattern& big_;
    const ValueSetVisitor& visit_;
    std::vector<std::size_t> chosen_;
    std::vector<int> slot_;
    std::vector<std::size_t> position_in_second_;
};

}  // namespace

bool for_each_strong_occurrence(const PairPattern& small, const PairPattern& big, const ValueSetVisitor& visit) {
    if (small.size() > big.size()) return true;
    return StrongSearch(small, big, visit).run();
}

std::vector<std::vector<int>> strong_occurrences(const PairPattern& small, const PairPattern& big) {
    std::vector<std::vector<int>> out;
    for_each_strong_occurrence(small, big, [&](std::span<const int> values) {
        out.emplace_back(values.begin(), values.end());
        return true;
    });
    return out;
}

bool strong_contains(const PairPattern& small, const PairPattern& big) {
    bool found = false;
    for_each_strong_occurrence(small, big, [&](std::span<const int>) {
        found = true;
        return false;
    });
    return found;
}

const PairPattern* first_contained(const PairPatternSet& forbidden, const PairPattern& big) {
    for (const auto& p : forbidden) {
        if (strong_contains(p, big)) return &p;
    }
    return nullptr;
}

std::uint64_t count_pair_avoiders(std::size_t m, const PairPatternSet& forbidden, const ExhaustionLimits& limits) {
    const bool allowed =
        m <= limits.max_pair_length || (m == 7 && limits.allow_pair_length_7);
    if (!allowed) {
        throw GuardExceeded("count_pair_avoiders: m = " + std::to_string(m) + " exceeds cap " +
                            std::to_string(limits.max_pair_length) +
                            (m == 7 ? " (pass the length-7 opt-in to allow it)" : ""));
    }
    const auto perms = all_permutations(m);
    return parallel_sum(perms.size(), limits.jobs, [&](std::size_t i) -> std::uint64_t {
        std::uint64_t count = 0;
        for (const auto& rho : perms) {
            if (first_contained(forbidden, PairPattern(perms[i], rho)) == nullptr) ++count;
        }
        return count;
    });
}

InversionSet::InversionSet(const Permutation& p) {
    for (std::size_t i = 0; i < p.size(); ++i) {
        for (std::size_t j = i + 1; j < p.size(); ++j) {
            if (p[i] > p[j]) pairs_.emplace_back(static_cast<int>(i + 1), static_cast<int>(j + 1));
        }
    }
}

bool InversionSet::contains(std::pair<int, int> inversion) const {
    return std::binary_search(pairs_.begin(), pairs_.end(), inversion);
}

bool InversionSet::subset_of(const InversionSet& other) const {
    return std::includes(other.pairs_.begin(), other.pairs_.end(), pairs_.begin(), pairs_.end());
}

bool weak_bruhat_le(const Permutation& lo, const Permutation& hi) {
    if (lo.size() != hi.size()) {
        throw std::invalid_argument("weak_bruhat_le: length mismatch (" + std::to_string(lo.size()) + " vs " +
                                    std::to_string(hi.size()) + ")");
    }
    return inversion_set(lo).subset_of(inversion_set(hi));
}

bool left_weak_le(const Permutation& lo, const Permutation& hi) {
    return weak_bruhat_le(lo.inverse(), hi.inverse());
}

}  // namespace votelace
