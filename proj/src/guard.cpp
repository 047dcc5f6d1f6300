#include "votelace/guard.hpp"

#include <charconv>
#include <cstdlib>
#include <string_view>

namespace votelace {

ExhaustionLimits limits_from_environment() {
    ExhaustionLimits limits;
    if (const char* raw = std::getenv("VOTELACE_GUARD"); raw != nullptr && *raw != '\0') {
        std::uint64_t value = 0;
        std::string_view text(raw);
        auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
        if (ec != std::errc{} || end != text.data() + text.size() || value == 0) {
            throw ParseError("VOTELACE_GUARD must be a positive integer, got '" + std::string(text) + "'");
        }
        limits.max_elections = value;
    }
    return limits;
}

std::uint64_t factorial_u64(std::size_t n) {
    std::uint64_t f = 1;
    for (std::size_t i = 2; i <= n; ++i) f *= i;
    return f;
}

}  // namespace votelace
