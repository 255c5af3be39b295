#ifndef RSMZV_CONFIG_HPP
#define RSMZV_CONFIG_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace rsmzv {

// Run-wide settings. PASS means residual < 10^-(digits - guard), and
// digits - guard >= 30 is required for that decision to be meaningful.
struct Config {
    int digits = 60;
    int guard = 15;
    std::vector<std::uint64_t> primes{4611686018427387847ull, 4611686018427387817ull};
    std::optional<std::string> cache_path;

    static constexpr int kMinSeparation = 30;

    // Defaults overridden by RSMZV_DIGITS, RSMZV_GUARD and RSMZV_CACHE.
    static Config from_env();

    // Throws std::invalid_argument if digits - guard < kMinSeparation,
    // digits < 10 or guard < 0.
    void validate() const;

    // 10^-(digits - guard) as a decimal exponent.
    int tolerance_exponent() const { return digits - guard; }
};

}  // namespace rsmzv

#endif
