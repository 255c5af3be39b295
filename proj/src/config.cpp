#include "rsmzv/config.hpp"

#include <cstdlib>
#include <stdexcept>

namespace rsmzv {

namespace {

std::optional<int> env_int(const char* name)
{
    const char* s = std::getenv(name);
    if (s == nullptr || *s == '\0')
        return std::nullopt;
    try {
        std::size_t used = 0;
        int v = std::stoi(s, &used);
        if (used != std::string(s).size())
            throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw std::invalid_argument(std::string(name) + " must be an integer, got '" + s + "'");
    }
}

}  // namespace

Config Config::from_env()
{
    Config c;
    if (auto d = env_int("RSMZV_DIGITS"))
        c.digits = *d;
    if (auto g = env_int("RSMZV_GUARD"))
        c.guard = *g;
    if (const char* p = std::getenv("RSMZV_CACHE"); p != nullptr && *p != '\0')
        c.cache_path = p;
    return c;
}

void Config::validate() const
{
    if (digits < 10)
        throw std::invalid_argument("digits must be >= 10");
    if (guard < 0)
        throw std::invalid_argument("guard must be >= 0");
    if (digits - guard < kMinSeparation)
        throw std::invalid_argument("digits - guard must be >= " + std::to_string(kMinSeparation) + " (got "
                                    + std::to_string(digits) + " - " + std::to_string(guard) + ")");
}

}  // namespace rsmzv
