#ifndef RSMZV_TESTS_SUPPORT_HPP
#define RSMZV_TESTS_SUPPORT_HPP

#include <random>
#include <string_view>

#include "rsmzv/index.hpp"
#include "rsmzv/word.hpp"

namespace rsmzv::test {

inline Word W(std::string_view s)
{
    return Word::parse(s);
}

inline Index K(std::string_view s)
{
    return Index::parse(s);
}

// Fixed seed so failures reproduce.
inline std::mt19937_64& rng()
{
    static std::mt19937_64 g(20240917);
    return g;
}

inline Word random_word(int length)
{
    std::uniform_int_distribution<int> bit(0, 1);
    std::uint64_t bits = 0;
    for (int i = 0; i < length; ++i)
        bits = (bits << 1) | static_cast<std::uint64_t>(bit(rng()));
    return Word::from_bits(bits, length);
}

}  // namespace rsmzv::test

#endif
