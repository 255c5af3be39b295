#include "rsmzv/index.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <stdexcept>

namespace rsmzv {

Index::Index(std::initializer_list<int> parts) : Index(std::vector<int>(parts)) {}

Index::Index(std::vector<int> parts) : parts_(std::move(parts))
{
    for (int k : parts_)
        if (k < 1)
            throw std::invalid_argument("index parts must be >= 1");
}

Index Index::parse(std::string_view text)
{
    std::vector<int> parts;
    if (text.empty())
        return Index{};
    std::size_t pos = 0;
    while (true) {
        auto comma = text.find(',', pos);
        auto piece = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
        int value = 0;
        auto [ptr, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), value);
        if (piece.empty() || ec != std::errc{} || ptr != piece.data() + piece.size() || value < 1)
            throw std::invalid_argument("malformed index '" + std::string(text) +
                                        "': expected comma-separated positive integers, e.g. \"3,2\"");
        parts.push_back(value);
        if (comma == std::string_view::npos)
            break;
        pos = comma + 1;
    }
    return Index(std::move(parts));
}

int Index::weight() const noexcept
{
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

Index Index::slice(int first, int last) const
{
    Index r;
    r.parts_.assign(parts_.begin() + first, parts_.begin() + last);
    return r;
}

Index Index::reversed() const
{
    Index r;
    r.parts_.assign(parts_.rbegin(), parts_.rend());
    return r;
}

std::string Index::str() const
{
    std::string s;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i)
            s += ',';
        s += std::to_string(parts_[i]);
    }
    return s;
}

std::strong_ordering operator<=>(const Index& a, const Index& b)
{
    if (auto c = a.weight() <=> b.weight(); c != 0)
        return c;
    return std::lexicographical_compare_three_way(a.parts_.begin(), a.parts_.end(), b.parts_.begin(),
                                                  b.parts_.end());
}

std::vector<Index> compositions(int n)
{
    if (n == 0)
        return {Index{}};
    std::vector<Index> out;
    for (int first = 1; first <= n; ++first) {
        for (const auto& rest : compositions(n - first)) {
            std::vector<int> parts{first};
            parts.insert(parts.end(), rest.parts().begin(), rest.parts().end());
            out.emplace_back(std::move(parts));
        }
    }
    return out;
}

std::vector<Index> indices_up_to(int max_weight)
{
    std::vector<Index> out;
    for (int n = 0; n <= max_weight; ++n) {
        auto c = compositions(n);
        out.insert(out.end(), c.begin(), c.end());
    }
    return out;
}

}  // namespace rsmzv
