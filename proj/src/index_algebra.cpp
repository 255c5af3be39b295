#include "rsmzv/index_algebra.hpp"

#include <stdexcept>

namespace rsmzv {

IndexPoly::IndexPoly(Index k, Rational c)
{
    add(k, c);
}

Rational IndexPoly::coeff(const Index& k) const
{
    auto it = terms_.find(k);
    return it == terms_.end() ? Rational(0) : it->second;
}

void IndexPoly::add(const Index& k, const Rational& c)
{
    if (c == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

IndexPoly& IndexPoly::operator+=(const IndexPoly& o)
{
    for (const auto& [k, c] : o.terms_)
        add(k, c);
    return *this;
}

IndexPoly& IndexPoly::operator-=(const IndexPoly& o)
{
    for (const auto& [k, c] : o.terms_)
        add(k, -c);
    return *this;
}

IndexPoly& IndexPoly::operator*=(const Rational& c)
{
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [k, x] : terms_)
        x *= c;
    return *this;
}

std::string IndexPoly::str() const
{
    if (terms_.empty())
        return "0";
    std::string s;
    for (const auto& [k, c] : terms_) {
        if (!s.empty())
            s += " + ";
        s += "(" + to_string(c) + ")*(" + k.str() + ")";
    }
    return s;
}

std::map<std::vector<int>, std::int64_t> stuffle_counts(std::span<const int> k, std::span<const int> l)
{
    // table[i][j] holds the product of the suffixes k[i..], l[j..].
    using Table = std::map<std::vector<int>, std::int64_t>;
    const std::size_t a = k.size(), b = l.size();
    std::vector<std::vector<Table>> table(a + 1, std::vector<Table>(b + 1));
    for (std::size_t i = a + 1; i-- > 0;) {
        for (std::size_t j = b + 1; j-- > 0;) {
            Table& cell = table[i][j];
            if (i == a) {
                cell.emplace(std::vector<int>(l.begin() + static_cast<std::ptrdiff_t>(j), l.end()), 1);
                continue;
            }
            if (j == b) {
                cell.emplace(std::vector<int>(k.begin() + static_cast<std::ptrdiff_t>(i), k.end()), 1);
                continue;
            }
            auto prepend = [&cell](int head, const Table& tail) {
                for (const auto& [m, c] : tail) {
                    std::vector<int> key;
                    key.reserve(m.size() + 1);
                    key.push_back(head);
                    key.insert(key.end(), m.begin(), m.end());
                    cell[std::move(key)] += c;
                }
            };
            prepend(k[i], table[i + 1][j]);
            prepend(l[j], table[i][j + 1]);
            prepend(k[i] + l[j], table[i + 1][j + 1]);
        }
    }
    return std::move(table[0][0]);
}

IndexPoly stuffle(const Index& k, const Index& l)
{
    IndexPoly r;
    for (auto& [m, c] : stuffle_counts(k.parts(), l.parts()))
        r.add(Index(m), Rational(static_cast<long>(c)));
    return r;
}

IndexPoly stuffle(const IndexPoly& k, const IndexPoly& l)
{
    IndexPoly r;
    for (const auto& [a, ca] : k)
        for (const auto& [b, cb] : l) {
            IndexPoly p = stuffle(a, b);
            p *= ca * cb;
            r += p;
        }
    return r;
}

IndexPoly to_index_basis(const WordPoly& u)
{
    IndexPoly r;
    for (const auto& [w, c] : u) {
        auto [k, sign] = index_of_word(w);
        r.add(k, sign * c);
    }
    return r;
}

WordPoly from_index_basis(const IndexPoly& k)
{
    WordPoly r;
    for (const auto& [m, c] : k) {
        WordPoly w = word_of_index(m);
        w *= c;
        r += w;
    }
    return r;
}

WordPoly harmonic_word(const WordPoly& u, const WordPoly& v)
{
    if (!u.in_h0() || !v.in_h0())
        throw std::invalid_argument("harmonic product is only defined on h0");
    return from_index_basis(stuffle(to_index_basis(u), to_index_basis(v)));
}

std::vector<std::pair<Index, Index>> coproduct(const Index& k)
{
    std::vector<std::pair<Index, Index>> out;
    for (int i = 0; i <= k.depth(); ++i)
        out.emplace_back(k.slice(0, i), k.slice(i, k.depth()));
    return out;
}

}  // namespace rsmzv
