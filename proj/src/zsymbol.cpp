#include "rsmzv/zsymbol.hpp"

#include <algorithm>
#include <stdexcept>

#include "rsmzv/index_algebra.hpp"
#include "rsmzv/word.hpp"

namespace rsmzv {

int ZetaMonomial::weight() const
{
    int w = twopii;
    for (const auto& k : zetas)
        w += k.weight();
    return w;
}

ZSymbol::ZSymbol(const Rational& c)
{
    add(ZetaMonomial{}, c);
}

ZSymbol ZSymbol::zeta(const Index& k)
{
    if (k.empty() || !k.admissible())
        throw std::invalid_argument("zeta symbol requires a non-empty admissible index, got (" + k.str() + ")");
    return monomial(ZetaMonomial{0, {k}});
}

ZSymbol ZSymbol::twopii(int power)
{
    return monomial(ZetaMonomial{power, {}});
}

ZSymbol ZSymbol::monomial(ZetaMonomial m, const Rational& c)
{
    std::sort(m.zetas.begin(), m.zetas.end());
    ZSymbol s;
    s.add(m, c);
    return s;
}

void ZSymbol::add(const ZetaMonomial& m, const Rational& c)
{
    if (c == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

ZSymbol ZSymbol::twopii_part(int power) const
{
    ZSymbol r;
    for (const auto& [m, c] : terms_)
        if (m.twopii == power)
            r.add(ZetaMonomial{0, m.zetas}, c);
    return r;
}

int ZSymbol::max_twopii() const
{
    int p = 0;
    for (const auto& [m, c] : terms_)
        p = std::max(p, m.twopii);
    return p;
}

ZSymbol ZSymbol::divide_by_twopii() const
{
    ZSymbol r;
    for (const auto& [m, c] : terms_) {
        if (m.twopii == 0)
            throw std::logic_error("division by 2 pi i is not exact: constant part " + twopii_part(0).str());
        r.add(ZetaMonomial{m.twopii - 1, m.zetas}, c);
    }
    return r;
}

bool ZSymbol::homogeneous(int weight) const
{
    return std::all_of(terms_.begin(), terms_.end(), [&](const auto& t) { return t.first.weight() == weight; });
}

ZSymbol& ZSymbol::operator+=(const ZSymbol& o)
{
    for (const auto& [m, c] : o.terms_)
        add(m, c);
    return *this;
}

ZSymbol& ZSymbol::operator-=(const ZSymbol& o)
{
    for (const auto& [m, c] : o.terms_)
        add(m, -c);
    return *this;
}

ZSymbol operator*(const ZSymbol& a, const ZSymbol& b)
{
    ZSymbol r;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) {
            ZetaMonomial m{ma.twopii + mb.twopii, {}};
            m.zetas.reserve(ma.zetas.size() + mb.zetas.size());
            std::merge(ma.zetas.begin(), ma.zetas.end(), mb.zetas.begin(), mb.zetas.end(),
                       std::back_inserter(m.zetas));
            r.add(m, ca * cb);
        }
    return r;
}

ZSymbol& ZSymbol::operator*=(const ZSymbol& o)
{
    *this = *this * o;
    return *this;
}

ZSymbol& ZSymbol::operator*=(const Rational& c)
{
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, x] : terms_)
        x *= c;
    return *this;
}

std::string ZSymbol::str() const
{
    if (terms_.empty())
        return "0";
    std::string s;
    for (const auto& [m, c] : terms_) {
        if (!s.empty())
            s += " + ";
        s += to_string(c);
        if (m.twopii == 1)
            s += "*(2pi i)";
        else if (m.twopii > 1)
            s += "*(2pi i)^" + std::to_string(m.twopii);
        for (const auto& k : m.zetas)
            s += "*z(" + k.str() + ")";
    }
    return s;
}

ZSymbol pow(const ZSymbol& s, int n)
{
    ZSymbol r(1);
    for (int i = 0; i < n; ++i)
        r *= s;
    return r;
}

ZSymbol conj(const ZSymbol& s)
{
    ZSymbol r;
    for (const auto& [m, c] : s)
        r.add(m, m.twopii % 2 ? Rational(-c) : c);
    return r;
}

ZSymbol pi_multiple(const Rational& q)
{
    return Rational(q / 2) * ZSymbol::twopii(1);
}

ZSymbol shuffle_reduce(const ZSymbol& s)
{
    ZSymbol r;
    for (const auto& [m, c] : s) {
        if (m.zetas.size() <= 1) {
            r.add(m, c);
            continue;
        }
        // zeta(k) = (-1)^depth * reg(word(k)); the shuffle keeps the total
        // number of e1 letters, so the signs cancel termwise.
        WordPoly prod(integral_word(m.zetas.front()));
        for (std::size_t j = 1; j < m.zetas.size(); ++j)
            prod = shuffle(prod, WordPoly(integral_word(m.zetas[j])));
        for (const auto& [w, x] : prod)
            r.add(ZetaMonomial{m.twopii, {index_of_integral_word(w)}}, c * x);
    }
    return r;
}

ZSymbol stuffle_reduce(const ZSymbol& s)
{
    ZSymbol r;
    for (const auto& [m, c] : s) {
        if (m.zetas.size() <= 1) {
            r.add(m, c);
            continue;
        }
        IndexPoly prod(m.zetas.front());
        for (std::size_t j = 1; j < m.zetas.size(); ++j)
            prod = stuffle(prod, IndexPoly(m.zetas[j]));
        for (const auto& [k, x] : prod)
            r.add(ZetaMonomial{m.twopii, {k}}, c * x);
    }
    return r;
}

}  // namespace rsmzv
