#include "rsmzv/tpoly.hpp"

#include <algorithm>
#include <stdexcept>

namespace rsmzv {

TPoly::TPoly() : TPoly(std::vector<std::string>{"T"}) {}

TPoly::TPoly(std::vector<std::string> vars) : vars_(std::move(vars))
{
    if (vars_.empty() || vars_.size() > 2)
        throw std::invalid_argument("TPoly supports one or two variables");
}

TPoly TPoly::constant(const ZSymbol& c, std::vector<std::string> vars)
{
    TPoly p(std::move(vars));
    p.add({0, 0}, c);
    return p;
}

TPoly TPoly::variable(int var, std::vector<std::string> vars)
{
    TPoly p(std::move(vars));
    if (var < 0 || var >= p.nvars())
        throw std::out_of_range("variable position out of range");
    Exponents e{0, 0};
    e[static_cast<std::size_t>(var)] = 1;
    p.add(e, ZSymbol(1));
    return p;
}

ZSymbol TPoly::coeff(Exponents e) const
{
    auto it = terms_.find(e);
    return it == terms_.end() ? ZSymbol{} : it->second;
}

int TPoly::degree(int var) const
{
    int d = 0;
    for (const auto& [e, c] : terms_)
        d = std::max(d, e[static_cast<std::size_t>(var)]);
    return d;
}

void TPoly::add(Exponents e, const ZSymbol& c)
{
    if (c.is_zero())
        return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

void TPoly::check_compatible(const TPoly& o) const
{
    if (vars_ != o.vars_)
        throw std::invalid_argument("TPoly variable mismatch");
}

TPoly& TPoly::operator+=(const TPoly& o)
{
    check_compatible(o);
    for (const auto& [e, c] : o.terms_)
        add(e, c);
    return *this;
}

TPoly& TPoly::operator-=(const TPoly& o)
{
    check_compatible(o);
    for (const auto& [e, c] : o.terms_)
        add(e, -c);
    return *this;
}

TPoly& TPoly::operator*=(const ZSymbol& c)
{
    Terms old;
    old.swap(terms_);
    for (const auto& [e, x] : old)
        add(e, x * c);
    return *this;
}

TPoly operator*(const TPoly& a, const TPoly& b)
{
    a.check_compatible(b);
    TPoly r(a.vars_);
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_)
            r.add({ea[0] + eb[0], ea[1] + eb[1]}, ca * cb);
    return r;
}

TPoly TPoly::derivative(int var) const
{
    TPoly r(vars_);
    const auto v = static_cast<std::size_t>(var);
    for (const auto& [e, c] : terms_) {
        if (e[v] == 0)
            continue;
        Exponents d = e;
        --d[v];
        r.add(d, Rational(e[v]) * c);
    }
    return r;
}

TPoly TPoly::substitute(int var, const ZSymbol& value) const
{
    TPoly r(vars_);
    const auto v = static_cast<std::size_t>(var);
    for (const auto& [e, c] : terms_) {
        Exponents d = e;
        d[v] = 0;
        r.add(d, c * pow(value, e[v]));
    }
    return r;
}

ZSymbol TPoly::evaluate(const std::vector<ZSymbol>& point) const
{
    if (static_cast<int>(point.size()) != nvars())
        throw std::invalid_argument("evaluation point has " + std::to_string(point.size()) + " coordinates, need " +
                                    std::to_string(nvars()));
    ZSymbol r;
    for (const auto& [e, c] : terms_) {
        ZSymbol t = c;
        for (int i = 0; i < nvars(); ++i)
            t *= pow(point[static_cast<std::size_t>(i)], e[static_cast<std::size_t>(i)]);
        r += t;
    }
    return r;
}

TPoly TPoly::compose(const TPoly& arg) const
{
    if (nvars() != 1)
        throw std::invalid_argument("compose requires a univariate polynomial");
    TPoly r(arg.vars_);
    TPoly power = TPoly::constant(ZSymbol(1), arg.vars_);
    for (int j = 0; j <= degree(0); ++j) {
        ZSymbol c = coeff({j, 0});
        if (!c.is_zero())
            r += c * power;
        power = power * arg;
    }
    return r;
}

TPoly TPoly::map_coeffs(const std::function<ZSymbol(const ZSymbol&)>& f) const
{
    TPoly r(vars_);
    for (const auto& [e, c] : terms_)
        r.add(e, f(c));
    return r;
}

std::string TPoly::str() const
{
    if (terms_.empty())
        return "0";
    std::string s;
    for (const auto& [e, c] : terms_) {
        if (!s.empty())
            s += " + ";
        s += "[" + c.str() + "]";
        for (int i = 0; i < nvars(); ++i) {
            int k = e[static_cast<std::size_t>(i)];
            if (k == 1)
                s += "*" + vars_[static_cast<std::size_t>(i)];
            else if (k > 1)
                s += "*" + vars_[static_cast<std::size_t>(i)] + "^" + std::to_string(k);
        }
    }
    return s;
}

TPoly pow(const TPoly& p, int n)
{
    TPoly r = TPoly::constant(ZSymbol(1), p.vars());
    for (int i = 0; i < n; ++i)
        r = r * p;
    return r;
}

}  // namespace rsmzv
