#include "rsmzv/rsmzv.hpp"

#include <stdexcept>

#include "rsmzv/memo.hpp"
#include "rsmzv/regularization.hpp"

namespace rsmzv {

namespace {

const std::vector<std::string> kT12{"T1", "T2"};

Memo<Word, TPoly, WordHash>& l_memo()
{
    static Memo<Word, TPoly, WordHash> memo;
    return memo;
}

Memo<Word, ZSymbol, WordHash>& z_memo()
{
    static Memo<Word, ZSymbol, WordHash> memo;
    return memo;
}

// zeta_sh(k) at T = 0, i.e. (-1)^d reg_dch of the integral word.
ZSymbol zeta_sh_value(const Index& k)
{
    ZSymbol r = reg_dch(integral_word(k));
    return k.depth() % 2 ? -r : r;
}

ZSymbol z_rs_word(Word w)
{
    return z_memo().get_or_compute(w, [&] {
        ZSymbol at = shuffle_reduce(l_poly(w).evaluate({ZSymbol::twopii(1)}));
        return at.divide_by_twopii();
    });
}

template <typename Factor>
TPoly symmetrized(const Index& k, Factor&& factor)
{
    TPoly r(kT12);
    const int d = k.depth();
    int tail_weight = k.weight();
    for (int i = 0; i <= d; ++i) {
        if (i > 0)
            tail_weight -= k[i - 1];
        TPoly term = in_t1(factor(k.slice(0, i))) * in_t2(factor(k.slice(i, d).reversed()));
        if (tail_weight % 2)
            r -= term;
        else
            r += term;
    }
    return r;
}

}  // namespace

TPoly in_t1(const TPoly& p)
{
    return p.compose(TPoly::variable(0, kT12));
}

TPoly in_t2(const TPoly& p)
{
    return p.compose(TPoly::variable(1, kT12));
}

TPoly l_poly(Word w)
{
    return l_memo().get_or_compute(w, [&] {
        TPoly r;
        const int n = w.length();
        for (int l = 0; l <= n; ++l) {
            const ZSymbol left = reg_dch(w.prefix(l));
            if (left.is_zero())
                continue;
            // The middle block w[l..m) must consist of e1 letters only.
            for (int m = l; m <= n; ++m) {
                if (m > l && w[m - 1] != 1)
                    break;
                const ZSymbol right = reg_dch_inv(w.suffix_from(m));
                if (right.is_zero())
                    continue;
                const int r_len = m - l;
                TPoly term;
                term.add({r_len, 0}, Rational(Rational(1) / factorial(r_len)) * (left * right));
                r += term;
            }
        }
        return r;
    });
}

TPoly l_poly(const WordPoly& u)
{
    TPoly r;
    for (const auto& [w, c] : u)
        r += ZSymbol(c) * l_poly(w);
    return r;
}

ZSymbol l_n(Word w, int n)
{
    return l_poly(w).evaluate({Rational(n) * ZSymbol::twopii(1)});
}

TPoly l_tilde(const WordPoly& u)
{
    const TPoly l = l_poly(u);
    const TPoly t = TPoly::variable(0);
    const TPoly shift = TPoly::constant(pi_multiple(1));
    return l.compose(t + shift) - l.compose(t - shift);
}

ZSymbol z_rs(const WordPoly& u)
{
    if (!u.in_h())
        throw std::invalid_argument("Z^RS is defined on h (words of length >= 1) only");
    ZSymbol r;
    for (const auto& [w, c] : u)
        r += c * z_rs_word(w);
    return r;
}

ZSymbol zeta_rs_explicit(const Index& k)
{
    const int d = k.depth();
    ZSymbol r;
    const ZSymbol minus_twopii = ZSymbol(-1) * ZSymbol::twopii(1);
    for (int a = 0; a <= d; ++a) {
        const ZSymbol left = zeta_sh_value(k.slice(0, a));
        for (int b = a; b <= d; ++b) {
            if (b > a && k[b - 1] != 1)
                break;
            int tail = 0;
            for (int j = b; j < d; ++j)
                tail += k[j];
            ZSymbol term = left * zeta_sh_value(k.slice(b, d).reversed());
            term *= pow(minus_twopii, b - a);
            term *= Rational(Rational(tail % 2 ? -1 : 1) / factorial(b - a + 1));
            r += term;
        }
    }
    return r;
}

TPoly zeta_sh_S(const Index& k)
{
    return symmetrized(k, [](const Index& x) { return zeta_sh_poly(x); });
}

TPoly zeta_star_S(const Index& k)
{
    return symmetrized(k, [](const Index& x) { return zeta_star_poly(x); });
}

ZSymbol zeta_rs_integral(const Index& k)
{
    const TPoly integrand = zeta_sh_S(k).substitute(0, ZSymbol{});
    ZSymbol integral;
    for (const auto& [e, c] : integrand) {
        const int j = e[1];
        integral += Rational(1, j + 1) * (c * ZSymbol::twopii(j + 1));
    }
    return integral.divide_by_twopii();
}

ZSymbol xi_btt(const Index& k)
{
    return zeta_star_S(k).evaluate({pi_multiple(Rational(-1, 2)), pi_multiple(Rational(1, 2))});
}

Route parse_route(std::string_view name)
{
    if (name == "explicit")
        return Route::explicit_sum;
    if (name == "lpoly")
        return Route::lpoly;
    if (name == "integral")
        return Route::integral;
    if (name == "btt")
        return Route::btt;
    throw std::invalid_argument("unknown route '" + std::string(name) + "': expected explicit|lpoly|integral|btt");
}

std::string to_string(Route r)
{
    switch (r) {
    case Route::explicit_sum:
        return "explicit";
    case Route::lpoly:
        return "lpoly";
    case Route::integral:
        return "integral";
    case Route::btt:
        return "btt";
    }
    return "?";
}

RsValue zeta_rs(const Index& k, Route route)
{
    RsValue v{k, route, {}};
    switch (route) {
    case Route::explicit_sum:
        v.symbol = zeta_rs_explicit(k);
        break;
    case Route::lpoly:
        v.symbol = z_rs(word_of_index(k));
        break;
    case Route::integral:
        v.symbol = zeta_rs_integral(k);
        break;
    case Route::btt:
        v.symbol = xi_btt(k);
        break;
    }
    return v;
}

}  // namespace rsmzv
