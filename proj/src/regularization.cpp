#include "rsmzv/regularization.hpp"

#include "rsmzv/index_algebra.hpp"
#include "rsmzv/memo.hpp"

namespace rsmzv {

namespace {

struct IndexHash {
    std::size_t operator()(const Index& k) const noexcept
    {
        std::size_t h = 0xcbf29ce484222325ull;
        for (int p : k.parts())
            h = (h ^ static_cast<std::size_t>(p)) * 0x100000001b3ull;
        return h ^ k.parts().size();
    }
};

int trailing(Word w, int a)
{
    int n = 0;
    while (n < w.length() && w[w.length() - 1 - n] == a)
        ++n;
    return n;
}

int leading(Word w, int a)
{
    int n = 0;
    while (n < w.length() && w[n] == a)
        ++n;
    return n;
}

// Shared recursion for the shuffle characters with chi(e0) = 0 and
// chi(e1) = e1_value. Value is ZSymbol or TPoly.
template <typename Value, typename Self, typename Admissible>
Value shuffle_character(Word w, const Value& one, const Value& e1_value, Self&& self, Admissible&& admissible)
{
    if (w.empty())
        return one;
    if (w.back() == 1) {
        // u e1^{n-1} sh e1 = n * u e1^n + sum_{p < |u|} ins_p(u, e1) e1^{n-1}.
        const int n = trailing(w, 1);
        const Word u = w.prefix(w.length() - n);
        const Word tail = Word::repeat(1, n - 1);
        Value acc = self(u.concat(tail)) * e1_value;
        for (int p = 0; p < u.length(); ++p)
            acc -= self(u.insert(p, 1).concat(tail));
        acc *= Rational(1, n);
        return acc;
    }
    if (w.front() == 0) {
        // e0 sh e0^{m-1} u = m * e0^m u + sum_{1 <= p <= |u|} e0^{m-1} ins_p(u, e0).
        const int m = leading(w, 0);
        const Word u = w.suffix_from(m);
        const Word head = Word::repeat(0, m - 1);
        Value acc{};
        if constexpr (std::is_same_v<Value, TPoly>)
            acc = TPoly(one.vars());
        for (int p = 1; p <= u.length(); ++p)
            acc -= self(head.concat(u.insert(p, 0)));
        acc *= Rational(1, m);
        return acc;
    }
    return admissible(w);
}

ZSymbol admissible_value(Word w)
{
    Index k = index_of_integral_word(w);
    ZSymbol z = ZSymbol::zeta(k);
    return k.depth() % 2 ? -z : z;
}

Memo<Word, ZSymbol, WordHash>& reg_memo()
{
    static Memo<Word, ZSymbol, WordHash> memo;
    return memo;
}

Memo<Word, TPoly, WordHash>& reg_t_memo()
{
    static Memo<Word, TPoly, WordHash> memo;
    return memo;
}

Memo<Index, TPoly, IndexHash>& zeta_star_memo()
{
    static Memo<Index, TPoly, IndexHash> memo;
    return memo;
}

TPoly var_t()
{
    return TPoly::variable(0);
}

std::vector<ZSymbol> exp_series(const std::vector<ZSymbol>& g, int n)
{
    // E' = g' E  =>  j E_j = sum_{k=1}^{j} k g_k E_{j-k}, with g_0 = 0.
    std::vector<ZSymbol> e(static_cast<std::size_t>(n + 1));
    e[0] = ZSymbol(1);
    for (int j = 1; j <= n; ++j) {
        ZSymbol acc;
        for (int k = 1; k <= j; ++k)
            if (!g[static_cast<std::size_t>(k)].is_zero())
                acc += Rational(k) * (g[static_cast<std::size_t>(k)] * e[static_cast<std::size_t>(j - k)]);
        e[static_cast<std::size_t>(j)] = Rational(1, j) * acc;
    }
    return e;
}

}  // namespace

ZSymbol reg_dch(Word w)
{
    return reg_memo().get_or_compute(w, [&] {
        return shuffle_character<ZSymbol>(
            w, ZSymbol(1), ZSymbol{}, [](Word x) { return reg_dch(x); }, admissible_value);
    });
}

ZSymbol reg_dch(const WordPoly& u)
{
    ZSymbol r;
    for (const auto& [w, c] : u)
        r += c * reg_dch(w);
    return r;
}

ZSymbol reg_dch_inv(Word w)
{
    ZSymbol r = reg_dch(w.reversed());
    return w.length() % 2 ? -r : r;
}

TPoly reg_dch_T(Word w)
{
    return reg_t_memo().get_or_compute(w, [&] {
        const TPoly minus_t = ZSymbol(-1) * var_t();
        return shuffle_character<TPoly>(
            w, TPoly::constant(ZSymbol(1)), minus_t, [](Word x) { return reg_dch_T(x); },
            [](Word x) { return TPoly::constant(admissible_value(x)); });
    });
}

TPoly phi_sh_coeff(Word w)
{
    TPoly r;
    const int ones = trailing(w, 1);
    for (int j = 0; j <= ones; ++j) {
        ZSymbol c = reg_dch(w.prefix(w.length() - j));
        if (c.is_zero())
            continue;
        Rational scale = Rational(j % 2 ? -1 : 1) / factorial(j);
        TPoly term(std::vector<std::string>{"T"});
        term.add({j, 0}, scale * c);
        r += term;
    }
    return r;
}

TPoly zeta_sh_poly(const Index& k)
{
    TPoly p = reg_dch_T(integral_word(k));
    return k.depth() % 2 ? ZSymbol(-1) * p : p;
}

TPoly zeta_star_poly(const Index& k)
{
    if (auto hit = zeta_star_memo().find(k))
        return *hit;
    TPoly result;
    if (k.empty()) {
        result = TPoly::constant(ZSymbol(1));
    } else if (k.admissible()) {
        result = TPoly::constant(ZSymbol::zeta(k));
    } else {
        // (k_1..k_{d-1}) * (1) = c_k k + sum_{x != k} c_x x, where every x != k
        // has fewer trailing ones than k.
        const Index head = k.slice(0, k.depth() - 1);
        const IndexPoly prod = stuffle(head, Index{1});
        TPoly acc = zeta_star_poly(head) * var_t();
        Rational ck;
        for (const auto& [x, c] : prod) {
            if (x == k)
                ck = c;
            else
                acc -= ZSymbol(c) * zeta_star_poly(x);
        }
        result = ZSymbol(Rational(Rational(1) / ck)) * acc;
    }
    return zeta_star_memo().insert(k, std::move(result));
}

std::vector<ZSymbol> gamma1_coeffs(int n)
{
    std::vector<ZSymbol> g(static_cast<std::size_t>(n + 1));
    for (int k = 2; k <= n; ++k)
        g[static_cast<std::size_t>(k)] = Rational(k % 2 ? -1 : 1, k) * ZSymbol::zeta(Index{k});
    return exp_series(g, n);
}

std::vector<ZSymbol> gamma1_neg_inverse_coeffs(int n)
{
    std::vector<ZSymbol> g(static_cast<std::size_t>(n + 1));
    for (int k = 2; k <= n; ++k)
        g[static_cast<std::size_t>(k)] = Rational(-1, k) * ZSymbol::zeta(Index{k});
    return exp_series(g, n);
}

TPoly zeta_star_via_gamma(const Index& k)
{
    const Word w = integral_word(k);
    const int ones = trailing(w, 1);
    const auto h = gamma1_neg_inverse_coeffs(ones);
    TPoly r;
    for (int j = 0; j <= ones; ++j) {
        const ZSymbol& c = h[static_cast<std::size_t>(j)];
        if (!c.is_zero())
            r += c * phi_sh_coeff(w.prefix(w.length() - j));
    }
    return k.depth() % 2 ? ZSymbol(-1) * r : r;
}

}  // namespace rsmzv
