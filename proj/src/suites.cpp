#include "rsmzv/suites.hpp"

#include <algorithm>
#include <stdexcept>

#include "rsmzv/index_algebra.hpp"
#include "rsmzv/numerics.hpp"
#include "rsmzv/regularization.hpp"
#include "rsmzv/rsmzv.hpp"

namespace rsmzv {

std::string to_string(CheckKind k)
{
    return k == CheckKind::exact ? "exact" : "numeric";
}

CheckKind parse_check_kind(std::string_view s)
{
    if (s == "exact")
        return CheckKind::exact;
    if (s == "numeric")
        return CheckKind::numeric;
    throw std::invalid_argument("check kind must be exact or numeric, got '" + std::string(s) + "'");
}

bool SuiteReport::pass() const
{
    return failures() == 0;
}

std::size_t SuiteReport::failures() const
{
    return static_cast<std::size_t>(std::count_if(cases.begin(), cases.end(), [](const CaseResult& c) { return !c.pass; }));
}

const std::vector<std::string>& suite_names()
{
    static const std::vector<std::string> names{"shuffle", "harmonic", "duality", "reversal",
                                                "btt",     "variants", "hopf",    "regcross"};
    return names;
}

int default_max_weight(std::string_view suite)
{
    if (suite == "shuffle" || suite == "hopf")
        return 5;
    if (std::find(suite_names().begin(), suite_names().end(), suite) == suite_names().end())
        throw std::invalid_argument("unknown suite '" + std::string(suite) + "'");
    return 6;
}

TPoly shuffle_canonical(const TPoly& p)
{
    return p.map_coeffs([](const ZSymbol& c) { return shuffle_reduce(c); });
}

CaseResult exact_case(std::string key, const ZSymbol& lhs, const ZSymbol& rhs)
{
    const bool ok = lhs == rhs;
    return CaseResult{std::move(key), CheckKind::exact, ok, ok ? "0" : "mismatch"};
}

CaseResult exact_case(std::string key, const TPoly& lhs, const TPoly& rhs)
{
    const bool ok = lhs == rhs;
    return CaseResult{std::move(key), CheckKind::exact, ok, ok ? "0" : "mismatch"};
}

CaseResult numeric_case(std::string key, const ZSymbol& lhs, const ZSymbol& rhs, const Config& config)
{
    const Residual r = verify_identity(lhs, rhs, config);
    return CaseResult{std::move(key), CheckKind::numeric, r.pass, r.residual_str()};
}

CaseResult numeric_case(std::string key, const TPoly& lhs, const TPoly& rhs, const Config& config)
{
    const auto& samples = lhs.nvars() == 1 ? univariate_samples() : bivariate_samples();
    const Residual r = verify_identity(lhs, rhs, samples, config);
    return CaseResult{std::move(key), CheckKind::numeric, r.pass, r.residual_str()};
}

const std::vector<std::vector<ZSymbol>>& univariate_samples()
{
    static const std::vector<std::vector<ZSymbol>> s{
        {pi_multiple(-1)},           {pi_multiple(Rational(-1, 2))}, {pi_multiple(Rational(1, 3))},
        {pi_multiple(1)},            {pi_multiple(Rational(3, 2))},  {ZSymbol(Rational(2, 3))},
    };
    return s;
}

const std::vector<std::vector<ZSymbol>>& bivariate_samples()
{
    static const std::vector<std::vector<ZSymbol>> s{
        {pi_multiple(Rational(-1, 2)), pi_multiple(Rational(1, 2))},
        {pi_multiple(Rational(1, 3)), pi_multiple(-1)},
        {ZSymbol(0), pi_multiple(Rational(3, 2))},
        {pi_multiple(1), pi_multiple(1)},
        {ZSymbol(Rational(2, 3)), ZSymbol(Rational(1, 5))},
    };
    return s;
}

namespace {

const std::vector<std::string> kT12{"T1", "T2"};

std::string word_key(Word w)
{
    return w.empty() ? "()" : w.str();
}

std::string pair_key(const std::string& a, const std::string& b)
{
    return a + "|" + b;
}

// Words of length 1..max_len.
std::vector<Word> h_words(int max_len)
{
    std::vector<Word> out;
    for (int n = 1; n <= max_len; ++n)
        for (Word w : words_of_length(n))
            out.push_back(w);
    return out;
}

std::vector<Word> h0_words(int max_weight)
{
    std::vector<Word> out;
    for (int a = 0; a <= max_weight; ++a)
        for (Word w : h0_monomials(a))
            out.push_back(w);
    return out;
}

ZSymbol z(const WordPoly& u)
{
    return z_rs(u);
}

void suite_shuffle(int max_weight, const Config& cfg, std::vector<CaseResult>& out)
{
    const auto words = h_words(max_weight + 1);
    for (std::size_t i = 0; i < words.size(); ++i)
        for (std::size_t j = i; j < words.size(); ++j) {
            const Word u = words[i], v = words[j];
            if (u.weight() + v.weight() > max_weight)
                continue;
            const ZSymbol lhs = z(shuffle(u, v));
            const ZSymbol rhs = ZSymbol::twopii(1) * z(u) * z(v);
            out.push_back(numeric_case(pair_key(word_key(u), word_key(v)), lhs, rhs, cfg));
        }
}

void suite_harmonic(int max_weight, const Config& cfg, std::vector<CaseResult>& out)
{
    const auto words = h0_words(max_weight);
    for (std::size_t i = 0; i < words.size(); ++i)
        for (std::size_t j = i; j < words.size(); ++j) {
            const Word u = words[i], v = words[j];
            if (u.weight() + v.weight() > max_weight)
                continue;
            const ZSymbol lhs = z(harmonic_word(u, v));
            const ZSymbol rhs = z(u) * z(v);
            out.push_back(numeric_case(pair_key(word_key(u), word_key(v)), lhs, rhs, cfg));
        }
}

void suite_duality(int max_weight, const Config& cfg, std::vector<CaseResult>& out)
{
    for (Word w : h0_words(max_weight)) {
        const ZSymbol target = -conj(z(w));
        out.push_back(numeric_case("phi:" + word_key(w), z(phi(w)), target, cfg));
        out.push_back(numeric_case("phi=tau:" + word_key(w), z(phi(w)), z(tau(w)), cfg));
    }
}

void suite_reversal(int max_weight, const Config& cfg, std::vector<CaseResult>& out)
{
    for (Word w : h_words(max_weight + 1))
        out.push_back(numeric_case("tau:" + word_key(w), z(tau(w)), -conj(z(w)), cfg));
}

std::string index_key(const Index& k)
{
    return "(" + k.str() + ")";
}

void suite_btt(int max_weight, const Config& cfg, std::vector<CaseResult>& out)
{
    for (const Index& k : indices_up_to(max_weight))
        out.push_back(numeric_case("xi:" + index_key(k), xi_btt(k), z(word_of_index(k)), cfg));
}

void suite_variants(int max_weight, const Config& cfg, std::vector<CaseResult>& out)
{
    const TPoly minus_t1_plus_t2 = TPoly::variable(1, kT12) - TPoly::variable(0, kT12);
    for (const Index& k : indices_up_to(max_weight)) {
        const std::string key = index_key(k);
        const ZSymbol e = shuffle_reduce(zeta_rs_explicit(k));
        out.push_back(exact_case("routes:explicit=lpoly:" + key, e, shuffle_reduce(zeta_rs(k, Route::lpoly).symbol)));
        out.push_back(exact_case("routes:explicit=integral:" + key, e, shuffle_reduce(zeta_rs_integral(k))));
        // The constant term in 2 pi i is the symmetric sum of zeta_sh values.
        const ZSymbol symmetric = zeta_sh_S(k).evaluate({ZSymbol{}, ZSymbol{}});
        out.push_back(exact_case("lift:" + key, e.twopii_part(0), shuffle_reduce(symmetric)));
        const WordPoly w = word_of_index(k);
        const TPoly dl = l_poly(w).derivative(0).compose(minus_t1_plus_t2);
        out.push_back(exact_case("zeta_sh_S=dL:" + key, shuffle_canonical(zeta_sh_S(k)), shuffle_canonical(dl)));
        // 2 pi i zeta_*^S(k; T1, T2) = L~(w(k); -T1 + T2).
        const TPoly lt = l_tilde(w).compose(minus_t1_plus_t2);
        out.push_back(numeric_case("zeta_star_S=Ltilde:" + key, ZSymbol::twopii(1) * zeta_star_S(k), lt, cfg));
    }
}

void suite_hopf(int max_weight, const Config& cfg, std::vector<CaseResult>& out)
{
    const auto words = h_words(max_weight + 1);
    for (std::size_t i = 0; i < words.size(); ++i)
        for (std::size_t j = i; j < words.size(); ++j) {
            const Word u = words[i], v = words[j];
            if (u.weight() + v.weight() > max_weight)
                continue;
            out.push_back(exact_case("L-shuffle:" + pair_key(word_key(u), word_key(v)),
                                     shuffle_canonical(l_poly(shuffle(u, v))),
                                     shuffle_canonical(l_poly(u) * l_poly(v))));
        }
    const auto h0 = h0_words(max_weight);
    for (std::size_t i = 0; i < h0.size(); ++i)
        for (std::size_t j = i; j < h0.size(); ++j) {
            const Word u = h0[i], v = h0[j];
            if (u.weight() + v.weight() > max_weight)
                continue;
            // 2 pi i L~(u * v; T) = L~(u; T) L~(v; T).
            const TPoly lhs = ZSymbol::twopii(1) * l_tilde(harmonic_word(u, v));
            const TPoly rhs = l_tilde(u) * l_tilde(v);
            out.push_back(numeric_case("Ltilde-harmonic:" + pair_key(word_key(u), word_key(v)), lhs, rhs, cfg));
        }
}

void suite_regcross(int max_weight, const Config& cfg, std::vector<CaseResult>& out)
{
    for (const Index& k : indices_up_to(max_weight)) {
        if (k.empty())
            continue;
        const std::string key = index_key(k);
        const Word w = integral_word(k);
        out.push_back(exact_case("zeta_sh:recursion=series:" + key, reg_dch_T(w), phi_sh_coeff(w)));
        out.push_back(numeric_case("zeta_star:recursion=gamma:" + key, zeta_star_poly(k), zeta_star_via_gamma(k), cfg));
    }
}

}  // namespace

SuiteReport run_suite(std::string_view suite, int max_weight, const Config& config)
{
    if (max_weight < 0)
        throw std::invalid_argument("max_weight must be >= 0");
    config.validate();
    SuiteReport r;
    r.suite = std::string(suite);
    r.max_weight = max_weight;
    r.digits = config.digits;
    r.guard = config.guard;
    if (suite == "shuffle")
        suite_shuffle(max_weight, config, r.cases);
    else if (suite == "harmonic")
        suite_harmonic(max_weight, config, r.cases);
    else if (suite == "duality")
        suite_duality(max_weight, config, r.cases);
    else if (suite == "reversal")
        suite_reversal(max_weight, config, r.cases);
    else if (suite == "btt")
        suite_btt(max_weight, config, r.cases);
    else if (suite == "variants")
        suite_variants(max_weight, config, r.cases);
    else if (suite == "hopf")
        suite_hopf(max_weight, config, r.cases);
    else if (suite == "regcross")
        suite_regcross(max_weight, config, r.cases);
    else
        throw std::invalid_argument("unknown suite '" + std::string(suite)
                                    + "': expected shuffle|harmonic|duality|reversal|btt|variants|hopf|regcross");
    std::stable_sort(r.cases.begin(), r.cases.end(), [](const CaseResult& a, const CaseResult& b) { return a.key < b.key; });
    return r;
}

}  // namespace rsmzv
