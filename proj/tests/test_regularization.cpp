#include <doctest.h>

#include "rsmzv/index_algebra.hpp"
#include "rsmzv/numerics.hpp"
#include "rsmzv/regularization.hpp"
#include "support.hpp"

using namespace rsmzv;
using rsmzv::test::K;
using rsmzv::test::W;

namespace {

ZSymbol z(const char* k)
{
    return ZSymbol::zeta(K(k));
}

TPoly T()
{
    return TPoly::variable(0);
}

TPoly c(const ZSymbol& s)
{
    return TPoly::constant(s);
}

}  // namespace

TEST_CASE("regularized iterated integrals")
{
    CHECK(reg_dch(W("")) == ZSymbol(1));
    CHECK(reg_dch(W("0")).is_zero());
    CHECK(reg_dch(W("1")).is_zero());
    CHECK(reg_dch(W("10")) == -z("2"));
    CHECK(reg_dch(W("1100")) == z("1,3"));
    // e0 sh e1e0 = e0e1e0 + 2 e1e0e0.
    CHECK(reg_dch(W("010")) == Rational(2) * z("3"));
    CHECK(reg_dch(W("11")).is_zero());
    // e1 sh e1e0 = 2 e1e1e0 + e1e0e1.
    CHECK(reg_dch(W("101")) == Rational(-2) * z("1,2"));
    CHECK(reg_dch_inv(W("10")) == reg_dch(W("01")));
    CHECK(reg_dch_inv(W("110")) == -reg_dch(W("011")));
}

TEST_CASE("reg_dch is a shuffle homomorphism")
{
    for (int m = 1; m <= 3; ++m)
        for (int n = 1; n <= 3; ++n)
            for (Word u : words_of_length(m))
                for (Word v : words_of_length(n))
                    REQUIRE(reg_dch(shuffle(u, v)) == shuffle_reduce(reg_dch(u) * reg_dch(v)));
}

TEST_CASE("regularized polynomials in T")
{
    CHECK(zeta_sh_poly(K("1")) == T());
    CHECK(zeta_star_poly(K("1")) == T());
    CHECK(zeta_sh_poly(K("3")) == c(z("3")));
    CHECK(zeta_sh_poly(K("1,1")) == TPoly::constant(Rational(1, 2)) * T() * T());
    CHECK(zeta_star_poly(K("1,1")) == TPoly::constant(Rational(1, 2)) * T() * T() - c(Rational(1, 2) * z("2")));
    // zeta(2) zeta(1): shuffle gives 2 zeta(1,2) + zeta(2,1), stuffle gives zeta(1,2) + zeta(2,1) + zeta(3).
    CHECK(zeta_sh_poly(K("2,1")) == c(z("2")) * T() - c(Rational(2) * z("1,2")));
    CHECK(zeta_star_poly(K("2,1")) == c(z("2")) * T() - c(z("1,2") + z("3")));
}

TEST_CASE("zeta_sh satisfies the shuffle product, zeta_* the harmonic product")
{
    const auto all = indices_up_to(3);
    for (const Index& k : all)
        for (const Index& l : all) {
            if (k.empty() || l.empty())
                continue;
            TPoly sh;
            for (const auto& [x, cx] : shuffle(integral_word(k), integral_word(l)))
                sh += TPoly::constant(cx) * zeta_sh_poly(index_of_integral_word(x));
            CHECK((zeta_sh_poly(k) * zeta_sh_poly(l)).map_coeffs(shuffle_reduce) == sh.map_coeffs(shuffle_reduce));

            TPoly st;
            for (const auto& [m, cm] : stuffle(k, l))
                st += TPoly::constant(cm) * zeta_star_poly(m);
            CHECK((zeta_star_poly(k) * zeta_star_poly(l)).map_coeffs(stuffle_reduce) == st.map_coeffs(stuffle_reduce));
        }
}

TEST_CASE("Gamma_1 series")
{
    const auto g = gamma1_coeffs(4);
    CHECK(g[0] == ZSymbol(1));
    CHECK(g[1].is_zero());
    CHECK(g[2] == Rational(1, 2) * z("2"));
    CHECK(g[3] == Rational(-1, 3) * z("3"));
    CHECK(g[4] == Rational(1, 4) * z("4") + Rational(1, 8) * z("2") * z("2"));
    const auto h = gamma1_neg_inverse_coeffs(4);
    // Gamma_1(-t)^{-1} Gamma_1(-t) = 1.
    const auto gm = gamma1_coeffs(4);
    for (int n = 1; n <= 4; ++n) {
        ZSymbol s;
        for (int i = 0; i <= n; ++i)
            s += h[static_cast<std::size_t>(i)] * ZSymbol((n - i) % 2 ? -1 : 1) * gm[static_cast<std::size_t>(n - i)];
        CHECK(s.is_zero());
    }
}

TEST_CASE("two descriptions of the regularized coefficients agree")
{
    for (int n = 0; n <= 5; ++n)
        for (Word w : words_of_length(n))
            CHECK(reg_dch_T(w).map_coeffs(shuffle_reduce) == phi_sh_coeff(w).map_coeffs(shuffle_reduce));
}

TEST_CASE("zeta_* from the recursion and from Gamma_1 agree numerically")
{
    Config cfg;
    const std::vector<std::vector<ZSymbol>> samples{{ZSymbol(0)}, {ZSymbol(1)}, {ZSymbol::twopii()}};
    for (const Index& k : indices_up_to(5)) {
        if (k.empty())
            continue;
        const Residual r = verify_identity(zeta_star_poly(k), zeta_star_via_gamma(k), samples, cfg);
        INFO(k.str(), " residual ", r.residual_str());
        CHECK(r.pass);
    }
}
