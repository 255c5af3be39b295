#ifndef RSMZV_RSMZV_HPP
#define RSMZV_RSMZV_HPP

#include <string>
#include <string_view>

#include "rsmzv/index.hpp"
#include "rsmzv/tpoly.hpp"
#include "rsmzv/word.hpp"
#include "rsmzv/zsymbol.hpp"

namespace rsmzv {

// L(w; T): the polynomial with L(w; 2 pi i n) = I_{beta_n}(0'; w; 0'), where
// beta_n = dch . alpha^n . dch^{-1}. By path composition it is the sum over
// splits w = u . e1^r . v of T^r / r! * reg_dch(u) * reg_dch_inv(v).
TPoly l_poly(Word w);
TPoly l_poly(const WordPoly& u);

// L_n(w) = L(w; 2 pi i n).
ZSymbol l_n(Word w, int n);

// L~(u; T) = L(u; T + pi i) - L(u; T - pi i).
TPoly l_tilde(const WordPoly& u);

// Z^RS(u) = L(u; 2 pi i) / (2 pi i) for u in h, returned in shuffle-reduced
// form. The constant term L(u; 0) vanishes after shuffle reduction; if it does
// not, std::logic_error is thrown. Throws std::invalid_argument for u not in h.
ZSymbol z_rs(const WordPoly& u);

// zeta^RS(k) by the explicit double sum over 0 <= a <= b <= d with
// k_{a+1} = ... = k_b = 1. Products of regularized values are kept formal.
ZSymbol zeta_rs_explicit(const Index& k);

// zeta_sh^S(k; T1, T2) and zeta_*^S(k; T1, T2) as bivariate polynomials.
TPoly zeta_sh_S(const Index& k);
TPoly zeta_star_S(const Index& k);

// zeta^RS(k) = (1 / 2 pi i) * integral_0^{2 pi i} zeta_sh^S(k; 0, T) dT.
ZSymbol zeta_rs_integral(const Index& k);

// zeta_*^S(k; -pi i / 2, pi i / 2), i.e. xi(k_d, ..., k_1).
ZSymbol xi_btt(const Index& k);

enum class Route { explicit_sum, lpoly, integral, btt };

Route parse_route(std::string_view name);  // throws std::invalid_argument
std::string to_string(Route r);

struct RsValue {
    Index index;
    Route route = Route::explicit_sum;
    ZSymbol symbol;
};

RsValue zeta_rs(const Index& k, Route route = Route::explicit_sum);

// Two univariate polynomials in T as bivariate ones in (T1, T2).
TPoly in_t1(const TPoly& p);
TPoly in_t2(const TPoly& p);

}  // namespace rsmzv

#endif
