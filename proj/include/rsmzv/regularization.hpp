#ifndef RSMZV_REGULARIZATION_HPP
#define RSMZV_REGULARIZATION_HPP

#include <vector>

#include "rsmzv/index.hpp"
#include "rsmzv/tpoly.hpp"
#include "rsmzv/word.hpp"
#include "rsmzv/zsymbol.hpp"

namespace rsmzv {

// Regularized iterated integral I_dch(0'; a_1..a_n; 1') along the straight
// path with tangential base points 0' = 1_0 and 1' = (-1)_1. This is the
// linear map with reg(u sh v) = reg(u) reg(v), reg(e0) = reg(e1) = 0 and
// reg(e1 e0^{k_1-1} ... e1 e0^{k_d-1}) = (-1)^d zeta(k) on admissible words.
// The result is linear in zeta symbols. Memoized; safe to call concurrently.
ZSymbol reg_dch(Word w);
ZSymbol reg_dch(const WordPoly& u);

// I_{dch^-1}(1'; a_1..a_n; 0') = (-1)^n reg_dch(reverse(w)).
ZSymbol reg_dch_inv(Word w);

// Coefficient of X_w in Phi_sh(T): the shuffle character with e1 -> -T,
// e0 -> 0, computed by stripping trailing e1 / leading e0 letters.
TPoly reg_dch_T(Word w);

// The same coefficient read off Phi_sh(0) exp(-T X1):
// sum over w = u e1^r of reg_dch(u) (-T)^r / r!.
TPoly phi_sh_coeff(Word w);

// zeta_sh(k; T): shuffle-regularized MZV polynomial with zeta_sh(1; T) = T.
TPoly zeta_sh_poly(const Index& k);

// zeta_*(k; T): harmonic-regularized MZV polynomial with zeta_*(1; T) = T,
// from (k_1..k_{d-1}) * (1) by induction on the number of trailing ones.
TPoly zeta_star_poly(const Index& k);

// Coefficients of t^0..t^n in Gamma_1(t) = exp(sum_{k>=2} zeta(k)/k (-t)^k).
std::vector<ZSymbol> gamma1_coeffs(int n);

// Coefficients of t^0..t^n in Gamma_1(-t)^{-1} = exp(-sum_{k>=2} zeta(k)/k t^k).
std::vector<ZSymbol> gamma1_neg_inverse_coeffs(int n);

// zeta_*(k; T) as (-1)^d times the coefficient of X1 X0^{k_1-1} ... X1 X0^{k_d-1}
// in Phi_sh(T) Gamma_1(-X1)^{-1}.
TPoly zeta_star_via_gamma(const Index& k);

}  // namespace rsmzv

#endif
