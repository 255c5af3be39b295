#ifndef RSMZV_TPOLY_HPP
#define RSMZV_TPOLY_HPP

#include <array>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "rsmzv/zsymbol.hpp"

namespace rsmzv {

// Polynomial in one variable (T) or two variables (T1, T2) with ZSymbol
// coefficients. Exponent vectors always have two slots; the second is zero
// for univariate polynomials.
class TPoly {
public:
    using Exponents = std::array<int, 2>;
    using Terms = std::map<Exponents, ZSymbol>;

    // Univariate in "T" unless names are given.
    TPoly();
    explicit TPoly(std::vector<std::string> vars);
    static TPoly constant(const ZSymbol& c, std::vector<std::string> vars = {"T"});
    // The variable with the given position, as a polynomial.
    static TPoly variable(int var, std::vector<std::string> vars = {"T"});

    const std::vector<std::string>& vars() const noexcept { return vars_; }
    int nvars() const noexcept { return static_cast<int>(vars_.size()); }
    const Terms& terms() const noexcept { return terms_; }
    auto begin() const { return terms_.begin(); }
    auto end() const { return terms_.end(); }
    bool is_zero() const noexcept { return terms_.empty(); }
    ZSymbol coeff(Exponents e) const;
    int degree(int var) const;

    void add(Exponents e, const ZSymbol& c);

    TPoly& operator+=(const TPoly& o);
    TPoly& operator-=(const TPoly& o);
    TPoly& operator*=(const ZSymbol& c);
    friend TPoly operator+(TPoly a, const TPoly& b) { return a += b; }
    friend TPoly operator-(TPoly a, const TPoly& b) { return a -= b; }
    friend TPoly operator*(const TPoly& a, const TPoly& b);
    friend TPoly operator*(const ZSymbol& c, TPoly a) { return a *= c; }
    friend bool operator==(const TPoly&, const TPoly&) = default;

    TPoly derivative(int var) const;
    // Substitutes var := value; the variable remains in vars() with degree 0.
    TPoly substitute(int var, const ZSymbol& value) const;
    // Evaluates at a full point (one ZSymbol per variable).
    ZSymbol evaluate(const std::vector<ZSymbol>& point) const;
    // For univariate *this: sum_j c_j * arg^j, in arg's variables.
    TPoly compose(const TPoly& arg) const;
    // Applies f to every coefficient.
    TPoly map_coeffs(const std::function<ZSymbol(const ZSymbol&)>& f) const;

    std::string str() const;

private:
    void check_compatible(const TPoly& o) const;

    std::vector<std::string> vars_;
    Terms terms_;
};

TPoly pow(const TPoly& p, int n);

}  // namespace rsmzv

#endif
