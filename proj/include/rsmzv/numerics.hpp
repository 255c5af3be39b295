#ifndef RSMZV_NUMERICS_HPP
#define RSMZV_NUMERICS_HPP

#include <boost/multiprecision/mpfr.hpp>

#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "rsmzv/config.hpp"
#include "rsmzv/index.hpp"
#include "rsmzv/tpoly.hpp"
#include "rsmzv/zsymbol.hpp"

namespace rsmzv {

using Real = boost::multiprecision::mpfr_float;

// Extra decimal digits carried internally on top of the requested ones.
inline constexpr int kWorkingGuard = 20;

// Sets the mpfr default precision to digits + kWorkingGuard for the lifetime
// of the scope and holds the numerics lock (Boost keeps one global default).
class PrecisionScope {
public:
    explicit PrecisionScope(int digits);
    ~PrecisionScope();
    PrecisionScope(const PrecisionScope&) = delete;
    PrecisionScope& operator=(const PrecisionScope&) = delete;

private:
    std::unique_lock<std::recursive_mutex> lock_;
    unsigned saved_;
};

// re + i*im with an absolute error bound err on the complex value.
struct BigComplex {
    Real re;
    Real im;
    Real err;
    int digits = 0;

    static BigComplex real(const Real& re, const Real& err, int digits);

    Real abs() const;

    BigComplex& operator+=(const BigComplex& o);
    BigComplex& operator-=(const BigComplex& o);
    // |xy - x'y'| <= |x'| e_y + |y'| e_x + e_x e_y.
    BigComplex& operator*=(const BigComplex& o);
    BigComplex& operator*=(const Rational& c);
    friend BigComplex operator+(BigComplex a, const BigComplex& b) { return a += b; }
    friend BigComplex operator-(BigComplex a, const BigComplex& b) { return a -= b; }
    friend BigComplex operator*(BigComplex a, const BigComplex& b) { return a *= b; }

    // Decimal strings with `digits` significant digits.
    std::string re_str() const;
    std::string im_str() const;
    std::string err_str() const;
};

// Scientific-notation decimal string with n significant digits.
std::string decimal(const Real& x, int n);

// zeta(k) for admissible non-empty k with err <= 10^-digits, by splitting the
// iterated integral at 1/2 into products of Li_s(1/2). Throws
// std::invalid_argument for empty or non-admissible k or digits < 10.
BigComplex mzv_value(const Index& k, int digits);

// Partial sum over m_d <= n, computed at `digits` precision. err is the
// truncation bound naive_tail_bound(k, n) plus rounding.
BigComplex mzv_naive(const Index& k, long n, int digits = 30);

// Bound on the tail sum over m_d > n:
//   n^{1-s} sum_{i=0}^{j} j!/(j-i)! (1 + ln n)^{j-i} / (s-1)^{i+1},
// with s = k_d and j = d - 1. Valid for n >= 3.
Real naive_tail_bound(const Index& k, long n);

// 2 pi i with err <= 10^-(digits + kWorkingGuard - 2).
BigComplex twopii_value(int digits);

// Substitutes numerical values for 2 pi i and every zeta factor.
BigComplex zsymbol_value(const ZSymbol& s, int digits);

// The zeta-value cache, keyed by (index, digits). Attaching a file loads the
// JSON lines {"index": "3,2", "digits": 60, "re": "..."} it contains and
// appends every value computed afterwards.
void attach_cache_file(const std::string& path);
void detach_cache_file();
void clear_value_cache();
std::size_t value_cache_size();

struct Residual {
    Real residual;  // max over samples of |lhs - rhs|
    Real err;       // max propagated error bound
    int digits = 0;
    int guard = 0;
    bool pass = false;

    std::string residual_str() const;
};

// PASS iff residual + err < 10^-(digits - guard). Validates the config.
Residual verify_identity(const ZSymbol& lhs, const ZSymbol& rhs, const Config& config);

// Evaluates lhs - rhs at every sample point (one ZSymbol per variable).
// Throws std::invalid_argument if the variable lists differ or a sample has
// the wrong dimension, and if samples is empty.
Residual verify_identity(const TPoly& lhs, const TPoly& rhs, const std::vector<std::vector<ZSymbol>>& samples,
                         const Config& config);

}  // namespace rsmzv

#endif
