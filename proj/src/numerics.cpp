#include "rsmzv/numerics.hpp"

#include <cmath>
#include <fstream>
#include <map>
#include <stdexcept>

#include <json.hpp>

#include "rsmzv/memo.hpp"

namespace rsmzv {

namespace {

std::recursive_mutex& numerics_mutex()
{
    static std::recursive_mutex m;
    return m;
}

int working_digits(int digits)
{
    return digits + kWorkingGuard;
}

// Relative rounding allowance for one operation at the current precision.
const Real& unit_roundoff()
{
    static std::map<unsigned, Real> table;
    const unsigned p = Real::default_precision();
    auto it = table.find(p);
    if (it == table.end()) {
        Real e = boost::multiprecision::pow(Real(10), 1 - static_cast<int>(p));
        it = table.emplace(p, e).first;
    }
    return it->second;
}

Real from_rational(const Rational& c)
{
    Real x;
    mpfr_set_q(x.backend().data(), c.get_mpq_t(), MPFR_RNDN);
    return x;
}

Real pow10(int e)
{
    return boost::multiprecision::pow(Real(10), e);
}

// Letters of the positive-form integral word with omega_0 = dt/t and
// omega_1 = dt/(1-t): 1 0^{k_1-1} ... 1 0^{k_d-1}.
std::vector<int> letters_of(const Index& k)
{
    std::vector<int> w;
    for (int p : k.parts()) {
        w.push_back(1);
        for (int i = 1; i < p; ++i)
            w.push_back(0);
    }
    return w;
}

// Exponents (s_1..s_r) of a word starting with 1.
std::vector<int> exponents_of(const std::vector<int>& w)
{
    std::vector<int> s;
    for (int a : w) {
        if (a == 1)
            s.push_back(1);
        else
            ++s.back();
    }
    return s;
}

// Tail bound for Li_s(1/2) truncated at m_r <= n, valid for n >= 4(r-1):
// 4 * 2^{-(n+1)} * (1 + ln(n+1))^{r-1}.
double log10_half_tail(long n, int r)
{
    return std::log10(4.0) - static_cast<double>(n + 1) * std::log10(2.0)
           + (r - 1) * std::log10(1.0 + std::log(static_cast<double>(n + 1)));
}

// sum_{0 < m_1 < ... < m_r} x^{m_r} / (m_1^{s_1} ... m_r^{s_r}) truncated at
// m_r <= n, with x = 1/2 when half is set and x = 1 otherwise.
Real nested_sum(const std::vector<int>& s, long n, bool half, Real& rounding)
{
    const int r = static_cast<int>(s.size());
    std::vector<Real> cur(static_cast<std::size_t>(n + 1));
    std::vector<Real> recip(static_cast<std::size_t>(n + 1));
    for (long m = 1; m <= n; ++m)
        recip[static_cast<std::size_t>(m)] = Real(1) / Real(m);
    auto inv_pow = [&](long m, int e) { return boost::multiprecision::pow(recip[static_cast<std::size_t>(m)], e); };
    for (long m = 1; m <= n; ++m)
        cur[static_cast<std::size_t>(m)] = inv_pow(m, s[0]);
    for (int i = 1; i < r; ++i) {
        Real prefix = 0;
        for (long m = 1; m <= n; ++m) {
            Real next = prefix * inv_pow(m, s[static_cast<std::size_t>(i)]);
            prefix += cur[static_cast<std::size_t>(m)];
            cur[static_cast<std::size_t>(m)] = std::move(next);
        }
    }
    Real total = 0;
    Real scale = half ? Real(0.5) : Real(1);
    Real weight = scale;
    for (long m = 1; m <= n; ++m) {
        total += cur[static_cast<std::size_t>(m)] * weight;
        if (half)
            weight *= scale;
    }
    // Intermediate magnitudes are at most (1 + ln n)^r; every entry passes
    // through at most r + 2 roundings of a few ulps each.
    const Real big = boost::multiprecision::pow(1 + boost::multiprecision::log(Real(n)), r);
    rounding = 8 * Real(n) * (r + 2) * big * unit_roundoff();
    return total;
}

// Li_s(1/2) with err <= 10^-target_digits (plus rounding).
BigComplex li_half(const std::vector<int>& s, int digits, int target_digits)
{
    if (s.empty())
        return BigComplex::real(Real(1), Real(0), digits);
    const int r = static_cast<int>(s.size());
    long n = std::max<long>(4L * (r - 1), 1);
    while (log10_half_tail(n, r) > -target_digits)
        ++n;
    Real rounding;
    Real value = nested_sum(s, n, true, rounding);
    Real tail = 4 * boost::multiprecision::pow(Real(0.5), n + 1)
                * boost::multiprecision::pow(1 + boost::multiprecision::log(Real(n + 1)), r - 1);
    return BigComplex::real(value, tail + rounding, digits);
}

struct ValueKey {
    Index index;
    int digits;
    friend bool operator==(const ValueKey&, const ValueKey&) = default;
};

struct ValueKeyHash {
    std::size_t operator()(const ValueKey& k) const noexcept
    {
        std::size_t h = static_cast<std::size_t>(k.digits) * 0x9E3779B97F4A7C15ull;
        for (int p : k.index.parts())
            h = (h ^ static_cast<std::size_t>(p)) * 0x100000001b3ull;
        return h;
    }
};

Memo<ValueKey, BigComplex, ValueKeyHash>& value_memo()
{
    static Memo<ValueKey, BigComplex, ValueKeyHash> memo;
    return memo;
}

std::optional<std::string>& cache_file()
{
    static std::optional<std::string> path;
    return path;
}

// Decimal string that reads back to the same binary value at the same precision.
std::string exact_decimal(const Real& x)
{
    if (x == 0)
        return "0";
    mpfr_exp_t e = 0;
    char* raw = mpfr_get_str(nullptr, &e, 10, 0, x.backend().data(), MPFR_RNDN);
    std::string mant(raw);
    mpfr_free_str(raw);
    std::string sign;
    if (mant[0] == '-') {
        sign = "-";
        mant.erase(0, 1);
    }
    return sign + "0." + mant + "e" + std::to_string(e);
}

void append_to_cache_file(const Index& k, int digits, const Real& re)
{
    if (!cache_file())
        return;
    std::ofstream out(*cache_file(), std::ios::app);
    if (!out)
        throw std::runtime_error("cannot append to cache file " + *cache_file());
    nlohmann::json j{{"index", k.str()}, {"digits", digits}, {"re", exact_decimal(re)}};
    out << j.dump() << '\n';
}

BigComplex compute_mzv(const Index& k, int digits)
{
    const std::vector<int> w = letters_of(k);
    const int n = static_cast<int>(w.size());
    const int target = digits + 4;
    BigComplex sum = BigComplex::real(Real(0), Real(0), digits);
    for (int j = 0; j <= n; ++j) {
        // I(0; w_1..w_j; 1/2) * I(1/2; w_{j+1}..w_n; 1), the second factor
        // rewritten by t -> 1 - t as I(0; reverse(flip(suffix)); 1/2).
        std::vector<int> prefix(w.begin(), w.begin() + j);
        std::vector<int> suffix;
        for (int i = n - 1; i >= j; --i)
            suffix.push_back(1 - w[static_cast<std::size_t>(i)]);
        sum += li_half(exponents_of(prefix), digits, target) * li_half(exponents_of(suffix), digits, target);
    }
    return sum;
}

}  // namespace

PrecisionScope::PrecisionScope(int digits) : lock_(numerics_mutex()), saved_(Real::default_precision())
{
    Real::default_precision(static_cast<unsigned>(working_digits(digits)));
}

PrecisionScope::~PrecisionScope()
{
    Real::default_precision(saved_);
}

BigComplex BigComplex::real(const Real& re, const Real& err, int digits)
{
    BigComplex z;
    z.re = re;
    z.im = 0;
    z.err = err;
    z.digits = digits;
    return z;
}

Real BigComplex::abs() const
{
    return boost::multiprecision::sqrt(re * re + im * im);
}

BigComplex& BigComplex::operator+=(const BigComplex& o)
{
    re += o.re;
    im += o.im;
    err += o.err + (boost::multiprecision::abs(re) + boost::multiprecision::abs(im)) * unit_roundoff();
    return *this;
}

BigComplex& BigComplex::operator-=(const BigComplex& o)
{
    re -= o.re;
    im -= o.im;
    err += o.err + (boost::multiprecision::abs(re) + boost::multiprecision::abs(im)) * unit_roundoff();
    return *this;
}

BigComplex& BigComplex::operator*=(const BigComplex& o)
{
    const Real a = abs();
    const Real b = o.abs();
    Real r = re * o.re - im * o.im;
    Real i = re * o.im + im * o.re;
    re = std::move(r);
    im = std::move(i);
    err = a * o.err + b * err + err * o.err + 4 * a * b * unit_roundoff();
    return *this;
}

BigComplex& BigComplex::operator*=(const Rational& c)
{
    const Real x = from_rational(c);
    const Real ax = boost::multiprecision::abs(x);
    err = err * ax + 4 * abs() * ax * unit_roundoff();
    re *= x;
    im *= x;
    return *this;
}

std::string decimal(const Real& x, int n)
{
    return x.str(n, std::ios_base::scientific);
}

std::string BigComplex::re_str() const
{
    return decimal(re, digits);
}

std::string BigComplex::im_str() const
{
    return decimal(im, digits);
}

std::string BigComplex::err_str() const
{
    return decimal(err, 3);
}

BigComplex mzv_value(const Index& k, int digits)
{
    if (k.empty() || !k.admissible())
        throw std::invalid_argument("mzv_value needs a non-empty admissible index (last part >= 2), got (" + k.str()
                                    + ")");
    if (digits < 10)
        throw std::invalid_argument("mzv_value needs digits >= 10");
    PrecisionScope scope(digits);
    return value_memo().get_or_compute(ValueKey{k, digits}, [&] {
        BigComplex v = compute_mzv(k, digits);
        append_to_cache_file(k, digits, v.re);
        return v;
    });
}

Real naive_tail_bound(const Index& k, long n)
{
    if (k.empty() || !k.admissible())
        throw std::invalid_argument("naive_tail_bound needs a non-empty admissible index");
    const int s = k.parts().back();
    const int j = k.depth() - 1;
    if (n < 3 || static_cast<double>(n) < std::exp(static_cast<double>(j) / s))
        throw std::invalid_argument("naive_tail_bound needs n >= max(3, exp(j/s))");
    const Real l = 1 + boost::multiprecision::log(Real(n));
    Real sum = 0;
    Real falling = 1;  // j! / (j - i)!
    for (int i = 0; i <= j; ++i) {
        if (i > 0)
            falling *= (j - i + 1);
        sum += falling * boost::multiprecision::pow(l, j - i) / boost::multiprecision::pow(Real(s - 1), i + 1);
    }
    return boost::multiprecision::pow(Real(n), 1 - s) * sum;
}

BigComplex mzv_naive(const Index& k, long n, int digits)
{
    if (k.empty() || !k.admissible())
        throw std::invalid_argument("mzv_naive needs a non-empty admissible index (last part >= 2)");
    PrecisionScope scope(digits);
    Real rounding;
    Real value = nested_sum(k.parts(), n, false, rounding);
    return BigComplex::real(value, naive_tail_bound(k, n) + rounding, digits);
}

BigComplex twopii_value(int digits)
{
    PrecisionScope scope(digits);
    Real pi;
    mpfr_const_pi(pi.backend().data(), MPFR_RNDN);
    BigComplex z;
    z.re = 0;
    z.im = 2 * pi;
    z.err = 8 * unit_roundoff();
    z.digits = digits;
    return z;
}

BigComplex zsymbol_value(const ZSymbol& s, int digits)
{
    PrecisionScope scope(digits);
    BigComplex total = BigComplex::real(Real(0), Real(0), digits);
    const BigComplex tpi = twopii_value(digits);
    for (const auto& [m, c] : s) {
        BigComplex term = BigComplex::real(Real(1), Real(0), digits);
        for (int p = 0; p < m.twopii; ++p)
            term *= tpi;
        for (const Index& k : m.zetas)
            term *= mzv_value(k, digits);
        term *= c;
        total += term;
    }
    return total;
}

void attach_cache_file(const std::string& path)
{
    std::lock_guard lock(numerics_mutex());
    std::ifstream in(path);
    std::string line;
    int lineno = 0;
    while (in && std::getline(in, line)) {
        ++lineno;
        if (line.empty())
            continue;
        try {
            const auto j = nlohmann::json::parse(line);
            const Index k = Index::parse(j.at("index").get<std::string>());
            const int digits = j.at("digits").get<int>();
            PrecisionScope scope(digits);
            Real re(j.at("re").get<std::string>());
            value_memo().insert(ValueKey{k, digits}, BigComplex::real(re, pow10(-digits), digits));
        } catch (const std::exception& e) {
            throw std::runtime_error(path + ":" + std::to_string(lineno) + ": bad cache line: " + e.what());
        }
    }
    cache_file() = path;
}

void detach_cache_file()
{
    std::lock_guard lock(numerics_mutex());
    cache_file().reset();
}

void clear_value_cache()
{
    value_memo().clear();
}

std::size_t value_cache_size()
{
    return value_memo().size();
}

std::string Residual::residual_str() const
{
    return decimal(residual, 3);
}

namespace {

Residual judge(const Real& residual, const Real& err, const Config& config)
{
    Residual r;
    r.residual = residual;
    r.err = err;
    r.digits = config.digits;
    r.guard = config.guard;
    r.pass = residual + err < pow10(-config.tolerance_exponent());
    return r;
}

}  // namespace

Residual verify_identity(const ZSymbol& lhs, const ZSymbol& rhs, const Config& config)
{
    config.validate();
    PrecisionScope scope(config.digits);
    const ZSymbol diff = lhs - rhs;
    if (diff.is_zero())
        return judge(Real(0), Real(0), config);
    const BigComplex v = zsymbol_value(diff, config.digits);
    return judge(v.abs(), v.err, config);
}

Residual verify_identity(const TPoly& lhs, const TPoly& rhs, const std::vector<std::vector<ZSymbol>>& samples,
                         const Config& config)
{
    config.validate();
    if (lhs.vars() != rhs.vars())
        throw std::invalid_argument("verify_identity: polynomials have different variables");
    if (samples.empty())
        throw std::invalid_argument("verify_identity: polynomial identities need at least one sample point");
    PrecisionScope scope(config.digits);
    const TPoly diff = lhs - rhs;
    Real worst = 0;
    Real worst_err = 0;
    for (const auto& point : samples) {
        if (static_cast<int>(point.size()) != lhs.nvars())
            throw std::invalid_argument("verify_identity: sample has " + std::to_string(point.size())
                                        + " coordinates, polynomial has " + std::to_string(lhs.nvars())
                                        + " variables");
        const ZSymbol at = diff.evaluate(point);
        if (at.is_zero())
            continue;
        const BigComplex v = zsymbol_value(at, config.digits);
        const Real a = v.abs();
        if (a > worst)
            worst = a;
        if (v.err > worst_err)
            worst_err = v.err;
    }
    return judge(worst, worst_err, config);
}

}  // namespace rsmzv
