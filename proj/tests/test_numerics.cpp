#include <doctest.h>

#include <boost/math/constants/constants.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <stdexcept>

#include "rsmzv/config.hpp"
#include "rsmzv/numerics.hpp"
#include "support.hpp"

using namespace rsmzv;
using rsmzv::test::K;

namespace {

Real pi()
{
    return boost::math::constants::pi<Real>();
}

// zeta(3) = 5/2 sum_{n>=1} (-1)^{n+1} / (n^3 binom(2n, n)).
Real apery_zeta3(int terms)
{
    Real s = 0, binom = 1;
    for (int n = 1; n <= terms; ++n) {
        binom = binom * (2 * n) * (2 * n - 1) / (Real(n) * n);
        const Real t = 1 / (Real(n) * n * n * binom);
        s += (n % 2) ? t : Real(-t);
    }
    return s * 5 / 2;
}

bool close(const Real& a, const Real& b, const char* tol)
{
    return abs(a - b) < Real(tol);
}

}  // namespace

TEST_CASE("zeta values against closed forms")
{
    const int digits = 60;
    PrecisionScope scope(digits);
    const Real p = pi();
    const BigComplex z2 = mzv_value(K("2"), digits);
    CHECK(close(z2.re, p * p / 6, "1e-60"));
    CHECK(z2.im == 0);
    CHECK(z2.err <= Real("1e-60"));
    CHECK(close(mzv_value(K("4"), digits).re, pow(p, 4) / 90, "1e-60"));
    CHECK(close(mzv_value(K("3"), digits).re, apery_zeta3(220), "1e-60"));
    // zeta(1,2) = zeta(3), zeta(1,3) = zeta(4)/4, zeta(2,2) = pi^4/120.
    CHECK(close(mzv_value(K("1,2"), digits).re, mzv_value(K("3"), digits).re, "1e-60"));
    CHECK(close(mzv_value(K("1,3"), digits).re, pow(p, 4) / 360, "1e-60"));
    CHECK(close(mzv_value(K("2,2"), digits).re, pow(p, 4) / 120, "1e-60"));
    // zeta(1,1,2) = zeta(4).
    CHECK(close(mzv_value(K("1,1,2"), digits).re, pow(p, 4) / 90, "1e-60"));
}

TEST_CASE("argument checks")
{
    CHECK_THROWS_AS(mzv_value(Index{}, 30), std::invalid_argument);
    CHECK_THROWS_AS(mzv_value(K("2,1"), 30), std::invalid_argument);
    CHECK_THROWS_AS(mzv_value(K("2"), 5), std::invalid_argument);
}

TEST_CASE("naive partial sums")
{
    const BigComplex s = mzv_naive(K("2"), 10);
    {
        PrecisionScope scope(30);
        CHECK(close(s.re, Real("1.5497677311665406904"), "1e-18"));
    }
    // Roughly three digits from a thousand terms of the depth-two sum.
    {
        const BigComplex partial = mzv_naive(K("1,2"), 1000);
        const BigComplex exact = mzv_value(K("3"), 30);
        PrecisionScope scope(30);
        CHECK(abs(exact.re - partial.re) < Real("1e-2"));
        CHECK(abs(exact.re - partial.re) <= partial.err);
    }
    // The truncation bound covers the true tail for every index of weight <= 6.
    for (const Index& k : indices_up_to(6)) {
        if (k.empty() || !k.admissible() || k.weight() > 6)
            continue;
        for (long n : {20L, 200L}) {
            const BigComplex partial = mzv_naive(k, n, 30);
            const BigComplex exact = mzv_value(k, 30);
            PrecisionScope scope(30);
            INFO(k.str(), " n=", n);
            CHECK(exact.re > partial.re);
            CHECK(exact.re - partial.re <= partial.err);
            // The bound is not absurdly loose.
            CHECK(naive_tail_bound(k, n) < 1000 * (exact.re - partial.re) + Real("1e-25"));
        }
    }
}

TEST_CASE("precision scaling")
{
    const BigComplex a = mzv_value(K("2,3"), 30);
    const BigComplex b = mzv_value(K("2,3"), 90);
    PrecisionScope scope(90);
    CHECK(a.err <= Real("1e-30"));
    CHECK(b.err <= Real("1e-90"));
    CHECK(abs(a.re - b.re) <= a.err + b.err);
}

TEST_CASE("symbol evaluation")
{
    const BigComplex t = twopii_value(40);
    PrecisionScope scope(40);
    CHECK(t.re == 0);
    CHECK(close(t.im, 2 * pi(), "1e-40"));
    const BigComplex s = zsymbol_value(ZSymbol::twopii(2) * Rational(1, 6), 40);
    CHECK(close(s.re, -4 * pi() * pi() / 6, "1e-39"));
    CHECK(close(s.im, 0, "1e-39"));
    const BigComplex z = zsymbol_value(Rational(2) * ZSymbol::zeta(K("2")) - Rational(-1, 12) * ZSymbol::twopii(2), 40);
    CHECK(close(z.re, 0, "1e-39"));
}

TEST_CASE("value cache: memory and file")
{
    namespace fs = std::filesystem;
    const fs::path path = fs::temp_directory_path() / "rsmzv_cache_test.jsonl";
    fs::remove(path);

    clear_value_cache();
    CHECK(value_cache_size() == 0);
    const BigComplex first = mzv_value(K("1,4"), 45);
    CHECK(value_cache_size() >= 1);
    const std::size_t warm = value_cache_size();
    const BigComplex again = mzv_value(K("1,4"), 45);
    CHECK(value_cache_size() == warm);

    clear_value_cache();
    attach_cache_file(path.string());
    const BigComplex written = mzv_value(K("3,3"), 45);
    detach_cache_file();
    CHECK(fs::file_size(path) > 0);

    clear_value_cache();
    attach_cache_file(path.string());
    CHECK(value_cache_size() >= 1);
    const BigComplex loaded = mzv_value(K("3,3"), 45);
    detach_cache_file();
    {
        PrecisionScope scope(45);
        CHECK(first.re == again.re);
        // Bit-for-bit at equal precision.
        CHECK(written.re == loaded.re);
        CHECK(loaded.err <= Real("1e-45"));
    }
    fs::remove(path);
    clear_value_cache();
}

TEST_CASE("verify_identity")
{
    Config cfg;
    const ZSymbol z2 = ZSymbol::zeta(K("2"));
    CHECK(verify_identity(Rational(-24) * z2, ZSymbol::twopii(2), cfg).pass);
    CHECK_FALSE(verify_identity(z2, ZSymbol::zeta(K("1,2")), cfg).pass);

    // A perturbation far below double precision but above the tolerance fails.
    const ZSymbol tiny = Rational(1, 10) * pow(ZSymbol(Rational(1, 10)), 19);
    CHECK_FALSE(verify_identity(ZSymbol::zeta(K("3")) + tiny, ZSymbol::zeta(K("1,2")), cfg).pass);
    CHECK(verify_identity(ZSymbol::zeta(K("3")), ZSymbol::zeta(K("1,2")), cfg).pass);

    const TPoly t = TPoly::variable(0);
    const std::vector<std::vector<ZSymbol>> samples{{ZSymbol(1)}, {ZSymbol::twopii()}};
    CHECK(verify_identity(t * t, t * t, samples, cfg).pass);
    CHECK_FALSE(verify_identity(t * t, t, samples, cfg).pass);
    CHECK_THROWS_AS(verify_identity(t, t, {}, cfg), std::invalid_argument);
    CHECK_THROWS_AS(verify_identity(t, t, {{ZSymbol(1), ZSymbol(2)}}, cfg), std::invalid_argument);
    CHECK_THROWS_AS(verify_identity(t, TPoly::variable(0, {"T1", "T2"}), samples, cfg), std::invalid_argument);
}

TEST_CASE("config validation")
{
    Config cfg;
    CHECK_NOTHROW(cfg.validate());
    CHECK(cfg.tolerance_exponent() == 45);
    cfg.digits = 40;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
    cfg.digits = 60;
    cfg.guard = -1;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
    CHECK_THROWS_AS(verify_identity(ZSymbol(1), ZSymbol(1), cfg), std::invalid_argument);
}
