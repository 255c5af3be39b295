#include <doctest.h>

#include <stdexcept>

#include "rsmzv/index_algebra.hpp"
#include "rsmzv/numerics.hpp"
#include "rsmzv/relations.hpp"
#include "rsmzv/rsmzv.hpp"
#include "support.hpp"

using namespace rsmzv;
using rsmzv::test::W;

namespace {

const std::vector<std::uint64_t> kPrimes{4611686018427387847ull, 4611686018427387817ull};

WordPoly d_of(const GeneratorTriple& t)
{
    return d_generator(WordPoly(t.u), WordPoly(t.v), WordPoly(t.w));
}

std::vector<std::uint64_t> residues(const WordPoly& p, int k, std::uint64_t prime)
{
    std::vector<std::int64_t> dense(h0_dimension(k), 0);
    for (const auto& [w, c] : p) {
        REQUIRE(c.get_den() == 1);
        dense[h0_column(w)] = c.get_num().get_si();
    }
    EchelonModP e(prime, static_cast<std::uint32_t>(dense.size()));
    return e.reduce_integers(dense);
}

}  // namespace

TEST_CASE("d_k and the expected ranks")
{
    CHECK(d_sequence(10) == std::vector<std::int64_t>{1, 0, 1, 1, 1, 2, 2, 3, 4, 5, 7});
    const std::vector<std::int64_t> expect{0, 1, 2, 6, 13, 28, 59, 121, 247, 500, 1008, 2027, 4068, 8155};
    for (int k = 1; k <= 14; ++k)
        CHECK(expected_rank(k) == expect[static_cast<std::size_t>(k - 1)]);
    CHECK(h0_dimension(0) == 1);
    CHECK(h0_dimension(5) == 16);
}

TEST_CASE("generator counts against enumeration")
{
    CHECK(generator_count(1) == 1);
    CHECK(generator_count(2) == 3);
    CHECK(generator_count(5) == 66);
    for (int k = 1; k <= 8; ++k) {
        std::uint64_t seen = 0;
        for_each_generator(k, [&](const GeneratorTriple& t) {
            CHECK(t.u.in_h0());
            CHECK(t.v.in_h0());
            CHECK(t.w.in_h0());
            CHECK(t.u.weight() + t.v.weight() + t.w.weight() == k - 1);
            ++seen;
        });
        // Brute force over all h0 monomial triples of total weight k - 1.
        std::uint64_t brute = 0;
        for (int a = 0; a < k; ++a)
            for (int b = 0; a + b < k; ++b)
                brute += h0_monomials(a).size() * h0_monomials(b).size() * h0_monomials(k - 1 - a - b).size();
        CHECK(seen == brute);
        CHECK(generator_count(k) == brute);
        CHECK(enumerate_generators(k).size() == brute);
    }
}

TEST_CASE("D generator")
{
    const WordPoly e1 = WordPoly(W("1"));
    // D(e1, v, w) = v sh w - v sh w = 0.
    CHECK(d_generator(e1, WordPoly(W("101")), WordPoly(W("11"))).is_zero());
    CHECK_THROWS_AS(d_generator(WordPoly(W("10")), e1, e1), std::invalid_argument);
    // D(w(1), e1, e1) = w(1) * 2 e1e1 - e1 sh w(1).
    const WordPoly u = WordPoly(W("11"));
    CHECK(d_generator(u, e1, e1) == harmonic_word(u, Rational(2) * WordPoly(W("11"))) - shuffle(e1, u));
    for (int k = 1; k <= 5; ++k)
        for_each_generator(k, [&](const GeneratorTriple& t) {
            const WordPoly d = d_of(t);
            CHECK(d.in_h0());
            for (const auto& [w, c] : d)
                CHECK(w.weight() == k);
        });
}

TEST_CASE("RowBuilder matches the generic D")
{
    for (int k = 1; k <= 6; ++k) {
        RowBuilder rb(k);
        CHECK(rb.columns() == h0_dimension(k));
        std::vector<std::int64_t> dense;
        for_each_generator(k, [&](const GeneratorTriple& t) {
            rb.build(t, dense);
            const WordPoly d = d_of(t);
            std::vector<std::int64_t> expect(rb.columns(), 0);
            for (const auto& [w, c] : d)
                expect[h0_column(w)] = c.get_num().get_si();
            REQUIRE(dense == expect);
        });
    }
}

TEST_CASE("h0 columns")
{
    for (int k = 1; k <= 7; ++k)
        for (std::uint32_t col = 0; col < h0_dimension(k); ++col) {
            const Word w = h0_word_of_column(col, k);
            CHECK(w.in_h0());
            CHECK(w.weight() == k);
            CHECK(h0_column(w) == col);
        }
}

TEST_CASE("Miller-Rabin")
{
    for (std::uint64_t p : {2ull, 3ull, 5ull, 97ull, 4611686018427387847ull, 4611686018427387817ull,
                            4611686018427387787ull, 18446744073709551557ull})
        CHECK(is_prime_u64(p));
    for (std::uint64_t n : {0ull, 1ull, 4ull, 561ull, 3215031751ull, 4294967291ull * 4294967279ull})
        CHECK_FALSE(is_prime_u64(n));
}

TEST_CASE("echelon form over F_p")
{
    EchelonModP e(7, 3);
    std::vector<std::uint64_t> r1{1, 2, 3}, r2{2, 4, 6}, r3{0, 1, 0};
    CHECK(e.insert(r1));
    CHECK_FALSE(e.insert(r2));
    CHECK(e.rank() == 1);
    CHECK(e.insert(r3));
    CHECK(e.rank() == 2);
    CHECK(e.contains({1, 3, 3}));
    CHECK_FALSE(e.contains({0, 0, 1}));
    CHECK(e.reduce_integers({-1, 8, 0}) == std::vector<std::uint64_t>{6, 1, 0});
    CHECK_THROWS_AS(EchelonModP(4, 3), std::invalid_argument);
    CHECK_THROWS_AS(EchelonModP(2, 3), std::invalid_argument);
    CHECK_THROWS_AS(EchelonModP(18446744073709551557ull, 3), std::invalid_argument);
}

TEST_CASE("ranks")
{
    for (int k = 1; k <= 9; ++k) {
        const auto r = rank_mod_primes(k, kPrimes);
        REQUIRE(r.size() == 2);
        CHECK(r[0] == r[1]);
        CHECK(static_cast<std::int64_t>(r[0]) == expected_rank(k));
        if (k <= 6)
            CHECK(rank_exact(k) == r[0]);
    }
    CHECK(rank_mod_p(4, 1000003) == 6);
    CHECK_THROWS_AS(rank_exact(9), std::length_error);
}

TEST_CASE("conjecture rows")
{
    const auto rows = conjecture_table(5, kPrimes, 4);
    REQUIRE(rows.size() == 5);
    for (const auto& r : rows) {
        CHECK(r.match);
        CHECK(r.primes_agree);
        CHECK(r.asserted);
        CHECK(r.exact_rank.has_value() == (r.k <= 4));
        CHECK(r.warnings.empty());
    }
    CHECK(rows[4].generators == 66);
    CHECK(conjecture_row(3, {1000003}, 0).warnings.size() == 1);
    CHECK(rank_table_csv(rows).rfind("k,dim,generators,rank,expected,match,elapsed_ms,primes\n", 0) == 0);
}

TEST_CASE("D relations lie in the kernel of Z^RS")
{
    Config cfg;
    for (int k = 1; k <= 4; ++k)
        for_each_generator(k, [&](const GeneratorTriple& t) {
            const Residual r = verify_identity(z_rs(d_of(t)), ZSymbol(), cfg);
            CHECK(r.pass);
        });
    for (int k = 5; k <= 6; ++k) {
        const auto gens = enumerate_generators(k);
        std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);
        for (int i = 0; i < 20; ++i) {
            const GeneratorTriple& t = gens[pick(test::rng())];
            const Residual r = verify_identity(z_rs(d_of(t)), ZSymbol(), cfg);
            INFO("k=", k, " ", t.u.str(), " ", t.v.str(), " ", t.w.str(), " residual ", r.residual_str());
            CHECK(r.pass);
        }
    }
}

TEST_CASE("the relation space is closed under trilinear combinations")
{
    const int k = 5;
    const std::uint64_t p = kPrimes[0];
    EchelonModP span(p, static_cast<std::uint32_t>(h0_dimension(k)));
    RowBuilder rb(k);
    std::vector<std::int64_t> dense;
    for_each_generator(k, [&](const GeneratorTriple& t) {
        rb.build(t, dense);
        auto row = span.reduce_integers(dense);
        span.insert(row);
    });
    CHECK(span.rank() == expected_rank(k));

    // Slot weights add up to k - 1 = 4.
    const WordPoly u = Rational(2) * word_of_index({1, 1}) - word_of_index({2});
    const WordPoly v = word_of_index({1});
    const WordPoly w = Rational(3) * word_of_index({1}) - WordPoly(W("11"));
    const WordPoly v2 = word_of_index({1, 1}) + word_of_index({2});
    CHECK(span.contains(residues(d_generator(u, v, w), k, p)));
    CHECK(span.contains(residues(d_generator(v2, u, WordPoly(W("1"))), k, p)));

    // Z^RS(w(2,3)) = -zeta^RS(3,2) is about -2.46, so w(2,3) is not a relation.
    CHECK_FALSE(span.contains(residues(word_of_index({2, 3}), k, p)));
}
