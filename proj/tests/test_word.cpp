#include <doctest.h>

#include <stdexcept>

#include "rsmzv/word.hpp"
#include "support.hpp"

using namespace rsmzv;
using rsmzv::test::K;
using rsmzv::test::W;

namespace {

// Shuffle by choosing which output positions carry the letters of u.
WordPoly shuffle_by_positions(Word u, Word v)
{
    const int m = u.length(), n = v.length();
    WordPoly out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (m + n)); ++mask) {
        if (__builtin_popcountll(mask) != m)
            continue;
        std::string s;
        int i = 0, j = 0;
        for (int p = 0; p < m + n; ++p) {
            if ((mask >> p) & 1u)
                s += static_cast<char>('0' + u[i++]);
            else
                s += static_cast<char>('0' + v[j++]);
        }
        out.add(W(s), 1);
    }
    return out;
}

WordPoly wp(std::initializer_list<std::pair<const char*, int>> terms)
{
    WordPoly p;
    for (auto [s, c] : terms)
        p.add(W(s), c);
    return p;
}

}  // namespace

TEST_CASE("word parsing and accessors")
{
    const Word w = W("1001");
    CHECK(w.length() == 4);
    CHECK(w.weight() == 3);
    CHECK(w.str() == "1001");
    CHECK(w[0] == 1);
    CHECK(w[1] == 0);
    CHECK(w.prefix(2) == W("10"));
    CHECK(w.suffix_from(1) == W("001"));
    CHECK(w.reversed() == W("1001"));
    CHECK(W("110").reversed() == W("011"));
    CHECK(W("10").insert(1, 1) == W("110"));
    CHECK(W("10").insert(2, 1) == W("101"));
    CHECK(W("").empty());
    CHECK(W("1").in_h0());
    CHECK(W("101").in_h0());
    CHECK_FALSE(W("10").in_h0());
    CHECK(W("10").admissible());
    CHECK_FALSE(W("01").admissible());
    CHECK_THROWS_AS(W("102"), std::invalid_argument);
    CHECK_THROWS_AS(Word::parse(std::string(64, '1')), std::length_error);
}

TEST_CASE("shuffle examples")
{
    CHECK(shuffle(W(""), W("101")) == WordPoly(W("101")));
    CHECK(shuffle(W("101"), W("")) == WordPoly(W("101")));
    CHECK(shuffle(W("1"), W("1")) == WordPoly(W("11"), 2));
    CHECK(shuffle(W("10"), W("1")) == wp({{"110", 2}, {"101", 1}}));
}

TEST_CASE("shuffle agrees with the position-subset oracle")
{
    for (int m = 0; m <= 4; ++m)
        for (int n = 0; n <= 4; ++n)
            for (Word u : words_of_length(m))
                for (Word v : words_of_length(n))
                    REQUIRE(shuffle(u, v) == shuffle_by_positions(u, v));
}

TEST_CASE("shuffle is commutative and associative")
{
    for (int trial = 0; trial < 40; ++trial) {
        const Word a = test::random_word(1 + trial % 3);
        const Word b = test::random_word(1 + trial % 4);
        const Word c = test::random_word(trial % 3);
        CHECK(shuffle(a, b) == shuffle(b, a));
        CHECK(shuffle(shuffle(WordPoly(a), WordPoly(b)), WordPoly(c)) == shuffle(WordPoly(a), shuffle(WordPoly(b), WordPoly(c))));
    }
}

TEST_CASE("concatenation")
{
    CHECK(concat(WordPoly::constant(1), WordPoly(W("101"))) == WordPoly(W("101")));
    CHECK(concat(WordPoly(W("1")), WordPoly(W("0"))) == WordPoly(W("10")));
    CHECK(concat(wp({{"0", 1}, {"1", 1}}), WordPoly(W("1"))) == wp({{"01", 1}, {"11", 1}}));
}

TEST_CASE("phi")
{
    CHECK(phi(W("1")) == WordPoly(W("1"), -1));
    CHECK(phi(W("0")) == wp({{"0", 1}, {"1", -1}}));
    // phi(w(2)) = w(2) + w(1,1).
    CHECK(phi(word_of_index(K("2"))) == word_of_index(K("2")) + word_of_index(K("1,1")));
    CHECK(phi(word_of_index(K("2"))) == wp({{"101", -1}, {"111", 1}}));
}

TEST_CASE("phi is an involutive automorphism of concatenation and shuffle")
{
    for (int trial = 0; trial < 30; ++trial) {
        const Word u = test::random_word(1 + trial % 4);
        const Word v = test::random_word(1 + trial % 3);
        CHECK(phi(phi(u)) == WordPoly(u));
        CHECK(phi(u.concat(v)) == concat(phi(u), phi(v)));
        CHECK(phi(shuffle(u, v)) == shuffle(phi(u), phi(v)));
    }
}

TEST_CASE("tau")
{
    CHECK(tau(W("1")) == WordPoly(W("1"), -1));
    CHECK(tau(W("10")) == WordPoly(W("01")));
    CHECK(tau(W("100")) == WordPoly(W("001"), -1));
    CHECK(epsilon(W("10")) == tau(W("10")));
    for (int trial = 0; trial < 30; ++trial) {
        const Word u = test::random_word(1 + trial % 4);
        const Word v = test::random_word(1 + trial % 3);
        CHECK(tau(tau(u)) == WordPoly(u));
        CHECK(tau(u.concat(v)) == concat(tau(v), tau(u)));
        CHECK(tau(shuffle(u, v)) == shuffle(tau(u), tau(v)));
    }
}

TEST_CASE("word_of_index and its inverse")
{
    CHECK(word_of_index(Index{}) == WordPoly(W("1")));
    CHECK(word_of_index(K("2")) == WordPoly(W("101"), -1));
    CHECK(word_of_index(K("1,1")) == WordPoly(W("111")));
    CHECK(word_of_index(K("3,2")) == WordPoly(W("100101")));

    CHECK(index_of_word(W("1")).index == Index{});
    CHECK(index_of_word(W("1")).sign == 1);
    CHECK(index_of_word(W("101")).index == K("2"));
    CHECK(index_of_word(W("101")).sign == -1);
    CHECK(index_of_word(W("11001")).index == K("1,3"));
    CHECK(index_of_word(W("11001")).sign == 1);
    CHECK_THROWS_AS(index_of_word(W("10")), std::invalid_argument);
    CHECK_THROWS_AS(index_of_word(W("")), std::invalid_argument);

    for (const Index& k : indices_up_to(7)) {
        const WordPoly w = word_of_index(k);
        REQUIRE(w.size() == 1);
        const auto [word, c] = *w.begin();
        CHECK(word.weight() == k.weight());
        CHECK(word.in_h0());
        const SignedIndex back = index_of_word(word);
        CHECK(back.index == k);
        CHECK(Rational(back.sign) == c);
    }
}

TEST_CASE("h0 monomials form a basis indexed by compositions")
{
    for (int k = 0; k <= 8; ++k) {
        const auto words = h0_monomials(k);
        CHECK(words.size() == (k == 0 ? 1u : (1u << (k - 1))));
        CHECK(words.size() == compositions(k).size());
        for (Word w : words)
            CHECK(index_of_word(w).index.weight() == k);
    }
}

TEST_CASE("integral words")
{
    CHECK(integral_word(K("2")) == W("10"));
    CHECK(integral_word(K("1,3")) == W("1100"));
    CHECK(index_of_integral_word(W("1100")) == K("1,3"));
    CHECK(index_of_integral_word(W("1")) == K("1"));
    CHECK_THROWS_AS(index_of_integral_word(W("01")), std::invalid_argument);
}

namespace {

WordPoly witness_sum(const std::vector<std::pair<WordPoly, WordPoly>>& pairs)
{
    WordPoly s;
    for (const auto& [p, q] : pairs)
        s += shuffle(p, q);
    return s;
}

WordPoly witness_target(Word u, Word v, int a)
{
    const Word ea = Word::letter(a);
    return concat(shuffle(u, v), WordPoly(ea)) - concat(WordPoly(u.concat(ea)), epsilon(v));
}

}  // namespace

TEST_CASE("h sh h witness")
{
    CHECK(hh_witness(W("1"), W(""), 1).empty());
    // u = e1, v = e1, a = 1: the difference is 2 e1e1e1 + e1e1e1.
    CHECK(witness_sum(hh_witness(W("1"), W("1"), 1)) == WordPoly(W("111"), 3));
    // u = 1, v = e0, a = 1: e0e1 + e1e0 = e0 sh e1.
    CHECK(witness_sum(hh_witness(W(""), W("0"), 1)) == shuffle(W("0"), W("1")));

    for (int m = 0; m <= 3; ++m)
        for (int n = 0; n <= 3; ++n)
            for (Word u : words_of_length(m))
                for (Word v : words_of_length(n))
                    for (int a = 0; a <= 1; ++a) {
                        const auto pairs = hh_witness(u, v, a);
                        for (const auto& [p, q] : pairs) {
                            CHECK(p.in_h());
                            CHECK(q.in_h());
                        }
                        REQUIRE(witness_sum(pairs) == witness_target(u, v, a));
                    }
}
