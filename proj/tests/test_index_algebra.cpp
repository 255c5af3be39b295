#include <doctest.h>

#include <algorithm>
#include <map>
#include <stdexcept>

#include "rsmzv/index_algebra.hpp"
#include "support.hpp"

using namespace rsmzv;
using rsmzv::test::K;
using rsmzv::test::W;

namespace {

// Quasi-shuffle as a sum over pairs of increasing maps f: [a] -> [n],
// g: [b] -> [n] whose images cover [n].
IndexPoly stuffle_by_surjections(const Index& k, const Index& l)
{
    const int a = k.depth(), b = l.depth();
    IndexPoly out;
    for (int n = std::max(a, b); n <= a + b; ++n) {
        for (std::uint32_t fm = 0; fm < (1u << n); ++fm) {
            if (__builtin_popcount(fm) != a)
                continue;
            for (std::uint32_t gm = 0; gm < (1u << n); ++gm) {
                if (__builtin_popcount(gm) != b || (fm | gm) != (1u << n) - 1)
                    continue;
                std::vector<int> parts(static_cast<std::size_t>(n), 0);
                int i = 0, j = 0;
                for (int p = 0; p < n; ++p) {
                    if ((fm >> p) & 1u)
                        parts[static_cast<std::size_t>(p)] += k[i++];
                    if ((gm >> p) & 1u)
                        parts[static_cast<std::size_t>(p)] += l[j++];
                }
                out.add(Index(parts), 1);
            }
        }
    }
    return out;
}

// The signed recursion for * on h0 written directly on words:
//   e1 * u = u * e1 = u,
//   w(k) * w(l) = -e1 e0^{k1-1}(w(k') * w(l)) - e1 e0^{l1-1}(w(k) * w(l'))
//                 - e1 e0^{k1+l1-1}(w(k') * w(l')).
WordPoly harmonic_oracle(const Index& k, const Index& l)
{
    if (k.empty())
        return word_of_index(l);
    if (l.empty())
        return word_of_index(k);
    auto head = [](int n) { return WordPoly(W("1").concat(Word::repeat(0, n - 1))); };
    const Index kt = k.slice(1, k.depth());
    const Index lt = l.slice(1, l.depth());
    return -(concat(head(k[0]), harmonic_oracle(kt, l)) + concat(head(l[0]), harmonic_oracle(k, lt))
             + concat(head(k[0] + l[0]), harmonic_oracle(kt, lt)));
}

}  // namespace

TEST_CASE("stuffle examples")
{
    CHECK(stuffle(Index{}, K("3,2")) == IndexPoly(K("3,2")));
    IndexPoly one_one;
    one_one.add(K("1,1"), 2);
    one_one.add(K("2"), 1);
    CHECK(stuffle(K("1"), K("1")) == one_one);
    for (int a = 1; a <= 4; ++a)
        for (int b = 1; b <= 4; ++b) {
            IndexPoly expect;
            expect.add(Index{a, b}, 1);
            expect.add(Index{b, a}, 1);
            expect.add(Index{a + b}, 1);
            CHECK(stuffle(Index{a}, Index{b}) == expect);
        }
}

TEST_CASE("stuffle agrees with the surjection oracle")
{
    const auto all = indices_up_to(5);
    for (const Index& k : all)
        for (const Index& l : all)
            if (k.weight() + l.weight() <= 7)
                REQUIRE(stuffle(k, l) == stuffle_by_surjections(k, l));
}

TEST_CASE("stuffle is commutative, associative and weight-graded")
{
    const auto all = indices_up_to(4);
    for (const Index& k : all)
        for (const Index& l : all) {
            const IndexPoly p = stuffle(k, l);
            CHECK(p == stuffle(l, k));
            for (const auto& [m, c] : p)
                CHECK(m.weight() == k.weight() + l.weight());
        }
    for (const Index& a : indices_up_to(3))
        for (const Index& b : indices_up_to(2))
            for (const Index& c : indices_up_to(2))
                CHECK(stuffle(stuffle(a, b), IndexPoly(c)) == stuffle(IndexPoly(a), stuffle(b, c)));
}

TEST_CASE("harmonic product on h0")
{
    CHECK(harmonic_word(W("1"), W("101")) == WordPoly(W("101")));
    CHECK(harmonic_word(W("101"), W("1")) == WordPoly(W("101")));
    CHECK(harmonic_word(word_of_index(K("1")), word_of_index(K("1")))
          == Rational(2) * word_of_index(K("1,1")) + word_of_index(K("2")));
    CHECK(harmonic_word(word_of_index(K("2")), word_of_index(K("3")))
          == word_of_index(K("2,3")) + word_of_index(K("3,2")) + word_of_index(K("5")));
    CHECK_THROWS_AS(harmonic_word(W("10"), W("1")), std::invalid_argument);
}

TEST_CASE("harmonic product agrees with the signed word recursion")
{
    const auto all = indices_up_to(4);
    for (const Index& k : all)
        for (const Index& l : all)
            REQUIRE(harmonic_word(word_of_index(k), word_of_index(l)) == harmonic_oracle(k, l));
}

TEST_CASE("index basis transport")
{
    const WordPoly u = Rational(3) * word_of_index(K("2,1")) - word_of_index(K("1"));
    const IndexPoly k = to_index_basis(u);
    CHECK(k.coeff(K("2,1")) == 3);
    CHECK(k.coeff(K("1")) == -1);
    CHECK(from_index_basis(k) == u);
    CHECK_THROWS_AS(to_index_basis(WordPoly(W("0"))), std::invalid_argument);
}

TEST_CASE("coproduct")
{
    CHECK(coproduct(Index{}) == std::vector<std::pair<Index, Index>>{{Index{}, Index{}}});
    CHECK(coproduct(K("3")) == std::vector<std::pair<Index, Index>>{{Index{}, K("3")}, {K("3"), Index{}}});
    CHECK(coproduct(K("1,2"))
          == std::vector<std::pair<Index, Index>>{{Index{}, K("1,2")}, {K("1"), K("2")}, {K("1,2"), Index{}}});
}

TEST_CASE("coproduct is an algebra map for the harmonic product")
{
    // Delta(k * l) = Delta(k) * Delta(l) in I (x) I.
    using Tensor = std::map<std::pair<Index, Index>, Rational>;
    auto delta = [](const IndexPoly& p) {
        Tensor t;
        for (const auto& [k, c] : p)
            for (const auto& [a, b] : coproduct(k))
                t[{a, b}] += c;
        return t;
    };
    auto clean = [](Tensor t) {
        std::erase_if(t, [](const auto& kv) { return kv.second == 0; });
        return t;
    };
    for (const Index& k : indices_up_to(3))
        for (const Index& l : indices_up_to(3)) {
            Tensor rhs;
            for (const auto& [a1, b1] : coproduct(k))
                for (const auto& [a2, b2] : coproduct(l))
                    for (const auto& [x, cx] : stuffle(a1, a2))
                        for (const auto& [y, cy] : stuffle(b1, b2))
                            rhs[{x, y}] += cx * cy;
            CHECK(clean(delta(stuffle(k, l))) == clean(rhs));
        }
}
