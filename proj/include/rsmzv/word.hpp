#ifndef RSMZV_WORD_HPP
#define RSMZV_WORD_HPP

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rsmzv/index.hpp"
#include "rsmzv/rational.hpp"

namespace rsmzv {

// A word in the letters e0, e1, written as a '0'/'1' string with the leftmost
// letter first. Letters are packed into an integer so that, for words of equal
// length, numeric order of the packed bits is lexicographic order.
class Word {
public:
    static constexpr int kMaxLength = 63;

    constexpr Word() = default;
    // Throws std::invalid_argument on characters other than '0'/'1' or overlong input.
    static Word parse(std::string_view letters);
    static Word from_bits(std::uint64_t bits, int length);
    static Word letter(int a);
    static Word repeat(int a, int count);

    int length() const noexcept { return length_; }
    // Grading: words of length n + 1 span h_n.
    int weight() const noexcept { return length_ - 1; }
    bool empty() const noexcept { return length_ == 0; }
    std::uint64_t bits() const noexcept { return bits_; }

    int operator[](int i) const noexcept { return static_cast<int>((bits_ >> (length_ - 1 - i)) & 1u); }
    int front() const noexcept { return (*this)[0]; }
    int back() const noexcept { return (*this)[length_ - 1]; }

    Word prefix(int n) const;
    Word suffix_from(int start) const;
    Word reversed() const;
    Word concat(Word other) const;
    // Inserts letter a so that it becomes position pos (0 <= pos <= length).
    Word insert(int pos, int a) const;

    // Non-empty.
    bool in_h() const noexcept { return length_ >= 1; }
    // e1, or starts and ends with e1.
    bool in_h0() const noexcept { return length_ >= 1 && front() == 1 && back() == 1; }
    // Starts with e1 and ends with e0: a convergent iterated integral from 0 to 1.
    bool admissible() const noexcept { return length_ >= 2 && front() == 1 && back() == 0; }

    std::string str() const;

    friend constexpr bool operator==(Word, Word) = default;
    friend constexpr std::strong_ordering operator<=>(Word a, Word b)
    {
        if (auto c = a.length_ <=> b.length_; c != 0)
            return c;
        return a.bits_ <=> b.bits_;
    }

private:
    std::uint64_t bits_ = 0;
    int length_ = 0;
};

// Finite Q-linear combination of words. No stored coefficient is zero, so
// equality is map equality.
class WordPoly {
public:
    using Terms = std::map<Word, Rational>;

    WordPoly() = default;
    WordPoly(Word w, Rational c = 1);  // NOLINT(google-explicit-constructor)

    static WordPoly constant(const Rational& c) { return WordPoly(Word{}, c); }

    const Terms& terms() const noexcept { return terms_; }
    auto begin() const { return terms_.begin(); }
    auto end() const { return terms_.end(); }
    std::size_t size() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }
    Rational coeff(Word w) const;

    void add(Word w, const Rational& c);

    // Every monomial has length >= 1.
    bool in_h() const;
    // Every monomial starts and ends with e1.
    bool in_h0() const;

    WordPoly& operator+=(const WordPoly& o);
    WordPoly& operator-=(const WordPoly& o);
    WordPoly& operator*=(const Rational& c);
    friend WordPoly operator+(WordPoly a, const WordPoly& b) { return a += b; }
    friend WordPoly operator-(WordPoly a, const WordPoly& b) { return a -= b; }
    friend WordPoly operator*(const Rational& c, WordPoly a) { return a *= c; }
    friend WordPoly operator-(WordPoly a) { return a *= Rational(-1); }
    friend bool operator==(const WordPoly&, const WordPoly&) = default;

    std::string str() const;

private:
    Terms terms_;
};

// Visits every interleaving of u and v once (with multiplicity), i.e. the
// C(|u|+|v|, |u|) terms of the shuffle product before collection.
template <typename F>
void for_each_shuffle(Word u, Word v, F&& f)
{
    const int m = u.length(), n = v.length();
    struct Rec {
        Word u, v;
        int m, n;
        F& f;
        void operator()(int i, int j, std::uint64_t acc)
        {
            if (i == m && j == n) {
                f(Word::from_bits(acc, m + n));
                return;
            }
            if (i < m)
                (*this)(i + 1, j, (acc << 1) | static_cast<std::uint64_t>(u[i]));
            if (j < n)
                (*this)(i, j + 1, (acc << 1) | static_cast<std::uint64_t>(v[j]));
        }
    };
    Rec{u, v, m, n, f}(0, 0, 0);
}

WordPoly shuffle(Word u, Word v);
WordPoly shuffle(const WordPoly& u, const WordPoly& v);
WordPoly concat(const WordPoly& u, const WordPoly& v);

// Automorphism with e0 -> e0 - e1, e1 -> -e1.
WordPoly phi(const WordPoly& u);
// Anti-automorphism with e0 -> -e0, e1 -> -e1 (reverse and multiply by (-1)^length).
// The same map appears as epsilon on the generating-series side.
WordPoly tau(const WordPoly& u);
inline WordPoly epsilon(const WordPoly& u) { return tau(u); }

// w(k_1..k_d) = (-1)^d e1 e0^{k_1-1} e1 ... e1 e0^{k_d-1} e1, and w() = e1.
WordPoly word_of_index(const Index& k);
// The unsigned monomial e1 e0^{k_1-1} ... e1 e0^{k_d-1} e1.
Word h0_word(const Index& k);
// e1 e0^{k_1-1} ... e1 e0^{k_d-1}: the iterated-integral word of zeta(k).
Word integral_word(const Index& k);

struct SignedIndex {
    Index index;
    int sign = 1;  // monomial == sign * w(index)
};
// Inverts word_of_index on h0 monomials. Throws std::invalid_argument otherwise.
SignedIndex index_of_word(Word w);
// Index read off a word starting with e1: e1 e0^{k_1-1} e1 e0^{k_2-1} ...
// (trailing letters e0 belong to the last block). Throws if w does not start with e1.
Index index_of_integral_word(Word w);

// Pairs (p_i, q_i) in h x h with sum_i p_i sh q_i == (u sh v) e_a - u e_a epsilon(v).
std::vector<std::pair<WordPoly, WordPoly>> hh_witness(Word u, Word v, int a);

std::vector<Word> words_of_length(int n);
// Monomial basis of h0 in grading k: e1 for k = 0, else e1 {0,1}^{k-1} e1.
std::vector<Word> h0_monomials(int k);

}  // namespace rsmzv

#endif
