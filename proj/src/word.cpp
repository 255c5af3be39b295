#include "rsmzv/word.hpp"

#include <stdexcept>
#include <unordered_map>

namespace rsmzv {

namespace {

std::uint64_t low_mask(int n)
{
    return n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
}

void check_length(int n)
{
    if (n > Word::kMaxLength)
        throw std::length_error("word longer than " + std::to_string(Word::kMaxLength) + " letters");
}

}  // namespace

Word Word::parse(std::string_view letters)
{
    check_length(static_cast<int>(letters.size()));
    Word w;
    for (char ch : letters) {
        if (ch != '0' && ch != '1')
            throw std::invalid_argument("malformed word '" + std::string(letters) +
                                        "': expected a string over {0,1}, e.g. \"10101\"");
        w.bits_ = (w.bits_ << 1) | static_cast<std::uint64_t>(ch - '0');
        ++w.length_;
    }
    return w;
}

Word Word::from_bits(std::uint64_t bits, int length)
{
    check_length(length);
    Word w;
    w.bits_ = bits & low_mask(length);
    w.length_ = length;
    return w;
}

Word Word::letter(int a)
{
    return from_bits(static_cast<std::uint64_t>(a & 1), 1);
}

Word Word::repeat(int a, int count)
{
    return from_bits(a ? low_mask(count) : 0, count);
}

Word Word::prefix(int n) const
{
    return from_bits(bits_ >> (length_ - n), n);
}

Word Word::suffix_from(int start) const
{
    return from_bits(bits_, length_ - start);
}

Word Word::reversed() const
{
    std::uint64_t r = 0;
    for (int i = 0; i < length_; ++i)
        r |= static_cast<std::uint64_t>((*this)[i]) << i;
    return from_bits(r, length_);
}

Word Word::concat(Word other) const
{
    check_length(length_ + other.length_);
    Word w;
    w.bits_ = other.length_ == 0 ? bits_ : ((bits_ << other.length_) | other.bits_);
    w.length_ = length_ + other.length_;
    return w;
}

Word Word::insert(int pos, int a) const
{
    return prefix(pos).concat(letter(a)).concat(suffix_from(pos));
}

std::string Word::str() const
{
    std::string s;
    s.reserve(static_cast<std::size_t>(length_));
    for (int i = 0; i < length_; ++i)
        s += static_cast<char>('0' + (*this)[i]);
    return s;
}

WordPoly::WordPoly(Word w, Rational c)
{
    add(w, c);
}

Rational WordPoly::coeff(Word w) const
{
    auto it = terms_.find(w);
    return it == terms_.end() ? Rational(0) : it->second;
}

void WordPoly::add(Word w, const Rational& c)
{
    if (c == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

bool WordPoly::in_h() const
{
    for (const auto& [w, c] : terms_)
        if (!w.in_h())
            return false;
    return true;
}

bool WordPoly::in_h0() const
{
    for (const auto& [w, c] : terms_)
        if (!w.in_h0())
            return false;
    return true;
}

WordPoly& WordPoly::operator+=(const WordPoly& o)
{
    for (const auto& [w, c] : o.terms_)
        add(w, c);
    return *this;
}

WordPoly& WordPoly::operator-=(const WordPoly& o)
{
    for (const auto& [w, c] : o.terms_)
        add(w, -c);
    return *this;
}

WordPoly& WordPoly::operator*=(const Rational& c)
{
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [w, x] : terms_)
        x *= c;
    return *this;
}

std::string WordPoly::str() const
{
    if (terms_.empty())
        return "0";
    std::string s;
    for (const auto& [w, c] : terms_) {
        if (!s.empty())
            s += " + ";
        s += "(" + to_string(c) + ")*[" + w.str() + "]";
    }
    return s;
}

WordPoly shuffle(Word u, Word v)
{
    std::unordered_map<std::uint64_t, long> counts;
    for_each_shuffle(u, v, [&](Word w) { ++counts[w.bits()]; });
    WordPoly r;
    const int n = u.length() + v.length();
    for (const auto& [bits, c] : counts)
        r.add(Word::from_bits(bits, n), Rational(c));
    return r;
}

WordPoly shuffle(const WordPoly& u, const WordPoly& v)
{
    WordPoly r;
    for (const auto& [a, ca] : u)
        for (const auto& [b, cb] : v) {
            Rational c = ca * cb;
            for (const auto& [w, k] : shuffle(a, b))
                r.add(w, c * k);
        }
    return r;
}

WordPoly concat(const WordPoly& u, const WordPoly& v)
{
    WordPoly r;
    for (const auto& [a, ca] : u)
        for (const auto& [b, cb] : v)
            r.add(a.concat(b), ca * cb);
    return r;
}

WordPoly phi(const WordPoly& u)
{
    // Expand letter by letter: e0 -> e0 - e1, e1 -> -e1.
    WordPoly r;
    for (const auto& [w, c] : u) {
        std::map<Word, Rational> acc{{Word{}, c}};
        for (int i = 0; i < w.length(); ++i) {
            std::map<Word, Rational> next;
            for (const auto& [p, x] : acc) {
                if (w[i] == 0) {
                    next[p.concat(Word::letter(0))] += x;
                    next[p.concat(Word::letter(1))] -= x;
                } else {
                    next[p.concat(Word::letter(1))] -= x;
                }
            }
            acc = std::move(next);
        }
        for (const auto& [p, x] : acc)
            r.add(p, x);
    }
    return r;
}

WordPoly tau(const WordPoly& u)
{
    WordPoly r;
    for (const auto& [w, c] : u)
        r.add(w.reversed(), w.length() % 2 ? Rational(-c) : c);
    return r;
}

Word h0_word(const Index& k)
{
    Word w;
    for (int part : k.parts())
        w = w.concat(Word::letter(1)).concat(Word::repeat(0, part - 1));
    return w.concat(Word::letter(1));
}

Word integral_word(const Index& k)
{
    Word w;
    for (int part : k.parts())
        w = w.concat(Word::letter(1)).concat(Word::repeat(0, part - 1));
    return w;
}

WordPoly word_of_index(const Index& k)
{
    return WordPoly(h0_word(k), k.depth() % 2 ? Rational(-1) : Rational(1));
}

Index index_of_integral_word(Word w)
{
    if (w.empty())
        return Index{};
    if (w.front() != 1)
        throw std::invalid_argument("word '" + w.str() + "' does not start with e1");
    std::vector<int> parts;
    for (int i = 0; i < w.length(); ++i) {
        if (w[i] == 1)
            parts.push_back(1);
        else
            ++parts.back();
    }
    return Index(std::move(parts));
}

SignedIndex index_of_word(Word w)
{
    if (!w.in_h0())
        throw std::invalid_argument("word '" + w.str() + "' is not an h0 monomial (must start and end with 1)");
    Index k = index_of_integral_word(w.prefix(w.length() - 1));
    int sign = k.depth() % 2 ? -1 : 1;
    return {std::move(k), sign};
}

std::vector<std::pair<WordPoly, WordPoly>> hh_witness(Word u, Word v, int a)
{
    // (u sh v) e_a - u e_a eps(v) = - sum_{i=1}^{n} (u sh v_{i+1..n}) e_a sh eps(v_{1..i}).
    std::vector<std::pair<WordPoly, WordPoly>> pairs;
    const int n = v.length();
    for (int i = 1; i <= n; ++i) {
        WordPoly left = concat(shuffle(u, v.suffix_from(i)), WordPoly(Word::letter(a)));
        left *= Rational(-1);
        pairs.emplace_back(std::move(left), epsilon(WordPoly(v.prefix(i))));
    }
    return pairs;
}

std::vector<Word> words_of_length(int n)
{
    check_length(n);
    std::vector<Word> out;
    out.reserve(std::size_t{1} << n);
    for (std::uint64_t b = 0; b < (std::uint64_t{1} << n); ++b)
        out.push_back(Word::from_bits(b, n));
    return out;
}

std::vector<Word> h0_monomials(int k)
{
    if (k < 0)
        return {};
    if (k == 0)
        return {Word::letter(1)};
    std::vector<Word> out;
    for (Word mid : words_of_length(k - 1))
        out.push_back(Word::letter(1).concat(mid).concat(Word::letter(1)));
    return out;
}

}  // namespace rsmzv
