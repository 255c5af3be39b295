#ifndef RSMZV_ZSYMBOL_HPP
#define RSMZV_ZSYMBOL_HPP

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "rsmzv/index.hpp"
#include "rsmzv/rational.hpp"

namespace rsmzv {

// (2 pi i)^twopii * prod zeta(zetas[j]). Every factor is an admissible
// non-empty index; factors are kept sorted (weight, then lexicographic) so
// that multiset equality is vector equality.
struct ZetaMonomial {
    int twopii = 0;
    std::vector<Index> zetas;

    // 2 pi i counts as weight 1.
    int weight() const;
    friend bool operator==(const ZetaMonomial&, const ZetaMonomial&) = default;
    friend std::strong_ordering operator<=>(const ZetaMonomial&, const ZetaMonomial&) = default;
};

// An element of Z[2 pi i] written in the free commutative ring on 2 pi i and
// the symbols zeta(k), k admissible. No MZV relation is applied here; see
// shuffle_reduce / stuffle_reduce for the two product linearizations.
class ZSymbol {
public:
    using Terms = std::map<ZetaMonomial, Rational>;

    ZSymbol() = default;
    ZSymbol(const Rational& c);  // NOLINT(google-explicit-constructor)
    ZSymbol(int c) : ZSymbol(Rational(c)) {}  // NOLINT(google-explicit-constructor)

    // Throws std::invalid_argument for empty or non-admissible k.
    static ZSymbol zeta(const Index& k);
    static ZSymbol twopii(int power = 1);
    static ZSymbol monomial(ZetaMonomial m, const Rational& c = 1);

    const Terms& terms() const noexcept { return terms_; }
    auto begin() const { return terms_.begin(); }
    auto end() const { return terms_.end(); }
    std::size_t size() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }

    void add(const ZetaMonomial& m, const Rational& c);

    // Sum of the monomials with the given power of 2 pi i, with that power removed.
    ZSymbol twopii_part(int power) const;
    int max_twopii() const;
    // Exact division by 2 pi i. Throws std::logic_error if any monomial has no
    // factor of 2 pi i.
    ZSymbol divide_by_twopii() const;

    // True if every monomial has the given weight (the zero symbol is homogeneous).
    bool homogeneous(int weight) const;

    ZSymbol& operator+=(const ZSymbol& o);
    ZSymbol& operator-=(const ZSymbol& o);
    ZSymbol& operator*=(const ZSymbol& o);
    ZSymbol& operator*=(const Rational& c);
    friend ZSymbol operator+(ZSymbol a, const ZSymbol& b) { return a += b; }
    friend ZSymbol operator-(ZSymbol a, const ZSymbol& b) { return a -= b; }
    friend ZSymbol operator*(const ZSymbol& a, const ZSymbol& b);
    friend ZSymbol operator*(const Rational& c, ZSymbol a) { return a *= c; }
    friend ZSymbol operator-(ZSymbol a) { return a *= Rational(-1); }
    friend bool operator==(const ZSymbol&, const ZSymbol&) = default;

    std::string str() const;

private:
    Terms terms_;
};

ZSymbol pow(const ZSymbol& s, int n);

// Complex conjugation: 2 pi i -> -2 pi i, zeta factors are real.
ZSymbol conj(const ZSymbol& s);

// q * pi * i, stored as (q/2) (2 pi i).
ZSymbol pi_multiple(const Rational& q);

// Linearizes every product of zeta symbols with the shuffle product of their
// iterated-integral words, zeta(k) zeta(l) = sum_x c_x zeta(x). The image has
// at most one zeta factor per monomial. Ring homomorphism; identity on
// linear symbols.
ZSymbol shuffle_reduce(const ZSymbol& s);

// Same with the harmonic (stuffle) product of indices.
ZSymbol stuffle_reduce(const ZSymbol& s);

}  // namespace rsmzv

#endif
