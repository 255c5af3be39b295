#ifndef RSMZV_INDEX_ALGEBRA_HPP
#define RSMZV_INDEX_ALGEBRA_HPP

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "rsmzv/index.hpp"
#include "rsmzv/rational.hpp"
#include "rsmzv/word.hpp"

namespace rsmzv {

// Finite Q-linear combination of indices; canonical (no zero coefficient).
class IndexPoly {
public:
    using Terms = std::map<Index, Rational>;

    IndexPoly() = default;
    IndexPoly(Index k, Rational c = 1);  // NOLINT(google-explicit-constructor)

    const Terms& terms() const noexcept { return terms_; }
    auto begin() const { return terms_.begin(); }
    auto end() const { return terms_.end(); }
    std::size_t size() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }
    Rational coeff(const Index& k) const;

    void add(const Index& k, const Rational& c);

    IndexPoly& operator+=(const IndexPoly& o);
    IndexPoly& operator-=(const IndexPoly& o);
    IndexPoly& operator*=(const Rational& c);
    friend IndexPoly operator+(IndexPoly a, const IndexPoly& b) { return a += b; }
    friend IndexPoly operator-(IndexPoly a, const IndexPoly& b) { return a -= b; }
    friend IndexPoly operator*(const Rational& c, IndexPoly a) { return a *= c; }
    friend bool operator==(const IndexPoly&, const IndexPoly&) = default;

    std::string str() const;

private:
    Terms terms_;
};

// Quasi-shuffle of two compositions with integer multiplicities:
//   (k1,K)*(l1,L) = (k1, K*(l1,L)) + (l1, (k1,K)*L) + (k1+l1, K*L).
std::map<std::vector<int>, std::int64_t> stuffle_counts(std::span<const int> k, std::span<const int> l);

IndexPoly stuffle(const Index& k, const Index& l);
IndexPoly stuffle(const IndexPoly& k, const IndexPoly& l);

// Harmonic product on h0, computed by transport through the index basis:
// w(k) * w(l) = sum_m c_m w(m) where k * l = sum_m c_m m.
// Throws std::invalid_argument if an input has a monomial outside h0.
WordPoly harmonic_word(const WordPoly& u, const WordPoly& v);

// Expresses u in the signed basis w(k). Throws unless u is in h0.
IndexPoly to_index_basis(const WordPoly& u);
WordPoly from_index_basis(const IndexPoly& k);

// Deconcatenation coproduct: the d+1 splits (k_1..k_i) (x) (k_{i+1}..k_d), i = 0..d.
std::vector<std::pair<Index, Index>> coproduct(const Index& k);

}  // namespace rsmzv

#endif
