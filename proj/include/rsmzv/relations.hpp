#ifndef RSMZV_RELATIONS_HPP
#define RSMZV_RELATIONS_HPP

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "rsmzv/word.hpp"

namespace rsmzv {

// d_0..d_K with d_0 = 1, d_k = d_{k-2} + d_{k-3} and d_k = 0 for k < 0.
std::vector<std::int64_t> d_sequence(int K);

// 2^{k-1} - d_k - d_{k-1}.
std::int64_t expected_rank(int k);

// dim h0_k: 1 for k = 0, 2^{k-1} for k >= 1.
std::uint64_t h0_dimension(int k);

// D(u, v, w) = u * (v sh w) - v sh (u * w). Throws std::invalid_argument
// unless u, v, w all lie in h0.
WordPoly d_generator(const WordPoly& u, const WordPoly& v, const WordPoly& w);

// A basis triple of h0 monomials (unsigned, so each is +-w(k) for some index k).
struct GeneratorTriple {
    Word u, v, w;
};

// Number of triples with weights a + b + c = k - 1: sum of c_a c_b c_c
// with c_0 = 1 and c_a = 2^{a-1}.
std::uint64_t generator_count(int k);

// Visits every triple of weight k in a fixed order (a, b, c lexicographic,
// then the monomials of each slot in h0_monomials order).
void for_each_generator(int k, const std::function<void(const GeneratorTriple&)>& f);
std::vector<GeneratorTriple> enumerate_generators(int k);

// Column of an h0 monomial of weight k >= 1: the k-1 letters between the two e1's.
std::uint32_t h0_column(Word w);
Word h0_word_of_column(std::uint32_t col, int k);

// Integer coordinates of D on the h0_k monomial basis, built with int64
// arithmetic and caches of the shuffle and harmonic products of monomials.
// Not thread-safe; use one builder per thread.
class RowBuilder {
public:
    explicit RowBuilder(int k);
    ~RowBuilder();
    RowBuilder(const RowBuilder&) = delete;
    RowBuilder& operator=(const RowBuilder&) = delete;

    int weight() const noexcept { return k_; }
    std::uint32_t columns() const noexcept { return ncols_; }

    // Overwrites dense (resized to columns()) with the coordinates of D(t).
    void build(const GeneratorTriple& t, std::vector<std::int64_t>& dense);

private:
    struct Caches;
    int k_;
    std::uint32_t ncols_;
    std::unique_ptr<Caches> caches_;
};

// Largest accepted modulus; Shoup multiplication needs p < 2^62.
inline constexpr std::uint64_t kMaxPrime = (std::uint64_t{1} << 62) - 1;

// Deterministic Miller-Rabin for 64-bit n.
bool is_prime_u64(std::uint64_t n);

// Reduced row echelon form over F_p with dense rows. Every stored row has a
// 1 in its pivot column and 0 in every other pivot column, so reducing an
// incoming row touches only the non-pivot columns. Pivot of a new row is its
// leftmost non-zero non-pivot column.
class EchelonModP {
public:
    // Throws std::invalid_argument unless p is prime and 2 < p <= kMaxPrime.
    EchelonModP(std::uint64_t p, std::uint32_t ncols);

    std::uint64_t prime() const noexcept { return p_; }
    std::uint32_t columns() const noexcept { return ncols_; }
    std::uint32_t rank() const noexcept { return static_cast<std::uint32_t>(rows_.size()); }

    // row holds residues in [0, p); it is reduced in place. Returns true if
    // it was independent of the stored rows (and is now stored).
    bool insert(std::vector<std::uint64_t>& row);
    // Membership in the span of the stored rows.
    bool contains(std::vector<std::uint64_t> row) const;

    // Residues of an integer row.
    std::vector<std::uint64_t> reduce_integers(const std::vector<std::int64_t>& row) const;

private:
    void eliminate(std::vector<std::uint64_t>& row) const;

    std::uint64_t p_;
    std::uint32_t ncols_;
    std::vector<std::int32_t> pivot_row_;  // per column, -1 if free
    std::vector<std::uint32_t> pivot_cols_;
    std::vector<std::uint32_t> free_cols_;  // sorted
    std::vector<std::vector<std::uint64_t>> rows_;
};

// Ranks over F_p of all D-generators of weight k, one per prime, from a
// single pass over the generators.
std::vector<std::uint64_t> rank_mod_primes(int k, const std::vector<std::uint64_t>& primes);
std::uint64_t rank_mod_p(int k, std::uint64_t prime);

// Default bound for rank_exact.
inline constexpr int kExactRankLimit = 8;

// Rank over Q by fraction-free elimination. Throws std::length_error for
// k > limit instead of falling back to modular arithmetic.
std::uint64_t rank_exact(int k, int limit = kExactRankLimit);

struct RankRow {
    int k = 0;
    std::uint64_t dim = 0;
    std::uint64_t generators = 0;
    std::vector<std::uint64_t> primes;
    std::vector<std::uint64_t> ranks;  // one per prime
    std::optional<std::uint64_t> exact_rank;
    std::uint64_t rank = 0;  // agreed modular rank (max over primes if they differ)
    std::int64_t expected = 0;
    bool primes_agree = false;
    bool match = false;
    bool asserted = false;  // k <= kAssertedRankLimit
    double elapsed_ms = 0;
    std::vector<std::string> warnings;
};

// Weights up to which the rank formula is asserted rather than reported.
inline constexpr int kAssertedRankLimit = 14;

// Extra prime used when the given primes disagree.
inline constexpr std::uint64_t kFallbackPrime = 4611686018427387787ull;  // 2^62 - 117

// One row per k = 1..K. Computes rank_exact for k <= exact_upto. A prime
// below 2^60 adds a warning. match means: all modular ranks agree (after the
// fallback prime if needed), equal the exact rank when present, and equal
// expected_rank(k).
RankRow conjecture_row(int k, const std::vector<std::uint64_t>& primes, int exact_upto);
std::vector<RankRow> conjecture_table(int K, const std::vector<std::uint64_t>& primes, int exact_upto,
                                      const std::function<void(const RankRow&)>& on_row = {});

// Columns: k,dim,generators,rank,expected,match,elapsed_ms,primes
std::string rank_table_csv(const std::vector<RankRow>& rows);

}  // namespace rsmzv

#endif
