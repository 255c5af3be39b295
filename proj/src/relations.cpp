#include "rsmzv/relations.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "rsmzv/index_algebra.hpp"

namespace rsmzv {

std::vector<std::int64_t> d_sequence(int K)
{
    if (K < 0)
        throw std::invalid_argument("d_sequence needs K >= 0");
    std::vector<std::int64_t> d(static_cast<std::size_t>(K + 1), 0);
    auto at = [&](int i) -> std::int64_t { return i < 0 ? 0 : d[static_cast<std::size_t>(i)]; };
    d[0] = 1;
    for (int k = 1; k <= K; ++k)
        d[static_cast<std::size_t>(k)] = at(k - 2) + at(k - 3);
    return d;
}

std::int64_t expected_rank(int k)
{
    if (k < 1)
        throw std::invalid_argument("expected_rank needs k >= 1");
    const auto d = d_sequence(k);
    return (std::int64_t{1} << (k - 1)) - d[static_cast<std::size_t>(k)] - d[static_cast<std::size_t>(k - 1)];
}

std::uint64_t h0_dimension(int k)
{
    if (k < 0)
        throw std::invalid_argument("h0_dimension needs k >= 0");
    return k == 0 ? 1 : std::uint64_t{1} << (k - 1);
}

WordPoly d_generator(const WordPoly& u, const WordPoly& v, const WordPoly& w)
{
    if (!u.in_h0() || !v.in_h0() || !w.in_h0())
        throw std::invalid_argument("D(u, v, w) needs u, v, w in h0 (words starting and ending with e1)");
    return harmonic_word(u, shuffle(v, w)) - shuffle(v, harmonic_word(u, w));
}

std::uint64_t generator_count(int k)
{
    if (k < 1)
        throw std::invalid_argument("generator_count needs k >= 1");
    std::uint64_t total = 0;
    for (int a = 0; a <= k - 1; ++a)
        for (int b = 0; a + b <= k - 1; ++b) {
            const int c = k - 1 - a - b;
            total += h0_dimension(a) * h0_dimension(b) * h0_dimension(c);
        }
    return total;
}

void for_each_generator(int k, const std::function<void(const GeneratorTriple&)>& f)
{
    if (k < 1)
        throw std::invalid_argument("generators need weight k >= 1");
    std::vector<std::vector<Word>> basis;
    for (int a = 0; a < k; ++a)
        basis.push_back(h0_monomials(a));
    for (int a = 0; a <= k - 1; ++a)
        for (int b = 0; a + b <= k - 1; ++b) {
            const int c = k - 1 - a - b;
            for (Word u : basis[static_cast<std::size_t>(a)])
                for (Word v : basis[static_cast<std::size_t>(b)])
                    for (Word w : basis[static_cast<std::size_t>(c)])
                        f(GeneratorTriple{u, v, w});
        }
}

std::vector<GeneratorTriple> enumerate_generators(int k)
{
    std::vector<GeneratorTriple> out;
    out.reserve(generator_count(k));
    for_each_generator(k, [&](const GeneratorTriple& t) { out.push_back(t); });
    return out;
}

std::uint32_t h0_column(Word w)
{
    const int k = w.weight();
    if (k < 1 || !w.in_h0())
        throw std::invalid_argument("h0_column needs an h0 monomial of weight >= 1");
    return static_cast<std::uint32_t>((w.bits() >> 1) & ((std::uint64_t{1} << (k - 1)) - 1));
}

Word h0_word_of_column(std::uint32_t col, int k)
{
    if (k < 1 || col >= (std::uint64_t{1} << (k - 1)))
        throw std::invalid_argument("column out of range");
    return Word::from_bits((std::uint64_t{1} << k) | (std::uint64_t{col} << 1) | 1u, k + 1);
}

namespace {

std::vector<int> parts_of_h0(Word w)
{
    std::vector<int> parts;
    int part = 1;
    for (int i = 1; i < w.length(); ++i) {
        if (w[i] == 0) {
            ++part;
        } else {
            parts.push_back(part);
            part = 1;
        }
    }
    return parts;
}

Word h0_of_parts(const std::vector<int>& parts)
{
    std::uint64_t bits = 1;
    int len = 1;
    for (int p : parts) {
        bits = (bits << p) | 1u;
        len += p;
    }
    return Word::from_bits(bits, len);
}

struct PairKey {
    std::uint64_t a, b;
    int la, lb;
    friend bool operator==(const PairKey&, const PairKey&) = default;
};

struct PairKeyHash {
    std::size_t operator()(const PairKey& k) const noexcept
    {
        std::uint64_t h = k.a * 0x9E3779B97F4A7C15ull;
        h ^= k.b + 0x632BE59BD9B4E019ull + (static_cast<std::uint64_t>(k.la) << 40) + (static_cast<std::uint64_t>(k.lb) << 48);
        h ^= h >> 29;
        h *= 0xBF58476D1CE4E5B9ull;
        return static_cast<std::size_t>(h ^ (h >> 32));
    }
};

PairKey key_of(Word x, Word y)
{
    return PairKey{x.bits(), y.bits(), x.length(), y.length()};
}

}  // namespace

struct RowBuilder::Caches {
    using Terms = std::vector<std::pair<Word, std::int64_t>>;
    using ColTerms = std::vector<std::pair<std::uint32_t, std::int32_t>>;

    std::unordered_map<PairKey, Terms, PairKeyHash> harmonic;
    std::unordered_map<PairKey, Terms, PairKeyHash> shuffle_words;
    std::unordered_map<PairKey, ColTerms, PairKeyHash> shuffle_cols;
    std::size_t shuffle_col_entries = 0;
    std::vector<std::int64_t> scratch;
    std::vector<std::uint32_t> touched;

    // Bound on cached shuffle entries (8 bytes each) before the cache is dropped.
    static constexpr std::size_t kShuffleBudget = std::size_t{1} << 25;

    const Terms& harmonic_of(Word u, Word x)
    {
        auto [it, fresh] = harmonic.try_emplace(key_of(u, x));
        if (fresh) {
            // h0(U) * h0(X) = (-1)^{d_U + d_X} sum_m c_m (-1)^{d_m} h0(m).
            const auto pu = parts_of_h0(u);
            const auto px = parts_of_h0(x);
            const int base = static_cast<int>(pu.size() + px.size());
            for (const auto& [m, c] : stuffle_counts(pu, px)) {
                const int sign = (base + static_cast<int>(m.size())) % 2 ? -1 : 1;
                it->second.emplace_back(h0_of_parts(m), sign * c);
            }
        }
        return it->second;
    }

    // Counts of v sh y by column of the result (weight = |v| + |y| - 1 >= 1).
    void collect(Word v, Word y)
    {
        const int weight = v.length() + y.length() - 1;
        const std::uint64_t mask = (std::uint64_t{1} << (weight - 1)) - 1;
        const std::size_t ncols = std::size_t{1} << (weight - 1);
        if (scratch.size() < ncols)
            scratch.resize(ncols, 0);
        touched.clear();
        for_each_shuffle(v, y, [&](Word s) {
            const auto col = static_cast<std::uint32_t>((s.bits() >> 1) & mask);
            if (scratch[col]++ == 0)
                touched.push_back(col);
        });
        std::sort(touched.begin(), touched.end());
    }

    const Terms& shuffle_words_of(Word v, Word w)
    {
        auto [it, fresh] = shuffle_words.try_emplace(key_of(v, w));
        if (fresh) {
            const int weight = v.length() + w.length() - 1;
            collect(v, w);
            for (std::uint32_t col : touched) {
                it->second.emplace_back(h0_word_of_column(col, weight), scratch[col]);
                scratch[col] = 0;
            }
        }
        return it->second;
    }

    const ColTerms& shuffle_cols_of(Word v, Word y)
    {
        const PairKey key = key_of(v, y);
        if (auto it = shuffle_cols.find(key); it != shuffle_cols.end())
            return it->second;
        if (shuffle_col_entries > kShuffleBudget) {
            shuffle_cols.clear();
            shuffle_col_entries = 0;
        }
        collect(v, y);
        ColTerms terms;
        terms.reserve(touched.size());
        for (std::uint32_t col : touched) {
            terms.emplace_back(col, static_cast<std::int32_t>(scratch[col]));
            scratch[col] = 0;
        }
        shuffle_col_entries += terms.size();
        return shuffle_cols.emplace(key, std::move(terms)).first->second;
    }
};

RowBuilder::RowBuilder(int k) : k_(k), caches_(std::make_unique<Caches>())
{
    if (k < 1 || k > 30)
        throw std::invalid_argument("RowBuilder needs 1 <= k <= 30");
    ncols_ = static_cast<std::uint32_t>(h0_dimension(k));
}

RowBuilder::~RowBuilder() = default;

void RowBuilder::build(const GeneratorTriple& t, std::vector<std::int64_t>& dense)
{
    dense.assign(ncols_, 0);
    const std::uint64_t mask = ncols_ - 1;
    auto col = [&](Word y) { return static_cast<std::size_t>((y.bits() >> 1) & mask); };
    // u * (v sh w)
    for (const auto& [x, c] : caches_->shuffle_words_of(t.v, t.w))
        for (const auto& [y, d] : caches_->harmonic_of(t.u, x))
            dense[col(y)] += c * d;
    // - v sh (u * w)
    for (const auto& [y, c] : caches_->harmonic_of(t.u, t.w))
        for (const auto& [j, d] : caches_->shuffle_cols_of(t.v, y))
            dense[j] -= c * d;
}

// ---------------------------------------------------------------------------
// Arithmetic mod p < 2^62.

namespace {

using u128 = unsigned __int128;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p)
{
    return static_cast<std::uint64_t>(static_cast<u128>(a) * b % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p)
{
    std::uint64_t r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1u)
            r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

// floor(f * 2^64 / p) for Shoup's multiplication by the fixed factor f.
std::uint64_t shoup_precompute(std::uint64_t f, std::uint64_t p)
{
    return static_cast<std::uint64_t>((static_cast<u128>(f) << 64) / p);
}

// f * x mod p in [0, p).
inline std::uint64_t shoup_mul(std::uint64_t f, std::uint64_t fs, std::uint64_t x, std::uint64_t p)
{
    const auto q = static_cast<std::uint64_t>((static_cast<u128>(fs) * x) >> 64);
    std::uint64_t r = f * x - q * p;
    return r >= p ? r - p : r;
}

inline std::uint64_t submod(std::uint64_t a, std::uint64_t b, std::uint64_t p)
{
    return a >= b ? a - b : a + p - b;
}

}  // namespace

bool is_prime_u64(std::uint64_t n)
{
    if (n < 2)
        return false;
    for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % q == 0)
            return n == q;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1u) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1)
            continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite)
            return false;
    }
    return true;
}

EchelonModP::EchelonModP(std::uint64_t p, std::uint32_t ncols) : p_(p), ncols_(ncols), pivot_row_(ncols, -1)
{
    if (p <= 2 || p > kMaxPrime || !is_prime_u64(p))
        throw std::invalid_argument("modulus " + std::to_string(p) + " must be an odd prime below 2^62");
    free_cols_.resize(ncols);
    for (std::uint32_t j = 0; j < ncols; ++j)
        free_cols_[j] = j;
}

std::vector<std::uint64_t> EchelonModP::reduce_integers(const std::vector<std::int64_t>& row) const
{
    std::vector<std::uint64_t> r(row.size());
    const auto sp = static_cast<std::int64_t>(p_);
    for (std::size_t j = 0; j < row.size(); ++j) {
        std::int64_t v = row[j] % sp;
        if (v < 0)
            v += sp;
        r[j] = static_cast<std::uint64_t>(v);
    }
    return r;
}

void EchelonModP::eliminate(std::vector<std::uint64_t>& row) const
{
    if (row.size() != ncols_)
        throw std::invalid_argument("row length does not match the column count");
    const std::uint64_t p = p_;
    const std::uint32_t* fc = free_cols_.data();
    const std::size_t nf = free_cols_.size();
    for (std::uint32_t c : pivot_cols_) {
        const std::uint64_t f = row[c];
        if (f == 0)
            continue;
        row[c] = 0;
        const std::uint64_t fs = shoup_precompute(f, p);
        const std::uint64_t* prow = rows_[static_cast<std::size_t>(pivot_row_[c])].data();
        std::uint64_t* r = row.data();
        for (std::size_t t = 0; t < nf; ++t) {
            const std::uint32_t j = fc[t];
            const std::uint64_t x = prow[j];
            if (x != 0)
                r[j] = submod(r[j], shoup_mul(f, fs, x, p), p);
        }
    }
}

bool EchelonModP::insert(std::vector<std::uint64_t>& row)
{
    eliminate(row);
    auto lead = std::find_if(free_cols_.begin(), free_cols_.end(), [&](std::uint32_t j) { return row[j] != 0; });
    if (lead == free_cols_.end())
        return false;
    const std::uint32_t pc = *lead;
    const std::uint64_t p = p_;
    const std::uint64_t inv = powmod(row[pc], p - 2, p);
    const std::uint64_t invs = shoup_precompute(inv, p);
    for (std::uint32_t j : free_cols_)
        if (row[j] != 0)
            row[j] = shoup_mul(inv, invs, row[j], p);
    // Clear the new pivot column from the stored rows.
    const std::uint32_t* fc = free_cols_.data();
    const std::size_t nf = free_cols_.size();
    const std::uint64_t* nr = row.data();
    for (auto& stored : rows_) {
        const std::uint64_t g = stored[pc];
        if (g == 0)
            continue;
        const std::uint64_t gs = shoup_precompute(g, p);
        std::uint64_t* s = stored.data();
        for (std::size_t t = 0; t < nf; ++t) {
            const std::uint32_t j = fc[t];
            const std::uint64_t x = nr[j];
            if (x != 0)
                s[j] = submod(s[j], shoup_mul(g, gs, x, p), p);
        }
    }
    free_cols_.erase(lead);
    pivot_row_[pc] = static_cast<std::int32_t>(rows_.size());
    pivot_cols_.push_back(pc);
    rows_.push_back(std::move(row));
    return true;
}

bool EchelonModP::contains(std::vector<std::uint64_t> row) const
{
    eliminate(row);
    return std::all_of(free_cols_.begin(), free_cols_.end(), [&](std::uint32_t j) { return row[j] == 0; });
}

std::vector<std::uint64_t> rank_mod_primes(int k, const std::vector<std::uint64_t>& primes)
{
    if (k < 1)
        throw std::invalid_argument("rank needs k >= 1");
    if (primes.empty())
        throw std::invalid_argument("rank needs at least one prime");
    RowBuilder builder(k);
    std::vector<EchelonModP> echelons;
    for (std::uint64_t p : primes)
        echelons.emplace_back(p, builder.columns());
    std::vector<std::int64_t> dense;
    for_each_generator(k, [&](const GeneratorTriple& t) {
        if (std::all_of(echelons.begin(), echelons.end(),
                        [&](const EchelonModP& e) { return e.rank() == e.columns(); }))
            return;
        builder.build(t, dense);
        if (std::all_of(dense.begin(), dense.end(), [](std::int64_t x) { return x == 0; }))
            return;
        for (auto& e : echelons) {
            auto row = e.reduce_integers(dense);
            e.insert(row);
        }
    });
    std::vector<std::uint64_t> ranks;
    for (const auto& e : echelons)
        ranks.push_back(e.rank());
    return ranks;
}

std::uint64_t rank_mod_p(int k, std::uint64_t prime)
{
    return rank_mod_primes(k, {prime}).front();
}

namespace {

void normalize_content(std::vector<mpz_class>& row)
{
    mpz_class g = 0;
    for (const auto& x : row)
        if (x != 0)
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g > 1)
        for (auto& x : row)
            if (x != 0)
                mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
}

}  // namespace

std::uint64_t rank_exact(int k, int limit)
{
    if (k < 1)
        throw std::invalid_argument("rank needs k >= 1");
    if (k > limit)
        throw std::length_error("exact rank refused for k = " + std::to_string(k) + " (limit " + std::to_string(limit)
                                + "); use the modular rank");
    RowBuilder builder(k);
    const std::uint32_t n = builder.columns();
    std::vector<std::vector<mpz_class>> rows;
    std::vector<std::uint32_t> pivot_of_row;
    std::vector<std::int64_t> dense;
    for_each_generator(k, [&](const GeneratorTriple& t) {
        if (rows.size() == n)
            return;
        builder.build(t, dense);
        std::vector<mpz_class> r(n);
        for (std::uint32_t j = 0; j < n; ++j)
            r[j] = static_cast<long>(dense[j]);
        // r <- P[c] r - r[c] P for each stored pivot row P.
        for (std::size_t i = 0; i < rows.size(); ++i) {
            const std::uint32_t c = pivot_of_row[i];
            if (r[c] == 0)
                continue;
            const mpz_class f = r[c];
            const mpz_class d = rows[i][c];
            for (std::uint32_t j = 0; j < n; ++j)
                r[j] = d * r[j] - f * rows[i][j];
            normalize_content(r);
        }
        std::uint32_t pc = n;
        for (std::uint32_t j = 0; j < n; ++j)
            if (r[j] != 0) {
                pc = j;
                break;
            }
        if (pc == n)
            return;
        for (auto& stored : rows) {
            if (stored[pc] == 0)
                continue;
            const mpz_class g = stored[pc];
            for (std::uint32_t j = 0; j < n; ++j)
                stored[j] = r[pc] * stored[j] - g * r[j];
            normalize_content(stored);
        }
        pivot_of_row.push_back(pc);
        rows.push_back(std::move(r));
    });
    return rows.size();
}

RankRow conjecture_row(int k, const std::vector<std::uint64_t>& primes, int exact_upto)
{
    const auto start = std::chrono::steady_clock::now();
    RankRow row;
    row.k = k;
    row.dim = h0_dimension(k);
    row.generators = generator_count(k);
    row.primes = primes;
    row.expected = expected_rank(k);
    row.asserted = k <= kAssertedRankLimit;
    for (std::uint64_t p : primes)
        if (p < (std::uint64_t{1} << 60))
            row.warnings.push_back("prime " + std::to_string(p) + " is below 2^60");
    row.ranks = rank_mod_primes(k, primes);
    row.rank = *std::max_element(row.ranks.begin(), row.ranks.end());
    row.primes_agree = std::all_of(row.ranks.begin(), row.ranks.end(), [&](std::uint64_t r) { return r == row.ranks[0]; });
    bool consistent = row.primes_agree;
    if (!row.primes_agree) {
        row.warnings.push_back("modular ranks disagree; rerun with " + std::to_string(kFallbackPrime));
        const std::uint64_t third = rank_mod_p(k, kFallbackPrime);
        row.primes.push_back(kFallbackPrime);
        row.ranks.push_back(third);
        row.rank = std::max(row.rank, third);
        consistent = third == row.rank;
    }
    if (k <= exact_upto) {
        row.exact_rank = rank_exact(k, std::max(exact_upto, kExactRankLimit));
        if (*row.exact_rank != row.rank) {
            row.warnings.push_back("exact rank differs from the modular rank");
            consistent = false;
        }
    }
    row.match = consistent && static_cast<std::int64_t>(row.rank) == row.expected;
    row.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return row;
}

std::vector<RankRow> conjecture_table(int K, const std::vector<std::uint64_t>& primes, int exact_upto,
                                      const std::function<void(const RankRow&)>& on_row)
{
    if (K < 1)
        throw std::invalid_argument("conjecture_table needs K >= 1");
    std::vector<RankRow> rows;
    for (int k = 1; k <= K; ++k) {
        rows.push_back(conjecture_row(k, primes, exact_upto));
        if (on_row)
            on_row(rows.back());
    }
    return rows;
}

std::string rank_table_csv(const std::vector<RankRow>& rows)
{
    std::ostringstream out;
    out << "k,dim,generators,rank,expected,match,elapsed_ms,primes\n";
    for (const auto& r : rows) {
        out << r.k << ',' << r.dim << ',' << r.generators << ',' << r.rank << ',' << r.expected << ','
            << (r.match ? "true" : "false") << ',' << static_cast<long long>(r.elapsed_ms) << ',';
        for (std::size_t i = 0; i < r.primes.size(); ++i)
            out << (i ? ";" : "") << r.primes[i];
        out << '\n';
    }
    return out.str();
}

}  // namespace rsmzv
