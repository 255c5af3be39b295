// rsmzv: evaluation, identity suites and the double-shuffle rank experiment.
// Exit codes: 0 all checks pass, 1 some check fails, 2 usage error.

#include <CLI11.hpp>

#include <iostream>
#include <sstream>
#include <stdexcept>

#include "rsmzv/config.hpp"
#include "rsmzv/json_io.hpp"
#include "rsmzv/numerics.hpp"
#include "rsmzv/relations.hpp"
#include "rsmzv/rsmzv.hpp"
#include "rsmzv/suites.hpp"

namespace {

using namespace rsmzv;

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<std::uint64_t> parse_primes(const std::string& text)
{
    std::vector<std::uint64_t> out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoull(item, &used));
            if (used != item.size())
                throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw UsageError("--primes expects comma-separated decimal integers, got '" + text + "'");
        }
    }
    if (out.empty())
        throw UsageError("--primes needs at least one prime");
    for (auto p : out)
        if (p <= 2 || p > kMaxPrime || !is_prime_u64(p))
            throw UsageError("--primes: " + std::to_string(p) + " is not an odd prime below 2^62");
    return out;
}

void print_symbol_value(const ValueRecord& rec, bool json_out)
{
    if (json_out) {
        std::cout << to_json(rec).dump(2) << '\n';
        return;
    }
    if (rec.index)
        std::cout << "index:  (" << *rec.index << ")\n";
    else
        std::cout << "word:   " << *rec.word << '\n';
    std::cout << "route:  " << rec.route << '\n';
    std::cout << "symbol: " << rec.symbol.str() << '\n';
    if (rec.numeric) {
        std::cout << "re:     " << rec.numeric->re << '\n';
        std::cout << "im:     " << rec.numeric->im << '\n';
        std::cout << "err:    " << rec.numeric->err << '\n';
    }
}

int cmd_eval(const std::optional<std::string>& index_text, const std::optional<std::string>& word_text,
             const std::string& route_name, const Config& cfg, bool json_out)
{
    if (index_text.has_value() == word_text.has_value())
        throw UsageError("eval needs exactly one of INDEX (e.g. \"3,2\" or \"\") or --word (e.g. 100101)");
    ValueRecord rec;
    if (index_text) {
        Index k;
        Route route;
        try {
            k = Index::parse(*index_text);
            route = parse_route(route_name);
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
        rec.index = k.str();
        rec.route = to_string(route);
        rec.symbol = shuffle_reduce(zeta_rs(k, route).symbol);
    } else {
        Word w;
        try {
            w = Word::parse(*word_text);
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
        if (w.empty())
            throw UsageError("--word needs a non-empty word over {0,1}");
        rec.word = w.str();
        rec.route = "lpoly";
        rec.symbol = z_rs(WordPoly(w));
    }
    const BigComplex v = zsymbol_value(rec.symbol, cfg.digits);
    rec.numeric = NumericValue{v.re_str(), v.im_str(), v.err_str(), cfg.digits};
    print_symbol_value(rec, json_out);
    return kPass;
}

int cmd_lpoly(const std::string& word_text, bool json_out)
{
    Word w;
    try {
        w = Word::parse(word_text);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    const TPoly p = l_poly(w);
    if (json_out)
        std::cout << nlohmann::json{{"word", w.str()}, {"lpoly", to_json(p)}}.dump(2) << '\n';
    else
        std::cout << "L(" << (w.empty() ? "()" : w.str()) << "; T) = " << p.str() << '\n';
    return kPass;
}

int cmd_verify(const std::string& suite, std::optional<int> max_weight, const Config& cfg, bool json_out)
{
    const auto& names = suite_names();
    if (std::find(names.begin(), names.end(), suite) == names.end())
        throw UsageError("unknown suite '" + suite + "': expected shuffle|harmonic|duality|reversal|btt|variants|hopf|regcross");
    const int cap = max_weight.value_or(default_max_weight(suite));
    if (cap < 0)
        throw UsageError("--max-weight must be >= 0");
    const SuiteReport r = run_suite(suite, cap, cfg);
    if (json_out) {
        std::cout << to_json(r).dump(2) << '\n';
    } else {
        for (const auto& c : r.cases)
            std::cout << (c.pass ? "PASS " : "FAIL ") << to_string(c.kind) << ' ' << c.key << " residual=" << c.residual
                      << '\n';
        std::cout << suite << ": " << r.cases.size() - r.failures() << '/' << r.cases.size() << " passed (max weight "
                  << cap << ", tolerance 1e-" << cfg.tolerance_exponent() << ")\n";
    }
    return r.pass() ? kPass : kFail;
}

int cmd_rank(int upto, const std::vector<std::uint64_t>& primes, int exact_upto, bool json_out, bool csv_out)
{
    if (upto < 1)
        throw UsageError("--upto must be >= 1");
    if (upto > 20)
        throw UsageError("--upto is limited to 20 (dense rows of length 2^(k-1))");
    const bool streaming = !json_out && !csv_out;
    if (streaming)
        std::cout << "k\tdim\tgenerators\trank\texpected\tmatch\telapsed_ms\n";
    const auto rows = conjecture_table(upto, primes, exact_upto, [&](const RankRow& r) {
        if (!streaming)
            return;
        std::cout << r.k << '\t' << r.dim << '\t' << r.generators << '\t' << r.rank << '\t' << r.expected << '\t'
                  << (r.match ? "true" : "false") << (r.asserted ? "" : " (reported only)") << '\t'
                  << static_cast<long long>(r.elapsed_ms) << std::endl;
        for (const auto& w : r.warnings)
            std::cout << "  warning: " << w << std::endl;
    });
    if (json_out)
        std::cout << rank_table_json(rows).dump(2) << '\n';
    else if (csv_out)
        std::cout << rank_table_csv(rows);
    bool ok = true;
    for (const auto& r : rows)
        if (r.asserted && !r.match)
            ok = false;
    return ok ? kPass : kFail;
}

int cmd_dk(int upto, bool json_out)
{
    if (upto < 0)
        throw UsageError("--upto must be >= 0");
    const auto d = d_sequence(upto);
    if (json_out) {
        std::cout << nlohmann::json{{"d", d}}.dump() << '\n';
    } else {
        for (int k = 0; k <= upto; ++k)
            std::cout << "d_" << k << " = " << d[static_cast<std::size_t>(k)] << '\n';
    }
    return kPass;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Refined symmetric multiple zeta values: evaluation, identity checks, relation ranks"};
    app.require_subcommand(1);

    int digits = 0;
    bool json_out = false;
    std::string cache_path;
    app.add_option("--digits", digits, "decimal digits (default 60 or RSMZV_DIGITS)");
    app.add_flag("--json", json_out, "machine-readable output");
    app.add_option("--cache", cache_path, "JSON-lines file for zeta values (default RSMZV_CACHE)");

    auto* eval = app.add_subcommand("eval", "zeta^RS of an index (k_1 first, last part on the largest variable) or Z^RS of a word");
    std::optional<std::string> index_text, word_text;
    std::string route = "explicit";
    eval->add_option("index", index_text, "index such as \"3,2\"; \"\" is the empty index");
    eval->add_option("--word", word_text, "word over {0,1} in h, e.g. 100101 = w(3,2)");
    eval->add_option("--route", route, "explicit|lpoly|integral|btt")->check(CLI::IsMember({"explicit", "lpoly", "integral", "btt"}));

    auto* lpoly = app.add_subcommand("lpoly", "the polynomial L(w; T)");
    std::string lword;
    lpoly->add_option("word", lword, "word over {0,1}")->required();

    auto* verify = app.add_subcommand("verify", "run an identity suite");
    std::string suite;
    std::optional<int> max_weight;
    verify->add_option("suite", suite, "shuffle|harmonic|duality|reversal|btt|variants|hopf|regcross")->required();
    verify->add_option("--max-weight", max_weight, "total weight cap");

    auto* rank = app.add_subcommand("rank", "ranks of the D(u,v,w) relations against 2^(k-1) - d_k - d_(k-1)");
    int upto = 10;
    std::string primes_text;
    int exact_upto = 0;
    bool csv_out = false;
    rank->add_option("--upto", upto, "largest weight (default 10)");
    rank->add_option("--primes", primes_text, "comma-separated primes below 2^62");
    rank->add_option("--exact-upto", exact_upto, "also compute the rank over Q for k <= this");
    rank->add_flag("--csv", csv_out, "CSV output");

    auto* dk = app.add_subcommand("dk", "the sequence d_k");
    int dk_upto = 14;
    dk->add_option("--upto", dk_upto, "largest k (default 14)");

    for (auto* sub : {eval, lpoly, verify, rank, dk}) {
        sub->add_option("--digits", digits, "decimal digits");
        sub->add_flag("--json", json_out, "machine-readable output");
        sub->add_option("--cache", cache_path, "zeta value cache file");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kPass : kUsage;
    }

    try {
        Config cfg = Config::from_env();
        if (digits != 0)
            cfg.digits = digits;
        if (!cache_path.empty())
            cfg.cache_path = cache_path;
        try {
            cfg.validate();
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
        if (cfg.cache_path)
            attach_cache_file(*cfg.cache_path);

        if (*eval)
            return cmd_eval(index_text, word_text, route, cfg, json_out);
        if (*lpoly)
            return cmd_lpoly(lword, json_out);
        if (*verify)
            return cmd_verify(suite, max_weight, cfg, json_out);
        if (*rank) {
            const auto primes = primes_text.empty() ? cfg.primes : parse_primes(primes_text);
            return cmd_rank(upto, primes, exact_upto, json_out, csv_out);
        }
        if (*dk)
            return cmd_dk(dk_upto, json_out);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kFail;
    }
    return kUsage;
}
