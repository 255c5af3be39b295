#ifndef RSMZV_SUITES_HPP
#define RSMZV_SUITES_HPP

#include <string>
#include <string_view>
#include <vector>

#include "rsmzv/config.hpp"
#include "rsmzv/tpoly.hpp"
#include "rsmzv/zsymbol.hpp"

namespace rsmzv {

enum class CheckKind { exact, numeric };

std::string to_string(CheckKind k);
CheckKind parse_check_kind(std::string_view s);  // throws std::invalid_argument

struct CaseResult {
    std::string key;
    CheckKind kind = CheckKind::exact;
    bool pass = false;
    // "0" for an exact match, "mismatch" for an exact failure, otherwise the
    // numeric residual in scientific notation.
    std::string residual;
    friend bool operator==(const CaseResult&, const CaseResult&) = default;
};

struct SuiteReport {
    std::string suite;
    int max_weight = 0;
    int digits = 0;
    int guard = 0;
    std::vector<CaseResult> cases;  // sorted by key

    bool pass() const;
    std::size_t failures() const;
    friend bool operator==(const SuiteReport&, const SuiteReport&) = default;
};

// shuffle, harmonic, duality, reversal, btt, variants, hopf, regcross.
const std::vector<std::string>& suite_names();
int default_max_weight(std::string_view suite);

// Runs one suite up to the given total weight. Throws std::invalid_argument
// for an unknown suite or max_weight < 0.
SuiteReport run_suite(std::string_view suite, int max_weight, const Config& config);

// Building blocks shared with the tests.
CaseResult exact_case(std::string key, const ZSymbol& lhs, const ZSymbol& rhs);
CaseResult exact_case(std::string key, const TPoly& lhs, const TPoly& rhs);
CaseResult numeric_case(std::string key, const ZSymbol& lhs, const ZSymbol& rhs, const Config& config);
CaseResult numeric_case(std::string key, const TPoly& lhs, const TPoly& rhs, const Config& config);

// Sample points at rational multiples of pi i (and one real rational point).
const std::vector<std::vector<ZSymbol>>& univariate_samples();
const std::vector<std::vector<ZSymbol>>& bivariate_samples();

// The canonical form used for exact comparisons: shuffle_reduce applied to
// every coefficient.
TPoly shuffle_canonical(const TPoly& p);

}  // namespace rsmzv

#endif
