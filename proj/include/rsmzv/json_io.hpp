#ifndef RSMZV_JSON_IO_HPP
#define RSMZV_JSON_IO_HPP

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "rsmzv/relations.hpp"
#include "rsmzv/suites.hpp"
#include "rsmzv/tpoly.hpp"
#include "rsmzv/zsymbol.hpp"

namespace rsmzv {

// Every real number is a decimal string; integers stay integers except
// 62-bit primes, which are strings as well.

// ZSymbol: [{"coeff": "p/q", "twopii": n, "zetas": ["3,2", ...]}, ...]
nlohmann::json to_json(const ZSymbol& s);
ZSymbol zsymbol_from_json(const nlohmann::json& j);

// TPoly: {"vars": ["T"], "terms": [{"exponents": [i, j], "coeff": <ZSymbol>}, ...]}
nlohmann::json to_json(const TPoly& p);
TPoly tpoly_from_json(const nlohmann::json& j);

struct NumericValue {
    std::string re;
    std::string im;
    std::string err;
    int digits = 0;
    friend bool operator==(const NumericValue&, const NumericValue&) = default;
};

// eval output. Exactly one of index / word is set.
struct ValueRecord {
    std::optional<std::string> index;
    std::optional<std::string> word;
    std::string route;
    ZSymbol symbol;
    std::optional<NumericValue> numeric;
    friend bool operator==(const ValueRecord&, const ValueRecord&) = default;
};

nlohmann::json to_json(const ValueRecord& v);
ValueRecord value_record_from_json(const nlohmann::json& j);

nlohmann::json to_json(const SuiteReport& r);
SuiteReport suite_report_from_json(const nlohmann::json& j);

nlohmann::json to_json(const RankRow& r);
RankRow rank_row_from_json(const nlohmann::json& j);
nlohmann::json rank_table_json(const std::vector<RankRow>& rows);

}  // namespace rsmzv

#endif
