#include "rsmzv/json_io.hpp"

#include <stdexcept>

namespace rsmzv {

using nlohmann::json;

json to_json(const ZSymbol& s)
{
    json terms = json::array();
    for (const auto& [m, c] : s) {
        json zetas = json::array();
        for (const Index& k : m.zetas)
            zetas.push_back(k.str());
        terms.push_back({{"coeff", to_string(c)}, {"twopii", m.twopii}, {"zetas", zetas}});
    }
    return terms;
}

ZSymbol zsymbol_from_json(const json& j)
{
    if (!j.is_array())
        throw std::invalid_argument("ZSymbol JSON must be an array of terms");
    ZSymbol s;
    for (const auto& t : j) {
        ZetaMonomial m;
        m.twopii = t.at("twopii").get<int>();
        for (const auto& z : t.at("zetas"))
            m.zetas.push_back(Index::parse(z.get<std::string>()));
        s += ZSymbol::monomial(std::move(m), parse_rational(t.at("coeff").get<std::string>()));
    }
    return s;
}

json to_json(const TPoly& p)
{
    json terms = json::array();
    for (const auto& [e, c] : p)
        terms.push_back({{"exponents", {e[0], e[1]}}, {"coeff", to_json(c)}});
    return {{"vars", p.vars()}, {"terms", terms}};
}

TPoly tpoly_from_json(const json& j)
{
    TPoly p(j.at("vars").get<std::vector<std::string>>());
    for (const auto& t : j.at("terms")) {
        const auto e = t.at("exponents").get<std::vector<int>>();
        if (e.size() != 2)
            throw std::invalid_argument("TPoly exponents must have two entries");
        p.add({e[0], e[1]}, zsymbol_from_json(t.at("coeff")));
    }
    return p;
}

json to_json(const ValueRecord& v)
{
    json j;
    if (v.index)
        j["index"] = *v.index;
    if (v.word)
        j["word"] = *v.word;
    j["route"] = v.route;
    j["symbol"] = to_json(v.symbol);
    if (v.numeric)
        j["numeric"] = {{"re", v.numeric->re},
                        {"im", v.numeric->im},
                        {"err", v.numeric->err},
                        {"digits", v.numeric->digits}};
    return j;
}

ValueRecord value_record_from_json(const json& j)
{
    ValueRecord v;
    if (j.contains("index"))
        v.index = j.at("index").get<std::string>();
    if (j.contains("word"))
        v.word = j.at("word").get<std::string>();
    if (v.index.has_value() == v.word.has_value())
        throw std::invalid_argument("value record needs exactly one of index / word");
    v.route = j.at("route").get<std::string>();
    v.symbol = zsymbol_from_json(j.at("symbol"));
    if (j.contains("numeric")) {
        const auto& n = j.at("numeric");
        v.numeric = NumericValue{n.at("re").get<std::string>(), n.at("im").get<std::string>(),
                                 n.at("err").get<std::string>(), n.at("digits").get<int>()};
    }
    return v;
}

json to_json(const SuiteReport& r)
{
    json cases = json::array();
    for (const auto& c : r.cases)
        cases.push_back({{"key", c.key}, {"kind", to_string(c.kind)}, {"pass", c.pass}, {"residual", c.residual}});
    return {{"suite", r.suite}, {"max_weight", r.max_weight}, {"digits", r.digits}, {"guard", r.guard},
            {"pass", r.pass()}, {"cases", cases}};
}

SuiteReport suite_report_from_json(const json& j)
{
    SuiteReport r;
    r.suite = j.at("suite").get<std::string>();
    r.max_weight = j.at("max_weight").get<int>();
    r.digits = j.at("digits").get<int>();
    r.guard = j.at("guard").get<int>();
    for (const auto& c : j.at("cases"))
        r.cases.push_back(CaseResult{c.at("key").get<std::string>(), parse_check_kind(c.at("kind").get<std::string>()),
                                     c.at("pass").get<bool>(), c.at("residual").get<std::string>()});
    if (j.at("pass").get<bool>() != r.pass())
        throw std::invalid_argument("suite report: pass flag disagrees with its cases");
    return r;
}

json to_json(const RankRow& r)
{
    json primes = json::array();
    for (auto p : r.primes)
        primes.push_back(std::to_string(p));
    json j{{"k", r.k},
           {"dim", r.dim},
           {"generators", r.generators},
           {"rank", r.rank},
           {"ranks", r.ranks},
           {"expected", r.expected},
           {"primes_agree", r.primes_agree},
           {"match", r.match},
           {"asserted", r.asserted},
           {"elapsed_ms", static_cast<std::int64_t>(r.elapsed_ms)},
           {"primes", primes},
           {"warnings", r.warnings}};
    j["exact_rank"] = r.exact_rank ? json(*r.exact_rank) : json(nullptr);
    return j;
}

RankRow rank_row_from_json(const json& j)
{
    RankRow r;
    r.k = j.at("k").get<int>();
    r.dim = j.at("dim").get<std::uint64_t>();
    r.generators = j.at("generators").get<std::uint64_t>();
    r.rank = j.at("rank").get<std::uint64_t>();
    r.ranks = j.at("ranks").get<std::vector<std::uint64_t>>();
    r.expected = j.at("expected").get<std::int64_t>();
    r.primes_agree = j.at("primes_agree").get<bool>();
    r.match = j.at("match").get<bool>();
    r.asserted = j.at("asserted").get<bool>();
    r.elapsed_ms = static_cast<double>(j.at("elapsed_ms").get<std::int64_t>());
    for (const auto& p : j.at("primes"))
        r.primes.push_back(std::stoull(p.get<std::string>()));
    r.warnings = j.at("warnings").get<std::vector<std::string>>();
    if (!j.at("exact_rank").is_null())
        r.exact_rank = j.at("exact_rank").get<std::uint64_t>();
    return r;
}

json rank_table_json(const std::vector<RankRow>& rows)
{
    json arr = json::array();
    bool all = true;
    for (const auto& r : rows) {
        arr.push_back(to_json(r));
        if (r.asserted)
            all = all && r.match;
    }
    return {{"rows", arr}, {"all_match", all}};
}

}  // namespace rsmzv
