#include "lwcq/json_io.hpp"

#include <cstdio>

#include "lwcq/errors.hpp"

namespace lwcq {

namespace {

std::string fmt_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace

std::string format_mbar(const MbarElement& a) {
    return std::to_string(a.head) + ";" + format_lwc(a.tail);
}

MbarElement parse_mbar(const std::string& text) {
    auto semi = text.find(';');
    if (semi == std::string::npos) throw ParseError("expected 'head;(tail)' in '" + text + "'");
    int head;
    try {
        std::size_t idx = 0;
        head = std::stoi(text.substr(0, semi), &idx);
        if (idx != semi) throw ParseError("bad head in '" + text + "'");
    } catch (const std::exception&) {
        throw ParseError("bad head in '" + text + "'");
    }
    return MbarElement(head, parse_lwc(text.substr(semi + 1)));
}

Json lincomb_to_json(const LinComb<Lwc>& x, const std::string& tag) {
    Json arr = Json::array();
    for (const auto& [k, c] : x.terms()) {
        arr.push_back({{"coeff", rational_to_string(c)}, {"key", format_lwc(k)}, {"tag", tag}});
    }
    return arr;
}

Json lincomb_to_json(const MbarComb& x) {
    Json arr = Json::array();
    for (const auto& [k, c] : x.terms()) {
        arr.push_back({{"coeff", rational_to_string(c)}, {"key", format_mbar(k)}, {"tag", "Mbar"}});
    }
    return arr;
}

LinComb<Lwc> lincomb_from_json(const Json& j) {
    LinComb<Lwc> out;
    for (const auto& item : j) {
        out.add(parse_lwc(item.at("key").get<std::string>()),
                parse_rational(item.at("coeff").get<std::string>()));
    }
    return out;
}

Json series_to_json(const TruncatedSeries& s) {
    Json arr = Json::array();
    for (const auto& [m, c] : s.terms()) {
        Json mono = Json::array();
        for (auto [v, e] : m.factors) mono.push_back({v, e});
        arr.push_back({{"monomial", mono}, {"coeff", rational_to_string(c)}});
    }
    return arr;
}

Json matrix_to_json(const TransitionMatrix& m) {
    Json keys = Json::array();
    for (const auto& k : m.keys) keys.push_back(format_lwc(k));
    Json entries = Json::array();
    for (const auto& e : m.entries) entries.push_back(e.str());
    return {{"keys", keys}, {"entries", entries}};
}

namespace {

Json side_to_json(const ZetaComb& side) {
    Json arr = Json::array();
    for (const auto& [prod, c] : side.terms()) {
        Json factors = Json::array();
        for (const auto& sym : prod.factors) factors.push_back(format_zeta_symbol(sym));
        arr.push_back({{"coeff", rational_to_string(c)}, {"factors", factors}});
    }
    return arr;
}

}  // namespace

Json relation_to_json(const Relation& rel) {
    return {{"name", rel.name}, {"lhs", side_to_json(rel.lhs)}, {"rhs", side_to_json(rel.rhs)}};
}

Json verify_report_to_json(const Relation& rel, const VerifyReport& rep) {
    Json per = Json::array();
    for (const auto& sr : rep.per_symbol) {
        per.push_back({{"symbol", format_zeta_symbol(sr.symbol)},
                       {"value", fmt_double(sr.value)},
                       {"tail", fmt_double(sr.tail)},
                       {"cutoff", sr.cutoff},
                       {"partwise_convergent", sr.partwise_convergent}});
    }
    Json j = relation_to_json(rel);
    j["lhs_value"] = fmt_double(rep.lhs_value);
    j["rhs_value"] = fmt_double(rep.rhs_value);
    j["residual"] = fmt_double(rep.residual);
    j["tail_bound"] = fmt_double(rep.tail_bound);
    j["tolerance"] = fmt_double(rep.tolerance);
    j["verified"] = rep.verified;
    j["per_symbol"] = per;
    return j;
}

Json qcheck_report_to_json(const QCheckReport& rep) {
    return {{"lhs_value", fmt_double(rep.lhs_value)},
            {"rhs_value", fmt_double(rep.rhs_value)},
            {"residual", fmt_double(rep.residual)},
            {"tail_bound", fmt_double(rep.tail_bound)},
            {"tolerance", fmt_double(rep.tolerance)},
            {"verified", rep.verified}};
}

Json eval_result_to_json(const std::string& symbol, const EvalResult& res) {
    return {{"symbol", symbol},
            {"value", fmt_double(res.value)},
            {"tail_bound", fmt_double(res.tail)},
            {"cutoff", res.cutoff},
            {"tolerance_met", res.tol_met}};
}

}  // namespace lwcq
