#ifndef LWCQ_JSON_IO_HPP
#define LWCQ_JSON_IO_HPP

#include <json.hpp>

#include "lwcq/basis_change.hpp"
#include "lwcq/qmzv.hpp"
#include "lwcq/quasi_shuffle.hpp"
#include "lwcq/series.hpp"
#include "lwcq/zeta.hpp"

namespace lwcq {

using Json = nlohmann::ordered_json;

std::string format_mbar(const MbarElement& a);
MbarElement parse_mbar(const std::string& text);

/// [{coeff: "p/q", key: "(…)", tag: "M"|"F"|"Mbar"}, …] in graded-lex order.
Json lincomb_to_json(const LinComb<Lwc>& x, const std::string& tag);
Json lincomb_to_json(const MbarComb& x);
LinComb<Lwc> lincomb_from_json(const Json& j);

/// [{monomial: [[var, exp], …], coeff: "p/q"}, …] in graded-lex order.
Json series_to_json(const TruncatedSeries& s);

/// {keys: [...], entries: [...]} row-major integers.
Json matrix_to_json(const TransitionMatrix& m);

Json relation_to_json(const Relation& rel);
Json verify_report_to_json(const Relation& rel, const VerifyReport& rep);
Json qcheck_report_to_json(const QCheckReport& rep);
Json eval_result_to_json(const std::string& symbol, const EvalResult& res);

}  // namespace lwcq

#endif
