#pragma once

#include <string>

#include <json.hpp>

#include "eco/label_polynomial.hpp"
#include "eco/rule_dsl.hpp"
#include "eco/series.hpp"

namespace eco {

using Json = nlohmann::ordered_json;

/// [[label, "coefficient"], ...] in ascending label order.
Json to_json(const LabelPolynomial& p);

/// {"provenance": ..., "values": ["1", "1", "2", ...]}
Json to_json(const Sequence& s);

/// {"name": ..., "clauses": [{"guard": "k" | label, "items": [...]}]}
/// Special clauses come first in ascending label order. Items are
/// {"kind": "single", "label": expr, "multiplicity": expr} or
/// {"kind": "range", "low": expr, "high": expr, "multiplicity": expr}.
Json to_json(const ProductionRule& rule);

/// Coefficients as exact "p/q" strings.
Json to_json(const TruncatedSeries& s);

/// OEIS b-file lines "n a(n)", offset 0.
std::string to_bfile(const Sequence& s);

/// "n,f" header then one row per term.
std::string sequence_csv(const Sequence& s);

}  // namespace eco
