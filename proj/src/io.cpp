#include "eco/io.hpp"

#include <sstream>

namespace eco {
namespace {

Json item_json(const ProductionItem& item) {
  Json j;
  if (item.is_range()) {
    j["kind"] = "range";
    j["low"] = item.low.to_string();
    j["high"] = item.high->to_string();
  } else {
    j["kind"] = "single";
    j["label"] = item.low.to_string();
  }
  j["multiplicity"] = item.multiplicity.to_string();
  return j;
}

Json clause_json(const Json& guard, const Clause& clause) {
  Json items = Json::array();
  for (const auto& item : clause.items) items.push_back(item_json(item));
  return Json{{"guard", guard}, {"items", items}};
}

}  // namespace

Json to_json(const LabelPolynomial& p) {
  Json terms = Json::array();
  for (const auto& [label, c] : p.terms()) terms.push_back(Json::array({label, to_string(c)}));
  return terms;
}

Json to_json(const Sequence& s) {
  Json values = Json::array();
  for (const auto& v : s.values) values.push_back(to_string(v));
  return Json{{"provenance", std::string(provenance_name(s.provenance))}, {"values", values}};
}

Json to_json(const ProductionRule& rule) {
  Json clauses = Json::array();
  for (const auto& [label, clause] : rule.special) clauses.push_back(clause_json(label, clause));
  if (rule.symbolic) clauses.push_back(clause_json("k", *rule.symbolic));
  return Json{{"name", rule.name}, {"clauses", clauses}};
}

Json to_json(const TruncatedSeries& s) {
  Json coeffs = Json::array();
  for (const auto& c : to_strings(s)) coeffs.push_back(c);
  return coeffs;
}

std::string to_bfile(const Sequence& s) {
  std::ostringstream out;
  for (std::size_t i = 0; i < s.size(); ++i) out << i << ' ' << to_string(s[i]) << '\n';
  return out.str();
}

std::string sequence_csv(const Sequence& s) {
  std::ostringstream out;
  out << "n,f\n";
  for (std::size_t i = 0; i < s.size(); ++i) out << i << ',' << to_string(s[i]) << '\n';
  return out.str();
}

}  // namespace eco
