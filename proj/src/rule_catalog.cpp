#include "eco/rule_catalog.hpp"

#include <map>

#include "eco/error.hpp"

namespace eco {
namespace detail {
// Generated at configure time from rules/*.rule.
const std::map<std::string, std::string, std::less<>>& embedded_rules();
}  // namespace detail

std::vector<std::string> builtin_rule_names() {
  std::vector<std::string> names;
  for (const auto& [name, text] : detail::embedded_rules()) names.push_back(name);
  return names;
}

std::string_view builtin_rule_text(std::string_view name) {
  const auto& rules = detail::embedded_rules();
  auto it = rules.find(name);
  if (it == rules.end()) throw Error(ErrorKind::UnknownName, "no built-in rule named '" + std::string(name) + "'");
  return it->second;
}

ProductionRule builtin_rule(std::string_view name) { return parse_rule(builtin_rule_text(name)); }

}  // namespace eco
