#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "eco/rule_dsl.hpp"

namespace eco {

/// Names of the rule files shipped under rules/ and compiled in.
std::vector<std::string> builtin_rule_names();

/// Raw text of a shipped rule file. Throws Error{UnknownName}.
std::string_view builtin_rule_text(std::string_view name);

ProductionRule builtin_rule(std::string_view name);

}  // namespace eco
