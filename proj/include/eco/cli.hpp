#pragma once

#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "eco/operators.hpp"
#include "eco/rule_dsl.hpp"

namespace eco::cli {

/// Runs one subcommand (args excludes the program name). Results and
/// domain errors ({"error_kind", "detail"}) go to `out`; usage errors go
/// to `err`. Returns 0 on success, 1 on a domain error, 2 on a usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// A shipped rule name ("catalan", "L_bracket:2") or a path to a rule file.
ProductionRule resolve_rule(std::string_view spec);

/// A rule resolved as above, "L_bracket:a" for any a >= 1, or a closed-form
/// operator name.
RuleOperator resolve_operator(std::string_view spec);

}  // namespace eco::cli
