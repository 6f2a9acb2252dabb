#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "eco/series.hpp"

namespace eco {

struct NamedSeriesInfo {
  std::string name;
  std::string description;
  bool egf = false;           // coefficients are f_n / n!
  bool takes_b = false;       // parameterized by an axiom b >= 1
};

const std::vector<NamedSeriesInfo>& named_series_catalog();

/// Exact truncation to `order` of a catalog series. Throws Error{UnknownName}.
TruncatedSeries named_series(std::string_view name, int order, std::int64_t b = 1);

/// Catalog metadata for `name`. Throws Error{UnknownName}.
const NamedSeriesInfo& named_series_info(std::string_view name);

}  // namespace eco
