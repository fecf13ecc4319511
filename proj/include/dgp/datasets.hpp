#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dgp/frequency_table.hpp"

namespace dgp {

/// Per-year totals of the bundled Spanish road-accident blackspot data
/// (source: Direccion General de Trafico, 2003-2007). A blackspot is a
/// 100-meter road section with three or more accidents in a one-year period.
struct BlackspotYear {
    int year;
    long long blackspots;  // sections identified that year
    long long accidents;   // accidents on those sections
    long long deaths;      // deaths (within 30 days) on those sections
};

std::span<const BlackspotYear> blackspot_years();

/// Names of the ten bundled datasets: accidents_2003..accidents_2007
/// (number of accidents per blackspot, minimum value 3) and
/// deaths_2003..deaths_2007 (number of deaths per blackspot).
const std::vector<std::string>& bundled_names();

/// Returns the named bundled dataset; throws std::invalid_argument with the
/// list of available names when the name is unknown.
FrequencyTable bundled(std::string_view name);

}  // namespace dgp
