#include "dgp/datasets.hpp"

#include <array>
#include <stdexcept>

namespace dgp {

namespace {

// DGT blackspot registry totals, 2003-2007.
constexpr std::array<BlackspotYear, 5> kYears = {{
    {2003, 958, 3941, 220},
    {2004, 780, 3200, 191},
    {2005, 737, 3051, 179},
    {2006, 748, 3071, 171},
    {2007, 802, 3289, 134},
}};

using E = FrequencyTable::Entry;

struct NamedTable {
    const char* name;
    std::vector<E> entries;
};

// Blackspots per number-of-accidents value (columns: one table per year).
const NamedTable kTables[] = {
    {"accidents_2003",
     {{3, 525}, {4, 209}, {5, 94}, {6, 41}, {7, 34}, {8, 15}, {9, 22}, {10, 5}, {11, 2},
      {12, 4}, {13, 1}, {14, 1}, {16, 1}, {17, 1}, {19, 1}, {20, 1}, {39, 1}}},
    {"accidents_2004",
     {{3, 438}, {4, 173}, {5, 71}, {6, 38}, {7, 23}, {8, 9}, {9, 8}, {10, 6}, {11, 1},
      {12, 3}, {13, 2}, {14, 2}, {15, 2}, {19, 1}, {20, 1}, {27, 1}, {49, 1}}},
    {"accidents_2005",
     {{3, 400}, {4, 177}, {5, 68}, {6, 35}, {7, 22}, {8, 11}, {9, 4}, {10, 4}, {11, 3},
      {12, 3}, {13, 3}, {15, 1}, {16, 2}, {18, 1}, {33, 2}, {36, 1}}},
    {"accidents_2006",
     {{3, 404}, {4, 164}, {5, 89}, {6, 45}, {7, 20}, {8, 8}, {9, 4}, {10, 1}, {11, 3},
      {12, 2}, {14, 1}, {16, 2}, {21, 1}, {22, 1}, {24, 1}, {29, 1}, {39, 1}}},
    {"accidents_2007",
     {{3, 445}, {4, 172}, {5, 77}, {6, 48}, {7, 19}, {8, 11}, {9, 11}, {10, 2}, {11, 4},
      {12, 1}, {13, 5}, {14, 2}, {15, 2}, {17, 1}, {25, 1}, {32, 1}}},
    // Blackspots per number-of-deaths value.
    {"deaths_2003", {{0, 797}, {1, 126}, {2, 19}, {3, 12}, {4, 2}, {6, 2}}},
    {"deaths_2004", {{0, 636}, {1, 108}, {2, 27}, {3, 7}, {4, 2}}},
    {"deaths_2005", {{0, 611}, {1, 94}, {2, 23}, {3, 3}, {4, 3}, {5, 1}, {6, 1}, {7, 1}}},
    {"deaths_2006", {{0, 632}, {1, 84}, {2, 19}, {3, 9}, {4, 1}, {5, 1}, {6, 1}, {7, 1}}},
    {"deaths_2007", {{0, 693}, {1, 92}, {2, 12}, {3, 4}, {6, 1}}},
};

}  // namespace

std::span<const BlackspotYear> blackspot_years() {
    return kYears;
}

const std::vector<std::string>& bundled_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (const auto& t : kTables) {
            v.emplace_back(t.name);
        }
        return v;
    }();
    return names;
}

FrequencyTable bundled(std::string_view name) {
    for (const auto& t : kTables) {
        if (name == t.name) {
            return FrequencyTable::from_entries(t.entries, t.name);
        }
    }
    std::string msg = "unknown dataset '" + std::string(name) + "'; available:";
    for (const auto& n : bundled_names()) {
        msg += ' ';
        msg += n;
    }
    throw std::invalid_argument(msg);
}

}  // namespace dgp
