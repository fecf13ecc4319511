#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace dgp {

/// Observed count data as (value, count) pairs with strictly increasing
/// non-negative values and positive counts. The canonical input format for
/// fitting and goodness-of-fit testing; immutable in spirit once built.
class FrequencyTable {
  public:
    struct Entry {
        long long value;
        long long count;
        bool operator==(const Entry&) const = default;
    };

    /// Validates, sorts and merges duplicate values (counts are summed).
    /// Throws std::invalid_argument on empty input, negative values or
    /// non-positive counts.
    static FrequencyTable from_entries(std::vector<Entry> entries, std::string label = "");

    const std::vector<Entry>& entries() const { return entries_; }
    const std::string& label() const { return label_; }

    long long total() const { return total_; }
    long long min_value() const { return entries_.front().value; }
    long long max_value() const { return entries_.back().value; }
    /// Count observed at exactly `value` (0 when absent).
    long long count_at(long long value) const;

    bool operator==(const FrequencyTable& other) const {
        return entries_ == other.entries_;
    }

  private:
    FrequencyTable() = default;
    std::vector<Entry> entries_;
    std::string label_;
    long long total_ = 0;
};

/// Aggregates raw observations into a frequency table.
FrequencyTable frequency_table_from_values(std::span<const long long> values,
                                           std::string label = "");

/// Parses CSV with the exact header `value,count` and one record per line.
/// Duplicated values are merged. Malformed fields, negative values, zero
/// counts and an empty body each raise std::invalid_argument with the
/// offending line number in the message.
FrequencyTable parse_frequency_csv(std::string_view text, std::string label = "");

/// Deterministic CSV emission: sorted rows, `\n` endings, no trailing
/// whitespace. Round-trips through parse_frequency_csv.
std::string emit_frequency_csv(const FrequencyTable& table);

}  // namespace dgp
