#include "dgp/frequency_table.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace dgp {

FrequencyTable FrequencyTable::from_entries(std::vector<Entry> entries, std::string label) {
    if (entries.empty()) {
        throw std::invalid_argument("FrequencyTable: no entries");
    }
    std::sort(entries.begin(), entries.end(),
              [](const Entry& a, const Entry& b) { return a.value < b.value; });
    std::vector<Entry> merged;
    merged.reserve(entries.size());
    for (const Entry& e : entries) {
        if (e.value < 0) {
            throw std::invalid_argument("FrequencyTable: negative value");
        }
        if (e.count <= 0) {
            throw std::invalid_argument("FrequencyTable: count must be positive");
        }
        if (!merged.empty() && merged.back().value == e.value) {
            merged.back().count += e.count;
        } else {
            merged.push_back(e);
        }
    }
    FrequencyTable t;
    t.entries_ = std::move(merged);
    t.label_ = std::move(label);
    for (const Entry& e : t.entries_) {
        t.total_ += e.count;
    }
    return t;
}

long long FrequencyTable::count_at(long long value) const {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), value,
                               [](const Entry& e, long long v) { return e.value < v; });
    return (it != entries_.end() && it->value == value) ? it->count : 0;
}

FrequencyTable frequency_table_from_values(std::span<const long long> values,
                                           std::string label) {
    std::vector<long long> sorted(values.begin(), values.end());
    std::sort(sorted.begin(), sorted.end());
    std::vector<FrequencyTable::Entry> entries;
    for (std::size_t i = 0; i < sorted.size();) {
        std::size_t j = i;
        while (j < sorted.size() && sorted[j] == sorted[i]) ++j;
        entries.push_back({sorted[i], static_cast<long long>(j - i)});
        i = j;
    }
    return FrequencyTable::from_entries(std::move(entries), std::move(label));
}

namespace {

long long parse_integer_field(std::string_view field, int line_no, const char* what) {
    long long out = 0;
    const char* first = field.data();
    const char* last = field.data() + field.size();
    auto [ptr, ec] = std::from_chars(first, last, out);
    if (ec != std::errc() || ptr != last || field.empty()) {
        throw std::invalid_argument("line " + std::to_string(line_no) + ": malformed " +
                                    what + " field '" + std::string(field) + "'");
    }
    return out;
}

}  // namespace

FrequencyTable parse_frequency_csv(std::string_view text, std::string label) {
    std::vector<FrequencyTable::Entry> entries;
    int line_no = 0;
    bool saw_header = false;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        std::string_view line = text.substr(pos, eol == std::string_view::npos
                                                     ? std::string_view::npos
                                                     : eol - pos);
        pos = (eol == std::string_view::npos) ? text.size() + 1 : eol + 1;
        if (!line.empty() && line.back() == '\r') {
            line.remove_suffix(1);
        }
        ++line_no;
        if (!saw_header) {
            if (line != "value,count") {
                throw std::invalid_argument("line 1: expected header 'value,count'");
            }
            saw_header = true;
            continue;
        }
        if (line.empty()) {
            continue;  // tolerate a trailing blank line
        }
        std::size_t comma = line.find(',');
        if (comma == std::string_view::npos || line.find(',', comma + 1) != std::string_view::npos) {
            throw std::invalid_argument("line " + std::to_string(line_no) +
                                        ": expected two comma-separated fields");
        }
        long long value = parse_integer_field(line.substr(0, comma), line_no, "value");
        long long count = parse_integer_field(line.substr(comma + 1), line_no, "count");
        if (value < 0) {
            throw std::invalid_argument("line " + std::to_string(line_no) + ": negative value");
        }
        if (count <= 0) {
            throw std::invalid_argument("line " + std::to_string(line_no) +
                                        ": count must be positive");
        }
        entries.push_back({value, count});
    }
    if (!saw_header) {
        throw std::invalid_argument("line 1: expected header 'value,count'");
    }
    if (entries.empty()) {
        throw std::invalid_argument("empty body: no data rows after the header");
    }
    return FrequencyTable::from_entries(std::move(entries), std::move(label));
}

std::string emit_frequency_csv(const FrequencyTable& table) {
    std::string out = "value,count\n";
    for (const auto& e : table.entries()) {
        out += std::to_string(e.value);
        out += ',';
        out += std::to_string(e.count);
        out += '\n';
    }
    return out;
}

}  // namespace dgp
