#include <stdexcept>
#include <random>
#include <string>

#include "dgp/datasets.hpp"
#include "dgp/frequency_table.hpp"
#include "doctest.h"

using dgp::FrequencyTable;

TEST_SUITE_BEGIN("dataio");

TEST_CASE("parse basic tables") {
    const auto t = dgp::parse_frequency_csv("value,count\n3,525\n4,209\n");
    CHECK(t.entries().size() == 2);
    CHECK(t.total() == 734);
    CHECK(t.count_at(3) == 525);

    const auto single = dgp::parse_frequency_csv("value,count\n0,1\n");
    CHECK(single.entries().size() == 1);
    CHECK(single.min_value() == 0);

    // duplicates merge with summed counts
    const auto merged = dgp::parse_frequency_csv("value,count\n5,2\n5,3\n");
    CHECK(merged.entries().size() == 1);
    CHECK(merged.count_at(5) == 5);

    // CRLF and missing trailing newline both accepted
    CHECK(dgp::parse_frequency_csv("value,count\r\n1,2\r\n").total() == 2);
    CHECK(dgp::parse_frequency_csv("value,count\n1,2").total() == 2);
}

TEST_CASE("parse diagnostics carry line numbers") {
    auto message_of = [](const char* text) {
        try {
            dgp::parse_frequency_csv(text);
        } catch (const std::invalid_argument& e) {
            return std::string(e.what());
        }
        return std::string("no error");
    };
    CHECK(message_of("count,value\n1,2\n").find("header") != std::string::npos);
    CHECK(message_of("value,count\n1,2\nx,3\n").find("line 3") != std::string::npos);
    CHECK(message_of("value,count\n1,2.5\n").find("line 2") != std::string::npos);
    CHECK(message_of("value,count\n-1,2\n").find("negative") != std::string::npos);
    CHECK(message_of("value,count\n1,0\n").find("positive") != std::string::npos);
    CHECK(message_of("value,count\n").find("empty body") != std::string::npos);
    CHECK(message_of("value,count\n1\n").find("two comma-separated") != std::string::npos);
}

TEST_CASE("emit is deterministic and round-trips") {
    const auto t = dgp::parse_frequency_csv("value,count\n5,2\n0,4\n5,3\n");
    CHECK(dgp::emit_frequency_csv(t) == "value,count\n0,4\n5,5\n");
    for (const auto& name : dgp::bundled_names()) {
        const auto table = dgp::bundled(name);
        CHECK(dgp::parse_frequency_csv(dgp::emit_frequency_csv(table)) == table);
    }
}

TEST_CASE("round-trip on randomly generated tables") {
    std::mt19937_64 rng(0xC5C5);
    for (int i = 0; i < 200; ++i) {
        std::vector<FrequencyTable::Entry> entries;
        const int m = 1 + static_cast<int>(rng() % 40);
        for (int j = 0; j < m; ++j) {
            entries.push_back({static_cast<long long>(rng() % 10000),
                               1 + static_cast<long long>(rng() % 500)});
        }
        const auto t = FrequencyTable::from_entries(entries);
        CHECK(dgp::parse_frequency_csv(dgp::emit_frequency_csv(t)) == t);
    }
}

TEST_CASE("from_entries validation") {
    CHECK_THROWS_AS(FrequencyTable::from_entries({}), std::invalid_argument);
    CHECK_THROWS_AS(FrequencyTable::from_entries({{-1, 3}}), std::invalid_argument);
    CHECK_THROWS_AS(FrequencyTable::from_entries({{2, 0}}), std::invalid_argument);
}

TEST_CASE("bundled datasets match the printed tables") {
    const auto a2003 = dgp::bundled("accidents_2003");
    CHECK(a2003.entries().size() == 17);
    CHECK(a2003.total() == 958);
    CHECK(a2003.min_value() == 3);
    CHECK(a2003.max_value() == 39);

    const auto d2003 = dgp::bundled("deaths_2003");
    const std::vector<FrequencyTable::Entry> expected = {
        {0, 797}, {1, 126}, {2, 19}, {3, 12}, {4, 2}, {6, 2}};
    CHECK(d2003.entries() == expected);

    const auto d2007 = dgp::bundled("deaths_2007");
    const std::vector<FrequencyTable::Entry> expected7 = {
        {0, 693}, {1, 92}, {2, 12}, {3, 4}, {6, 1}};
    CHECK(d2007.entries() == expected7);
    CHECK(d2007.total() == 802);

    const auto a2004 = dgp::bundled("accidents_2004");
    CHECK(a2004.max_value() == 49);
    CHECK(a2004.count_at(49) == 1);

    CHECK_THROWS_AS(dgp::bundled("nope"), std::invalid_argument);
    try {
        dgp::bundled("nope");
    } catch (const std::invalid_argument& e) {
        CHECK(std::string(e.what()).find("accidents_2003") != std::string::npos);
    }
}

TEST_CASE("catalog totals cross-check the yearly registry") {
    long long accidents_sum = 0;
    long long deaths_sum = 0;
    for (const auto& year : dgp::blackspot_years()) {
        const auto acc = dgp::bundled("accidents_" + std::to_string(year.year));
        const auto dth = dgp::bundled("deaths_" + std::to_string(year.year));
        CHECK(acc.total() == year.blackspots);
        CHECK(dth.total() == year.blackspots);
        long long acc_weighted = 0;
        for (const auto& e : acc.entries()) acc_weighted += e.value * e.count;
        long long dth_weighted = 0;
        for (const auto& e : dth.entries()) dth_weighted += e.value * e.count;
        CHECK(acc_weighted == year.accidents);
        CHECK(dth_weighted == year.deaths);
        accidents_sum += acc_weighted;
        deaths_sum += dth_weighted;
    }
    CHECK(accidents_sum == 16552);
    CHECK(deaths_sum == 895);
    CHECK(dgp::bundled_names().size() == 10);
}

TEST_SUITE_END();
