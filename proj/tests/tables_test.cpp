#include <doctest.h>

#include <sstream>

#include "amicus/catalogue.hpp"
#include "amicus/tables.hpp"

using namespace amicus;

namespace {

const TableRow& find_row(const std::vector<TableRow>& rows, u64 p, unsigned e) {
    for (const auto& row : rows)
        if (row.prime == p && row.exponent == e) return row;
    throw std::out_of_range("row not generated");
}

}  // namespace

TEST_CASE("generated rows match the printed corrections") {
    auto rows = generate_table(1000, ExponentSchedule::classical());
    CHECK(find_row(rows, 2, 9).sigma.to_string() == "3*11*31");
    CHECK(find_row(rows, 7, 10).sigma.to_string() == "1123*293459");
    CHECK(find_row(rows, 79, 1).sigma.to_string() == "2^4*5");
    CHECK(find_row(rows, 5, 5).sigma.to_string() == "2*3^2*7*31");
    CHECK(find_row(rows, 997, 3).sigma.to_string() == "2^2*5*499*99401");
    CHECK_THROWS_AS(find_row(rows, 2, 37), std::out_of_range);
    CHECK_THROWS_AS(find_row(rows, 23, 5), std::out_of_range);
    CHECK(find_row(rows, 29, 3).prime == 29);
}

TEST_CASE("csv rendering is stable and exact") {
    auto rows = generate_table(5, ExponentSchedule{{{2, 3}, {3, 2}, {5, 5}}, 3});
    std::string csv = render_table(rows, TableFormat::Csv);
    CHECK(csv.find("2,3,15,3*5\n") != std::string::npos);
    CHECK(csv.find("5,5,3906,2*3^2*7*31\n") != std::string::npos);
    CHECK(csv.rfind("prime,exponent,sigma_value,sigma_factored\n", 0) == 0);

    CHECK(render_table({}, TableFormat::Csv) == "prime,exponent,sigma_value,sigma_factored\n");

    std::string text = render_table(rows, TableFormat::Text);
    CHECK(text.find("2^3") != std::string::npos);
    CHECK(text.find("3*5") != std::string::npos);
}

TEST_CASE("the full table diffs clean against the transcription") {
    auto rows = generate_table(1000, ExponentSchedule::classical());
    CHECK(rows.size() == 577);
    auto diffs = diff_table(rows, data_dir() + "/divisor_sum_tables.csv");
    for (const auto& d : diffs) MESSAGE(d);
    CHECK(diffs.empty());
}

TEST_CASE("a deviating schedule is reported line by line") {
    ExponentSchedule shallow = ExponentSchedule::classical();
    shallow.per_prime[2] = 35;  // drop the last power of two
    auto diffs = diff_table(generate_table(1000, shallow), data_dir() + "/divisor_sum_tables.csv");
    CHECK(diffs.size() == 1);
    CHECK(diffs[0].find("2,36") != std::string::npos);
}
