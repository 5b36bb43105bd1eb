#include "amicus/tables.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace amicus {

ExponentSchedule ExponentSchedule::classical() {
    ExponentSchedule s;
    s.per_prime = {{2, 36}, {3, 15}, {5, 9}, {7, 10}, {11, 9}, {13, 7}, {17, 5}, {19, 5}, {23, 4}};
    s.default_exponent = 3;
    return s;
}

std::vector<TableRow> generate_table(u64 prime_bound, const ExponentSchedule& schedule) {
    if (prime_bound < 2) throw std::domain_error("amicus: table bound must be at least 2");
    std::vector<TableRow> rows;
    for (std::uint32_t p : small_primes()) {
        if (p > prime_bound) break;
        unsigned max_e = schedule.max_exponent(p);
        if (max_e < 1) throw std::domain_error("amicus: schedule exponents must be >= 1");
        FactoredInteger power;
        for (unsigned e = 1; e <= max_e; ++e) {
            power = power.times_prime(p);
            rows.push_back({p, e, sigma_factored(power)});
        }
    }
    return rows;
}

std::string render_table(const std::vector<TableRow>& rows, TableFormat format) {
    std::ostringstream out;
    switch (format) {
        case TableFormat::Csv:
            out << "prime,exponent,sigma_value,sigma_factored\n";
            for (const auto& row : rows)
                out << row.prime << ',' << row.exponent << ',' << to_string(row.sigma.value()) << ','
                    << row.sigma.to_string() << '\n';
            break;
        case TableFormat::Json: {
            out << "[";
            bool first = true;
            for (const auto& row : rows) {
                out << (first ? "" : ",") << "\n  {\"prime\": " << row.prime
                    << ", \"exponent\": " << row.exponent << ", \"sigma_value\": "
                    << to_string(row.sigma.value()) << ", \"sigma_factored\": \""
                    << row.sigma.to_string() << "\"}";
                first = false;
            }
            out << "\n]\n";
            break;
        }
        case TableFormat::Text: {
            out << "Num.         | Divisor sum\n";
            out << "-------------+--------------------------\n";
            for (const auto& row : rows) {
                std::string num = std::to_string(row.prime);
                if (row.exponent > 1) num += "^" + std::to_string(row.exponent);
                out << num << std::string(num.size() < 13 ? 13 - num.size() : 1, ' ') << "| "
                    << row.sigma.to_string() << '\n';
            }
            break;
        }
    }
    return out.str();
}

namespace {

// "2,36,..." -> key "2,36"; keeps the comparison keyed by (prime, exponent)
// so one divergent row reports once rather than shifting everything after it
std::string row_key(const std::string& line) {
    std::size_t second = line.find(',', line.find(',') + 1);
    return second == std::string::npos ? line : line.substr(0, second);
}

}  // namespace

std::vector<std::string> diff_table(const std::vector<TableRow>& rows,
                                    const std::string& reference_path) {
    std::ifstream in(reference_path);
    if (!in) throw std::runtime_error("amicus: cannot open table transcription " + reference_path);
    std::map<std::string, std::string> transcribed;
    std::string line;
    std::getline(in, line);  // header
    std::vector<std::string> diffs;
    if (line != "prime,exponent,sigma_value,sigma_factored")
        diffs.push_back("transcription header differs: '" + line + "'");
    while (std::getline(in, line))
        if (!line.empty()) transcribed[row_key(line)] = line;
    std::istringstream generated(render_table(rows, TableFormat::Csv));
    std::getline(generated, line);  // header
    while (std::getline(generated, line)) {
        auto it = transcribed.find(row_key(line));
        if (it == transcribed.end()) {
            diffs.push_back("generated row '" + line + "' has no transcribed counterpart");
        } else {
            if (it->second != line)
                diffs.push_back("generated '" + line + "' vs transcribed '" + it->second + "'");
            transcribed.erase(it);
        }
    }
    for (const auto& [key, value] : transcribed)
        diffs.push_back("transcribed row '" + value + "' was not generated");
    return diffs;
}

}  // namespace amicus
