#include "amicus/catalogue.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace amicus {
namespace {

#ifndef AMICUS_DEFAULT_DATA_DIR
#define AMICUS_DEFAULT_DATA_DIR "data"
#endif

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

// value kept as the product of the printed tokens, even when a base is not
// prime (the one flawed entry is part of the record)
u128 printed_value(const std::string& text) {
    u128 value = 1;
    std::stringstream ss(text);
    std::string term;
    while (std::getline(ss, term, '*')) {
        term = trim(term);
        std::size_t caret = term.find('^');
        u128 base = parse_u128(caret == std::string::npos ? term : term.substr(0, caret));
        unsigned exp = caret == std::string::npos
                           ? 1
                           : static_cast<unsigned>(parse_u128(term.substr(caret + 1)));
        value = checked_mul(value, checked_pow(base, exp));
    }
    return value;
}

std::vector<CatalogueEntry> load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("amicus: cannot open catalogue file " + path);
    std::vector<CatalogueEntry> out;
    std::string line;
    while (std::getline(in, line)) {
        line = trim(line);
        if (line.empty() || line[0] == '#') continue;
        std::vector<std::string> fields;
        std::size_t pos = 0;
        for (int i = 0; i < 4; ++i) {
            std::size_t bar = line.find('|', pos);
            if (bar == std::string::npos)
                throw std::runtime_error("amicus: malformed catalogue line: " + line);
            fields.push_back(trim(line.substr(pos, bar - pos)));
            pos = bar + 1;
        }
        fields.push_back(trim(line.substr(pos)));
        CatalogueEntry entry;
        entry.label = fields[0];
        entry.printed_m = fields[1];
        entry.printed_n = fields[2];
        entry.m = FactoredInteger::of(printed_value(fields[1]));
        entry.n = FactoredInteger::of(printed_value(fields[2]));
        if (fields[3] == "valid")
            entry.expected_valid = true;
        else if (fields[3] == "invalid")
            entry.expected_valid = false;
        else
            throw std::runtime_error("amicus: bad validity flag '" + fields[3] + "' in " + path);
        entry.note = fields[4];
        out.push_back(std::move(entry));
    }
    return out;
}

EntryResult check(const CatalogueEntry& entry) {
    EntryResult r;
    r.label = entry.label;
    r.expected_valid = entry.expected_valid;
    r.sigma_m = sigma(entry.m);
    r.sigma_n = sigma(entry.n);
    r.sum = checked_add(entry.m.value(), entry.n.value());
    r.pass = entry.m.value() != entry.n.value() && r.sigma_m == r.sum && r.sigma_n == r.sum;
    if (!r.pass) {
        if (r.sigma_m != r.sum)
            r.failure = "sigma(m) = " + to_string(r.sigma_m) + " != m+n = " + to_string(r.sum);
        else if (r.sigma_n != r.sum)
            r.failure = "sigma(n) = " + to_string(r.sigma_n) + " != m+n = " + to_string(r.sum);
        else
            r.failure = "m = n";
    }
    return r;
}

}  // namespace

std::string data_dir() {
    if (const char* env = std::getenv("AMICUS_DATA_DIR")) return env;
    return AMICUS_DEFAULT_DATA_DIR;
}

std::vector<CatalogueEntry> catalogue_pairs() { return load(data_dir() + "/catalogue.txt"); }

std::vector<CatalogueEntry> catalogue_errata() { return load(data_dir() + "/catalogue_errata.txt"); }

VerificationReport verify_catalogue() {
    VerificationReport report;
    report.as_expected = true;
    for (const auto& entry : catalogue_pairs()) {
        EntryResult r = check(entry);
        report.valid_count += r.pass;
        report.invalid_count += !r.pass;
        report.as_expected = report.as_expected && r.pass == entry.expected_valid;
        report.entries.push_back(std::move(r));
    }
    for (const auto& entry : catalogue_errata()) {
        EntryResult r = check(entry);
        report.as_expected = report.as_expected && r.pass == entry.expected_valid;
        report.errata.push_back(std::move(r));
    }
    return report;
}

}  // namespace amicus
