#pragma once

#include <string>
#include <vector>

#include "amicus/arith.hpp"

namespace amicus {

/// One line of the historical catalogue: the two members as printed (the
/// known-bad entry keeps its flawed base), plus the canonical factorizations.
struct CatalogueEntry {
    std::string label;  // roman numeral, or an erratum tag
    FactoredInteger m;
    FactoredInteger n;
    std::string printed_m;
    std::string printed_n;
    bool expected_valid = true;
    std::string note;
};

struct EntryResult {
    std::string label;
    u128 sigma_m = 0;
    u128 sigma_n = 0;
    u128 sum = 0;
    bool pass = false;
    bool expected_valid = true;
    std::string failure;  // which equality broke, when pass is false
};

struct VerificationReport {
    std::vector<EntryResult> entries;
    std::vector<EntryResult> errata;
    std::size_t valid_count = 0;
    std::size_t invalid_count = 0;
    bool as_expected = false;  // every entry matched its expected_valid flag
};

/// Directory holding catalogue.txt / catalogue_errata.txt /
/// divisor_sum_tables.csv: AMICUS_DATA_DIR if set, else the checked-in data/.
std::string data_dir();

/// The 61 catalogue entries as printed (with the later corrections), I..LXI.
std::vector<CatalogueEntry> catalogue_pairs();

/// Historical pairs that were published or implied but are not amicable.
std::vector<CatalogueEntry> catalogue_errata();

VerificationReport verify_catalogue();

}  // namespace amicus
