#pragma once

#include <map>
#include <string>
#include <vector>

#include "amicus/arith.hpp"

namespace amicus {

/// How high the power column runs for each prime when regenerating the
/// classical factored divisor-sum tables.
struct ExponentSchedule {
    std::map<u64, unsigned> per_prime;  // explicit maxima for small primes
    unsigned default_exponent = 3;      // every other prime

    unsigned max_exponent(u64 prime) const {
        auto it = per_prime.find(prime);
        return it == per_prime.end() ? default_exponent : it->second;
    }

    /// The schedule of the printed tables: deep columns for the small primes,
    /// cubes for everything else up to 1000.
    static ExponentSchedule classical();
};

struct TableRow {
    u64 prime = 2;
    unsigned exponent = 1;
    FactoredInteger sigma;  // sigma(prime^exponent), factored
};

/// One row per (p, k) with p <= prime_bound and 1 <= k <= schedule max,
/// ordered by (p, k).
std::vector<TableRow> generate_table(u64 prime_bound, const ExponentSchedule& schedule);

enum class TableFormat { Csv, Json, Text };

/// csv: "prime,exponent,sigma_value,sigma_factored" rows; text: the classical
/// two-column number / divisor-sum layout.
std::string render_table(const std::vector<TableRow>& rows, TableFormat format);

/// Line-by-line differences between the csv rendering and a reference file;
/// empty means the regenerated table matches the transcription exactly.
std::vector<std::string> diff_table(const std::vector<TableRow>& rows,
                                    const std::string& reference_path);

}  // namespace amicus
