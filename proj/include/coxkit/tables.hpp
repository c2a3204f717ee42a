#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "coxkit/jtensor.hpp"

namespace coxkit {

struct TableRow {
    std::string label;
    std::string expected;
    std::string computed;
    bool ok = true;
    std::string note;
};

struct TableResult {
    std::string table;
    std::vector<TableRow> rows;
    std::size_t cases_checked = 0;
    std::size_t mismatches = 0;

    bool ok() const { return mismatches == 0; }
};

const std::vector<std::string>& reproduce_table_names();

/// Regenerates one of the five bundled verification tables from the
/// built-in fixtures and diffs it against the embedded expected values:
///   del-pezzo  five toric del Pezzo surfaces, toric and surface routes
///   fano3      the toric Fano threefold list; bundle rows that cannot be
///              assembled from the fixtures are reported, not skipped
///   thm410     rational-surface sweep t = 0..12 over both bases, with the
///              two printed 12x12 matrices compared entry by entry
///   prop54     multi-factor tensor closed form against the Kronecker
///              oracle for every factor multiset with total size <= 12
///   thm31      nilpotency certificate of the Coxeter matrix on every
///              bundled fan
/// The dimension cap only affects the oracle sweep.
TableResult reproduce_table(const std::string& name,
                            std::size_t dimension_cap = kDefaultDimensionCap);

}  // namespace coxkit
