#ifndef CELL24_CENSUS_HPP
#define CELL24_CENSUS_HPP

#include <istream>
#include <optional>
#include <string>
#include <vector>

#include "cell24/report.hpp"

namespace cell24 {

/// One line of a census file: "[id] CODE" with '#' comments and blank lines
/// skipped. A malformed line is kept with its error instead of aborting the
/// batch.
struct CensusEntry {
    std::optional<long long> id;
    std::string code;
    int line = 0;
    std::optional<std::string> error;  // set when the line or code failed to parse
};

std::vector<CensusEntry> parse_census(std::istream& in);

/// Batch report: one record per entry (full_report for parseable codes, the
/// error otherwise), in input order, plus summary counts.
Json census_report(const std::vector<CensusEntry>& entries);

}  // namespace cell24

#endif
