#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "tcl/families.hpp"
#include "tcl/frey.hpp"
#include "tcl/sieve.hpp"

namespace tcl {

// 128-bit integers are written as JSON numbers when they fit in 64 bits and
// as decimal strings otherwise; the parsers accept both. indent < 0 gives a
// single line.
std::string to_json(const ClassificationRecord& rec, int indent = -1);
std::string to_json(const ExclusionReport& rep, int indent = -1);
std::string to_json(const FreySolution& s, int indent = -1);

ClassificationRecord classification_from_json(std::string_view text);
ExclusionReport exclusion_report_from_json(std::string_view text);
FreySolution frey_solution_from_json(std::string_view text);

// header x,count_S,count_S0,count_T
std::string census_csv(const std::vector<CensusRow>& rows);
std::vector<CensusRow> parse_census_csv(std::string_view text);

// one line per report: q,modulus,"r1 r2 ..." using the reduced modulus
std::string exclusion_table_csv(const std::vector<ExclusionReport>& reports);

}  // namespace tcl
