#pragma once

#include <string>
#include <vector>

#include "idlat/audit.hpp"

namespace idlat {

/// One output field. JSONL quotes string-kind values; CSV writes all
/// values bare (none of the schemas ever contain a comma or a quote).
struct Field {
    std::string name;
    std::string value;
    bool is_string;
};

using Record = std::vector<Field>;

std::string csv_header(const Record& r);
std::string csv_row(const Record& r);
std::string jsonl_row(const Record& r);

std::string band_str(Band b);
std::string s_class_str(SClass c);

/// The census schema:
/// D,a,b,lambda1_sq,alpha,beta,det_sq,semistable,s_class,band,counterexample
Record census_record(const VerdictRecord& v, Band band, bool counterexample);
Record census_record(const CensusRow& row);

/// The census schema's header line.
const std::string& census_csv_header();

/// Strict parse of one census CSV row back into a Record (schema order,
/// integer fields integral, enums in range). csv_row(parse(line)) == line.
Record parse_census_csv(const std::string& line);

}  // namespace idlat
