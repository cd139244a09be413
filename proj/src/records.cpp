#include "idlat/records.hpp"

#include <sstream>

namespace idlat {

namespace {

std::string join(const Record& r, bool names) {
    std::string out;
    for (std::size_t i = 0; i < r.size(); ++i) {
        if (i) out += ',';
        out += names ? r[i].name : r[i].value;
    }
    return out;
}

bool is_int_literal(const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = s[0] == '-' ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (s[i] < '0' || s[i] > '9') return false;
    return true;
}

constexpr const char* kCensusFields[11] = {"D",      "a",          "b",      "lambda1_sq",
                                           "alpha",  "beta",       "det_sq", "semistable",
                                           "s_class", "band",       "counterexample"};

}  // namespace

std::string csv_header(const Record& r) {
    return join(r, true);
}

std::string csv_row(const Record& r) {
    return join(r, false);
}

std::string jsonl_row(const Record& r) {
    std::string out = "{";
    for (std::size_t i = 0; i < r.size(); ++i) {
        if (i) out += ',';
        out += '"' + r[i].name + "\":";
        out += r[i].is_string ? '"' + r[i].value + '"' : r[i].value;
    }
    out += '}';
    return out;
}

std::string band_str(Band b) {
    switch (b) {
        case Band::StableBand: return "stable";
        case Band::UnstableBand: return "unstable";
        default: return "none";
    }
}

std::string s_class_str(SClass c) {
    switch (c) {
        case SClass::S1: return "S1";
        case SClass::S2: return "S2";
        default: return "S3";
    }
}

Record census_record(const VerdictRecord& v, Band band, bool counterexample) {
    const std::string values[11] = {
        v.pair.d.get_str(),
        v.pair.a.get_str(),
        v.pair.b.get_str(),
        v.shortest.lambda1_sq.get_str(),
        v.shortest.alpha.get_str(),
        v.shortest.beta.get_str(),
        v.det_sq.get_str(),
        v.semistable ? "true" : "false",
        s_class_str(v.s_class),
        band_str(band),
        counterexample ? "true" : "false",
    };
    Record r;
    for (int i = 0; i < 11; ++i) r.push_back({kCensusFields[i], values[i], i == 8 || i == 9});
    return r;
}

const std::string& census_csv_header() {
    static const std::string header = [] {
        std::string h;
        for (int i = 0; i < 11; ++i) {
            if (i) h += ',';
            h += kCensusFields[i];
        }
        return h;
    }();
    return header;
}

Record census_record(const CensusRow& row) {
    return census_record(row.record, row.band, row.counterexample);
}

Record parse_census_csv(const std::string& line) {
    std::vector<std::string> parts;
    std::stringstream ss(line);
    std::string item;
    while (std::getline(ss, item, ',')) parts.push_back(item);
    if (!line.empty() && line.back() == ',') parts.push_back("");
    if (parts.size() != 11)
        throw std::invalid_argument("parse_census_csv: expected 11 fields, got " +
                                    std::to_string(parts.size()));

    const auto* names = kCensusFields;
    for (int i = 0; i < 7; ++i)
        if (!is_int_literal(parts[i]))
            throw std::invalid_argument(std::string("parse_census_csv: field ") + names[i] +
                                        " is not an integer");
    const auto check_bool = [&](int i) {
        if (parts[i] != "true" && parts[i] != "false")
            throw std::invalid_argument(std::string("parse_census_csv: field ") + names[i] +
                                        " is not a boolean");
    };
    check_bool(7);
    check_bool(10);
    if (parts[8] != "S1" && parts[8] != "S2" && parts[8] != "S3")
        throw std::invalid_argument("parse_census_csv: bad s_class");
    if (parts[9] != "stable" && parts[9] != "unstable" && parts[9] != "none")
        throw std::invalid_argument("parse_census_csv: bad band");

    Record r;
    for (int i = 0; i < 11; ++i) r.push_back({names[i], parts[i], i == 8 || i == 9});
    return r;
}

}  // namespace idlat
