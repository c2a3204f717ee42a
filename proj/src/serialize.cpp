#include "coxkit/serialize.hpp"

namespace coxkit {

nlohmann::ordered_json to_ordered_json(const JordanType& type) {
    nlohmann::ordered_json blocks = nlohmann::ordered_json::array();
    for (const auto& b : type.blocks()) {
        nlohmann::ordered_json entry;
        entry["eigenvalue"] = to_string(b.eigenvalue);
        entry["size"] = b.size;
        entry["multiplicity"] = b.multiplicity;
        blocks.push_back(entry);
    }
    return blocks;
}

nlohmann::ordered_json to_ordered_json(const ChowClass& chow_class) {
    nlohmann::ordered_json degrees = nlohmann::ordered_json::array();
    for (const auto& level : chow_class.coords()) {
        nlohmann::ordered_json coords = nlohmann::ordered_json::array();
        for (const auto& c : level) coords.push_back(to_string(c));
        degrees.push_back(coords);
    }
    return degrees;
}

nlohmann::ordered_json to_ordered_json(const RationalMatrix& matrix) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < matrix.rows(); ++i) {
        nlohmann::ordered_json row = nlohmann::ordered_json::array();
        for (std::size_t j = 0; j < matrix.cols(); ++j) row.push_back(to_string(matrix.at(i, j)));
        rows.push_back(row);
    }
    return rows;
}

nlohmann::ordered_json to_ordered_json(const LefschetzReport& report) {
    nlohmann::ordered_json j;
    j["ok"] = report.ok;
    nlohmann::ordered_json levels = nlohmann::ordered_json::array();
    for (const auto& level : report.levels) {
        nlohmann::ordered_json e;
        e["from_degree"] = level.lower;
        e["to_degree"] = level.upper;
        e["rank"] = level.rank_found;
        e["required"] = level.rank_needed;
        e["ok"] = level.ok;
        levels.push_back(e);
    }
    j["levels"] = levels;
    return j;
}

std::string cross_check_text(CrossCheck check) {
    switch (check) {
        case CrossCheck::Match: return "MATCH";
        case CrossCheck::Mismatch: return "MISMATCH";
        case CrossCheck::NotApplicable: return "N/A";
    }
    return "N/A";
}

nlohmann::ordered_json to_ordered_json(const CoxeterReport& report) {
    nlohmann::ordered_json j;
    if (!report.name.empty()) j["name"] = report.name;
    j["m"] = report.m;
    j["n"] = report.n;
    j["eigenvalue"] = to_string(report.eigenvalue);
    j["coxeter_polynomial"] = report.polynomial.to_string();
    j["verified"] = report.polynomial.verified;
    j["jordan"] = to_ordered_json(report.jordan);
    j["betti"] = report.betti_numbers;
    j["predicted_jordan"] =
        report.predicted ? to_ordered_json(*report.predicted) : nlohmann::ordered_json();
    j["cone_count_jordan"] =
        report.cone_count_route ? to_ordered_json(*report.cone_count_route) : nlohmann::ordered_json();
    if (report.betti_roundtrip)
        j["betti_roundtrip"] = *report.betti_roundtrip;
    else
        j["betti_roundtrip"] = nlohmann::ordered_json();
    j["lefschetz"] = nlohmann::ordered_json();
    j["lefschetz"]["K"] = report.lefschetz_canonical;
    j["lefschetz"]["-K"] = report.lefschetz_anticanonical;
    j["lefschetz"]["detail"] = to_ordered_json(report.lefschetz_detail);
    j["cross_check"] = cross_check_text(report.cross_check);
    return j;
}

nlohmann::ordered_json to_ordered_json(const TableResult& result) {
    nlohmann::ordered_json j;
    j["table"] = result.table;
    j["cases_checked"] = result.cases_checked;
    j["mismatches"] = result.mismatches;
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto& row : result.rows) {
        nlohmann::ordered_json e;
        e["label"] = row.label;
        e["expected"] = row.expected;
        e["computed"] = row.computed;
        e["ok"] = row.ok;
        if (!row.note.empty()) e["note"] = row.note;
        rows.push_back(e);
    }
    j["rows"] = rows;
    return j;
}

}  // namespace coxkit
