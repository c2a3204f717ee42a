#pragma once

#include "json.hpp"

#include "coxkit/chow.hpp"
#include "coxkit/coxeter.hpp"
#include "coxkit/fan.hpp"
#include "coxkit/jordan.hpp"
#include "coxkit/matrix.hpp"
#include "coxkit/tables.hpp"

namespace coxkit {

/// JSON array of {"eigenvalue": "p/q", "size": k, "multiplicity": m} in
/// canonical block order.
nlohmann::ordered_json to_ordered_json(const JordanType& type);

/// Per-degree coordinate vectors of exact "p/q" strings.
nlohmann::ordered_json to_ordered_json(const ChowClass& chow_class);

/// Matrix as rows of exact "p/q" strings.
nlohmann::ordered_json to_ordered_json(const RationalMatrix& matrix);

nlohmann::ordered_json to_ordered_json(const LefschetzReport& report);

/// {"name", "m", "n", "eigenvalue", "coxeter_polynomial", "verified",
///  "jordan", "betti", "predicted_jordan", "cone_count_jordan",
///  "betti_roundtrip", "lefschetz", "cross_check"}.
nlohmann::ordered_json to_ordered_json(const CoxeterReport& report);

nlohmann::ordered_json to_ordered_json(const TableResult& result);

std::string cross_check_text(CrossCheck check);

}  // namespace coxkit
