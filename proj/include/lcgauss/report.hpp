#pragma once

#include <string>

#include "json.hpp"
#include "lcgauss/gaussmap.hpp"

namespace lcgauss {

/// Fixed field order: k1_plus, k2_plus, k1_minus, k2_minus, H_plus, H_minus,
/// K_plus, K_minus, H_vec_norm_sq, flags, tol.
nlohmann::ordered_json to_json(const CurvatureReport& r);

/// Column names matching csv_row; flags expand to five 0/1 columns.
std::string csv_header();
std::string csv_row(const CurvatureReport& r);

/// Serializes with every real printed as %.17g.
std::string dump_json(const nlohmann::ordered_json& j, int indent = 2);

}  // namespace lcgauss
