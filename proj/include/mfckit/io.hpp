#pragma once

#include <string>

#include "json.hpp"
#include "mfckit/category.hpp"

namespace mfc {

using nlohmann::json;

// JSON text with every floating value printed to 17 significant digits.
std::string dump17(const json& j, int indent = 2);

json to_json(cx z);
json to_json(const Mat& m);
json to_json(const Vec& v);

// Serialize category data in the bundled file format.
json category_to_json(const Category& C);

}  // namespace mfc
