#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "birmax/classify.hpp"
#include "birmax/conjugacy.hpp"
#include "birmax/cyclo.hpp"

namespace birmax {

using Json = nlohmann::ordered_json;

Json report_json(const std::string& input, const ProjBundle& normal, const AutReport& r);
Json degree_json(const DegreeReport& r);
Json descriptor_json(const MfsDescriptor& d);
Json catalog_json(const Catalog& c);
Json heisenberg_json(bool dualized, const HeisenbergReport& r);

/// One "key: value" line per field of a JSON object, nested arrays joined
/// by commas.
std::string render_text(const Json& object);

}  // namespace birmax
