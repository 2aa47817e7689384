#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "gtt/classify.hpp"
#include "gtt/fixpoint.hpp"
#include "gtt/fragment.hpp"
#include "gtt/suites.hpp"

namespace gtt {

// Report builders. All JSON uses ordered maps and carries no timestamps,
// so a rerun with the same inputs is byte identical.
using Json = nlohmann::ordered_json;

Json fragment_report(const Fragment& f);
Json fixpoint_report(const Fragment& f, const FixpointTrace& tr, const Classification& cls);
Json suites_report(const std::vector<SuiteReport>& reports);
Json query_report(const Fragment& f, const FixpointTrace& tr, const Classification& cls,
                  const std::string& query, std::int32_t idx);

std::string render_text(const Json& report);

}  // namespace gtt
