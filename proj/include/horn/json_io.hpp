#pragma once

#include <json.hpp>

#include "horn/experiments.hpp"
#include "horn/polytope.hpp"
#include "horn/triples.hpp"

namespace horn {

/// {"p": ..., "ranks": [{"p", "r", "triples": [[[I],[J],[K]], ...]}, ...]}
nlohmann::json table_to_json(const TripleTable& table);

/// Inverse of table_to_json; validates shape and the per-triple sum identity.
TripleTable table_from_json(const nlohmann::json& j);

nlohmann::json polytope_to_json(const PolytopeSpec& spec);

nlohmann::json report_to_json(const RunReport& report);

}  // namespace horn
