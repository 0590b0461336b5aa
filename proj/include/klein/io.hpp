#pragma once

// Serialization: the JSON structure schema
//   {"points":[{"id":...,"tags":{...}},...], "lines":[[id,...],...],
//    "meta":{"params":[n,r,m,k]|null, "name":...}}
// plus DOT (bipartite Levi graph) and CSV ('+' incidence matrix) writers.

#include <iosfwd>
#include <map>
#include <optional>
#include <string>

#include <json.hpp>

#include "klein/fixtures.hpp"
#include "klein/incidence.hpp"

namespace klein {

nlohmann::json structure_to_json(
    const IncidenceStructure& s, const std::string& name,
    std::optional<long long> vacuous_line_size = std::nullopt,
    const std::map<std::string, nlohmann::json>& tags = {});

// Raises io_failure on schema violations; point tags are ignored.
IncidenceStructure structure_from_json(const nlohmann::json& j);

nlohmann::json certificate_to_json(const IsoCertificate& cert);
IsoCertificate certificate_from_json(const nlohmann::json& j);

// Levi graph: circles for points, boxes for lines, one edge per flag.
void write_levi_dot(std::ostream& os, const IncidenceStructure& s, const std::string& name);

// Generic incidence matrix: one row per line, one column per point, '+' for
// incident cells. Headers are the point/line labels.
void write_incidence_csv(std::ostream& os, const IncidenceStructure& s);

// The off-quadric matrix in the fixture's own row/column order: columns are
// table-1 indices 1..28, rows table-2 indices 1..56.
void write_off_structure_csv(std::ostream& os, const IncidenceStructure& off,
                             const PaperFixtures& fx);

} // namespace klein
