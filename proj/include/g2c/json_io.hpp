#pragma once

#include <json.hpp>

#include "g2c/contractions.hpp"
#include "g2c/invariants.hpp"
#include "g2c/nice_sets.hpp"

namespace g2c {

using Json = nlohmann::json;

/// Eta maps serialize as [{"edge": "i,j", "value": "p/q(+r/s*i)"}].
Json eta_to_json(const AdmissibleMap& eta);
AdmissibleMap eta_from_json(const Json& j);

/// Octonions as length-8 scalar-string arrays.
Json octonion_to_json(const Octonion& x);
Octonion octonion_from_json(const Json& j);

/// Matrices (e.g. derivations) as row-major grids of scalar strings.
Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j);

/// Collineations as length-7 arrays [sigma(1), ..., sigma(7)].
Json collineation_to_json(const Collineation& sigma);
Collineation collineation_from_json(const Json& j);

Json profile_to_json(const InvariantProfile& p);
Json label_to_json(const EquivClassLabel& label);

/// Nonzero structure constants of g2 as (i, j, k, value) quadruples over
/// the canonical basis order (x1, y1, ..., x7, y7), 0-based indices.
Json g2_table_json();
std::string g2_table_csv();

/// Full enumeration: per set its mask, cardinality, class id and the
/// class's orbit/stabilizer sizes.
Json nice_enumeration_json(const std::vector<EdgeSet>& all_nice, const std::vector<NiceClass>& classes);
Json nice_classes_json(const std::vector<NiceClass>& classes);

Json edge_set_to_json(EdgeSet t);

}  // namespace g2c
