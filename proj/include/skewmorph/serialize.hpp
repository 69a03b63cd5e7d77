#pragma once

// JSON records (one object per line in streams), CSV and plaintext renderings.

#include <string>
#include <vector>

#include <json.hpp>

#include "skewmorph/bicyclic.hpp"
#include "skewmorph/dessin.hpp"
#include "skewmorph/reciprocal.hpp"
#include "skewmorph/singularity.hpp"
#include "skewmorph/skew.hpp"

namespace skewmorph {

using Json = nlohmann::ordered_json;

/// {"n":8,"perm":[0,3,2,5,4,7,6,1],"order":4,"pi":[1,3,1,3,1,3,1,3]}
Json to_json(const SkewMorphism& s);

/// Both skew-morphism records plus "pi_ext", "pi_star_ext" and "type".
/// Mirror-convention pairs also carry "convention":"mirror".
Json to_json(const ReciprocalPair& pair);

/// The pair record plus "abelian" and "order_ab".
Json triple_to_json(const BicyclicTriple& t);

Json to_json(const DessinTopology& topo);
Json to_json(const DessinClassification& c);
Json to_json(const SingularityReport& r);

/// Rebuilds and re-verifies a record. Throws std::invalid_argument if the
/// record is malformed or describes something that is not a skew-morphism.
SkewMorphism skew_from_json(const Json& record);

/// Same for pair records; the stored tables must match the recomputed ones.
ReciprocalPair pair_from_json(const Json& record);

/// Image table on one line, e.g. [0,3,2,5,4,7,6,1].
std::string permutation_json(const Permutation& p);

/// Power values grouped by the cycles of phi, e.g. [1][3 3 3 3][1][1][1]
/// for (0)(1 3 5 7)(2)(4)(6).
std::string cycle_power_string(const SkewMorphism& s);

/// Space-separated values, for CSV cells and text tables.
std::string join(const std::vector<std::int32_t>& values);

/// Header row "" followed by the normal forms "y.x", then one row per element.
std::string cayley_csv(const BicyclicTriple& t);

std::string classification_text(const DessinClassification& c);

/// Rows m = 1..max, columns n = 1..max, cell "S" when singular, else the
/// pair count. `reports` holds the cells in row-major order.
std::string singular_grid_csv(const std::vector<SingularityReport>& reports, std::int32_t max);

}  // namespace skewmorph
