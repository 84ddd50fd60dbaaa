#pragma once

#include <json.hpp>

#include "magnus/analysis.hpp"
#include "magnus/chains.hpp"
#include "magnus/group_ring.hpp"
#include "magnus/pairing.hpp"
#include "magnus/rep_matrix.hpp"

namespace magnus {

using nlohmann::json;

/// Array of { "exps": [..2g ints..], "coeff": int } in canonical term order.
/// Coefficients outside the 64-bit range are emitted as decimal strings.
json elem_to_json(const GroupRingElem& x);
GroupRingElem elem_from_json(int genus, const json& j);

/// { "genus": g, "coords": [ 2g elements ] }, alpha block then beta block.
json chain_to_json(const Chain& c);
Chain chain_from_json(const json& j);

/// Row-major 2g x 2g array of element arrays.
json matrix_to_json(const RepMatrix& m);
RepMatrix matrix_from_json(int genus, const json& j);

/// Versioned golden/cache format: genus, window radius, convention flags and
/// a map "sigma/i/j" -> element.
json table_to_json(const PairingTable& t);
/// Validates convention flags against this build and re-runs the table
/// invariants after loading.
PairingTable table_from_json(const json& j);

json verdict_to_json(const PairVerdict& v);
json norelation_report_to_json(const NoRelationReport& r);

} // namespace magnus
