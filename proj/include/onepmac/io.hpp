#pragma once

#include <json.hpp>
#include <string>

#include "onepmac/coherence.hpp"
#include "onepmac/encoding.hpp"
#include "onepmac/inequality.hpp"
#include "onepmac/mac.hpp"
#include "onepmac/polytope.hpp"
#include "onepmac/state.hpp"
#include "onepmac/violation.hpp"

namespace onepmac {

using json = nlohmann::json;

// Parses text, turning syntax errors into ParseError with line/column.
json parse_json_text(const std::string& text, const std::string& source = "input");
json read_json_file(const std::string& path);

// MAC: {"inputs": [2,2], "output": 2, "probs": [...]}. Entries may be numbers
// or rational strings "p/q".
Mac mac_from_json(const json& j);
json to_json(const Mac& mac);
// Exact rational transition vector of a MAC document (numbers are rationalized).
RationalVector rational_probs_from_json(const json& j);

// Inequality: {"inputs", "output", "coeffs": [...], "bound": "p/q"}.
LinearInequality inequality_from_json(const json& j);
json to_json(const LinearInequality& ineq);

// Polytope: {"dim", "vertices": [["p/q", ...]], "facets": [{"normal": [...], "offset": "p/q"}]}.
RationalPolytope polytope_from_json(const json& j);
json to_json(const RationalPolytope& p);
json to_json(const Facet& f);

// State: {"dim": N, "re": [[...]], "im": [[...]]}.
OneParticleState state_from_json(const json& j);
json to_json(const OneParticleState& s);
json matrix_to_json(const CMatrix& m);
CMatrix matrix_from_json(const json& j, const std::string& what);

// Encoding strategies:
//   {"type": "phases", "phases": [[phi(input 0), phi(input 1), ...], ...]}
//   {"type": "product", "channels": [[{"branches": [{"w", "y": [re, im], "z": [re, im]}]}, ...], ...]}
//   {"type": "kraus", "inputs": [...], "groups": [{"parties": [1-based], "channels":
//       [{"kraus": [{"re", "im"}, ...]}, ...]}]}
Encoder encoder_from_json(const json& j);
json to_json(const Encoder& e);

json to_json(const ViolationReport& r);
json to_json(const WitnessReport& r);
json to_json(const CoherenceReport& r);
json to_json(const PhaseScanResult& r);
json to_json(const MembershipResult& r);
json to_json(const CensusReport& r);

}  // namespace onepmac
