#pragma once

#include <string>

#include "json.hpp"
#include "qeur/apps.hpp"
#include "qeur/bounds.hpp"
#include "qeur/states.hpp"

namespace qeur::io {

using Json = nlohmann::ordered_json;

/// Malformed or inconsistent input documents.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Reads a JSON argument: inline when it starts with '{' or '[', otherwise a
/// file path.
Json load_json_argument(const std::string& arg);

/// {"family": {"name": ..., params}} or {"explicit": {"dA", "dB", "re", "im"}}.
StateFamilySpec parse_state(const Json& doc);

/// Accepts {"named": "sigma_x"|"sigma_y"|"sigma_z"}, {"bloch": [x,y,z]},
/// {"basis": {"re": [[...]], "im": [[...]]}} (rows are vector components,
/// columns are basis vectors) and {"ranked": 1|2|3}.
Json observable_argument(const std::string& arg);

/// Resolves an observable document. Ranked axes depend on the state.
ProjectiveObservable parse_observable(const Json& doc, const DensityMatrix& rho);

/// Short human label for an observable document ("sigma_x", "ranked1", ...).
std::string observable_label(const Json& doc);

/// The state in the explicit ingestion format.
Json state_to_json(const DensityMatrix& rho);

Json to_json(const BoundsReport& report);
Json to_json(const CorrelationReport& report);
Json to_json(const ValidationReport& report);
Json to_json(const ApplicationsReport& report);

/// Two aligned columns, one line per top-level field of a flat object.
std::string render_table(const Json& flat);

}  // namespace qeur::io
