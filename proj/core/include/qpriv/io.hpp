#pragma once

#include <string>

#include "qpriv/privacy.hpp"

namespace qpriv {

// Scenario documents are JSON:
//   {
//     "initial": {"dims": [2,2,2], "vector": [[re,im], ...]},
//     "legs": [{"name": "B", "channel": {"kind": "depolarizing",
//                                        "params": {"p": 0.25}}},
//              {"name": "C", "channel": {"kraus": [[[..]], ...]}}],
//     "ensembles": [{"leg": "B", "members": [{"p": 0.5, "state": {...}}]}]
//   }
// State literals carry "dims" plus either "vector" ([re,im] pairs) or
// "density" (rows of [re,im] pairs), row-major. Parse failures raise
// ValidationError with the offending field or byte position.

Scenario parse_scenario(const std::string& text, const Tolerances& tol = {});
Scenario load_scenario(const std::string& path, const Tolerances& tol = {});

PureState parse_pure_state(const std::string& text, const Tolerances& tol = {});
DensityMatrix parse_density(const std::string& text, const Tolerances& tol = {});
KrausChannel parse_channel(const std::string& text, const Tolerances& tol = {});

std::string serialize_scenario(const Scenario& s);

// Fixed rendering for every number in a report: 12 significant digits.
std::string format_number(double x);

}  // namespace qpriv
