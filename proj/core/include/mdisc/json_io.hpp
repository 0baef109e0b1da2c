#pragma once

#include <string>

#include "mdisc/constructions.hpp"
#include "mdisc/entangled.hpp"
#include "mdisc/povm.hpp"

namespace mdisc {

// Ensemble document:
//   { "dim": d, "priors": [p(x)...],
//     "measurements": [ per setting x: [ per outcome a:
//         [ [re, im], ... ]   // dim*dim entries, row-major
//     ] ] }
// Doubles are printed at full (shortest round-trip) precision, so a document
// re-read through parse reproduces the ensemble exactly.
std::string ensemble_to_json(const MeasurementEnsemble& ens, int indent = -1);
MeasurementEnsemble ensemble_from_json(const std::string& text);

// Basis document: { "dim": d, "vectors": [ [ [re, im], ... ] per vector ] }.
std::string basis_to_json(const Basis& basis, int indent = -1);
Basis basis_from_json(const std::string& text);

// State document: { "dim_A": , "dim_B": , "matrix": [ [re, im], ... ] row-major }.
std::string bipartite_to_json(const BipartiteDensity& rho, int indent = -1);
BipartiteDensity bipartite_from_json(const std::string& text);

}  // namespace mdisc
