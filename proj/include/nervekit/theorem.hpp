#pragma once

#include <cstdint>

#include <json.hpp>

#include "nervekit/cocycle.hpp"
#include "nervekit/corpus.hpp"
#include "nervekit/hocolim.hpp"

namespace nervekit {

/// Runs the whole comparison on one diagram at truncation `bound`:
///   diagram validation, S and its bisimplicial identities, diag S, W-bar S and Ner_I,
///   Phi, eta, Psi and Psi^{-1} as simplicial maps, Psi o Psi^{-1} = id = Psi^{-1} o Psi,
///   eta = Psi Phi, homology of both ends up to degree bound - 1 and the maps eta_* on it.
/// Monoidal runs also check the relabeling onto the delooping nerve and its composite with Psi.
/// Over a one-object, one-arrow index eta must be the identity on encodings and Psi an isomorphism.
///
/// The certificate has "passed" and "first_failure" (null when passed). Throws
/// BudgetExceeded when an enumeration runs out of budget.
nlohmann::json certify_theorem(const MonoidalDiagram& d, Variant v, int bound, std::uint64_t budget = kDefaultBudget);

}  // namespace nervekit
