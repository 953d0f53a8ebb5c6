#pragma once

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "nervekit/corpus.hpp"
#include "nervekit/fincat.hpp"
#include "nervekit/monoidal.hpp"

namespace nervekit {

/// Unreadable or structurally incomplete input: bad JSON, missing fields, wrong types,
/// non-dense ids, or a composition table that leaves a composable pair undefined.
/// Data that is complete but breaks an axiom is left for the validators.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input documents carry "kind": one of
///   "category"          category fields
///   "monoidal"          category fields plus tensor_obj, tensor_mor, unit, assoc, lunit, runit
///   "braided"           monoidal fields plus braiding
///   "functor"           {"source": category, "target": category, "functor": {objects, morphisms}}
///   "monoidal_functor"  {"source": monoidal, "target": monoidal, "functor": {objects, morphisms,
///                        phi, phi0}, "braided": bool}
///   "diagram"           {"index": category, "fibers": [monoidal per object],
///                        "transfers": [{"arrow": a, objects, morphisms, phi, phi0}], "braided": bool}
///
/// Category fields: "objects" (count), "morphisms": [{"id", "src", "tgt"}] with ids 0..m-1 in
/// order, "identity": [morphism per object], "compose": [[g, f, g o f]] covering every pair
/// with src(g) = tgt(f). Diagram transfers of identity arrows may be omitted.
nlohmann::json parse_json(const std::string& text);
nlohmann::json load_json_file(const std::string& path);
/// The "kind" field; throws InputError if absent or unknown.
std::string document_kind(const nlohmann::json& doc);

FiniteCategory category_from_json(const nlohmann::json& j);
nlohmann::json category_to_json(const FiniteCategory& c);

MonoidalCategory monoidal_from_json(const nlohmann::json& j);
/// Writes "braiding" only for braided input; "kind" is not included.
nlohmann::json monoidal_to_json(const MonoidalCategory& m);

Functor functor_from_json(const nlohmann::json& j);
nlohmann::json functor_to_json(const Functor& f);
MonoidalFunctor monoidal_functor_from_json(const nlohmann::json& j);
nlohmann::json monoidal_functor_to_json(const MonoidalFunctor& f);

MonoidalDiagram diagram_from_json(const nlohmann::json& j);
/// Complete document with "kind": "diagram"; every transfer is written.
nlohmann::json diagram_to_json(const MonoidalDiagram& d);

/// Canonical rendering: two-space indentation, sorted keys, trailing newline.
std::string render_json(const nlohmann::json& j);
/// One "path = value" line per leaf, in key order.
std::string render_text(const nlohmann::json& j);

/// Writes through a temporary file in the same directory and renames it into place.
void write_file_atomically(const std::string& path, const std::string& content);

}  // namespace nervekit
