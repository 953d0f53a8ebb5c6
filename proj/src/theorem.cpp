#include "nervekit/theorem.hpp"

#include <stdexcept>
#include <string>

#include "nervekit/homology.hpp"
#include "nervekit/nerves.hpp"

namespace nervekit {

namespace {

bool is_identity(const SimplicialMap& f) {
  for (int dim = 0; dim <= f.bound(); ++dim)
    for (std::size_t s = 0; s < f.source().count(dim); ++s)
      if (f(dim, s) != s) return false;
  return true;
}

// f sends every simplex to one with the same encoding.
bool is_literal_identity(const SimplicialMap& f) {
  for (int dim = 0; dim <= f.bound(); ++dim)
    for (std::size_t s = 0; s < f.source().count(dim); ++s)
      if (f.target().simplex(dim, f(dim, s)) != f.source().simplex(dim, s)) return false;
  return true;
}

nlohmann::json homology_json(const std::vector<HomologyGroup>& table) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& h : table) out.push_back(h.to_json());
  return out;
}

class Certificate {
 public:
  void check(const std::string& name, bool ok, nlohmann::json detail = nlohmann::json::object()) {
    detail["ok"] = ok;
    json_["checks"][name] = std::move(detail);
    if (!ok && json_["first_failure"].is_null()) json_["first_failure"] = name;
  }
  bool failed() const { return !json_["first_failure"].is_null(); }
  nlohmann::json& json() { return json_; }

 private:
  nlohmann::json json_{{"checks", nlohmann::json::object()}, {"first_failure", nullptr}};
};

}  // namespace

nlohmann::json certify_theorem(const MonoidalDiagram& d, Variant v, int bound, std::uint64_t budget) {
  Certificate cert;
  cert.json()["variant"] = variant_name(v);
  cert.json()["truncation"] = bound;

  const ValidationReport diagram = validate_diagram(d);
  cert.check("diagram", diagram.ok() && (v == Variant::monoidal || d.braided), diagram.to_json());
  const ValidationReport unitary = check_strictly_unitary(d);
  cert.check("strictly_unitary_transfers", unitary.ok(), unitary.to_json());
  if (cert.failed()) {
    cert.json()["passed"] = false;
    return cert.json();
  }

  TheoremObjects t;
  try {
    t = build_theorem_objects(d, v, bound, budget);
  } catch (const std::logic_error& e) {
    cert.check("construction", false, {{"error", e.what()}});
    cert.json()["passed"] = false;
    return cert.json();
  }
  cert.json()["cardinalities"] = {{"hocolim", t.hocolim->cardinalities()},
                                  {"ner_i", t.ner_i->cardinalities()},
                                  {"wbar", t.wbar->cardinalities()}};

  const ValidationReport s_report = check_bisimplicial(t.s);
  cert.check("bisimplicial_S", s_report.ok(), s_report.to_json());
  cert.check("hocolim_simplicial", check_simplicial(*t.hocolim).ok());
  cert.check("wbar_simplicial", check_simplicial(*t.wbar).ok());
  cert.check("ner_i_simplicial", check_simplicial(*t.ner_i).ok());

  const ValidationReport phi_r = check_simplicial(t.phi), eta_r = check_simplicial(t.eta),
                         psi_r = check_simplicial(t.psi), inv_r = check_simplicial(t.psi_inverse);
  cert.check("phi_map", phi_r.ok(), phi_r.to_json());
  cert.check("eta_map", eta_r.ok(), eta_r.to_json());
  cert.check("psi_map", psi_r.ok(), psi_r.to_json());
  cert.check("psi_inverse_map", inv_r.ok(), inv_r.to_json());
  const IsoVerdict psi_iso = is_isomorphism(t.psi);
  cert.check("psi_isomorphism", psi_iso.iso, {{"witness", psi_iso.witness}});
  cert.check("psi_two_sided_inverse",
             is_identity(compose(t.psi, t.psi_inverse)) && is_identity(compose(t.psi_inverse, t.psi)));

  const TriangleCertificate triangle = check_triangle(t.eta, t.psi, t.phi);
  cert.check("triangle_eta_equals_psi_phi", triangle.agree, triangle.to_json());

  const IsoVerdict eta_iso = is_isomorphism(t.eta);
  cert.json()["eta_is_isomorphism"] = eta_iso.iso;
  if (d.index.object_count() == 1 && d.index.morphism_count() == 1) {
    const bool literal = is_literal_identity(t.eta);
    cert.check("constant_collapse", eta_iso.iso && psi_iso.iso && literal,
               {{"eta_identity", literal}, {"eta_isomorphism", eta_iso.iso}, {"psi_isomorphism", psi_iso.iso}});
  }

  const ChainComplex hocolim_c = normalized_complex(*t.hocolim);
  const ChainComplex ner_c = normalized_complex(*t.ner_i);
  cert.check("boundary_squares_to_zero", boundary_squares_to_zero(hocolim_c) && boundary_squares_to_zero(ner_c));
  cert.json()["homology"] = {{"hocolim", homology_json(homology_table(hocolim_c, bound - 1))},
                             {"ner_i", homology_json(homology_table(ner_c, bound - 1))}};
  nlohmann::json verdicts = nlohmann::json::array();
  bool trusted_isos = true;
  for (int k = 0; k + 1 <= bound; ++k) {
    const InducedMap m = induced_homology_map(t.eta, hocolim_c, ner_c, k);
    verdicts.push_back(m.to_json());
    if (m.trusted && !m.iso) trusted_isos = false;
    if (!m.commutes) trusted_isos = false;
  }
  cert.check("eta_homology_isomorphism", trusted_isos, {{"degrees", verdicts}});

  if (v == Variant::monoidal) {
    auto delooping = std::make_shared<TruncatedSimplicialSet>(delooping_grothendieck_nerve(d, bound, budget));
    cert.json()["cardinalities"]["delooping"] = delooping->cardinalities();
    cert.check("delooping_simplicial", check_simplicial(*delooping).ok());
    const SimplicialMap relabel = proposition_iso(t.ner_i, delooping);
    const ValidationReport relabel_r = check_simplicial(relabel);
    cert.check("proposition_map", relabel_r.ok(), relabel_r.to_json());
    cert.check("proposition_isomorphism", is_isomorphism(relabel).iso);
    const SimplicialMap routed = compose(relabel, t.psi);
    cert.check("psi_then_proposition",
               check_simplicial(routed).ok() && is_isomorphism(routed).iso &&
                   t.wbar->cardinalities() == delooping->cardinalities(),
               {{"wbar", t.wbar->cardinalities()}, {"delooping", delooping->cardinalities()}});
  }

  cert.json()["passed"] = !cert.failed();
  return cert.json();
}

}  // namespace nervekit
