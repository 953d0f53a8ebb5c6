#include <doctest.h>

#include <stdexcept>

#include "nervekit/corpus.hpp"
#include "nervekit/hocolim.hpp"
#include "nervekit/nerves.hpp"
#include "nervekit/theorem.hpp"
#include "nervekit/tuples.hpp"
#include "oracles.hpp"

using namespace nervekit;

namespace {

// |S_{p,q}| from first principles: functors [q] -> I times cocycles of [p] in B_{G0}.
std::size_t expected_cells(const MonoidalDiagram& d, Variant v, int p, int q) {
  std::size_t total = 0;
  for (const ChainFunctor& g : enumerate_functors(q, d.index)) {
    const Coefficients k = Coefficients::constant(p, d.fibers[g.objects[0]]);
    total += v == Variant::braided ? enumerate_3cocycles(k).size() : enumerate_2cocycles(k).size();
  }
  return total;
}

bool is_identity(const SimplicialMap& f) {
  for (int n = 0; n <= f.bound(); ++n)
    for (std::size_t s = 0; s < f.source().count(n); ++s)
      if (f(n, s) != s) return false;
  return true;
}

MonoidalDiagram twisted_unit_arrow() {
  const MonoidalCategory u = one_object_z2();
  return make_diagram(ordinal(1), {u, u}, {{static_cast<MorphismId>(MonotoneTuples::get(1, 2).index(0, 1)), twisted_identity_z2()}},
                      true);
}

}  // namespace

TEST_CASE("S is bisimplicial with the expected cell counts") {
  struct Case {
    MonoidalDiagram d;
    Variant v;
  };
  const std::vector<Case> cases{{arrow_reduction_diagram(true), Variant::braided},
                                {arrow_reduction_diagram(false), Variant::monoidal},
                                {span_twisted_diagram(), Variant::braided},
                                {constant_diagram(ordinal(0), one_object_z2(), true), Variant::braided}};
  for (const Case& c : cases) {
    const BisimplicialSet s = build_bisimplicial_S(c.d, 3, c.v);
    CHECK(check_bisimplicial(s).ok());
    for (int p = 0; p <= 3; ++p)
      for (int q = 0; q <= 3; ++q) CHECK(s.count(p, q) == expected_cells(c.d, c.v, p, q));
  }
}

TEST_CASE("hocolim of a constant diagram counts functors times cocycles") {
  const MonoidalDiagram d = arrow_identity_diagram(discrete_cyclic(2), true);
  const TruncatedSimplicialSet h = hocolim_br(d, 4);
  CHECK(check_simplicial(h).ok());
  for (int n = 0; n <= 4; ++n)
    CHECK(static_cast<long long>(h.count(n)) ==
          oracle::composable_chains(ordinal(1), n) * oracle::normalized_cocycle_count(n, 2, 2));
  CHECK(h.cardinalities() == std::vector<std::size_t>{2, 3, 8, 40, 384});
}

TEST_CASE("eta, Psi and its inverse are simplicial and the triangle commutes") {
  for (Variant v : {Variant::braided, Variant::monoidal}) {
    const MonoidalDiagram d = arrow_reduction_diagram(v == Variant::braided);
    const TheoremObjects t = build_theorem_objects(d, v, 3);
    CHECK(check_simplicial(t.phi).ok());
    CHECK(check_simplicial(t.eta).ok());
    CHECK(check_simplicial(t.psi).ok());
    CHECK(check_simplicial(t.psi_inverse).ok());
    CHECK(is_identity(compose(t.psi, t.psi_inverse)));
    CHECK(is_identity(compose(t.psi_inverse, t.psi)));
    CHECK(is_isomorphism(t.psi).iso);
    CHECK(is_isomorphism(t.phi).iso == false);
    const TriangleCertificate c = check_triangle(t.eta, t.psi, t.phi);
    CHECK(c.agree);
    CHECK_FALSE(c.witness.has_value());
    CHECK(c.agreements == c.totals);
  }
}

TEST_CASE("a corrupted eta is caught with a witness") {
  const TheoremObjects t = build_theorem_objects(arrow_reduction_diagram(true), Variant::braided, 3);
  const SimplicialMap bad = t.eta.with_image(2, 0, (t.eta(2, 0) + 1) % t.ner_i->count(2));
  const TriangleCertificate c = check_triangle(bad, t.psi, t.phi);
  CHECK_FALSE(c.agree);
  REQUIRE(c.witness.has_value());
  CHECK((*c.witness)["dimension"] == 2);
  CHECK_FALSE(check_simplicial(bad).ok());
}

TEST_CASE("Ner_I built through the theorem objects matches the direct construction") {
  const MonoidalDiagram d = span_twisted_diagram();
  const TheoremObjects t = build_theorem_objects(d, Variant::braided, 3);
  CHECK(t.ner_i->cardinalities() == ner_I_br(d, 3).cardinalities());
  CHECK(t.hocolim->cardinalities() == hocolim_br(d, 3).cardinalities());
}

TEST_CASE("over a point eta is the identity on encodings") {
  const MonoidalDiagram d = constant_diagram(ordinal(0), discrete_cyclic(2), true);
  const TheoremObjects t = build_theorem_objects(d, Variant::braided, 4);
  for (int n = 0; n <= 4; ++n)
    for (std::size_t s = 0; s < t.hocolim->count(n); ++s)
      CHECK(t.ner_i->simplex(n, t.eta(n, s)) == t.hocolim->simplex(n, s));
  CHECK(is_isomorphism(t.eta).iso);
}

TEST_CASE("non-unitary transfers are rejected") {
  const MonoidalDiagram d = twisted_unit_arrow();
  CHECK(validate_diagram(d).ok());
  CHECK_FALSE(check_strictly_unitary(d).ok());
  CHECK_THROWS_AS(build_bisimplicial_S(d, 2, Variant::braided), std::invalid_argument);
  CHECK_THROWS_AS(build_bisimplicial_S(arrow_reduction_diagram(false), 2, Variant::braided), std::invalid_argument);
}

TEST_CASE("push_forward along identities is the identity") {
  const MonoidalCategory b = one_object_z2();
  const MonoidalFunctor id = identity_monoidal_functor(b);
  const Coefficients k = Coefficients::constant(4, b);
  for (const Cocycle& c : enumerate_3cocycles(k))
    CHECK(push_forward(c, k, k, [&](int) -> const MonoidalFunctor& { return id; }) == c);
}

TEST_CASE("certificates pass on corpus diagrams and record every check") {
  const nlohmann::json br = certify_theorem(arrow_reduction_diagram(true), Variant::braided, 3);
  CHECK(br["passed"] == true);
  CHECK(br["first_failure"].is_null());
  for (const auto& [name, check] : br["checks"].items()) CHECK(check["ok"] == true);
  CHECK_FALSE(br["checks"].contains("proposition_isomorphism"));
  const nlohmann::json mon = certify_theorem(arrow_reduction_diagram(false), Variant::monoidal, 3);
  CHECK(mon["passed"] == true);
  for (const char* name : {"proposition_map", "proposition_isomorphism", "psi_then_proposition", "delooping_simplicial"})
    CHECK(mon["checks"][name]["ok"] == true);
}

TEST_CASE("over a point the certificate records the constant collapse") {
  const nlohmann::json c = certify_theorem(constant_diagram(ordinal(0), discrete_cyclic(2), true), Variant::braided, 3);
  CHECK(c["passed"] == true);
  CHECK(c["checks"]["constant_collapse"]["eta_identity"] == true);
  CHECK(c["checks"]["constant_collapse"]["psi_isomorphism"] == true);
  CHECK(c["eta_is_isomorphism"] == true);
  CHECK_FALSE(certify_theorem(arrow_reduction_diagram(true), Variant::braided, 3)["checks"].contains("constant_collapse"));
}

TEST_CASE("certificates name the first failing check") {
  MonoidalDiagram corrupted = arrow_reduction_diagram(true);
  corrupted.transfers[1].functor.objects[1] = 0;
  const nlohmann::json c = certify_theorem(corrupted, Variant::braided, 3);
  CHECK(c["passed"] == false);
  CHECK(c["first_failure"] == "diagram");
  const nlohmann::json u = certify_theorem(twisted_unit_arrow(), Variant::braided, 3);
  CHECK(u["passed"] == false);
  CHECK(u["first_failure"] == "strictly_unitary_transfers");
  CHECK_THROWS_AS(certify_theorem(arrow_reduction_diagram(true), Variant::braided, 4, 3), BudgetExceeded);
}
