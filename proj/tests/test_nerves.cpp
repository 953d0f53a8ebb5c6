#include <doctest.h>

#include <memory>

#include "nervekit/corpus.hpp"
#include "nervekit/nerves.hpp"
#include "oracles.hpp"

using namespace nervekit;

namespace {

SimplicialSetPtr share(TruncatedSimplicialSet x) { return std::make_shared<const TruncatedSimplicialSet>(std::move(x)); }

}  // namespace

TEST_CASE("geometric nerves of braided categories count normalized 3-cocycles") {
  const TruncatedSimplicialSet d = ner_br(discrete_cyclic(2), 4);
  CHECK(d.cardinalities() == std::vector<std::size_t>{1, 1, 2, 8, 64});
  CHECK(check_simplicial(d).ok());
  const TruncatedSimplicialSet o = ner_br(one_object_z2(), 4);
  CHECK(o.cardinalities() == std::vector<std::size_t>{1, 1, 1, 2, 16});
  CHECK(check_simplicial(o).ok());
  const TruncatedSimplicialSet g = ner_br(z2_two_group_with_braiding(), 3);
  CHECK(check_simplicial(g).ok());
  for (int n = 0; n <= 3; ++n) CHECK(g.count(n) >= 1);
}

TEST_CASE("Ner_I over a point is the monoidal nerve of the fiber") {
  const MonoidalDiagram d = constant_diagram(ordinal(0), discrete_cyclic(2), false);
  const TruncatedSimplicialSet x = ner_I_mon(d, 4);
  CHECK(x.cardinalities() == std::vector<std::size_t>{1, 2, 4, 8, 16});
  CHECK(check_simplicial(x).ok());
  for (int n = 0; n <= 4; ++n)
    CHECK(static_cast<long long>(x.count(n)) == oracle::normalized_cocycle_count(n, 1, 2));
}

TEST_CASE("Ner_I with trivial fibers is the nerve of the index") {
  for (const FiniteCategory& index : {ordinal(1), ordinal(2), span_category(), cyclic_group_category(2)}) {
    const MonoidalDiagram d = constant_diagram(index, trivial_monoidal(), true);
    const TruncatedSimplicialSet n = nerve(index, 3);
    CHECK(ner_I_mon(d, 3).cardinalities() == n.cardinalities());
    CHECK(ner_I_br(d, 3).cardinalities() == n.cardinalities());
  }
}

TEST_CASE("Ner_I over a point agrees with the braided nerve after forgetting G") {
  const MonoidalCategory b = discrete_cyclic(2);
  const SimplicialSetPtr x = share(ner_I_br(constant_diagram(ordinal(0), b, true), 4));
  const SimplicialSetPtr y = share(ner_br(b, 4));
  CHECK(check_simplicial(*x).ok());
  const SimplicialMap forget = make_map(x, y, [](int, const Simplex& s) { return DiagramSimplex::decode(s).cocycle.encode(); });
  CHECK(check_simplicial(forget).ok());
  CHECK(is_isomorphism(forget).iso);
}

TEST_CASE("diagram simplices round-trip through their encoding") {
  const TruncatedSimplicialSet x = ner_I_br(arrow_reduction_diagram(true), 3);
  CHECK(check_simplicial(x).ok());
  for (int n = 0; n <= 3; ++n)
    for (const Simplex& s : x.simplices(n)) {
      const DiagramSimplex ds = DiagramSimplex::decode(s);
      CHECK(ds.cocycle.n == n);
      CHECK(ds.cocycle.degree == 3);
      CHECK(ds.encode() == s);
    }
}

TEST_CASE("the relabeling onto the delooping nerve is an isomorphism") {
  for (const MonoidalDiagram& d : {arrow_reduction_diagram(false), span_reduction_diagram(false),
                                   constant_diagram(ordinal(0), discrete_cyclic(2), false),
                                   arrow_identity_diagram(z2_two_group_with_associator(), false)}) {
    const SimplicialSetPtr ner = share(ner_I_mon(d, 3));
    const SimplicialSetPtr del = share(delooping_grothendieck_nerve(d, 3));
    CHECK(check_simplicial(*del).ok());
    CHECK(ner->cardinalities() == del->cardinalities());
    const SimplicialMap f = proposition_iso(ner, del);
    CHECK(check_simplicial(f).ok());
    CHECK(is_isomorphism(f).iso);
    // A redirected image breaks commutation with degeneracies.
    REQUIRE(del->count(1) > 1);
    const SimplicialMap bad = f.with_image(1, 0, (f(1, 0) + 1) % del->count(1));
    CHECK_FALSE(check_simplicial(bad).ok());
  }
}

TEST_CASE("arrow reduction nerve counts") {
  const MonoidalDiagram d = arrow_reduction_diagram(false);
  CHECK(ner_I_mon(d, 4).cardinalities() == std::vector<std::size_t>{2, 8, 32, 128, 512});
}

TEST_CASE("nerve enumeration honors the budget") {
  CHECK_THROWS_AS(ner_br(discrete_cyclic(2), 5, 10), BudgetExceeded);
  CHECK_THROWS_AS(ner_I_mon(arrow_reduction_diagram(false), 4, 5), BudgetExceeded);
}
