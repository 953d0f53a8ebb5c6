#include <doctest.h>

#include <algorithm>
#include <functional>
#include <string>

#include "nervekit/canonical.hpp"
#include "nervekit/corpus.hpp"
#include "nervekit/monoidal.hpp"

using namespace nervekit;

namespace {

bool has_kind_prefix(const std::vector<Violation>& vs, const std::string& prefix) {
  return std::any_of(vs.begin(), vs.end(), [&](const Violation& v) { return v.kind.rfind(prefix, 0) == 0; });
}

// Calls `visit` once per single-entry mutation of a constraint table.
void for_each_mutation(MonoidalCategory m, const std::function<void(const MonoidalCategory&)>& visit) {
  const int objects = m.object_count(), morphisms = m.morphism_count();
  auto vary = [&](int& slot, int range) {
    const int original = slot;
    for (int v = 0; v < range; ++v) {
      if (v == original) continue;
      slot = v;
      visit(m);
    }
    slot = original;
  };
  for (auto& row : m.tensor_obj)
    for (int& x : row) vary(x, objects);
  for (auto& row : m.tensor_mor)
    for (int& x : row) vary(x, morphisms);
  for (auto& slab : m.assoc)
    for (auto& row : slab)
      for (int& x : row) vary(x, morphisms);
  for (int& x : m.lunit) vary(x, morphisms);
  for (int& x : m.runit) vary(x, morphisms);
  for (auto& row : m.braiding)
    for (int& x : row) vary(x, morphisms);
  vary(m.unit, objects);
}

}  // namespace

TEST_CASE("corpus categories satisfy the monoidal and braided axioms") {
  for (int order : {1, 2, 3, 4}) {
    CHECK(validate_monoidal(discrete_cyclic(order)).ok());
    CHECK(validate_braided(discrete_cyclic(order)).ok());
  }
  CHECK(validate_braided(one_object_z2()).ok());
  CHECK(validate_braided(one_object_z2(true)).ok());
  CHECK(validate_monoidal(z2_two_group_with_associator()).ok());
  CHECK(validate_braided(z2_two_group_with_braiding()).ok());
}

TEST_CASE("a discrete category notes that its braiding is forced") {
  const ValidationReport r = validate_braided(discrete_cyclic(2));
  CHECK(r.ok());
  CHECK_FALSE(r.notes.empty());
}

TEST_CASE("every single-entry mutation of a constraint table is detected") {
  for (const MonoidalCategory& m : {discrete_cyclic(2), discrete_cyclic(3), discrete_cyclic(4), one_object_z2()}) {
    int mutants = 0;
    for_each_mutation(m, [&](const MonoidalCategory& mutant) {
      ++mutants;
      CHECK_FALSE(validate_braided(mutant).ok());
    });
    CHECK(mutants > 0);
  }
}

TEST_CASE("some single-entry changes land on another valid structure") {
  // On the two-group, c_{1,1} = id is the trivial symmetric braiding.
  MonoidalCategory m = z2_two_group_with_braiding();
  m.braiding[1][1] = m.id(0);
  CHECK(validate_braided(m).ok());
  m.braiding[0][1] ^= 1;
  CHECK_FALSE(validate_braided(m).ok());
}

TEST_CASE("an associator entry that is not a morphism is structural") {
  MonoidalCategory m = discrete_cyclic(2);
  m.assoc[1][1][0] = 99;
  const ValidationReport r = validate_monoidal(m);
  CHECK(r.has_structural());
}

TEST_CASE("a corrupted braiding names the failing hexagon instance") {
  MonoidalCategory m = z2_two_group_with_braiding();
  m.braiding[1][0] ^= 1;  // other automorphism of the same object
  const ValidationReport r = validate_braided(m);
  CHECK_FALSE(r.has_structural());
  REQUIRE(has_kind_prefix(r.laws, "hexagon"));
  for (const Violation& v : r.laws)
    if (v.kind.rfind("hexagon", 0) == 0) CHECK(v.witness.size() == 3);
  CHECK(validate_monoidal(m).ok());
}

TEST_CASE("braided functor checks") {
  const MonoidalCategory z4 = discrete_cyclic(4), z2 = discrete_cyclic(2);
  CHECK(validate_braided_functor(identity_monoidal_functor(z4), z4, z4).ok());
  const MonoidalFunctor reduction = reduction_functor(z4, z2);
  CHECK(validate_braided_functor(reduction, z4, z2).ok());
  MonoidalFunctor wrong_unit = reduction;
  wrong_unit.phi0 = z2.id(1);
  const ValidationReport r = validate_braided_functor(wrong_unit, z4, z2);
  CHECK(r.has_structural());

  const MonoidalCategory g = z2_two_group_with_braiding();
  CHECK(validate_braided_functor(twisted_identity_two_group(), g, g).ok());
  MonoidalFunctor broken = twisted_identity_two_group();
  broken.phi[0][1] ^= 1;
  CHECK_FALSE(validate_monoidal_functor(broken, g, g).ok());

  const MonoidalCategory u = one_object_z2();
  CHECK(validate_braided_functor(twisted_identity_z2(), u, u).ok());
}

TEST_CASE("composite constraints follow phi^{gf} = g(phi^f) phi^g") {
  const MonoidalCategory g2 = z2_two_group_with_braiding();
  const MonoidalFunctor t = twisted_identity_two_group();
  const MonoidalFunctor tt = compose(t, t, g2);
  CHECK(validate_braided_functor(tt, g2, g2).ok());
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y) CHECK(tt.phi[x][y] == g2.comp(t.mor(t.phi[x][y]), t.phi[t.obj(x)][t.obj(y)]));
  // The twist squares to the identity constraint.
  CHECK(tt == identity_monoidal_functor(g2));
  const MonoidalCategory z4 = discrete_cyclic(4), z2 = discrete_cyclic(2);
  CHECK(compose(reduction_functor(z4, z2), identity_monoidal_functor(z4), z2) == reduction_functor(z4, z2));
}

TEST_CASE("canonical isomorphisms are identities in the strict case") {
  // Negation on disc(Z/4) is strict monoidal with identity constraints.
  const MonoidalCategory z4 = discrete_cyclic(4);
  MonoidalFunctor negate = identity_monoidal_functor(z4);
  for (int x = 0; x < 4; ++x) {
    negate.functor.objects[x] = (4 - x) % 4;
    negate.functor.morphisms[x] = z4.id((4 - x) % 4);
  }
  for (int x = 0; x < 4; ++x)
    for (int y = 0; y < 4; ++y) negate.phi[x][y] = z4.id((8 - x - y) % 4);
  REQUIRE(validate_braided_functor(negate, z4, z4).ok());
  for (CanShape shape : all_shapes()) {
    const CanBindings base{&z4, uses_functor(shape) ? &negate : nullptr, uses_functor(shape) ? &z4 : nullptr, {}};
    const int arity = object_arity(shape);
    for (int code = 0; code < (1 << (2 * arity)); ++code) {
      CanBindings b = base;
      for (int k = 0; k < arity; ++k) b.objects.push_back((code >> (2 * k)) & 3);
      CHECK(z4.base.is_identity(canonical_iso(shape, b)));
    }
  }
  const MonoidalCategory one = one_object_z2();
  const MonoidalFunctor id = identity_monoidal_functor(one);
  CHECK(canonical_iso(CanShape::AssocLeft, {&one, nullptr, nullptr, {0, 0, 0}}) == one.id(0));
  CHECK(canonical_iso(CanShape::FunctorDistributes, {&one, &id, &one, {0, 0, 0}}) == one.id(0));
}

TEST_CASE("canonical isomorphisms invert under the reversed shape") {
  struct Context {
    MonoidalCategory category;
    MonoidalFunctor functor;
  };
  const std::vector<Context> contexts{{one_object_z2(), twisted_identity_z2()},
                                      {one_object_z2(true), identity_monoidal_functor(one_object_z2(true))},
                                      {z2_two_group_with_braiding(), twisted_identity_two_group()}};
  for (const Context& ctx : contexts) {
    const MonoidalCategory& m = ctx.category;
    for (CanShape shape : all_shapes()) {
      CHECK(reverse(reverse(shape)) == shape);
      CHECK(shape_from_name(shape_name(shape)) == shape);
      const int arity = object_arity(shape);
      const int n = m.object_count();
      int total = 1;
      for (int k = 0; k < arity; ++k) total *= n;
      for (int code = 0; code < total; ++code) {
        CanBindings b{&m, uses_functor(shape) ? &ctx.functor : nullptr, uses_functor(shape) ? &m : nullptr, {}};
        for (int k = 0, c = code; k < arity; ++k, c /= n) b.objects.push_back(c % n);
        const MorphismId forward = canonical_iso(shape, b), backward = canonical_iso(reverse(shape), b);
        CHECK(m.comp(backward, forward) == m.id(m.src(forward)));
        CHECK(m.comp(forward, backward) == m.id(m.tgt(forward)));
      }
    }
  }
}

TEST_CASE("functor-distributes with a nontrivial constraint matches the hand-composed chain") {
  const MonoidalCategory m = z2_two_group_with_associator();
  const MonoidalFunctor f = twisted_identity_two_group();
  REQUIRE(validate_monoidal_functor(f, m, m).ok());
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y)
      for (int z = 0; z < 2; ++z) {
        // a^{-1} = a has sign xyz, phi_{x,y} (x) 1 has sign xy; composition adds signs.
        const int expected = 2 * ((x + y + z) % 2) + (x * y * z + x * y) % 2;
        CHECK(canonical_iso(CanShape::FunctorDistributes, {&m, &f, &m, {x, y, z}}) == expected);
      }
}

TEST_CASE("bad bindings and unknown shapes are rejected") {
  const MonoidalCategory m = one_object_z2();
  CHECK_THROWS_AS(shape_from_name("no-such-shape"), CanonicalError);
  CHECK_THROWS_AS(canonical_iso(CanShape::AssocRight, {&m, nullptr, nullptr, {0, 0}}), CanonicalError);
  CHECK_THROWS_AS(canonical_iso(CanShape::FunctorMerge, {&m, nullptr, nullptr, {0, 0}}), CanonicalError);
}
