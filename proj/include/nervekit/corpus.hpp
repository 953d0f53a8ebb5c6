#pragma once

#include <utility>
#include <vector>

#include "nervekit/fincat.hpp"
#include "nervekit/monoidal.hpp"

namespace nervekit {

/// Objects Z/order, identities only, x (x) y = x + y, all constraints identities, c = id.
MonoidalCategory discrete_cyclic(int order);

/// One object, Hom = Z/2 (0 = identity, 1 = u), tensor on morphisms = addition, a = c = id.
/// With `unit_twist` the unitors are l = r = u, which is still a braided category.
MonoidalCategory one_object_z2(bool unit_twist = false);

/// One object, one morphism.
MonoidalCategory trivial_monoidal();

/// The 2-group with objects Z/2, Aut(x) = Z/2 and associator a_{x,y,z} = xyz in Aut.
/// Monoidal only.
MonoidalCategory z2_two_group_with_associator();

/// The 2-group with objects Z/2, Aut(x) = Z/2, trivial associator and braiding
/// c_{x,y} = xy. Symmetric, hence braided.
MonoidalCategory z2_two_group_with_braiding();

/// Reduction disc(Z/from) -> disc(Z/to) for to | from, identity constraints.
MonoidalFunctor reduction_functor(const MonoidalCategory& from, const MonoidalCategory& to);

/// Identity functor of one_object_z2() with phi = phi0 = u.
MonoidalFunctor twisted_identity_z2();

/// Identity functor of z2_two_group_with_braiding() with phi_{1,1} the nontrivial
/// automorphism of the unit object, other phi and phi0 identities. Braided.
MonoidalFunctor twisted_identity_two_group();

/// Strict diagram I^op -> MonCat. For an arrow a : j -> i, transfers[a] : fibers[i] -> fibers[j].
struct MonoidalDiagram {
  FiniteCategory index;
  std::vector<MonoidalCategory> fibers;
  std::vector<MonoidalFunctor> transfers;
  bool braided = false;
};

/// Every fiber is `fiber` and every transfer is its identity functor.
MonoidalDiagram constant_diagram(const FiniteCategory& index, const MonoidalCategory& fiber, bool braided);

/// Diagram from the transfers of the non-identity arrows; identity arrows get identity
/// functors. Composites of non-identity arrows must be listed too.
MonoidalDiagram make_diagram(const FiniteCategory& index, std::vector<MonoidalCategory> fibers,
                             const std::vector<std::pair<MorphismId, MonoidalFunctor>>& transfers, bool braided);

/// Arrow category 1 -> 0 with B_0 = disc(Z/4), B_1 = disc(Z/2) and the reduction as transfer.
MonoidalDiagram arrow_reduction_diagram(bool braided);
/// Arrow category with both fibers `fiber` and identity transfer.
MonoidalDiagram arrow_identity_diagram(const MonoidalCategory& fiber, bool braided);
/// Span 1 <- 0 -> 2 with z2_two_group_with_braiding() fibers and twisted_identity_two_group()
/// transfers.
MonoidalDiagram span_twisted_diagram();
/// Span with B_0 = disc(Z/2), B_1 = disc(Z/4) reduced to B_0, B_2 = disc(Z/2) with identity.
MonoidalDiagram span_reduction_diagram(bool braided);

/// Well-formedness: index is a category, fibers are (braided) monoidal, transfers are
/// (braided) monoidal functors, identity arrows go to identity functors with identity
/// constraints and (ab)^* = b^* a^* as literal tables including constraints.
ValidationReport validate_diagram(const MonoidalDiagram& d);

/// Every transfer sends the unit to the unit with phi0 the identity. Coefficient transport
/// commutes with degeneracies only under this condition, so the homotopy colimit
/// comparison requires it.
ValidationReport check_strictly_unitary(const MonoidalDiagram& d);

}  // namespace nervekit
