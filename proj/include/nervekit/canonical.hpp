#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "nervekit/monoidal.hpp"

namespace nervekit {

/// Closed registry of the composite canonical isomorphisms used by the cocycle
/// conditions and the comparison maps. Every shape has a reverse shape taking the same
/// bindings and producing the inverse composite, built from inverse constraints.
///
/// Objects are bound in the order listed. Objects marked with F live in the source of
/// the bound functor F, all others in `category` (the target of F when F is bound).
///
///   assoc-right          x,y,z      (x y) z -> x (y z)          a
///   assoc-left           x,y,z      x (y z) -> (x y) z          a^{-1}
///   functor-merge        F; x,y     Fx Fy -> F(x y)             phi
///   functor-split        F; x,y     F(x y) -> Fx Fy             phi^{-1}
///   functor-distributes  F; x,y,z   Fx (Fy z) -> F(x y) z       (phi (x) 1) a^{-1}
///   functor-collects     F; x,y,z   F(x y) z -> Fx (Fy z)       a (phi^{-1} (x) 1)
///   unit-left-transfer   F; y       FI y -> y                   l (phi0^{-1} (x) 1)
///   unit-left-absorb     F; y       y -> FI y                   (phi0 (x) 1) l^{-1}
///   unit-right           y          y I -> y                    r
///   unit-right-inverse   y          y -> y I                    r^{-1}
///   unit-transfer-left   F; y       FI y -> I y                 phi0^{-1} (x) 1
///   unit-transfer-back   F; y       I y -> FI y                 phi0 (x) 1
///   unit-braid-left      F; y       FI y -> y I                 c_{I,y} (phi0^{-1} (x) 1)
///   unit-braid-back      F; y       y I -> FI y                 (phi0 (x) 1) c^{-1}_{I,y}
///   braid-unit-right     y          y I -> I y                  c_{y,I}
///   braid-unit-back      y          I y -> y I                  c^{-1}_{y,I}
///   braid-over-first     x,y,z      x (y z) -> y (x z)          a (c_{x,y} (x) 1) a^{-1}
///   unbraid-over-first   x,y,z      y (x z) -> x (y z)          a (c^{-1}_{x,y} (x) 1) a^{-1}
///
/// The unit conventions for degenerate 3-cocycle entries apply the functor's unit
/// constraint first and the braiding second.
enum class CanShape {
  AssocRight,
  AssocLeft,
  FunctorMerge,
  FunctorSplit,
  FunctorDistributes,
  FunctorCollects,
  UnitLeftTransfer,
  UnitLeftAbsorb,
  UnitRight,
  UnitRightInverse,
  UnitTransferLeft,
  UnitTransferBack,
  UnitBraidLeft,
  UnitBraidBack,
  BraidUnitRight,
  BraidUnitBack,
  BraidOverFirst,
  UnbraidOverFirst,
};

struct CanBindings {
  const MonoidalCategory* category = nullptr;
  const MonoidalFunctor* functor = nullptr;
  const MonoidalCategory* functor_source = nullptr;
  std::vector<ObjectId> objects;
};

class CanonicalError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

const std::vector<CanShape>& all_shapes();
std::string_view shape_name(CanShape shape);
/// Throws CanonicalError for an unknown name.
CanShape shape_from_name(std::string_view name);
CanShape reverse(CanShape shape);
bool uses_functor(CanShape shape);
int object_arity(CanShape shape);

/// Throws CanonicalError when the bindings do not match the shape.
MorphismId canonical_iso(CanShape shape, const CanBindings& bindings);

}  // namespace nervekit
