#pragma once

#include <initializer_list>
#include <vector>

#include "nervekit/fincat.hpp"
#include "nervekit/report.hpp"

namespace nervekit {

/// Finite monoidal category with explicit constraint tables. A braided structure is
/// present iff `braiding` is nonempty.
///
///   a_{x,y,z} : (x (x) y) (x) z -> x (x) (y (x) z)
///   l_x : I (x) x -> x,  r_x : x (x) I -> x,  c_{x,y} : x (x) y -> y (x) x
struct MonoidalCategory {
  FiniteCategory base;
  std::vector<std::vector<ObjectId>> tensor_obj;
  std::vector<std::vector<MorphismId>> tensor_mor;
  ObjectId unit = 0;
  std::vector<std::vector<std::vector<MorphismId>>> assoc;
  std::vector<MorphismId> lunit;
  std::vector<MorphismId> runit;
  std::vector<std::vector<MorphismId>> braiding;

  bool braided() const { return !braiding.empty(); }
  int object_count() const { return base.object_count(); }
  int morphism_count() const { return base.morphism_count(); }

  ObjectId obj_tensor(ObjectId x, ObjectId y) const { return tensor_obj[x][y]; }
  MorphismId mor_tensor(MorphismId f, MorphismId g) const { return tensor_mor[f][g]; }
  MorphismId a(ObjectId x, ObjectId y, ObjectId z) const { return assoc[x][y][z]; }
  MorphismId l(ObjectId x) const { return lunit[x]; }
  MorphismId r(ObjectId x) const { return runit[x]; }
  MorphismId c(ObjectId x, ObjectId y) const { return braiding[x][y]; }

  MorphismId id(ObjectId x) const { return base.id(x); }
  ObjectId src(MorphismId f) const { return base.src(f); }
  ObjectId tgt(MorphismId f) const { return base.tgt(f); }
  /// g o f; throws std::invalid_argument if not composable.
  MorphismId comp(MorphismId g, MorphismId f) const { return base.compose(g, f); }
  /// Composite of `steps` applied first to last.
  MorphismId chain(std::initializer_list<MorphismId> steps) const;
  /// Throws std::invalid_argument if f is not invertible.
  MorphismId inv(MorphismId f) const;

  bool operator==(const MonoidalCategory& other) const;
};

using BraidedMonoidalCategory = MonoidalCategory;

/// Strong monoidal functor: phi_{x,y} : Fx (x) Fy -> F(x (x) y), phi0 : I -> F I.
struct MonoidalFunctor {
  Functor functor;
  std::vector<std::vector<MorphismId>> phi;
  MorphismId phi0 = 0;

  ObjectId obj(ObjectId x) const { return functor.objects[x]; }
  MorphismId mor(MorphismId f) const { return functor.morphisms[f]; }
  bool operator==(const MonoidalFunctor&) const = default;
};

using BraidedMonoidalFunctor = MonoidalFunctor;

/// Identity functor with identity constraints.
MonoidalFunctor identity_monoidal_functor(const MonoidalCategory& m);

/// g o f with phi^{gf}_{x,y} = g(phi^f_{x,y}) o phi^g_{fx,fy} and phi0^{gf} = g(phi0^f) o phi0^g.
/// `g_target` is the target category of g.
MonoidalFunctor compose(const MonoidalFunctor& g, const MonoidalFunctor& f,
                        const MonoidalCategory& g_target);

/// Functoriality of the tensor, invertibility and naturality of a, l, r, pentagon and
/// triangle. Braided input is checked only as monoidal here.
ValidationReport validate_monoidal(const MonoidalCategory& m);

/// validate_monoidal plus invertibility and naturality of c and both hexagons:
///   a_{y,z,x} c_{x,y(x)z} a_{x,y,z} = (1 (x) c_{x,z}) a_{y,x,z} (c_{x,y} (x) 1)
///   a^{-1}_{z,x,y} c_{x(x)y,z} a^{-1}_{x,y,z} = (c_{x,z} (x) 1) a^{-1}_{x,z,y} (1 (x) c_{y,z})
ValidationReport validate_braided(const MonoidalCategory& b);

/// Functor laws, phi/phi0 shape and invertibility, naturality of phi, and the
/// associativity and two unit squares:
///   F(a) phi_{x(x)y,z} (phi_{x,y} (x) 1) = phi_{x,y(x)z} (1 (x) phi_{y,z}) a
///   F(l_x) phi_{I,x} (phi0 (x) 1) = l_{Fx},  F(r_x) phi_{x,I} (1 (x) phi0) = r_{Fx}
ValidationReport validate_monoidal_functor(const MonoidalFunctor& f, const MonoidalCategory& source,
                                           const MonoidalCategory& target);

/// Adds the braid square F(c_{x,y}) phi_{x,y} = phi_{y,x} c_{Fx,Fy}.
ValidationReport validate_braided_functor(const MonoidalFunctor& f, const MonoidalCategory& source,
                                          const MonoidalCategory& target);

}  // namespace nervekit
