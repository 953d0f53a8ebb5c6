#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "nervekit/report.hpp"
#include "nervekit/simplicial.hpp"

namespace nervekit {

using ObjectId = int;
using MorphismId = int;
inline constexpr int kUndefined = -1;

/// Finite category on dense ids. Objects are 0..object_count()-1, morphisms are
/// 0..morphism_count()-1, composition is the table composition[g][f] = g o f
/// (kUndefined where src(g) != tgt(f)).
///
/// The constructor accepts ill-formed data so that `validate_category` can report it;
/// every other operation assumes a valid category.
class FiniteCategory {
 public:
  FiniteCategory() = default;
  FiniteCategory(int object_count, std::vector<ObjectId> src, std::vector<ObjectId> tgt,
                 std::vector<MorphismId> identity, std::vector<std::vector<MorphismId>> composition);

  int object_count() const { return object_count_; }
  int morphism_count() const { return static_cast<int>(src_.size()); }

  ObjectId src(MorphismId f) const { return src_[f]; }
  ObjectId tgt(MorphismId f) const { return tgt_[f]; }
  MorphismId id(ObjectId x) const { return identity_[x]; }
  bool is_identity(MorphismId f) const;

  /// g o f; throws std::invalid_argument if undefined.
  MorphismId compose(MorphismId g, MorphismId f) const;
  MorphismId composite_or_undefined(MorphismId g, MorphismId f) const { return composition_[g][f]; }

  const std::vector<MorphismId>& hom(ObjectId from, ObjectId to) const;
  /// kUndefined when f is not invertible.
  MorphismId inverse(MorphismId f) const { return inverse_[f]; }
  bool is_discrete() const;

  const std::vector<ObjectId>& sources() const { return src_; }
  const std::vector<ObjectId>& targets() const { return tgt_; }
  const std::vector<MorphismId>& identities() const { return identity_; }
  const std::vector<std::vector<MorphismId>>& composition() const { return composition_; }

  FiniteCategory with_composite(MorphismId g, MorphismId f, MorphismId gf) const;

  bool operator==(const FiniteCategory& other) const;

 private:
  void build_caches();

  int object_count_ = 0;
  std::vector<ObjectId> src_, tgt_;
  std::vector<MorphismId> identity_;
  std::vector<std::vector<MorphismId>> composition_;
  std::vector<std::vector<std::vector<MorphismId>>> hom_;
  std::vector<MorphismId> inverse_;
};

/// Object and morphism maps; source and target categories are supplied by the caller.
struct Functor {
  std::vector<ObjectId> objects;
  std::vector<MorphismId> morphisms;

  ObjectId operator()(ObjectId x) const { return objects[x]; }
  MorphismId on_morphism(MorphismId f) const { return morphisms[f]; }
  bool operator==(const Functor&) const = default;
};

Functor identity_functor(const FiniteCategory& c);
/// g o f (apply f first).
Functor compose(const Functor& g, const Functor& f);

/// Empty iff `c` is a category. Dangling ids are structural errors; associativity and
/// identity failures are law violations naming the failing morphisms.
ValidationReport validate_category(const FiniteCategory& c);
ValidationReport validate_functor(const Functor& f, const FiniteCategory& source,
                                  const FiniteCategory& target);

/// [n] with one arrow j -> i whenever i <= j. The arrow j -> i has id pair_index(i, j)
/// in the lexicographic order of pairs i <= j.
FiniteCategory ordinal(int n);
/// • <- • -> • : objects {0, 1, 2}, arrows 0 -> 1 and 0 -> 2.
FiniteCategory span_category();
/// One object, morphisms Z/order, composition = addition.
FiniteCategory cyclic_group_category(int order);
FiniteCategory product(const FiniteCategory& c, const FiniteCategory& d);

/// A functor [n] -> C stored as its objects G(0..n) and the arrows G_{i,j} : G(j) -> G(i)
/// for i <= j (lexicographic pair order).
struct ChainFunctor {
  int n = 0;
  std::vector<ObjectId> objects;
  std::vector<MorphismId> arrows;

  MorphismId arrow(int i, int j) const;
  /// G o alpha for a monotone vertex map alpha : [m] -> [n].
  ChainFunctor precompose(const std::vector<int>& alpha) const;

  /// [n, objects..., arrows...]
  Simplex encode() const;
  void encode_into(Simplex& out) const;
  /// Reads from `in` starting at `pos`, advancing `pos`.
  static ChainFunctor decode(const Simplex& in, std::size_t& pos);

  bool operator==(const ChainFunctor&) const = default;
};

/// All functors [n] -> I, duplicate-free, ordered by object tuple then arrow tuple.
std::vector<ChainFunctor> enumerate_functors(int n, const FiniteCategory& index);

/// Grothendieck nerve truncated at `bound`; simplices are encoded ChainFunctors.
TruncatedSimplicialSet nerve(const FiniteCategory& c, int bound);

/// Strict diagram of categories I^op -> Cat: a fiber per object of I and, for each
/// arrow a : j -> i, a functor a^* : C_i -> C_j.
struct DiagramOfCategories {
  FiniteCategory index;
  std::vector<FiniteCategory> fibers;
  std::vector<Functor> transfers;
};

ValidationReport validate_diagram(const DiagramOfCategories& d);

/// Bisimplicial set with cells (F : [p] -> C_{G0}, G : [q] -> I); horizontal operators
/// reindex F, vertical ones reindex G, and d^v_0 transports F along G_{0,1}^*.
BisimplicialSet nerve_diagram_bisimplicial(const DiagramOfCategories& d, int bound);

/// Bousfield-Kan homotopy colimit of Ner o C, i.e. the diagonal of the bisimplicial set above.
TruncatedSimplicialSet hocolim_of_nerve_diagram(const DiagramOfCategories& d, int bound);

}  // namespace nervekit
