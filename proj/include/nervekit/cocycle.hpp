#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <vector>

#include "nervekit/corpus.hpp"
#include "nervekit/fincat.hpp"
#include "nervekit/monoidal.hpp"
#include "nervekit/report.hpp"
#include "nervekit/search.hpp"
#include "nervekit/simplicial.hpp"

namespace nervekit {

inline constexpr std::uint64_t kDefaultBudget = 10'000'000;

/// Coefficients along a functor G : [n] -> I, i.e. fibers B_{Gi} and transfers
/// G*_{i,j} : B_{Gi} -> B_{Gj} for i <= j.
class Coefficients {
 public:
  /// Every fiber is `m`, every transfer the identity.
  static Coefficients constant(int n, const MonoidalCategory& m);
  static Coefficients along(const MonoidalDiagram& d, const ChainFunctor& g);

  int n() const { return n_; }
  const MonoidalCategory& fiber(int i) const { return *fibers_[i]; }
  const MonoidalFunctor& transfer(int i, int j) const;

 private:
  int n_ = 0;
  std::vector<const MonoidalCategory*> fibers_;
  std::vector<const MonoidalFunctor*> transfers_;
  std::shared_ptr<const MonoidalFunctor> identity_;
};

/// A 2-cocycle (degree 2) or 3-cocycle (degree 3) of [n].
///
/// Degree 2: objects Y_{i,j} in B_{Gj} over pairs i <= j, morphisms
///   f_{i,j,k} : G*_{j,k} Y_{i,j} (x) Y_{j,k} -> Y_{i,k} in B_{Gk} over triples.
/// Degree 3: objects Y_{i,j,k} in B_{Gk} over triples, morphisms
///   f_{i,j,k,l} : G*_{k,l} Y_{i,j,k} (x) Y_{i,k,l} -> Y_{j,k,l} (x) Y_{i,j,l} in B_{Gl}
///   over quadruples.
/// Entries are stored for every monotone tuple in lexicographic order, degenerate ones
/// included.
struct Cocycle {
  int degree = 2;
  int n = 0;
  std::vector<ObjectId> objects;
  std::vector<MorphismId> morphisms;

  ObjectId object(const std::vector<int>& t) const;
  MorphismId morphism(const std::vector<int>& t) const;

  void encode_into(Simplex& out) const;
  Simplex encode() const;
  static Cocycle decode(const Simplex& in, std::size_t& pos);

  bool operator==(const Cocycle&) const = default;
};

/// Source and target of the morphism entry at tuple t.
std::pair<ObjectId, ObjectId> entry_endpoints(const Cocycle& c, const Coefficients& k, const std::vector<int>& t);

/// Normalization. Degree 2: Y_{i,i} = I, f_{i,j,j} = r, f_{i,i,j} = l (phi0^{-1} (x) 1).
/// Degree 3: Y_{i,i,j} = Y_{i,j,j} = I; f_{i,j,k,k} = c_{Y,I}; f_{i,j,j,k} = phi0^{-1} (x) 1;
/// f_{i,i,j,k} = c_{I,Y} (phi0^{-1} (x) 1), checked in that order of precedence.
/// Returns kUndefined for a nondegenerate tuple.
ObjectId forced_object(int degree, const Coefficients& k, const std::vector<int>& t);
MorphismId forced_morphism(const Cocycle& c, const Coefficients& k, const std::vector<int>& t);

/// Normalization plus the coherence condition at every i <= j <= k <= l:
///   f_{i,k,l} (G*_{k,l} f_{i,j,k} (x) 1) (phi (x) 1) a^{-1} = f_{i,j,l} (1 (x) f_{j,k,l})
/// as maps G*_{k,l}G*_{j,k} Y_{i,j} (x) (G*_{k,l} Y_{j,k} (x) Y_{k,l}) -> Y_{i,l}.
ValidationReport validate_2cocycle(const Cocycle& c, const Coefficients& k);

/// Normalization plus the pentagon-like condition at every i <= j <= k <= l <= m, all maps
/// from (u(vA (x) B)) (x) C to (F (x) L) (x) K where u = G*_{l,m}, v = G*_{k,l}:
///   left  = (f_{jklm} (x) 1) a^{-1} (1 (x) f_{ijlm}) a (phi^{-1} (x) 1) (u f_{ijkl} (x) 1)
///   right = a^{-1} (1 (x) f_{ijkm}) a (c (x) 1) a^{-1} (1 (x) f_{iklm}) a (phi^{-1} (x) 1)
ValidationReport validate_3cocycle(const Cocycle& c, const Coefficients& k);

/// The same condition for constant coefficients written with explicit brackets only.
ValidationReport validate_3cocycle_constant(const Cocycle& c, const MonoidalCategory& m);

/// All valid cocycles, ordered by encoding. Throws BudgetExceeded when the search visits
/// more than `budget` nodes.
std::vector<Cocycle> enumerate_2cocycles(const Coefficients& k, std::uint64_t budget = kDefaultBudget);
std::vector<Cocycle> enumerate_3cocycles(const Coefficients& k, std::uint64_t budget = kDefaultBudget);

/// c o alpha for a monotone vertex map alpha : [m] -> [n].
Cocycle reindex(const Cocycle& c, const std::vector<int>& alpha);

/// Image of a cocycle with constant coefficients in `source` under F : source -> target.
/// Nondegenerate entries: F(Y) and F(f) phi (degree 2) or phi^{-1} F(f) phi (degree 3);
/// degenerate entries are the forced ones of `target`.
Cocycle transport(const Cocycle& c, const MonoidalFunctor& f, const MonoidalCategory& source,
                  const MonoidalCategory& target);

}  // namespace nervekit
