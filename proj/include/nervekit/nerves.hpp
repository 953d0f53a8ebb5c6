#pragma once

#include <cstdint>

#include "nervekit/cocycle.hpp"
#include "nervekit/corpus.hpp"
#include "nervekit/simplicial.hpp"

namespace nervekit {

/// A simplex (G, cocycle) of a diagram nerve, encoded as [G..., cocycle...].
struct DiagramSimplex {
  ChainFunctor g;
  Cocycle cocycle;

  Simplex encode() const;
  static DiagramSimplex decode(const Simplex& s);
};

/// Ner_I M: n-simplices are pairs (G : [n] -> I, 2-cocycle of [n] in M G). Faces and
/// degeneracies precompose both G and the cocycle with the coface/codegeneracy; the
/// coefficients of an entry sit at its last index, so no transport is needed.
/// `budget` bounds each cocycle search.
TruncatedSimplicialSet ner_I_mon(const MonoidalDiagram& d, int bound, std::uint64_t budget = kDefaultBudget);

/// Ner_I B with 3-cocycles in place of 2-cocycles.
TruncatedSimplicialSet ner_I_br(const MonoidalDiagram& d, int bound, std::uint64_t budget = kDefaultBudget);

/// Geometric nerve of a braided monoidal category: n-simplices are the 3-cocycles of [n],
/// encoded as bare cocycles.
TruncatedSimplicialSet ner_br(const MonoidalCategory& b, int bound, std::uint64_t budget = kDefaultBudget);

/// Unitary geometric nerve of the Grothendieck bicategory of the delooped diagram:
/// normal lax functors [n] -> int_I Omega^{-1} M. A simplex is encoded as
///   [n, F0..Fn, F_{i,j} (i<j), X_{i,j} (i<j), F_{i,j,k} (i<j<k)]
/// with only the nondegenerate data stored.
TruncatedSimplicialSet delooping_grothendieck_nerve(const MonoidalDiagram& d, int bound,
                                                    std::uint64_t budget = kDefaultBudget);

/// The relabeling Ner_I M -> Delta^u int_I Omega^{-1} M, (G, Y, f) |-> (G, X = Y, F = f).
SimplicialMap proposition_iso(SimplicialSetPtr ner_i_mon, SimplicialSetPtr delooping);

}  // namespace nervekit
