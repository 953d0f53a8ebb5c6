#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "nervekit/simplicial.hpp"
#include "nervekit/smith.hpp"

namespace nervekit {

/// Normalized chain complex: generators are the nondegenerate simplices (those not in the
/// image of any degeneracy), boundary[k] : C_k -> C_{k-1} is the alternating sum of faces
/// with degenerate faces dropped. boundary[0] is the zero map to C_{-1} = 0.
struct ChainComplex {
  int top = -1;
  std::vector<std::vector<std::size_t>> generators;  // simplex indices per degree
  std::vector<std::vector<long>> column;             // simplex index -> generator or -1
  std::vector<SparseMatrix> boundary;

  std::size_t rank(int k) const { return generators.at(k).size(); }
  std::vector<std::size_t> ranks() const;
};

ChainComplex normalized_complex(const TruncatedSimplicialSet& x);

/// Every composite boundary[k-1] * boundary[k] is zero.
bool boundary_squares_to_zero(const ChainComplex& c);

/// Z^betti plus the torsion summands, torsion in divisibility order.
struct AbelianGroup {
  std::size_t betti = 0;
  std::vector<Integer> torsion;

  bool operator==(const AbelianGroup&) const = default;
  std::string to_string() const;
};

struct HomologyGroup {
  int degree = 0;
  AbelianGroup group;
  /// H_k is exact for k <= top - 1; H_top only sees the truncated boundary.
  bool trusted = false;

  nlohmann::json to_json() const;
};

HomologyGroup homology(const ChainComplex& c, int k);
/// H_0..H_top.
std::vector<HomologyGroup> homology_table(const ChainComplex& c);
/// H_0..H_max_degree, max_degree <= top.
std::vector<HomologyGroup> homology_table(const ChainComplex& c, int max_degree);

/// Degree-k chain map of f on normalized complexes; degenerate images map to zero.
SparseMatrix chain_map(const SimplicialMap& f, const ChainComplex& source, const ChainComplex& target, int k);

struct InducedMap {
  int degree = 0;
  SparseMatrix matrix;  // chain map in degree k
  bool commutes = false;  // with the boundary in degrees k and k+1
  AbelianGroup source, target;
  bool iso = false;
  /// Verdicts are trusted for k <= top - 2.
  bool trusted = false;
  std::string reason;

  nlohmann::json to_json() const;
};

/// f_* : H_k(X) -> H_k(Y). Iso iff the groups agree and f_* is onto, i.e. f(Z_k X) and
/// B_k Y generate Z_k Y. A surjection between isomorphic finitely generated abelian
/// groups is an isomorphism. Requires k + 1 <= top.
InducedMap induced_homology_map(const SimplicialMap& f, const ChainComplex& source, const ChainComplex& target,
                                int k);
InducedMap induced_homology_map(const SimplicialMap& f, int k);

}  // namespace nervekit
