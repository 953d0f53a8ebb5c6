#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include <json.hpp>

#include "nervekit/cocycle.hpp"
#include "nervekit/corpus.hpp"
#include "nervekit/simplicial.hpp"

namespace nervekit {

/// Monoidal diagrams use 2-cocycles, braided ones 3-cocycles.
enum class Variant { monoidal, braided };

int cocycle_degree(Variant v);
const char* variant_name(Variant v);

/// S_{p,q}: pairs (cocycle of [p] in B_{G0}, G : [q] -> I), encoded [G..., cocycle...].
/// Horizontal operators reindex the cocycle; vertical ones precompose G, and d^v_0 also
/// transports the cocycle along G*_{0,1}.
BisimplicialSet build_bisimplicial_S(const MonoidalDiagram& d, int bound, Variant v,
                                     std::uint64_t budget = kDefaultBudget);

/// diag S, the homotopy colimit.
TruncatedSimplicialSet hocolim_br(const MonoidalDiagram& d, int bound, std::uint64_t budget = kDefaultBudget);
TruncatedSimplicialSet hocolim_mon(const MonoidalDiagram& d, int bound, std::uint64_t budget = kDefaultBudget);

/// Image of a cocycle under fiberwise functors: the entry at a tuple ending in l is pushed
/// along `along(l)` : source.fiber(l) -> target.fiber(l). Objects map to F(Y); morphisms
/// to F(f) phi (degree 2) or phi^{-1} F(f) phi (degree 3). Degenerate entries are the
/// forced ones of `target`.
Cocycle push_forward(const Cocycle& c, const Coefficients& source, const Coefficients& target,
                     const std::function<const MonoidalFunctor&(int l)>& along);

/// eta : hocolim -> Ner_I, (cocycle, G) |-> (G, cocycle pushed along G*_{0,l}). Every image
/// is validated; an invalid one throws std::logic_error.
SimplicialMap eta(const MonoidalDiagram& d, SimplicialSetPtr hocolim, SimplicialSetPtr ner_i);

/// Psi : W-bar S -> Ner_I. For a bar simplex (t_0, ..., t_p) with t_m = (cocycle^{(m)}, G^{(p-m)})
/// the image is (G^{(p)}, entries at tuples ending in l read off cocycle^{(l)}).
SimplicialMap psi(const MonoidalDiagram& d, Variant v, const BisimplicialSet& s, SimplicialSetPtr wbar,
                  SimplicialSetPtr ner_i);

/// Inverse of Psi: t_m = (restriction of the cocycle to [0..m] pushed along G*_{l,m}, G shifted by m).
SimplicialMap psi_inverse(const MonoidalDiagram& d, const BisimplicialSet& s, SimplicialSetPtr ner_i,
                          SimplicialSetPtr wbar);

struct TriangleCertificate {
  bool agree = true;
  std::vector<std::size_t> agreements;  // per dimension
  std::vector<std::size_t> totals;
  /// First disagreement: dimension, simplex and both images.
  std::optional<nlohmann::json> witness;

  nlohmann::json to_json() const;
};

/// Compares eta with psi o phi simplex by simplex.
TriangleCertificate check_triangle(const SimplicialMap& eta_map, const SimplicialMap& psi_map,
                                   const SimplicialMap& phi_map);

/// Every object the comparison needs, built on one S.
struct TheoremObjects {
  Variant variant = Variant::braided;
  int bound = 0;
  BisimplicialSet s;
  SimplicialSetPtr hocolim, wbar, ner_i;
  SimplicialMap phi, eta, psi, psi_inverse;
};

TheoremObjects build_theorem_objects(const MonoidalDiagram& d, Variant v, int bound,
                                     std::uint64_t budget = kDefaultBudget);

}  // namespace nervekit
