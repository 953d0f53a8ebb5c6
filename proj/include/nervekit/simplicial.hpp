#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "nervekit/report.hpp"

namespace nervekit {

/// Canonical serialized form of a simplex. Equality is structural and the
/// lexicographic order of encodings fixes the order of every simplex set.
using Simplex = std::vector<std::int32_t>;

std::string simplex_to_string(const Simplex& s);

/// Simplex sets and face/degeneracy tables in dimensions 0..bound. Degenerate
/// simplices are stored explicitly; degeneracies are defined below the bound.
class TruncatedSimplicialSet {
 public:
  TruncatedSimplicialSet() = default;
  TruncatedSimplicialSet(int bound, std::vector<std::vector<Simplex>> simplices,
                         std::vector<std::vector<std::vector<std::size_t>>> faces,
                         std::vector<std::vector<std::vector<std::size_t>>> degeneracies);

  int bound() const { return bound_; }
  std::size_t count(int dim) const { return simplices_.at(dim).size(); }
  std::vector<std::size_t> cardinalities() const;

  const std::vector<Simplex>& simplices(int dim) const { return simplices_.at(dim); }
  const Simplex& simplex(int dim, std::size_t idx) const { return simplices_.at(dim).at(idx); }

  /// d_i : X_dim -> X_{dim-1}, for 1 <= dim <= bound and 0 <= i <= dim.
  std::size_t face(int dim, int i, std::size_t s) const { return faces_[dim][i][s]; }
  /// s_i : X_dim -> X_{dim+1}, for dim < bound and 0 <= i <= dim.
  std::size_t degeneracy(int dim, int i, std::size_t s) const { return degeneracies_[dim][i][s]; }

  std::optional<std::size_t> find(int dim, const Simplex& s) const;

  /// Copies with one table entry redirected; used to build mutants for tests.
  TruncatedSimplicialSet with_face(int dim, int i, std::size_t s, std::size_t target) const;
  TruncatedSimplicialSet with_degeneracy(int dim, int i, std::size_t s, std::size_t target) const;

 private:
  int bound_ = -1;
  std::vector<std::vector<Simplex>> simplices_;
  std::vector<std::vector<std::vector<std::size_t>>> faces_;
  std::vector<std::vector<std::vector<std::size_t>>> degeneracies_;
};

using SimplicialSetPtr = std::shared_ptr<const TruncatedSimplicialSet>;

/// Generating data for a simplicial set: the simplices of each dimension and the
/// operators on encodings. `materialize` sorts, indexes and tabulates it.
struct SimplicialModel {
  int bound = 0;
  std::function<std::vector<Simplex>(int dim)> simplices;
  std::function<Simplex(int dim, int i, const Simplex&)> face;
  std::function<Simplex(int dim, int i, const Simplex&)> degeneracy;
};

/// Throws std::logic_error if an operator lands outside the enumerated sets.
TruncatedSimplicialSet materialize(const SimplicialModel& model);

class SimplicialMap {
 public:
  SimplicialMap() = default;
  SimplicialMap(SimplicialSetPtr source, SimplicialSetPtr target,
                std::vector<std::vector<std::size_t>> images);

  const TruncatedSimplicialSet& source() const { return *source_; }
  const TruncatedSimplicialSet& target() const { return *target_; }
  SimplicialSetPtr source_ptr() const { return source_; }
  SimplicialSetPtr target_ptr() const { return target_; }
  int bound() const { return source_->bound(); }

  std::size_t operator()(int dim, std::size_t s) const { return images_[dim][s]; }
  const std::vector<std::size_t>& images(int dim) const { return images_.at(dim); }

  SimplicialMap with_image(int dim, std::size_t s, std::size_t target) const;

 private:
  SimplicialSetPtr source_;
  SimplicialSetPtr target_;
  std::vector<std::vector<std::size_t>> images_;
};

/// Builds a map from a function on encodings. Throws std::logic_error if an image
/// is not a simplex of the target.
SimplicialMap make_map(SimplicialSetPtr source, SimplicialSetPtr target,
                       const std::function<Simplex(int dim, const Simplex&)>& on_simplex);

SimplicialMap identity_map(SimplicialSetPtr x);
SimplicialMap compose(const SimplicialMap& g, const SimplicialMap& f);

/// Exhaustive check of every simplicial identity whose terms lie inside the truncation.
ValidationReport check_simplicial(const TruncatedSimplicialSet& x);
/// Checks that f commutes with every face and degeneracy.
ValidationReport check_simplicial(const SimplicialMap& f);

struct IsoVerdict {
  bool iso = false;
  std::optional<SimplicialMap> inverse;
  int witness_dim = -1;
  std::string witness;
};

IsoVerdict is_isomorphism(const SimplicialMap& f);

/// Cells S_{p,q} for all p, q <= bound with horizontal and vertical operators.
class BisimplicialSet {
 public:
  using Table = std::vector<std::vector<std::vector<std::vector<std::size_t>>>>;

  BisimplicialSet() = default;
  BisimplicialSet(int bound, std::vector<std::vector<std::vector<Simplex>>> cells, Table hface,
                  Table hdeg, Table vface, Table vdeg);

  int bound() const { return bound_; }
  std::size_t count(int p, int q) const { return cells_[p][q].size(); }
  const Simplex& cell(int p, int q, std::size_t idx) const { return cells_[p][q][idx]; }
  const std::vector<Simplex>& cells(int p, int q) const { return cells_[p][q]; }
  std::optional<std::size_t> find(int p, int q, const Simplex& s) const;

  std::size_t hface(int p, int q, int i, std::size_t s) const { return hface_[p][q][i][s]; }
  std::size_t hdeg(int p, int q, int i, std::size_t s) const { return hdeg_[p][q][i][s]; }
  std::size_t vface(int p, int q, int j, std::size_t s) const { return vface_[p][q][j][s]; }
  std::size_t vdeg(int p, int q, int j, std::size_t s) const { return vdeg_[p][q][j][s]; }

  BisimplicialSet with_vface(int p, int q, int j, std::size_t s, std::size_t target) const;

 private:
  int bound_ = -1;
  std::vector<std::vector<std::vector<Simplex>>> cells_;
  Table hface_, hdeg_, vface_, vdeg_;
};

struct BisimplicialModel {
  int bound = 0;
  std::function<std::vector<Simplex>(int p, int q)> cells;
  std::function<Simplex(int p, int q, int i, const Simplex&)> hface;
  std::function<Simplex(int p, int q, int i, const Simplex&)> hdeg;
  std::function<Simplex(int p, int q, int j, const Simplex&)> vface;
  std::function<Simplex(int p, int q, int j, const Simplex&)> vdeg;
};

BisimplicialSet materialize(const BisimplicialModel& model);

/// Rows, columns and the commutation of horizontal with vertical operators.
ValidationReport check_bisimplicial(const BisimplicialSet& s);

/// diag S: n-simplices are the cells S_{n,n}, d_i = d^h_i d^v_i, s_i = s^h_i s^v_i.
/// Simplices keep the cell encodings of S.
TruncatedSimplicialSet diag(const BisimplicialSet& s);

/// Bar construction. A p-simplex (t_0, ..., t_p), t_m in S_{m,p-m}, is encoded by the
/// cell indices of its components and satisfies d^v_0 t_m = d^h_{m+1} t_{m+1}.
/// d_i deletes t_i, applies d^v_{i-m} to t_m for m < i and d^h_i to t_m for m > i.
TruncatedSimplicialSet wbar(const BisimplicialSet& s);

/// The cells of a bar simplex, as indices into S_{m,p-m}.
std::vector<std::size_t> wbar_components(const Simplex& simplex);

/// Phi t = ((d^h_1)^p t, ..., (d^h_{m+1})^{p-m} (d^v_0)^m t, ..., (d^v_0)^p t).
/// Throws std::logic_error when a computed tuple violates the matching condition.
SimplicialMap phi(const BisimplicialSet& s, SimplicialSetPtr diag_s, SimplicialSetPtr wbar_s);

/// Per-dimension cardinalities and violation lists.
nlohmann::json report_json(const TruncatedSimplicialSet& x, const ValidationReport& r);

}  // namespace nervekit
