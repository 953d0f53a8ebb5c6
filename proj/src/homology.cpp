#include "nervekit/homology.hpp"

#include <algorithm>
#include <stdexcept>

namespace nervekit {

std::vector<std::size_t> ChainComplex::ranks() const {
  std::vector<std::size_t> out;
  for (const auto& g : generators) out.push_back(g.size());
  return out;
}

ChainComplex normalized_complex(const TruncatedSimplicialSet& x) {
  ChainComplex c;
  c.top = x.bound();
  std::vector<std::vector<bool>> degenerate(c.top + 1);
  for (int k = 0; k <= c.top; ++k) degenerate[k].assign(x.count(k), false);
  for (int k = 0; k < c.top; ++k)
    for (int i = 0; i <= k; ++i)
      for (std::size_t s = 0; s < x.count(k); ++s) degenerate[k + 1][x.degeneracy(k, i, s)] = true;

  c.generators.resize(c.top + 1);
  c.column.resize(c.top + 1);
  for (int k = 0; k <= c.top; ++k) {
    c.column[k].assign(x.count(k), -1);
    for (std::size_t s = 0; s < x.count(k); ++s)
      if (!degenerate[k][s]) {
        c.column[k][s] = static_cast<long>(c.generators[k].size());
        c.generators[k].push_back(s);
      }
  }
  c.boundary.emplace_back(0, c.rank(0));
  for (int k = 1; k <= c.top; ++k) {
    SparseMatrix d(c.rank(k - 1), c.rank(k));
    for (std::size_t j = 0; j < c.rank(k); ++j)
      for (int i = 0; i <= k; ++i) {
        const long row = c.column[k - 1][x.face(k, i, c.generators[k][j])];
        if (row >= 0) d.add(static_cast<std::size_t>(row), j, i % 2 == 0 ? 1 : -1);
      }
    c.boundary.push_back(std::move(d));
  }
  return c;
}

bool boundary_squares_to_zero(const ChainComplex& c) {
  for (int k = 2; k <= c.top; ++k)
    if (!(c.boundary[k - 1] * c.boundary[k]).is_zero()) return false;
  return true;
}

std::string AbelianGroup::to_string() const {
  std::vector<std::string> parts;
  if (betti == 1) parts.push_back("Z");
  if (betti > 1) parts.push_back("Z^" + std::to_string(betti));
  for (const Integer& t : torsion) parts.push_back("Z/" + t.str());
  if (parts.empty()) return "0";
  std::string out = parts[0];
  for (std::size_t i = 1; i < parts.size(); ++i) out += " + " + parts[i];
  return out;
}

nlohmann::json HomologyGroup::to_json() const {
  nlohmann::json torsion = nlohmann::json::array();
  for (const Integer& t : group.torsion) torsion.push_back(t.str());
  return {{"betti", group.betti}, {"degree", degree}, {"torsion", torsion}, {"trusted", trusted}};
}

namespace {

HomologyGroup assemble(const ChainComplex& c, int k, std::size_t rank_k, const std::vector<Integer>* next) {
  HomologyGroup h;
  h.degree = k;
  h.trusted = k < c.top;
  std::size_t cycles = c.rank(k) - rank_k;
  if (next) {
    cycles -= next->size();
    for (const Integer& t : *next)
      if (t > 1) h.group.torsion.push_back(t);
  }
  h.group.betti = cycles;
  return h;
}

std::size_t rank_of(const SparseMatrix& m) { return invariant_factors(m).size(); }

}  // namespace

HomologyGroup homology(const ChainComplex& c, int k) {
  if (k < 0 || k > c.top) throw std::out_of_range("homology degree outside the complex");
  const std::size_t rank_k = k == 0 ? 0 : rank_of(c.boundary[k]);
  if (k == c.top) return assemble(c, k, rank_k, nullptr);
  const std::vector<Integer> next = invariant_factors(c.boundary[k + 1]);
  return assemble(c, k, rank_k, &next);
}

std::vector<HomologyGroup> homology_table(const ChainComplex& c) { return homology_table(c, c.top); }

std::vector<HomologyGroup> homology_table(const ChainComplex& c, int max_degree) {
  if (max_degree > c.top) throw std::out_of_range("homology degree outside the complex");
  std::vector<std::vector<Integer>> factors(max_degree + 2);
  for (int k = 1; k <= std::min(max_degree + 1, c.top); ++k) factors[k] = invariant_factors(c.boundary[k]);
  std::vector<HomologyGroup> out;
  for (int k = 0; k <= max_degree; ++k) {
    const std::size_t rank_k = factors[k].size();
    out.push_back(assemble(c, k, rank_k, k < c.top ? &factors[k + 1] : nullptr));
  }
  return out;
}

SparseMatrix chain_map(const SimplicialMap& f, const ChainComplex& source, const ChainComplex& target, int k) {
  SparseMatrix m(target.rank(k), source.rank(k));
  for (std::size_t j = 0; j < source.rank(k); ++j) {
    const long row = target.column[k][f(k, source.generators[k][j])];
    if (row >= 0) m.add(static_cast<std::size_t>(row), j, 1);
  }
  return m;
}

nlohmann::json InducedMap::to_json() const {
  return {{"commutes", commutes},
          {"degree", degree},
          {"iso", iso},
          {"reason", reason},
          {"source", source.to_string()},
          {"target", target.to_string()},
          {"trusted", trusted}};
}

InducedMap induced_homology_map(const SimplicialMap& f, const ChainComplex& source, const ChainComplex& target,
                                int k) {
  if (k < 0 || k + 1 > std::min(source.top, target.top))
    throw std::out_of_range("induced map needs the boundary from degree k + 1");
  InducedMap out;
  out.degree = k;
  out.trusted = k <= std::min(source.top, target.top) - 2;
  out.matrix = chain_map(f, source, target, k);
  const SparseMatrix next = chain_map(f, source, target, k + 1);
  out.commutes = target.boundary[k + 1] * next == out.matrix * source.boundary[k + 1];
  if (k > 0) {
    const SparseMatrix below = chain_map(f, source, target, k - 1);
    out.commutes = out.commutes && target.boundary[k] * out.matrix == below * source.boundary[k];
  }
  out.source = homology(source, k).group;
  out.target = homology(target, k).group;
  if (!out.commutes) {
    out.reason = "not a chain map";
    return out;
  }

  // Columns of `cycles` form a basis of Z_k of the source.
  IntMatrix cycles;
  if (k == 0) {
    cycles = identity_matrix(source.rank(0));
  } else {
    const SmithForm snf = smith_normal_form(source.boundary[k].dense(), source.rank(k));
    cycles = zero_matrix(source.rank(k), source.rank(k) - snf.rank);
    for (std::size_t r = 0; r < source.rank(k); ++r)
      for (std::size_t c = snf.rank; c < source.rank(k); ++c) cycles[r][c - snf.rank] = snf.v[r][c];
  }
  const std::size_t z_count = cycles.empty() ? 0 : cycles[0].size();
  const std::size_t b_count = target.rank(k + 1);
  SparseMatrix span(target.rank(k), z_count + b_count);
  for (std::size_t t = 0; t < target.rank(k); ++t)
    for (const auto& [r, value] : out.matrix.row(t))
      for (std::size_t c = 0; c < z_count; ++c)
        if (cycles[r][c] != 0) span.add(t, c, value * cycles[r][c]);
  for (std::size_t r = 0; r < target.rank(k); ++r)
    for (const auto& [c, value] : target.boundary[k + 1].row(r)) span.add(r, z_count + c, value);

  const std::size_t target_cycles = target.rank(k) - (k == 0 ? 0 : rank_of(target.boundary[k]));
  const std::vector<Integer> factors = invariant_factors(span);
  const bool onto = factors.size() == target_cycles &&
                    std::all_of(factors.begin(), factors.end(), [](const Integer& t) { return t == 1; });
  out.iso = onto && out.source == out.target;
  if (!onto) out.reason = "not onto";
  else if (!out.iso) out.reason = "groups differ";
  return out;
}

InducedMap induced_homology_map(const SimplicialMap& f, int k) {
  return induced_homology_map(f, normalized_complex(f.source()), normalized_complex(f.target()), k);
}

}  // namespace nervekit
