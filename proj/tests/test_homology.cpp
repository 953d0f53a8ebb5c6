#include <doctest.h>

#include <memory>

#include "nervekit/corpus.hpp"
#include "nervekit/hocolim.hpp"
#include "nervekit/homology.hpp"
#include "nervekit/nerves.hpp"
#include "oracles.hpp"
#include "random_diagrams.hpp"

using namespace nervekit;

namespace {

SimplicialSetPtr share(TruncatedSimplicialSet x) { return std::make_shared<const TruncatedSimplicialSet>(std::move(x)); }

AbelianGroup group(std::size_t betti, std::vector<int> torsion = {}) {
  AbelianGroup g{betti, {}};
  for (int t : torsion) g.torsion.push_back(t);
  return g;
}

std::size_t rank_mod(const SparseMatrix& m, long long p) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  std::vector<std::vector<long long>> plain(m.rows(), std::vector<long long>(m.cols(), 0));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (const auto& [c, v] : m.row(r)) plain[r][c] = static_cast<long long>(v);
  return oracle::rank_mod(plain, p);
}

// Universal coefficients: dim H_k(X; F_p) = betti_k + #(p | torsion of H_k) + #(p | torsion of H_{k-1}).
void check_against_field_ranks(const ChainComplex& c) {
  const auto table = homology_table(c);
  for (int k = 0; k < c.top; ++k) {
    const std::size_t n = c.rank(k);
    for (long long p : {2LL, 3LL, 2147483647LL}) {
      const std::size_t field = n - rank_mod(c.boundary[k], p) - rank_mod(c.boundary[k + 1], p);
      std::size_t predicted = table[k].group.betti;
      for (const Integer& t : table[k].group.torsion) predicted += t % p == 0;
      if (k > 0)
        for (const Integer& t : table[k - 1].group.torsion) predicted += t % p == 0;
      CHECK(field == predicted);
    }
  }
}

}  // namespace

TEST_CASE("normalized chain ranks") {
  CHECK(normalized_complex(nerve(ordinal(0), 3)).ranks() == std::vector<std::size_t>{1, 0, 0, 0});
  CHECK(normalized_complex(nerve(cyclic_group_category(2), 4)).ranks() == std::vector<std::size_t>{1, 1, 1, 1, 1});
  CHECK(normalized_complex(nerve(cyclic_group_category(3), 3)).ranks() == std::vector<std::size_t>{1, 2, 4, 8});
  CHECK(normalized_complex(nerve(ordinal(2), 3)).ranks() == std::vector<std::size_t>{3, 3, 1, 0});
  const ChainComplex br = normalized_complex(ner_br(discrete_cyclic(2), 4));
  CHECK(br.rank(0) == 1);
  CHECK(br.rank(1) == 0);
  CHECK(br.rank(2) == 1);
}

TEST_CASE("homology of classifying spaces of cyclic groups") {
  const ChainComplex c = normalized_complex(nerve(cyclic_group_category(2), 5));
  CHECK(boundary_squares_to_zero(c));
  const auto h = homology_table(c);
  REQUIRE(h.size() == 6);
  CHECK(h[0].group == group(1));
  CHECK(h[1].group == group(0, {2}));
  CHECK(h[2].group == group(0));
  CHECK(h[3].group == group(0, {2}));
  CHECK(h[4].group == group(0));
  for (int k = 0; k <= 4; ++k) CHECK(h[k].trusted);
  CHECK_FALSE(h[5].trusted);
  const auto h3 = homology_table(normalized_complex(nerve(cyclic_group_category(3), 4)));
  CHECK(h3[1].group == group(0, {3}));
  CHECK(h3[3].group == group(0, {3}));
  CHECK(h3[1].group.to_string() == "Z/3");
  CHECK(group(2, {2, 4}).to_string() == "Z^2 + Z/2 + Z/4");
  CHECK(group(0).to_string() == "0");
}

TEST_CASE("homology of the braided nerve of disc(Z/2)") {
  const ChainComplex c = normalized_complex(ner_br(discrete_cyclic(2), 5));
  CHECK(boundary_squares_to_zero(c));
  const auto h = homology_table(c, 4);
  REQUIRE(h.size() == 5);
  CHECK(h[0].group == group(1));
  CHECK(h[1].group == group(0));
  CHECK(h[2].group == group(0, {2}));
  CHECK(h[3].group == group(0));
  CHECK(h[4].group == group(0, {4}));
}

TEST_CASE("integral homology agrees with field ranks via universal coefficients") {
  check_against_field_ranks(normalized_complex(nerve(cyclic_group_category(2), 5)));
  check_against_field_ranks(normalized_complex(nerve(span_category(), 4)));
  check_against_field_ranks(normalized_complex(ner_br(discrete_cyclic(2), 5)));
  check_against_field_ranks(normalized_complex(ner_br(one_object_z2(), 5)));
  std::mt19937 rng(99);
  for (int trial = 0; trial < 10; ++trial) {
    const DiagramOfCategories d = random_bisimplicial::random_diagram(rng);
    const ChainComplex c = normalized_complex(hocolim_of_nerve_diagram(d, 3));
    CHECK(boundary_squares_to_zero(c));
    check_against_field_ranks(c);
  }
}

TEST_CASE("induced maps") {
  const SimplicialSetPtr x = share(nerve(cyclic_group_category(2), 4));
  const InducedMap id = induced_homology_map(identity_map(x), 1);
  CHECK(id.iso);
  CHECK(id.commutes);
  CHECK(id.trusted);
  const SimplicialSetPtr point = share(nerve(ordinal(0), 4));
  const SimplicialMap collapse = make_map(x, point, [&](int dim, const Simplex&) { return point->simplex(dim, 0); });
  CHECK(induced_homology_map(collapse, 0).iso);
  const InducedMap h1 = induced_homology_map(collapse, 1);
  CHECK_FALSE(h1.iso);
  CHECK(h1.commutes);
  CHECK_FALSE(induced_homology_map(collapse, 3).trusted);

  // Z/4 -> Z/2 reduction induces a surjection on H_1 that is not injective.
  const SimplicialSetPtr z4 = share(nerve(cyclic_group_category(4), 3)), z2 = share(nerve(cyclic_group_category(2), 3));
  const SimplicialMap reduce = make_map(z4, z2, [&](int, const Simplex& s) {
    std::size_t pos = 0;
    ChainFunctor g = ChainFunctor::decode(s, pos);
    for (int& a : g.arrows) a %= 2;
    return g.encode();
  });
  REQUIRE(check_simplicial(reduce).ok());
  const InducedMap r1 = induced_homology_map(reduce, 1);
  CHECK(r1.source == group(0, {4}));
  CHECK(r1.target == group(0, {2}));
  CHECK_FALSE(r1.iso);

  const TheoremObjects t = build_theorem_objects(constant_diagram(ordinal(0), discrete_cyclic(2), true), Variant::braided, 4);
  for (int k = 0; k <= 2; ++k) CHECK(induced_homology_map(t.eta, k).iso);
}

TEST_CASE("JSON reports") {
  const auto h = homology_table(normalized_complex(nerve(cyclic_group_category(2), 3)));
  const nlohmann::json j = h[1].to_json();
  CHECK(j["degree"] == 1);
  CHECK(j["betti"] == 0);
  CHECK(j["torsion"] == nlohmann::json::array({"2"}));
  CHECK(j["trusted"] == true);
  const SimplicialSetPtr x = share(nerve(cyclic_group_category(2), 3));
  const nlohmann::json m = induced_homology_map(identity_map(x), 1).to_json();
  for (const char* key : {"commutes", "degree", "iso", "reason", "source", "target", "trusted"}) CHECK(m.contains(key));
}
