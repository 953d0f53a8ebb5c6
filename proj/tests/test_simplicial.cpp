#include <doctest.h>

#include <atomic>
#include <cstdlib>
#include <memory>
#include <random>
#include <stdexcept>

#include "nervekit/fincat.hpp"
#include "nervekit/parallel.hpp"
#include "nervekit/simplicial.hpp"
#include "oracles.hpp"
#include "random_diagrams.hpp"

using namespace nervekit;

namespace {

SimplicialSetPtr share(TruncatedSimplicialSet x) { return std::make_shared<const TruncatedSimplicialSet>(std::move(x)); }

BisimplicialSet point_bisimplicial(int bound) {
  const FiniteCategory point = ordinal(0);
  return nerve_diagram_bisimplicial({point, {point}, {identity_functor(point)}}, bound);
}

// ((d^h_{m+1})^{p-m} (d^v_0)^m t) for m = 0..p, straight from the tables.
std::vector<std::size_t> phi_by_tables(const BisimplicialSet& s, int p, std::size_t t) {
  std::vector<std::size_t> out;
  for (int m = 0; m <= p; ++m) {
    std::size_t cell = t;
    int q = p;
    for (int k = 0; k < m; ++k, --q) cell = s.vface(p, q, 0, cell);
    for (int h = p; h > m; --h) cell = s.hface(h, q, m + 1, cell);
    out.push_back(cell);
  }
  return out;
}

bool matches(const BisimplicialSet& s, int p, const std::vector<std::size_t>& t) {
  for (int m = 0; m < p; ++m)
    if (s.vface(m, p - m, 0, t[m]) != s.hface(m + 1, p - m - 1, m + 1, t[m + 1])) return false;
  return true;
}

}  // namespace

TEST_CASE("check_simplicial accepts nerves and names mutated entries") {
  const TruncatedSimplicialSet x = nerve(cyclic_group_category(2), 3);
  CHECK(check_simplicial(x).ok());
  const TruncatedSimplicialSet bad = x.with_face(2, 1, 3, (x.face(2, 1, 3) + 1) % x.count(1));
  const ValidationReport r = check_simplicial(bad);
  CHECK_FALSE(r.ok());
  CHECK_FALSE(r.laws.empty());
  const TruncatedSimplicialSet bad_deg = x.with_degeneracy(1, 0, 1, (x.degeneracy(1, 0, 1) + 1) % x.count(2));
  CHECK_FALSE(check_simplicial(bad_deg).ok());
}

TEST_CASE("simplicial maps: validation, mutation and isomorphism verdicts") {
  const SimplicialSetPtr x = share(nerve(cyclic_group_category(2), 3));
  const SimplicialMap id = identity_map(x);
  CHECK(check_simplicial(id).ok());
  const IsoVerdict v = is_isomorphism(id);
  CHECK(v.iso);
  REQUIRE(v.inverse.has_value());
  CHECK(check_simplicial(*v.inverse).ok());

  const SimplicialMap bad = id.with_image(2, 1, 2);
  CHECK_FALSE(check_simplicial(bad).ok());

  const SimplicialSetPtr point = share(nerve(ordinal(0), 3));
  const SimplicialMap collapse = make_map(x, point, [&](int dim, const Simplex&) { return point->simplex(dim, 0); });
  CHECK(check_simplicial(collapse).ok());
  const IsoVerdict c = is_isomorphism(collapse);
  CHECK_FALSE(c.iso);
  CHECK(c.witness_dim == 1);
  CHECK(compose(collapse, id).images(3) == collapse.images(3));
}

TEST_CASE("materialize rejects operators that leave the enumerated sets") {
  SimplicialModel model;
  model.bound = 1;
  model.simplices = [](int dim) { return std::vector<Simplex>{{dim}}; };
  model.face = [](int, int, const Simplex&) { return Simplex{7}; };
  model.degeneracy = [](int, int, const Simplex&) { return Simplex{1}; };
  CHECK_THROWS_AS(materialize(model), std::logic_error);
}

TEST_CASE("diag and wbar of the constant point") {
  const BisimplicialSet s = point_bisimplicial(3);
  CHECK(check_bisimplicial(s).ok());
  const SimplicialSetPtr d = share(diag(s)), w = share(wbar(s));
  CHECK(d->cardinalities() == std::vector<std::size_t>{1, 1, 1, 1});
  CHECK(w->cardinalities() == std::vector<std::size_t>{1, 1, 1, 1});
  const SimplicialMap f = phi(s, d, w);
  CHECK(check_simplicial(f).ok());
  CHECK(is_isomorphism(f).iso);
}

TEST_CASE("diag of a product bisimplicial set is the product nerve") {
  const FiniteCategory c = cyclic_group_category(3), i = ordinal(1);
  const BisimplicialSet s = nerve_diagram_bisimplicial({i, {c, c}, {identity_functor(c), identity_functor(c), identity_functor(c)}}, 3);
  const TruncatedSimplicialSet d = diag(s);
  CHECK(check_simplicial(d).ok());
  for (int n = 0; n <= 3; ++n) {
    CHECK(d.count(n) == s.count(n, n));
    CHECK(static_cast<long long>(d.count(n)) == oracle::composable_chains(product(c, i), n));
  }
}

TEST_CASE("wbar of a vertically constant S is in bijection with S_{*,0}") {
  for (const FiniteCategory& c : random_bisimplicial::small_categories()) {
    const BisimplicialSet s = nerve_diagram_bisimplicial({ordinal(0), {c}, {identity_functor(c)}}, 3);
    const TruncatedSimplicialSet w = wbar(s);
    CHECK(check_simplicial(w).ok());
    CHECK(w.count(0) == s.count(0, 0));
    for (int p = 0; p <= 3; ++p) {
      CHECK(w.count(p) == s.count(p, 0));
      // Each bar simplex is determined by its last component.
      std::vector<bool> seen(s.count(p, 0), false);
      for (const Simplex& x : w.simplices(p)) {
        const std::size_t last = wbar_components(x).back();
        CHECK_FALSE(seen[last]);
        seen[last] = true;
      }
    }
  }
}

TEST_CASE("phi in low dimensions") {
  const FiniteCategory c = cyclic_group_category(2);
  const BisimplicialSet s =
      nerve_diagram_bisimplicial({ordinal(1), {c, c}, {identity_functor(c), identity_functor(c), identity_functor(c)}}, 2);
  const SimplicialSetPtr d = share(diag(s)), w = share(wbar(s));
  const SimplicialMap f = phi(s, d, w);
  for (std::size_t t = 0; t < s.count(0, 0); ++t) CHECK(wbar_components(w->simplex(0, f(0, t))) == std::vector<std::size_t>{t});
  // p = 1: (d^h_1 t, d^v_0 t)
  for (std::size_t t = 0; t < s.count(1, 1); ++t)
    CHECK(wbar_components(w->simplex(1, f(1, t))) == std::vector<std::size_t>{s.hface(1, 1, 1, t), s.vface(1, 1, 0, t)});
}

TEST_CASE("a corrupted vertical face is caught by the bisimplicial check") {
  const FiniteCategory c = cyclic_group_category(2);
  const BisimplicialSet s =
      nerve_diagram_bisimplicial({ordinal(1), {c, c}, {identity_functor(c), identity_functor(c), identity_functor(c)}}, 2);
  const BisimplicialSet bad = s.with_vface(1, 1, 0, 0, (s.vface(1, 1, 0, 0) + 1) % s.count(1, 0));
  CHECK_FALSE(check_bisimplicial(bad).ok());
}

TEST_CASE("phi on random small bisimplicial sets") {
  std::mt19937 rng(20240601);
  for (int trial = 0; trial < 25; ++trial) {
    const DiagramOfCategories d = random_bisimplicial::random_diagram(rng);
    const BisimplicialSet s = nerve_diagram_bisimplicial(d, 3);
    REQUIRE(check_bisimplicial(s).ok());
    const SimplicialSetPtr dg = share(diag(s)), w = share(wbar(s));
    CHECK(check_simplicial(*dg).ok());
    CHECK(check_simplicial(*w).ok());
    const SimplicialMap f = phi(s, dg, w);
    CHECK(check_simplicial(f).ok());
    for (int p = 0; p <= 3; ++p)
      for (std::size_t t = 0; t < s.count(p, p); ++t) {
        const std::vector<std::size_t> image = wbar_components(w->simplex(p, f(p, t)));
        CHECK(image == phi_by_tables(s, p, t));
        CHECK(matches(s, p, image));
      }
  }
}

TEST_CASE("parallel_for covers every index once and rethrows") {
  std::vector<std::atomic<int>> hits(1000);
  parallel_for(hits.size(), [&](std::size_t i) { hits[i].fetch_add(1); });
  for (const auto& h : hits) CHECK(h.load() == 1);
  CHECK_THROWS_AS(parallel_for(10, [](std::size_t i) {
                    if (i == 7) throw std::runtime_error("seven");
                  }),
                  std::runtime_error);
  CHECK(thread_count() >= 1);
  ::setenv("NERVEKIT_THREADS", "1", 1);
  CHECK(thread_count() == 1);
  ::unsetenv("NERVEKIT_THREADS");
}
