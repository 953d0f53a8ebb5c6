#include <doctest.h>

#include <numeric>
#include <random>

#include "nervekit/smith.hpp"
#include "oracles.hpp"

using namespace nervekit;

namespace {

IntMatrix from_rows(const std::vector<std::vector<long long>>& rows) {
  IntMatrix m;
  for (const auto& r : rows) {
    m.emplace_back();
    for (long long x : r) m.back().push_back(x);
  }
  return m;
}

bool is_smith_diagonal(const IntMatrix& d, std::size_t rank) {
  for (std::size_t i = 0; i < d.size(); ++i)
    for (std::size_t j = 0; j < d[i].size(); ++j) {
      if (i != j && d[i][j] != 0) return false;
      if (i == j && ((i < rank) != (d[i][j] > 0))) return false;
    }
  for (std::size_t i = 0; i + 1 < rank; ++i)
    if (d[i + 1][i + 1] % d[i][i] != 0) return false;
  return true;
}

// Determinantal divisors: d_1 ... d_k = gcd of all k x k minors.
std::vector<Integer> factors_from_minors(const IntMatrix& a) {
  const std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  std::vector<Integer> divisors{1};
  for (std::size_t k = 1; k <= std::min(rows, cols); ++k) {
    Integer g = 0;
    for (unsigned rm = 0; rm < (1u << rows); ++rm) {
      if (static_cast<std::size_t>(__builtin_popcount(rm)) != k) continue;
      for (unsigned cm = 0; cm < (1u << cols); ++cm) {
        if (static_cast<std::size_t>(__builtin_popcount(cm)) != k) continue;
        IntMatrix minor;
        for (std::size_t i = 0; i < rows; ++i) {
          if (!(rm >> i & 1)) continue;
          minor.emplace_back();
          for (std::size_t j = 0; j < cols; ++j)
            if (cm >> j & 1) minor.back().push_back(a[i][j]);
        }
        Integer det = determinant(minor);
        if (det < 0) det = -det;
        g = boost::multiprecision::gcd(g, det);
      }
    }
    if (g == 0) break;
    divisors.push_back(g);
  }
  std::vector<Integer> out;
  for (std::size_t k = 1; k < divisors.size(); ++k) out.push_back(divisors[k] / divisors[k - 1]);
  return out;
}

SparseMatrix to_sparse(const IntMatrix& a, std::size_t cols) {
  SparseMatrix s(a.size(), cols);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < cols; ++j)
      if (a[i][j] != 0) s.add(i, j, a[i][j]);
  return s;
}

}  // namespace

TEST_CASE("Smith forms of small examples") {
  const SmithForm a = smith_normal_form(from_rows({{2, 0}, {0, 0}}));
  CHECK(a.d == from_rows({{2, 0}, {0, 0}}));
  CHECK(a.rank == 1);
  const SmithForm b = smith_normal_form(from_rows({{1, 2}, {3, 4}}));
  CHECK(b.d == from_rows({{1, 0}, {0, 2}}));
  CHECK(b.rank == 2);
  const SmithForm z = smith_normal_form(zero_matrix(2, 3));
  CHECK(z.d == zero_matrix(2, 3));
  CHECK(z.rank == 0);
  const SmithForm empty = smith_normal_form(IntMatrix{}, 3);
  CHECK(empty.rank == 0);
  CHECK(empty.v == identity_matrix(3));
  CHECK(determinant(from_rows({{2, 1}, {7, 4}})) == 1);
  CHECK(determinant(from_rows({{0, 1, 0}, {1, 0, 0}, {0, 0, 5}})) == -5);
}

TEST_CASE("random matrices: u a v = d with unimodular u and v") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t rows = 1 + rng() % 6, cols = 1 + rng() % 6;
    const IntMatrix a = oracle::random_matrix(rng, rows, cols, 1 + trial % 6);
    const SmithForm s = smith_normal_form(a);
    CHECK(multiply(multiply(s.u, a), s.v) == s.d);
    CHECK(oracle::is_unimodular(s.u));
    CHECK(oracle::is_unimodular(s.v));
    CHECK(is_smith_diagonal(s.d, s.rank));
    std::vector<std::vector<long long>> plain(rows, std::vector<long long>(cols));
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) plain[i][j] = static_cast<long long>(a[i][j]);
    CHECK(s.rank == oracle::rank_mod(plain, 2147483647));
    // Kernel columns of v are killed by a.
    for (std::size_t j = s.rank; j < cols; ++j)
      for (std::size_t i = 0; i < rows; ++i) {
        Integer dot = 0;
        for (std::size_t k = 0; k < cols; ++k) dot += a[i][k] * s.v[k][j];
        CHECK(dot == 0);
      }
  }
}

TEST_CASE("invariant factors agree with determinantal divisors and the dense form") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 120; ++trial) {
    const std::size_t rows = 1 + rng() % 4, cols = 1 + rng() % 4;
    IntMatrix a = oracle::random_matrix(rng, rows, cols, 4);
    // Sparse inputs exercise the unit-pivot pass.
    for (auto& row : a)
      for (auto& x : row)
        if (rng() % 3 == 0) x = 0;
    const std::vector<Integer> expected = factors_from_minors(a);
    CHECK(invariant_factors(to_sparse(a, cols)) == expected);
    const SmithForm s = smith_normal_form(a);
    std::vector<Integer> diagonal;
    for (std::size_t i = 0; i < s.rank; ++i) diagonal.push_back(s.d[i][i]);
    CHECK(diagonal == expected);
  }
}

TEST_CASE("sparse matrix arithmetic") {
  SparseMatrix a(2, 2), b(2, 2);
  a.add(0, 1, 3);
  a.add(0, 1, -3);
  CHECK(a.is_zero());
  a.add(0, 0, 2);
  a.add(1, 0, 1);
  b.add(0, 1, 5);
  const SparseMatrix p = a * b;
  CHECK(p.at(0, 1) == 10);
  CHECK(p.at(1, 1) == 5);
  CHECK(p.at(0, 0) == 0);
  CHECK(p.dense() == multiply(a.dense(), b.dense()));
}
