#pragma once

#include <array>
#include <cstddef>
#include <vector>

namespace nervekit {

/// Nondecreasing tuples (i_1 <= ... <= i_r) of [n] in lexicographic order, with a
/// dense lookup table. Cocycle and chain data are stored in this order.
class MonotoneTuples {
 public:
  MonotoneTuples(int n, int arity);

  int n() const { return n_; }
  int arity() const { return arity_; }
  std::size_t size() const { return tuples_.size(); }
  const std::vector<int>& tuple(std::size_t idx) const { return tuples_[idx]; }
  const std::vector<std::vector<int>>& all() const { return tuples_; }

  std::size_t index(const std::vector<int>& t) const;
  std::size_t index(int i, int j) const;
  std::size_t index(int i, int j, int k) const;
  std::size_t index(int i, int j, int k, int l) const;

  /// Cached instance for (n, arity).
  static const MonotoneTuples& get(int n, int arity);

 private:
  int n_;
  int arity_;
  std::vector<std::vector<int>> tuples_;
  std::vector<int> lookup_;  // (n+1)^arity, -1 off the monotone part
};

/// True iff two consecutive entries coincide.
bool is_degenerate(const std::vector<int>& t);

/// Coface d^i : [n-1] -> [n] (skips i) and codegeneracy s^i : [n+1] -> [n] (repeats i),
/// as vertex maps.
std::vector<int> coface(int n, int i);
std::vector<int> codegeneracy(int n, int i);

}  // namespace nervekit
