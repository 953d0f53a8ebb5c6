#include "nervekit/tuples.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace nervekit {

MonotoneTuples::MonotoneTuples(int n, int arity) : n_(n), arity_(arity) {
  std::size_t dense = 1;
  for (int r = 0; r < arity; ++r) dense *= static_cast<std::size_t>(n + 1);
  lookup_.assign(dense, -1);
  std::vector<int> t(arity, 0);
  if (arity == 0) {
    tuples_.push_back({});
    lookup_[0] = 0;
    return;
  }
  while (true) {
    std::size_t code = 0;
    for (int v : t) code = code * (n + 1) + v;
    lookup_[code] = static_cast<int>(tuples_.size());
    tuples_.push_back(t);
    int pos = arity - 1;
    while (pos >= 0 && t[pos] == n) --pos;
    if (pos < 0) break;
    ++t[pos];
    for (int q = pos + 1; q < arity; ++q) t[q] = t[pos];
  }
}

std::size_t MonotoneTuples::index(const std::vector<int>& t) const {
  std::size_t code = 0;
  for (int v : t) code = code * (n_ + 1) + v;
  const int idx = lookup_.at(code);
  if (idx < 0) throw std::out_of_range("MonotoneTuples::index: tuple is not monotone");
  return static_cast<std::size_t>(idx);
}

std::size_t MonotoneTuples::index(int i, int j) const {
  return static_cast<std::size_t>(lookup_[static_cast<std::size_t>(i) * (n_ + 1) + j]);
}

std::size_t MonotoneTuples::index(int i, int j, int k) const {
  const std::size_t m = n_ + 1;
  return static_cast<std::size_t>(lookup_[(static_cast<std::size_t>(i) * m + j) * m + k]);
}

std::size_t MonotoneTuples::index(int i, int j, int k, int l) const {
  const std::size_t m = n_ + 1;
  return static_cast<std::size_t>(lookup_[((static_cast<std::size_t>(i) * m + j) * m + k) * m + l]);
}

const MonotoneTuples& MonotoneTuples::get(int n, int arity) {
  static std::mutex mutex;
  static std::map<std::pair<int, int>, std::unique_ptr<MonotoneTuples>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto& slot = cache[{n, arity}];
  if (!slot) slot = std::make_unique<MonotoneTuples>(n, arity);
  return *slot;
}

bool is_degenerate(const std::vector<int>& t) {
  for (std::size_t a = 1; a < t.size(); ++a)
    if (t[a] == t[a - 1]) return true;
  return false;
}

std::vector<int> coface(int n, int i) {
  std::vector<int> out;
  for (int v = 0; v <= n; ++v)
    if (v != i) out.push_back(v);
  return out;
}

std::vector<int> codegeneracy(int n, int i) {
  std::vector<int> out;
  for (int v = 0; v <= n + 1; ++v) out.push_back(v <= i ? v : v - 1);
  return out;
}

}  // namespace nervekit
