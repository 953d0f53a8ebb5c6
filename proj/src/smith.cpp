#include "nervekit/smith.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <utility>

namespace nervekit {

IntMatrix zero_matrix(std::size_t rows, std::size_t cols) { return IntMatrix(rows, std::vector<Integer>(cols)); }

IntMatrix identity_matrix(std::size_t n) {
  IntMatrix m = zero_matrix(n, n);
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  const std::size_t inner = b.size();
  const std::size_t cols = inner ? b[0].size() : 0;
  IntMatrix out = zero_matrix(a.size(), cols);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].size() != inner) throw std::invalid_argument("multiply: shape mismatch");
    for (std::size_t k = 0; k < inner; ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < cols; ++j) out[i][j] += a[i][k] * b[k][j];
    }
  }
  return out;
}

Integer determinant(const IntMatrix& a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  IntMatrix m = a;
  Integer sign = 1, previous = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t swap = k + 1;
      while (swap < n && m[swap][k] == 0) ++swap;
      if (swap == n) return 0;
      std::swap(m[k], m[swap]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / previous;
    previous = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

namespace {

void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a != b) std::swap(m[a], m[b]);
}

void swap_cols(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (auto& row : m) std::swap(row[a], row[b]);
}

// row_target += factor * row_source
void add_row(IntMatrix& m, std::size_t target, std::size_t source, const Integer& factor) {
  for (std::size_t j = 0; j < m[target].size(); ++j)
    if (m[source][j] != 0) m[target][j] += factor * m[source][j];
}

void add_col(IntMatrix& m, std::size_t target, std::size_t source, const Integer& factor) {
  for (auto& row : m)
    if (row[source] != 0) row[target] += factor * row[source];
}

// Reduces d in place; u and v, when given, accumulate the row and column operations.
std::size_t reduce(IntMatrix& d, IntMatrix* u, IntMatrix* v) {
  const std::size_t rows = d.size();
  const std::size_t cols = rows ? d[0].size() : 0;
  auto row_swap = [&](std::size_t a, std::size_t b) {
    swap_rows(d, a, b);
    if (u) swap_rows(*u, a, b);
  };
  auto col_swap = [&](std::size_t a, std::size_t b) {
    swap_cols(d, a, b);
    if (v) swap_cols(*v, a, b);
  };
  auto row_add = [&](std::size_t target, std::size_t source, const Integer& factor) {
    add_row(d, target, source, factor);
    if (u) add_row(*u, target, source, factor);
  };
  auto col_add = [&](std::size_t target, std::size_t source, const Integer& factor) {
    add_col(d, target, source, factor);
    if (v) add_col(*v, target, source, factor);
  };

  std::size_t t = 0;
  for (; t < std::min(rows, cols); ++t) {
    std::size_t pr = rows, pc = cols;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j)
        if (d[i][j] != 0 && (pr == rows || abs(d[i][j]) < abs(d[pr][pc]))) {
          pr = i;
          pc = j;
        }
    if (pr == rows) break;
    row_swap(t, pr);
    col_swap(t, pc);
    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (d[i][t] == 0) continue;
        row_add(i, t, -(d[i][t] / d[t][t]));
        if (d[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (d[t][j] == 0) continue;
        col_add(j, t, -(d[t][j] / d[t][t]));
        if (d[t][j] != 0) clean = false;
      }
      if (!clean) {
        // A remainder is smaller than the pivot; move the smallest one into place.
        std::size_t best_r = t, best_c = t;
        for (std::size_t i = t + 1; i < rows; ++i)
          if (d[i][t] != 0 && abs(d[i][t]) < abs(d[best_r][best_c])) {
            best_r = i;
            best_c = t;
          }
        for (std::size_t j = t + 1; j < cols; ++j)
          if (d[t][j] != 0 && abs(d[t][j]) < abs(d[best_r][best_c])) {
            best_r = t;
            best_c = j;
          }
        row_swap(t, best_r);
        col_swap(t, best_c);
        continue;
      }
      bool divides = true;
      for (std::size_t i = t + 1; i < rows && divides; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (d[i][j] % d[t][t] != 0) {
            row_add(t, i, 1);
            divides = false;
            break;
          }
      if (divides) break;
    }
    if (d[t][t] < 0) {
      for (auto& x : d[t]) x = -x;
      if (u)
        for (auto& x : (*u)[t]) x = -x;
    }
  }
  return t;
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& a) { return smith_normal_form(a, a.empty() ? 0 : a[0].size()); }

SmithForm smith_normal_form(const IntMatrix& a, std::size_t cols) {
  SmithForm out;
  out.d = a;
  out.u = identity_matrix(a.size());
  out.v = identity_matrix(cols);
  out.rank = reduce(out.d, &out.u, &out.v);
  return out;
}

void SparseMatrix::add(std::size_t r, std::size_t c, const Integer& value) {
  if (r >= rows_ || c >= cols_) throw std::out_of_range("SparseMatrix::add");
  if (value == 0) return;
  auto& row = data_[r];
  auto it = row.find(c);
  if (it == row.end()) {
    row.emplace(c, value);
  } else {
    it->second += value;
    if (it->second == 0) row.erase(it);
  }
}

Integer SparseMatrix::at(std::size_t r, std::size_t c) const {
  const auto it = data_.at(r).find(c);
  return it == data_[r].end() ? Integer(0) : it->second;
}

bool SparseMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const auto& row) { return row.empty(); });
}

IntMatrix SparseMatrix::dense() const {
  IntMatrix out = zero_matrix(rows_, cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (const auto& [c, value] : data_[r]) out[r][c] = value;
  return out;
}

SparseMatrix SparseMatrix::operator*(const SparseMatrix& other) const {
  if (cols_ != other.rows_) throw std::invalid_argument("SparseMatrix product: shape mismatch");
  SparseMatrix out(rows_, other.cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (const auto& [k, a] : data_[r])
      for (const auto& [c, b] : other.data_[k]) out.add(r, c, a * b);
  return out;
}

bool SparseMatrix::operator==(const SparseMatrix& other) const {
  return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
}

std::vector<Integer> invariant_factors(const SparseMatrix& a) {
  std::vector<std::map<std::size_t, Integer>> rows(a.rows());
  std::vector<std::set<std::size_t>> cols(a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    rows[r] = a.row(r);
    for (const auto& entry : rows[r]) cols[entry.first].insert(r);
  }

  std::size_t units = 0;
  auto eliminate = [&](std::size_t pr, std::size_t pc) {
    const Integer pivot = rows[pr].at(pc);  // +-1, its own inverse
    const std::vector<std::size_t> others(cols[pc].begin(), cols[pc].end());
    for (std::size_t r : others) {
      if (r == pr) continue;
      const Integer factor = rows[r].at(pc) * pivot;
      for (const auto& [c, value] : rows[pr]) {
        auto it = rows[r].find(c);
        Integer updated = (it == rows[r].end() ? Integer(0) : it->second) - factor * value;
        if (updated == 0) {
          if (it != rows[r].end()) rows[r].erase(it);
          cols[c].erase(r);
        } else if (it == rows[r].end()) {
          rows[r].emplace(c, std::move(updated));
          cols[c].insert(r);
        } else {
          it->second = std::move(updated);
        }
      }
    }
    for (const auto& entry : rows[pr]) cols[entry.first].erase(pr);
    rows[pr].clear();
    ++units;
  };

  for (bool progress = true; progress;) {
    progress = false;
    for (std::size_t c = 0; c < cols.size(); ++c) {
      std::size_t best = a.rows();
      for (std::size_t r : cols[c]) {
        const Integer& value = rows[r].at(c);
        if ((value == 1 || value == -1) && (best == a.rows() || rows[r].size() < rows[best].size())) best = r;
      }
      if (best != a.rows()) {
        eliminate(best, c);
        progress = true;
      }
    }
  }

  std::vector<std::size_t> live_rows, live_cols;
  std::vector<std::size_t> col_pos(cols.size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    if (!rows[r].empty()) live_rows.push_back(r);
  for (std::size_t c = 0; c < cols.size(); ++c)
    if (!cols[c].empty()) {
      col_pos[c] = live_cols.size();
      live_cols.push_back(c);
    }
  IntMatrix rest = zero_matrix(live_rows.size(), live_cols.size());
  for (std::size_t i = 0; i < live_rows.size(); ++i)
    for (const auto& [c, value] : rows[live_rows[i]]) rest[i][col_pos[c]] = value;
  const std::size_t rank = reduce(rest, nullptr, nullptr);

  std::vector<Integer> out(units, Integer(1));
  for (std::size_t t = 0; t < rank; ++t) out.push_back(rest[t][t]);
  return out;
}

}  // namespace nervekit
