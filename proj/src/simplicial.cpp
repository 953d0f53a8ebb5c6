#include "nervekit/simplicial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace nervekit {

namespace {

// Violation lists are capped so a badly broken input cannot exhaust memory.
constexpr std::size_t kMaxViolations = 10000;

void record(ValidationReport& r, const std::string& kind, const std::string& detail,
            std::vector<long long> witness) {
  if (r.laws.size() == kMaxViolations) {
    r.note("violation list truncated at " + std::to_string(kMaxViolations) + " entries");
  }
  if (r.laws.size() >= kMaxViolations) return;
  r.law_violation(kind, detail, std::move(witness));
}

std::optional<std::size_t> find_sorted(const std::vector<Simplex>& sorted, const Simplex& s) {
  auto it = std::lower_bound(sorted.begin(), sorted.end(), s);
  if (it == sorted.end() || *it != s) return std::nullopt;
  return static_cast<std::size_t>(it - sorted.begin());
}

// Generic simplicial-identity checker over accessor callbacks, shared by simplicial
// sets and by the rows and columns of bisimplicial sets.
struct OperatorView {
  int bound;
  std::function<std::size_t(int)> count;
  std::function<std::size_t(int, int, std::size_t)> face;
  std::function<std::size_t(int, int, std::size_t)> degeneracy;
};

void check_identities(const OperatorView& x, ValidationReport& r, const std::string& label) {
  auto where = [&](const char* identity, int dim, int i, int j, std::size_t s) {
    std::ostringstream out;
    out << label << identity << " fails at dim " << dim << " i=" << i << " j=" << j
        << " simplex #" << s;
    return out.str();
  };
  for (int k = 0; k <= x.bound; ++k) {
    const std::size_t n = x.count(k);
    for (std::size_t s = 0; s < n; ++s) {
      if (k >= 2) {
        for (int j = 1; j <= k; ++j) {
          for (int i = 0; i < j; ++i) {
            if (x.face(k - 1, i, x.face(k, j, s)) != x.face(k - 1, j - 1, x.face(k, i, s))) {
              record(r, "face-face", where("d_i d_j = d_{j-1} d_i", k, i, j, s), {k, i, j, (long long)s});
            }
          }
        }
      }
      if (k < x.bound) {
        for (int j = 0; j <= k; ++j) {
          const std::size_t sj = x.degeneracy(k, j, s);
          for (int i = 0; i <= k + 1; ++i) {
            const std::size_t lhs = x.face(k + 1, i, sj);
            if (i == j || i == j + 1) {
              if (lhs != s) record(r, "face-degeneracy", where("d_i s_j = id", k, i, j, s), {k, i, j, (long long)s});
            } else if (i < j) {
              if (lhs != x.degeneracy(k - 1, j - 1, x.face(k, i, s))) {
                record(r, "face-degeneracy", where("d_i s_j = s_{j-1} d_i", k, i, j, s), {k, i, j, (long long)s});
              }
            } else if (lhs != x.degeneracy(k - 1, j, x.face(k, i - 1, s))) {
              record(r, "face-degeneracy", where("d_i s_j = s_j d_{i-1}", k, i, j, s), {k, i, j, (long long)s});
            }
          }
        }
      }
      if (k + 2 <= x.bound) {
        for (int j = 0; j <= k; ++j) {
          for (int i = 0; i <= j; ++i) {
            if (x.degeneracy(k + 1, i, x.degeneracy(k, j, s)) !=
                x.degeneracy(k + 1, j + 1, x.degeneracy(k, i, s))) {
              record(r, "degeneracy-degeneracy", where("s_i s_j = s_{j+1} s_i", k, i, j, s), {k, i, j, (long long)s});
            }
          }
        }
      }
    }
  }
}

}  // namespace

std::string simplex_to_string(const Simplex& s) {
  std::ostringstream out;
  out << "[";
  for (std::size_t i = 0; i < s.size(); ++i) out << (i ? "," : "") << s[i];
  out << "]";
  return out.str();
}

TruncatedSimplicialSet::TruncatedSimplicialSet(
    int bound, std::vector<std::vector<Simplex>> simplices,
    std::vector<std::vector<std::vector<std::size_t>>> faces,
    std::vector<std::vector<std::vector<std::size_t>>> degeneracies)
    : bound_(bound),
      simplices_(std::move(simplices)),
      faces_(std::move(faces)),
      degeneracies_(std::move(degeneracies)) {}

std::vector<std::size_t> TruncatedSimplicialSet::cardinalities() const {
  std::vector<std::size_t> out;
  for (const auto& level : simplices_) out.push_back(level.size());
  return out;
}

std::optional<std::size_t> TruncatedSimplicialSet::find(int dim, const Simplex& s) const {
  if (dim < 0 || dim > bound_) return std::nullopt;
  return find_sorted(simplices_[dim], s);
}

TruncatedSimplicialSet TruncatedSimplicialSet::with_face(int dim, int i, std::size_t s,
                                                         std::size_t target) const {
  TruncatedSimplicialSet copy = *this;
  copy.faces_.at(dim).at(i).at(s) = target;
  return copy;
}

TruncatedSimplicialSet TruncatedSimplicialSet::with_degeneracy(int dim, int i, std::size_t s,
                                                               std::size_t target) const {
  TruncatedSimplicialSet copy = *this;
  copy.degeneracies_.at(dim).at(i).at(s) = target;
  return copy;
}

TruncatedSimplicialSet materialize(const SimplicialModel& model) {
  const int n = model.bound;
  std::vector<std::vector<Simplex>> simplices(n + 1);
  for (int k = 0; k <= n; ++k) {
    simplices[k] = model.simplices(k);
    std::sort(simplices[k].begin(), simplices[k].end());
    simplices[k].erase(std::unique(simplices[k].begin(), simplices[k].end()), simplices[k].end());
  }
  auto lookup = [&](int dim, const Simplex& s, const char* op, int i, const Simplex& from) {
    auto idx = find_sorted(simplices[dim], s);
    if (!idx) {
      throw std::logic_error(std::string("materialize: ") + op + "_" + std::to_string(i) + " of " +
                             simplex_to_string(from) + " = " + simplex_to_string(s) +
                             " is not a simplex in dimension " + std::to_string(dim));
    }
    return *idx;
  };
  std::vector<std::vector<std::vector<std::size_t>>> faces(n + 1), degens(n + 1);
  for (int k = 0; k <= n; ++k) {
    if (k >= 1) {
      faces[k].assign(k + 1, std::vector<std::size_t>(simplices[k].size()));
      for (int i = 0; i <= k; ++i) {
        for (std::size_t s = 0; s < simplices[k].size(); ++s) {
          faces[k][i][s] = lookup(k - 1, model.face(k, i, simplices[k][s]), "d", i, simplices[k][s]);
        }
      }
    }
    if (k < n) {
      degens[k].assign(k + 1, std::vector<std::size_t>(simplices[k].size()));
      for (int i = 0; i <= k; ++i) {
        for (std::size_t s = 0; s < simplices[k].size(); ++s) {
          degens[k][i][s] =
              lookup(k + 1, model.degeneracy(k, i, simplices[k][s]), "s", i, simplices[k][s]);
        }
      }
    }
  }
  return TruncatedSimplicialSet(n, std::move(simplices), std::move(faces), std::move(degens));
}

SimplicialMap::SimplicialMap(SimplicialSetPtr source, SimplicialSetPtr target,
                             std::vector<std::vector<std::size_t>> images)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {
  if (source_->bound() != target_->bound()) {
    throw std::invalid_argument("SimplicialMap: source and target truncations differ");
  }
}

SimplicialMap SimplicialMap::with_image(int dim, std::size_t s, std::size_t target) const {
  SimplicialMap copy = *this;
  copy.images_.at(dim).at(s) = target;
  return copy;
}

SimplicialMap make_map(SimplicialSetPtr source, SimplicialSetPtr target,
                       const std::function<Simplex(int, const Simplex&)>& on_simplex) {
  std::vector<std::vector<std::size_t>> images(source->bound() + 1);
  for (int k = 0; k <= source->bound(); ++k) {
    images[k].resize(source->count(k));
    for (std::size_t s = 0; s < source->count(k); ++s) {
      const Simplex image = on_simplex(k, source->simplex(k, s));
      auto idx = target->find(k, image);
      if (!idx) {
        throw std::logic_error("make_map: image " + simplex_to_string(image) + " of " +
                               simplex_to_string(source->simplex(k, s)) +
                               " is not a target simplex in dimension " + std::to_string(k));
      }
      images[k][s] = *idx;
    }
  }
  return SimplicialMap(std::move(source), std::move(target), std::move(images));
}

SimplicialMap identity_map(SimplicialSetPtr x) {
  std::vector<std::vector<std::size_t>> images(x->bound() + 1);
  for (int k = 0; k <= x->bound(); ++k) {
    images[k].resize(x->count(k));
    for (std::size_t s = 0; s < x->count(k); ++s) images[k][s] = s;
  }
  return SimplicialMap(x, x, std::move(images));
}

SimplicialMap compose(const SimplicialMap& g, const SimplicialMap& f) {
  if (&f.target() != &g.source()) {
    throw std::invalid_argument("compose: target of f is not the source of g");
  }
  std::vector<std::vector<std::size_t>> images(f.bound() + 1);
  for (int k = 0; k <= f.bound(); ++k) {
    images[k].resize(f.source().count(k));
    for (std::size_t s = 0; s < images[k].size(); ++s) images[k][s] = g(k, f(k, s));
  }
  return SimplicialMap(f.source_ptr(), g.target_ptr(), std::move(images));
}

ValidationReport check_simplicial(const TruncatedSimplicialSet& x) {
  ValidationReport r;
  OperatorView view{x.bound(), [&](int k) { return x.count(k); },
                    [&](int k, int i, std::size_t s) { return x.face(k, i, s); },
                    [&](int k, int i, std::size_t s) { return x.degeneracy(k, i, s); }};
  check_identities(view, r, "");
  return r;
}

ValidationReport check_simplicial(const SimplicialMap& f) {
  ValidationReport r;
  const auto& x = f.source();
  const auto& y = f.target();
  for (int k = 0; k <= f.bound(); ++k) {
    if (f.images(k).size() != x.count(k)) {
      r.structural_error("map-size", "image table size mismatch in dimension " + std::to_string(k), {k});
      return r;
    }
    for (std::size_t s = 0; s < x.count(k); ++s) {
      if (f(k, s) >= y.count(k)) {
        r.structural_error("map-range", "image out of range", {k, (long long)s});
      }
    }
  }
  if (r.has_structural()) return r;
  for (int k = 0; k <= f.bound(); ++k) {
    for (std::size_t s = 0; s < x.count(k); ++s) {
      for (int i = 0; i <= k; ++i) {
        if (k >= 1 && f(k - 1, x.face(k, i, s)) != y.face(k, i, f(k, s))) {
          record(r, "map-face",
                 "f d_" + std::to_string(i) + " != d_" + std::to_string(i) + " f at dim " +
                     std::to_string(k) + " simplex #" + std::to_string(s),
                 {k, i, (long long)s});
        }
        if (k < f.bound() && f(k + 1, x.degeneracy(k, i, s)) != y.degeneracy(k, i, f(k, s))) {
          record(r, "map-degeneracy",
                 "f s_" + std::to_string(i) + " != s_" + std::to_string(i) + " f at dim " +
                     std::to_string(k) + " simplex #" + std::to_string(s),
                 {k, i, (long long)s});
        }
      }
    }
  }
  return r;
}

IsoVerdict is_isomorphism(const SimplicialMap& f) {
  IsoVerdict v;
  std::vector<std::vector<std::size_t>> inverse(f.bound() + 1);
  for (int k = 0; k <= f.bound(); ++k) {
    const std::size_t n = f.source().count(k);
    const std::size_t m = f.target().count(k);
    if (n != m) {
      v.witness_dim = k;
      v.witness = "cardinalities differ in dimension " + std::to_string(k) + ": " +
                  std::to_string(n) + " vs " + std::to_string(m);
      return v;
    }
    constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
    inverse[k].assign(m, kUnset);
    for (std::size_t s = 0; s < n; ++s) {
      const std::size_t t = f(k, s);
      if (inverse[k][t] != kUnset) {
        v.witness_dim = k;
        v.witness = "simplices #" + std::to_string(inverse[k][t]) + " and #" + std::to_string(s) +
                    " share an image in dimension " + std::to_string(k);
        return v;
      }
      inverse[k][t] = s;
    }
  }
  v.iso = true;
  v.inverse = SimplicialMap(f.target_ptr(), f.source_ptr(), std::move(inverse));
  return v;
}

BisimplicialSet::BisimplicialSet(int bound, std::vector<std::vector<std::vector<Simplex>>> cells,
                                 Table hface, Table hdeg, Table vface, Table vdeg)
    : bound_(bound),
      cells_(std::move(cells)),
      hface_(std::move(hface)),
      hdeg_(std::move(hdeg)),
      vface_(std::move(vface)),
      vdeg_(std::move(vdeg)) {}

std::optional<std::size_t> BisimplicialSet::find(int p, int q, const Simplex& s) const {
  if (p < 0 || q < 0 || p > bound_ || q > bound_) return std::nullopt;
  return find_sorted(cells_[p][q], s);
}

BisimplicialSet BisimplicialSet::with_vface(int p, int q, int j, std::size_t s,
                                            std::size_t target) const {
  BisimplicialSet copy = *this;
  copy.vface_.at(p).at(q).at(j).at(s) = target;
  return copy;
}

BisimplicialSet materialize(const BisimplicialModel& model) {
  const int n = model.bound;
  std::vector<std::vector<std::vector<Simplex>>> cells(n + 1, std::vector<std::vector<Simplex>>(n + 1));
  for (int p = 0; p <= n; ++p) {
    for (int q = 0; q <= n; ++q) {
      cells[p][q] = model.cells(p, q);
      std::sort(cells[p][q].begin(), cells[p][q].end());
      cells[p][q].erase(std::unique(cells[p][q].begin(), cells[p][q].end()), cells[p][q].end());
    }
  }
  auto lookup = [&](int p, int q, const Simplex& s, const char* op, int i, const Simplex& from) {
    auto idx = find_sorted(cells[p][q], s);
    if (!idx) {
      throw std::logic_error(std::string("materialize: ") + op + "_" + std::to_string(i) + " of " +
                             simplex_to_string(from) + " = " + simplex_to_string(s) +
                             " is not a cell in bidegree (" + std::to_string(p) + "," +
                             std::to_string(q) + ")");
    }
    return *idx;
  };
  using Level = std::vector<std::vector<std::vector<std::size_t>>>;
  BisimplicialSet::Table hface(n + 1, Level(n + 1)), hdeg(n + 1, Level(n + 1)),
      vface(n + 1, Level(n + 1)), vdeg(n + 1, Level(n + 1));
  for (int p = 0; p <= n; ++p) {
    for (int q = 0; q <= n; ++q) {
      const auto& here = cells[p][q];
      if (p >= 1) {
        hface[p][q].assign(p + 1, std::vector<std::size_t>(here.size()));
        for (int i = 0; i <= p; ++i)
          for (std::size_t s = 0; s < here.size(); ++s)
            hface[p][q][i][s] = lookup(p - 1, q, model.hface(p, q, i, here[s]), "dh", i, here[s]);
      }
      if (p < n) {
        hdeg[p][q].assign(p + 1, std::vector<std::size_t>(here.size()));
        for (int i = 0; i <= p; ++i)
          for (std::size_t s = 0; s < here.size(); ++s)
            hdeg[p][q][i][s] = lookup(p + 1, q, model.hdeg(p, q, i, here[s]), "sh", i, here[s]);
      }
      if (q >= 1) {
        vface[p][q].assign(q + 1, std::vector<std::size_t>(here.size()));
        for (int j = 0; j <= q; ++j)
          for (std::size_t s = 0; s < here.size(); ++s)
            vface[p][q][j][s] = lookup(p, q - 1, model.vface(p, q, j, here[s]), "dv", j, here[s]);
      }
      if (q < n) {
        vdeg[p][q].assign(q + 1, std::vector<std::size_t>(here.size()));
        for (int j = 0; j <= q; ++j)
          for (std::size_t s = 0; s < here.size(); ++s)
            vdeg[p][q][j][s] = lookup(p, q + 1, model.vdeg(p, q, j, here[s]), "sv", j, here[s]);
      }
    }
  }
  return BisimplicialSet(n, std::move(cells), std::move(hface), std::move(hdeg), std::move(vface),
                         std::move(vdeg));
}

ValidationReport check_bisimplicial(const BisimplicialSet& s) {
  ValidationReport r;
  const int n = s.bound();
  for (int q = 0; q <= n; ++q) {
    OperatorView row{n, [&, q](int p) { return s.count(p, q); },
                     [&, q](int p, int i, std::size_t x) { return s.hface(p, q, i, x); },
                     [&, q](int p, int i, std::size_t x) { return s.hdeg(p, q, i, x); }};
    check_identities(row, r, "row q=" + std::to_string(q) + ": ");
  }
  for (int p = 0; p <= n; ++p) {
    OperatorView col{n, [&, p](int q) { return s.count(p, q); },
                     [&, p](int q, int j, std::size_t x) { return s.vface(p, q, j, x); },
                     [&, p](int q, int j, std::size_t x) { return s.vdeg(p, q, j, x); }};
    check_identities(col, r, "column p=" + std::to_string(p) + ": ");
  }
  auto fail = [&](const char* what, int p, int q, int i, int j, std::size_t x) {
    std::ostringstream out;
    out << what << " at (" << p << "," << q << ") i=" << i << " j=" << j << " cell #" << x;
    record(r, "bisimplicial-commutation", out.str(), {p, q, i, j, (long long)x});
  };
  for (int p = 0; p <= n; ++p) {
    for (int q = 0; q <= n; ++q) {
      for (std::size_t x = 0; x < s.count(p, q); ++x) {
        for (int i = 0; i <= p; ++i) {
          for (int j = 0; j <= q; ++j) {
            if (p >= 1 && q >= 1 &&
                s.hface(p, q - 1, i, s.vface(p, q, j, x)) != s.vface(p - 1, q, j, s.hface(p, q, i, x)))
              fail("d^h d^v != d^v d^h", p, q, i, j, x);
            if (p >= 1 && q < n &&
                s.hface(p, q + 1, i, s.vdeg(p, q, j, x)) != s.vdeg(p - 1, q, j, s.hface(p, q, i, x)))
              fail("d^h s^v != s^v d^h", p, q, i, j, x);
            if (p < n && q >= 1 &&
                s.hdeg(p, q - 1, i, s.vface(p, q, j, x)) != s.vface(p + 1, q, j, s.hdeg(p, q, i, x)))
              fail("s^h d^v != d^v s^h", p, q, i, j, x);
            if (p < n && q < n &&
                s.hdeg(p, q + 1, i, s.vdeg(p, q, j, x)) != s.vdeg(p + 1, q, j, s.hdeg(p, q, i, x)))
              fail("s^h s^v != s^v s^h", p, q, i, j, x);
          }
        }
      }
    }
  }
  return r;
}

TruncatedSimplicialSet diag(const BisimplicialSet& s) {
  const int n = s.bound();
  std::vector<std::vector<Simplex>> simplices(n + 1);
  std::vector<std::vector<std::vector<std::size_t>>> faces(n + 1), degens(n + 1);
  for (int k = 0; k <= n; ++k) {
    simplices[k] = s.cells(k, k);
    const std::size_t count = simplices[k].size();
    if (k >= 1) {
      faces[k].assign(k + 1, std::vector<std::size_t>(count));
      for (int i = 0; i <= k; ++i)
        for (std::size_t x = 0; x < count; ++x)
          faces[k][i][x] = s.hface(k, k - 1, i, s.vface(k, k, i, x));
    }
    if (k < n) {
      degens[k].assign(k + 1, std::vector<std::size_t>(count));
      for (int i = 0; i <= k; ++i)
        for (std::size_t x = 0; x < count; ++x)
          degens[k][i][x] = s.hdeg(k, k + 1, i, s.vdeg(k, k, i, x));
    }
  }
  return TruncatedSimplicialSet(n, std::move(simplices), std::move(faces), std::move(degens));
}

std::vector<std::size_t> wbar_components(const Simplex& simplex) {
  return std::vector<std::size_t>(simplex.begin(), simplex.end());
}

namespace {

Simplex encode_components(const std::vector<std::size_t>& t) {
  Simplex out(t.size());
  for (std::size_t m = 0; m < t.size(); ++m) out[m] = static_cast<std::int32_t>(t[m]);
  return out;
}

}  // namespace

TruncatedSimplicialSet wbar(const BisimplicialSet& s) {
  const int n = s.bound();
  SimplicialModel model;
  model.bound = n;
  model.simplices = [&s](int p) {
    // Candidates for t_{m+1} grouped by d^h_{m+1} t_{m+1}.
    std::vector<std::vector<std::vector<std::size_t>>> by_face(p);
    for (int m = 0; m < p; ++m) {
      by_face[m].assign(s.count(m, p - m), {});
      for (std::size_t x = 0; x < s.count(m + 1, p - m - 1); ++x) {
        by_face[m][s.hface(m + 1, p - m - 1, m + 1, x)].push_back(x);
      }
    }
    std::vector<Simplex> out;
    std::vector<std::size_t> t(p + 1);
    std::function<void(int)> extend = [&](int m) {
      if (m == p) {
        out.push_back(encode_components(t));
        return;
      }
      const std::size_t target = s.vface(m, p - m, 0, t[m]);
      for (std::size_t next : by_face[m][target]) {
        t[m + 1] = next;
        extend(m + 1);
      }
    };
    for (std::size_t x = 0; x < s.count(0, p); ++x) {
      t[0] = x;
      extend(0);
    }
    return out;
  };
  model.face = [&s](int p, int i, const Simplex& simplex) {
    const auto t = wbar_components(simplex);
    std::vector<std::size_t> out;
    out.reserve(p);
    for (int m = 0; m <= p; ++m) {
      if (m < i) out.push_back(s.vface(m, p - m, i - m, t[m]));
      if (m > i) out.push_back(s.hface(m, p - m, i, t[m]));
    }
    return encode_components(out);
  };
  model.degeneracy = [&s](int p, int i, const Simplex& simplex) {
    const auto t = wbar_components(simplex);
    std::vector<std::size_t> out;
    out.reserve(p + 2);
    for (int m = 0; m <= i; ++m) out.push_back(s.vdeg(m, p - m, i - m, t[m]));
    for (int m = i; m <= p; ++m) out.push_back(s.hdeg(m, p - m, i, t[m]));
    return encode_components(out);
  };
  return materialize(model);
}

SimplicialMap phi(const BisimplicialSet& s, SimplicialSetPtr diag_s, SimplicialSetPtr wbar_s) {
  const int n = s.bound();
  std::vector<std::vector<std::size_t>> images(n + 1);
  for (int p = 0; p <= n; ++p) {
    images[p].resize(s.count(p, p));
    for (std::size_t x = 0; x < s.count(p, p); ++x) {
      std::vector<std::size_t> t(p + 1);
      std::size_t vertical = x;  // (d^v_0)^m x in S_{p,p-m}
      for (int m = 0; m <= p; ++m) {
        if (m > 0) vertical = s.vface(p, p - m + 1, 0, vertical);
        std::size_t cell = vertical;
        for (int h = p; h > m; --h) cell = s.hface(h, p - m, m + 1, cell);
        t[m] = cell;
      }
      for (int m = 0; m < p; ++m) {
        if (s.vface(m, p - m, 0, t[m]) != s.hface(m + 1, p - m - 1, m + 1, t[m + 1])) {
          throw std::logic_error("phi: matching condition fails at m=" + std::to_string(m) +
                                 " for cell #" + std::to_string(x) + " of bidegree (" +
                                 std::to_string(p) + "," + std::to_string(p) + ")");
        }
      }
      auto idx = wbar_s->find(p, encode_components(t));
      if (!idx) throw std::logic_error("phi: image tuple missing from the bar construction");
      images[p][x] = *idx;
    }
  }
  return SimplicialMap(std::move(diag_s), std::move(wbar_s), std::move(images));
}

nlohmann::json report_json(const TruncatedSimplicialSet& x, const ValidationReport& r) {
  return {{"bound", x.bound()}, {"cardinalities", x.cardinalities()}, {"validation", r.to_json()}};
}

}  // namespace nervekit
