#include "nervekit/monoidal.hpp"

#include <stdexcept>
#include <string>

namespace nervekit {

namespace {

std::string tuple_text(std::initializer_list<long long> values) {
  std::string out = "(";
  bool first = true;
  for (auto v : values) {
    if (!first) out += ",";
    out += std::to_string(v);
    first = false;
  }
  return out + ")";
}

bool sized(const std::vector<std::vector<int>>& table, int rows, int cols) {
  if (static_cast<int>(table.size()) != rows) return false;
  for (const auto& row : table)
    if (static_cast<int>(row.size()) != cols) return false;
  return true;
}

// Checks that f is a morphism src -> tgt and is invertible; records a structural error otherwise.
void expect_iso(ValidationReport& r, const FiniteCategory& c, MorphismId f, ObjectId src, ObjectId tgt,
                const std::string& kind, const std::string& what, std::vector<long long> witness) {
  if (f < 0 || f >= c.morphism_count()) {
    r.structural_error(kind, what + " is not a morphism id", std::move(witness));
  } else if (c.src(f) != src || c.tgt(f) != tgt) {
    r.structural_error(kind, what + " has the wrong source or target", std::move(witness));
  } else if (c.inverse(f) == kUndefined) {
    r.structural_error(kind, what + " is not invertible", std::move(witness));
  }
}

}  // namespace

MorphismId MonoidalCategory::chain(std::initializer_list<MorphismId> steps) const {
  auto it = steps.begin();
  MorphismId out = *it;
  for (++it; it != steps.end(); ++it) out = comp(*it, out);
  return out;
}

MorphismId MonoidalCategory::inv(MorphismId f) const {
  const MorphismId g = base.inverse(f);
  if (g == kUndefined) throw std::invalid_argument("morphism " + std::to_string(f) + " is not invertible");
  return g;
}

bool MonoidalCategory::operator==(const MonoidalCategory& other) const {
  return base == other.base && tensor_obj == other.tensor_obj && tensor_mor == other.tensor_mor &&
         unit == other.unit && assoc == other.assoc && lunit == other.lunit && runit == other.runit &&
         braiding == other.braiding;
}

MonoidalFunctor identity_monoidal_functor(const MonoidalCategory& m) {
  MonoidalFunctor f;
  f.functor = identity_functor(m.base);
  const int n = m.object_count();
  f.phi.assign(n, std::vector<MorphismId>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) f.phi[x][y] = m.id(m.obj_tensor(x, y));
  f.phi0 = m.id(m.unit);
  return f;
}

MonoidalFunctor compose(const MonoidalFunctor& g, const MonoidalFunctor& f, const MonoidalCategory& g_target) {
  MonoidalFunctor out;
  out.functor = compose(g.functor, f.functor);
  const int n = static_cast<int>(f.phi.size());
  out.phi.assign(n, std::vector<MorphismId>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      out.phi[x][y] = g_target.comp(g.mor(f.phi[x][y]), g.phi[f.obj(x)][f.obj(y)]);
  out.phi0 = g_target.comp(g.mor(f.phi0), g.phi0);
  return out;
}

ValidationReport validate_monoidal(const MonoidalCategory& m) {
  ValidationReport r = validate_category(m.base);
  if (!r.ok()) return r;
  const FiniteCategory& c = m.base;
  const int n = c.object_count();
  const int k = c.morphism_count();

  if (!sized(m.tensor_obj, n, n)) r.structural_error("shape", "tensor_obj must be an objects x objects table");
  if (!sized(m.tensor_mor, k, k)) r.structural_error("shape", "tensor_mor must be a morphisms x morphisms table");
  if (m.unit < 0 || m.unit >= n) r.structural_error("dangling-object", "unit object is unknown");
  bool assoc_ok = static_cast<int>(m.assoc.size()) == n;
  for (const auto& plane : m.assoc) assoc_ok = assoc_ok && sized(plane, n, n);
  if (!assoc_ok) r.structural_error("shape", "assoc must be an objects^3 table");
  if (static_cast<int>(m.lunit.size()) != n || static_cast<int>(m.runit.size()) != n) {
    r.structural_error("shape", "lunit and runit need one entry per object");
  }
  if (r.has_structural()) return r;

  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (m.tensor_obj[x][y] < 0 || m.tensor_obj[x][y] >= n)
        r.structural_error("dangling-object", "x (x) y is unknown for " + tuple_text({x, y}), {x, y});
  for (int f = 0; f < k; ++f) {
    for (int g = 0; g < k; ++g) {
      const MorphismId fg = m.tensor_mor[f][g];
      if (fg < 0 || fg >= k) {
        r.structural_error("dangling-morphism", "f (x) g is unknown for " + tuple_text({f, g}), {f, g});
      } else if (c.src(fg) != m.tensor_obj[c.src(f)][c.src(g)] || c.tgt(fg) != m.tensor_obj[c.tgt(f)][c.tgt(g)]) {
        r.structural_error("tensor-shape", "f (x) g has the wrong endpoints for " + tuple_text({f, g}), {f, g});
      }
    }
  }
  if (r.has_structural()) return r;

  const ObjectId u = m.unit;
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      for (int z = 0; z < n; ++z) {
        expect_iso(r, c, m.a(x, y, z), m.obj_tensor(m.obj_tensor(x, y), z), m.obj_tensor(x, m.obj_tensor(y, z)),
                   "assoc-shape", "a" + tuple_text({x, y, z}), {x, y, z});
      }
    }
    expect_iso(r, c, m.l(x), m.obj_tensor(u, x), x, "lunit-shape", "l(" + std::to_string(x) + ")", {x});
    expect_iso(r, c, m.r(x), m.obj_tensor(x, u), x, "runit-shape", "r(" + std::to_string(x) + ")", {x});
  }
  if (r.has_structural()) return r;

  // tensor is a bifunctor
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (m.mor_tensor(m.id(x), m.id(y)) != m.id(m.obj_tensor(x, y)))
        r.law_violation("tensor-identity", "1 (x) 1 != 1 at " + tuple_text({x, y}), {x, y});
  for (int g = 0; g < k; ++g) {
    for (int f = 0; f < k; ++f) {
      if (c.src(g) != c.tgt(f)) continue;
      for (int g2 = 0; g2 < k; ++g2) {
        for (int f2 = 0; f2 < k; ++f2) {
          if (c.src(g2) != c.tgt(f2)) continue;
          if (m.mor_tensor(m.comp(g, f), m.comp(g2, f2)) != m.comp(m.mor_tensor(g, g2), m.mor_tensor(f, f2))) {
            r.law_violation("tensor-composition", "interchange fails at " + tuple_text({g, f, g2, f2}),
                            {g, f, g2, f2});
          }
        }
      }
    }
  }

  // naturality of a, l, r
  for (int f = 0; f < k; ++f) {
    for (int g = 0; g < k; ++g) {
      for (int h = 0; h < k; ++h) {
        const MorphismId lhs =
            m.comp(m.a(c.tgt(f), c.tgt(g), c.tgt(h)), m.mor_tensor(m.mor_tensor(f, g), h));
        const MorphismId rhs =
            m.comp(m.mor_tensor(f, m.mor_tensor(g, h)), m.a(c.src(f), c.src(g), c.src(h)));
        if (lhs != rhs) r.law_violation("assoc-naturality", "a is not natural at " + tuple_text({f, g, h}), {f, g, h});
      }
    }
    if (m.comp(m.l(c.tgt(f)), m.mor_tensor(m.id(u), f)) != m.comp(f, m.l(c.src(f)))) {
      r.law_violation("lunit-naturality", "l is not natural at morphism " + std::to_string(f), {f});
    }
    if (m.comp(m.r(c.tgt(f)), m.mor_tensor(f, m.id(u))) != m.comp(f, m.r(c.src(f)))) {
      r.law_violation("runit-naturality", "r is not natural at morphism " + std::to_string(f), {f});
    }
  }

  // pentagon and triangle
  for (int w = 0; w < n; ++w) {
    for (int x = 0; x < n; ++x) {
      for (int y = 0; y < n; ++y) {
        for (int z = 0; z < n; ++z) {
          const MorphismId lhs = m.comp(m.a(w, x, m.obj_tensor(y, z)), m.a(m.obj_tensor(w, x), y, z));
          const MorphismId rhs = m.chain({m.mor_tensor(m.a(w, x, y), m.id(z)), m.a(w, m.obj_tensor(x, y), z),
                                          m.mor_tensor(m.id(w), m.a(x, y, z))});
          if (lhs != rhs) r.law_violation("pentagon", "pentagon fails at " + tuple_text({w, x, y, z}), {w, x, y, z});
        }
      }
      if (m.comp(m.mor_tensor(m.id(w), m.l(x)), m.a(w, u, x)) != m.mor_tensor(m.r(w), m.id(x))) {
        r.law_violation("triangle", "triangle fails at " + tuple_text({w, x}), {w, x});
      }
    }
  }
  return r;
}

ValidationReport validate_braided(const MonoidalCategory& b) {
  ValidationReport r = validate_monoidal(b);
  if (r.has_structural()) return r;
  const FiniteCategory& c = b.base;
  const int n = c.object_count();
  const int k = c.morphism_count();
  if (!b.braided() || !sized(b.braiding, n, n)) {
    r.structural_error("shape", "braiding must be an objects x objects table");
    return r;
  }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      expect_iso(r, c, b.c(x, y), b.obj_tensor(x, y), b.obj_tensor(y, x), "braiding-shape",
                 "c" + tuple_text({x, y}), {x, y});
  if (r.has_structural()) return r;
  if (c.is_discrete()) {
    r.note("discrete category: the braiding is necessarily the identity wherever x (x) y = y (x) x");
  }

  for (int f = 0; f < k; ++f) {
    for (int g = 0; g < k; ++g) {
      if (b.comp(b.c(c.tgt(f), c.tgt(g)), b.mor_tensor(f, g)) != b.comp(b.mor_tensor(g, f), b.c(c.src(f), c.src(g)))) {
        r.law_violation("braiding-naturality", "c is not natural at " + tuple_text({f, g}), {f, g});
      }
    }
  }
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      for (int z = 0; z < n; ++z) {
        const ObjectId xy = b.obj_tensor(x, y), yz = b.obj_tensor(y, z);
        const MorphismId h1_lhs = b.chain({b.a(x, y, z), b.c(x, yz), b.a(y, z, x)});
        const MorphismId h1_rhs =
            b.chain({b.mor_tensor(b.c(x, y), b.id(z)), b.a(y, x, z), b.mor_tensor(b.id(y), b.c(x, z))});
        if (h1_lhs != h1_rhs) r.law_violation("hexagon-1", "first hexagon fails at " + tuple_text({x, y, z}), {x, y, z});
        const MorphismId h2_lhs = b.chain({b.inv(b.a(x, y, z)), b.c(xy, z), b.inv(b.a(z, x, y))});
        const MorphismId h2_rhs =
            b.chain({b.mor_tensor(b.id(x), b.c(y, z)), b.inv(b.a(x, z, y)), b.mor_tensor(b.c(x, z), b.id(y))});
        if (h2_lhs != h2_rhs) r.law_violation("hexagon-2", "second hexagon fails at " + tuple_text({x, y, z}), {x, y, z});
      }
    }
  }
  return r;
}

ValidationReport validate_monoidal_functor(const MonoidalFunctor& f, const MonoidalCategory& source,
                                           const MonoidalCategory& target) {
  ValidationReport r = validate_functor(f.functor, source.base, target.base);
  if (!r.ok()) return r;
  const int n = source.object_count();
  const int k = source.morphism_count();
  if (!sized(f.phi, n, n)) {
    r.structural_error("shape", "phi must be an objects x objects table");
    return r;
  }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      expect_iso(r, target.base, f.phi[x][y], target.obj_tensor(f.obj(x), f.obj(y)),
                 f.obj(source.obj_tensor(x, y)), "phi-shape", "phi" + tuple_text({x, y}), {x, y});
  expect_iso(r, target.base, f.phi0, target.unit, f.obj(source.unit), "phi0-shape", "phi0", {});
  if (r.has_structural()) return r;

  for (int g = 0; g < k; ++g) {
    for (int h = 0; h < k; ++h) {
      const MorphismId lhs = target.comp(f.phi[source.tgt(g)][source.tgt(h)], target.mor_tensor(f.mor(g), f.mor(h)));
      const MorphismId rhs = target.comp(f.mor(source.mor_tensor(g, h)), f.phi[source.src(g)][source.src(h)]);
      if (lhs != rhs) r.law_violation("phi-naturality", "phi is not natural at " + tuple_text({g, h}), {g, h});
    }
  }
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      for (int z = 0; z < n; ++z) {
        const MorphismId lhs = target.chain({target.mor_tensor(f.phi[x][y], target.id(f.obj(z))),
                                             f.phi[source.obj_tensor(x, y)][z], f.mor(source.a(x, y, z))});
        const MorphismId rhs = target.chain({target.a(f.obj(x), f.obj(y), f.obj(z)),
                                             target.mor_tensor(target.id(f.obj(x)), f.phi[y][z]),
                                             f.phi[x][source.obj_tensor(y, z)]});
        if (lhs != rhs) {
          r.law_violation("functor-assoc", "associativity square fails at " + tuple_text({x, y, z}), {x, y, z});
        }
      }
    }
    const ObjectId fx = f.obj(x);
    const MorphismId left = target.chain({target.mor_tensor(f.phi0, target.id(fx)), f.phi[source.unit][x],
                                          f.mor(source.l(x))});
    if (left != target.l(fx)) {
      r.law_violation("functor-left-unit", "left unit square fails at object " + std::to_string(x), {x});
    }
    const MorphismId right = target.chain({target.mor_tensor(target.id(fx), f.phi0), f.phi[x][source.unit],
                                           f.mor(source.r(x))});
    if (right != target.r(fx)) {
      r.law_violation("functor-right-unit", "right unit square fails at object " + std::to_string(x), {x});
    }
  }
  return r;
}

ValidationReport validate_braided_functor(const MonoidalFunctor& f, const MonoidalCategory& source,
                                          const MonoidalCategory& target) {
  ValidationReport r = validate_monoidal_functor(f, source, target);
  if (r.has_structural()) return r;
  if (!source.braided() || !target.braided()) {
    r.structural_error("shape", "braided functor between categories without braiding");
    return r;
  }
  const int n = source.object_count();
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      const MorphismId lhs = target.comp(f.mor(source.c(x, y)), f.phi[x][y]);
      const MorphismId rhs = target.comp(f.phi[y][x], target.c(f.obj(x), f.obj(y)));
      if (lhs != rhs) r.law_violation("functor-braiding", "braid square fails at " + tuple_text({x, y}), {x, y});
    }
  }
  return r;
}

}  // namespace nervekit
