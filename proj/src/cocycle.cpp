#include "nervekit/cocycle.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <string>
#include <tuple>

#include "nervekit/canonical.hpp"
#include "nervekit/tuples.hpp"

namespace nervekit {

namespace {

using Tuple = std::vector<int>;

MorphismId can(CanShape shape, const MonoidalCategory& m, std::vector<ObjectId> objects) {
  CanBindings b;
  b.category = &m;
  b.objects = std::move(objects);
  return canonical_iso(shape, b);
}

// Canonical iso in B_{G to} involving the transfer G*_{from,to}.
MorphismId can_along(CanShape shape, const Coefficients& k, int from, int to, std::vector<ObjectId> objects) {
  CanBindings b;
  b.category = &k.fiber(to);
  b.functor = &k.transfer(from, to);
  b.functor_source = &k.fiber(from);
  b.objects = std::move(objects);
  return canonical_iso(shape, b);
}

std::vector<long long> witness(const Tuple& t) { return {t.begin(), t.end()}; }

std::string tuple_text(const Tuple& t) {
  std::string out = "(";
  for (std::size_t i = 0; i < t.size(); ++i) out += (i ? "," : "") + std::to_string(t[i]);
  return out + ")";
}

template <class Obj>
MorphismId forced_with(int degree, const Coefficients& k, const Tuple& t, Obj&& obj) {
  if (degree == 2) {
    const int i = t[0], j = t[1], kk = t[2];
    if (j == kk) return can(CanShape::UnitRight, k.fiber(kk), {obj(Tuple{i, j})});
    if (i == j) return can_along(CanShape::UnitLeftTransfer, k, i, kk, {obj(Tuple{i, kk})});
    return kUndefined;
  }
  const int i = t[0], j = t[1], kk = t[2], l = t[3];
  if (kk == l) return can(CanShape::BraidUnitRight, k.fiber(l), {obj(Tuple{i, j, kk})});
  if (j == kk) return can_along(CanShape::UnitTransferLeft, k, j, l, {obj(Tuple{i, j, l})});
  if (i == j) return can_along(CanShape::UnitBraidLeft, k, kk, l, {obj(Tuple{i, kk, l})});
  return kUndefined;
}

template <class Obj>
std::pair<ObjectId, ObjectId> endpoints_with(int degree, const Coefficients& k, const Tuple& t, Obj&& obj) {
  if (degree == 2) {
    const int i = t[0], j = t[1], kk = t[2];
    const MonoidalCategory& m = k.fiber(kk);
    return {m.obj_tensor(k.transfer(j, kk).obj(obj(Tuple{i, j})), obj(Tuple{j, kk})), obj(Tuple{i, kk})};
  }
  const int i = t[0], j = t[1], kk = t[2], l = t[3];
  const MonoidalCategory& m = k.fiber(l);
  return {m.obj_tensor(k.transfer(kk, l).obj(obj(Tuple{i, j, kk})), obj(Tuple{i, kk, l})),
          m.obj_tensor(obj(Tuple{j, kk, l}), obj(Tuple{i, j, l}))};
}

template <class Obj, class Mor>
bool coherence_2(const Coefficients& k, const Tuple& t, Obj&& obj, Mor&& mor) {
  const int i = t[0], j = t[1], kk = t[2], l = t[3];
  const MonoidalCategory& m = k.fiber(l);
  const ObjectId ya = obj(Tuple{i, j}), yb = obj(Tuple{j, kk}), yc = obj(Tuple{kk, l});
  const ObjectId b_ya = k.transfer(j, kk).obj(ya);
  const MorphismId lhs = m.chain({can_along(CanShape::FunctorDistributes, k, kk, l, {b_ya, yb, yc}),
                                  m.mor_tensor(k.transfer(kk, l).mor(mor(Tuple{i, j, kk})), m.id(yc)),
                                  mor(Tuple{i, kk, l})});
  const MorphismId rhs =
      m.chain({m.mor_tensor(m.id(k.transfer(j, l).obj(ya)), mor(Tuple{j, kk, l})), mor(Tuple{i, j, l})});
  return lhs == rhs;
}

template <class Obj, class Mor>
bool coherence_3(const Coefficients& k, const Tuple& t, Obj&& obj, Mor&& mor) {
  const int i = t[0], j = t[1], kk = t[2], l = t[3], p = t[4];
  const MonoidalCategory& m = k.fiber(p);
  const MonoidalFunctor& u = k.transfer(l, p);
  const ObjectId a = obj(Tuple{i, j, kk}), b = obj(Tuple{i, kk, l}), c = obj(Tuple{i, l, p});
  const ObjectId d = obj(Tuple{j, kk, l}), e = obj(Tuple{i, j, l}), f = obj(Tuple{kk, l, p});
  const ObjectId h = obj(Tuple{i, kk, p}), jj = obj(Tuple{j, l, p}), kx = obj(Tuple{i, j, p});
  const ObjectId lx = obj(Tuple{j, kk, p});
  const ObjectId va = k.transfer(kk, l).obj(a);
  const ObjectId uva = k.transfer(kk, p).obj(a);
  const ObjectId ud = u.obj(d);

  const MorphismId left =
      m.chain({m.mor_tensor(u.mor(mor(Tuple{i, j, kk, l})), m.id(c)),
               can_along(CanShape::FunctorCollects, k, l, p, {d, e, c}),
               m.mor_tensor(m.id(ud), mor(Tuple{i, j, l, p})), can(CanShape::AssocLeft, m, {ud, jj, kx}),
               m.mor_tensor(mor(Tuple{j, kk, l, p}), m.id(kx))});
  const MorphismId right =
      m.chain({can_along(CanShape::FunctorCollects, k, l, p, {va, b, c}),
               m.mor_tensor(m.id(uva), mor(Tuple{i, kk, l, p})), can(CanShape::BraidOverFirst, m, {uva, f, h}),
               m.mor_tensor(m.id(f), mor(Tuple{i, j, kk, p})), can(CanShape::AssocLeft, m, {f, lx, kx})});
  return left == right;
}

// Constant coefficients, every bracket explicit.
template <class Obj, class Mor>
bool coherence_3_constant(const MonoidalCategory& m, const Tuple& t, Obj&& obj, Mor&& mor) {
  const int i = t[0], j = t[1], kk = t[2], l = t[3], p = t[4];
  const ObjectId a = obj(Tuple{i, j, kk}), b = obj(Tuple{i, kk, l}), c = obj(Tuple{i, l, p});
  const ObjectId d = obj(Tuple{j, kk, l}), e = obj(Tuple{i, j, l}), f = obj(Tuple{kk, l, p});
  const ObjectId h = obj(Tuple{i, kk, p}), jj = obj(Tuple{j, l, p}), kx = obj(Tuple{i, j, p});
  const ObjectId lx = obj(Tuple{j, kk, p});
  const MorphismId left = m.chain({m.mor_tensor(mor(Tuple{i, j, kk, l}), m.id(c)), m.a(d, e, c),
                                   m.mor_tensor(m.id(d), mor(Tuple{i, j, l, p})), m.inv(m.a(d, jj, kx)),
                                   m.mor_tensor(mor(Tuple{j, kk, l, p}), m.id(kx))});
  const MorphismId right = m.chain({m.a(a, b, c), m.mor_tensor(m.id(a), mor(Tuple{i, kk, l, p})),
                                    m.inv(m.a(a, f, h)), m.mor_tensor(m.c(a, f), m.id(h)), m.a(f, a, h),
                                    m.mor_tensor(m.id(f), mor(Tuple{i, j, kk, p})), m.inv(m.a(f, lx, kx))});
  return left == right;
}

// Structural and normalization checks shared by the validators.
ValidationReport check_entries(const Cocycle& c, const Coefficients& k, int degree) {
  ValidationReport r;
  if (c.degree != degree || c.n != k.n()) {
    r.structural_error("shape", "cocycle degree or dimension does not match the coefficients");
    return r;
  }
  const auto& obj_tuples = MonotoneTuples::get(c.n, degree);
  const auto& mor_tuples = MonotoneTuples::get(c.n, degree + 1);
  if (c.objects.size() != obj_tuples.size() || c.morphisms.size() != mor_tuples.size()) {
    r.structural_error("shape", "cocycle tables have the wrong length");
    return r;
  }
  for (std::size_t idx = 0; idx < obj_tuples.size(); ++idx) {
    const Tuple& t = obj_tuples.tuple(idx);
    const ObjectId y = c.objects[idx];
    if (y < 0 || y >= k.fiber(t.back()).object_count()) {
      r.structural_error("wrong-fiber", "object at " + tuple_text(t) + " is not in fiber " + std::to_string(t.back()),
                         witness(t));
    }
  }
  if (r.has_structural()) return r;
  auto obj = [&](const Tuple& t) { return c.object(t); };
  for (std::size_t idx = 0; idx < mor_tuples.size(); ++idx) {
    const Tuple& t = mor_tuples.tuple(idx);
    const MorphismId f = c.morphisms[idx];
    const FiniteCategory& base = k.fiber(t.back()).base;
    if (f < 0 || f >= base.morphism_count()) {
      r.structural_error("wrong-fiber", "morphism at " + tuple_text(t) + " is not in fiber " + std::to_string(t.back()),
                         witness(t));
      continue;
    }
    const auto [src, tgt] = endpoints_with(degree, k, t, obj);
    if (base.src(f) != src || base.tgt(f) != tgt) {
      r.structural_error("entry-shape", "morphism at " + tuple_text(t) + " has the wrong source or target", witness(t));
    }
  }
  if (r.has_structural()) return r;
  for (std::size_t idx = 0; idx < obj_tuples.size(); ++idx) {
    const Tuple& t = obj_tuples.tuple(idx);
    if (is_degenerate(t) && c.objects[idx] != forced_object(degree, k, t)) {
      r.law_violation("normalization", "degenerate object at " + tuple_text(t) + " is not the unit", witness(t));
    }
  }
  for (std::size_t idx = 0; idx < mor_tuples.size(); ++idx) {
    const Tuple& t = mor_tuples.tuple(idx);
    if (!is_degenerate(t)) continue;
    if (c.morphisms[idx] != forced_with(degree, k, t, obj)) {
      r.law_violation("normalization", "degenerate morphism at " + tuple_text(t) + " is not the canonical one",
                      witness(t));
    }
  }
  return r;
}

std::vector<std::vector<int>> subsequences(const Tuple& t, int length) {
  std::vector<std::vector<int>> out;
  const int size = static_cast<int>(t.size());
  std::vector<int> pick;
  std::function<void(int)> rec = [&](int from) {
    if (static_cast<int>(pick.size()) == length) {
      out.push_back(pick);
      return;
    }
    for (int p = from; p < size; ++p) {
      pick.push_back(t[p]);
      rec(p + 1);
      pick.pop_back();
    }
  };
  rec(0);
  return out;
}

std::vector<Cocycle> enumerate(int degree, const Coefficients& k, std::uint64_t budget) {
  const int n = k.n();
  const auto& obj_tuples = MonotoneTuples::get(n, degree);
  const auto& mor_tuples = MonotoneTuples::get(n, degree + 1);

  struct Var {
    bool morphism;
    std::size_t tuple;
  };
  std::vector<Var> vars;
  for (std::size_t idx = 0; idx < obj_tuples.size(); ++idx)
    if (!is_degenerate(obj_tuples.tuple(idx))) vars.push_back({false, idx});
  for (std::size_t idx = 0; idx < mor_tuples.size(); ++idx)
    if (!is_degenerate(mor_tuples.tuple(idx))) vars.push_back({true, idx});
  auto key = [&](const Var& v) {
    const Tuple& t = v.morphism ? mor_tuples.tuple(v.tuple) : obj_tuples.tuple(v.tuple);
    return std::make_tuple(t.back(), v.morphism, t);
  };
  std::stable_sort(vars.begin(), vars.end(), [&](const Var& a, const Var& b) { return key(a) < key(b); });

  std::vector<int> obj_pos(obj_tuples.size(), -1), mor_pos(mor_tuples.size(), -1);
  for (std::size_t v = 0; v < vars.size(); ++v) (vars[v].morphism ? mor_pos : obj_pos)[vars[v].tuple] = static_cast<int>(v);

  auto obj_in = [&](const SearchProblem::Assignment& as) {
    return [&](const Tuple& t) {
      const int pos = obj_pos[obj_tuples.index(t)];
      return pos >= 0 ? as[pos] : forced_object(degree, k, t);
    };
  };
  auto mor_in = [&](const SearchProblem::Assignment& as) {
    return [&, obj = obj_in(as)](const Tuple& t) {
      const int pos = mor_pos[mor_tuples.index(t)];
      return pos >= 0 ? as[pos] : forced_with(degree, k, t, obj);
    };
  };

  SearchProblem problem;
  problem.estimate = 1;
  for (const Var& v : vars) {
    if (!v.morphism) {
      const int fiber = obj_tuples.tuple(v.tuple).back();
      const int count = k.fiber(fiber).object_count();
      problem.estimate *= count;
      problem.domains.push_back([count](const SearchProblem::Assignment&) {
        std::vector<int> all(count);
        for (int x = 0; x < count; ++x) all[x] = x;
        return all;
      });
    } else {
      const Tuple t = mor_tuples.tuple(v.tuple);
      const MonoidalCategory& fiber = k.fiber(t.back());
      std::size_t widest = 0;
      for (int x = 0; x < fiber.object_count(); ++x)
        for (int y = 0; y < fiber.object_count(); ++y) widest = std::max(widest, fiber.base.hom(x, y).size());
      problem.estimate *= static_cast<double>(widest);
      problem.domains.push_back([&, t](const SearchProblem::Assignment& as) {
        const auto [src, tgt] = endpoints_with(degree, k, t, obj_in(as));
        return k.fiber(t.back()).base.hom(src, tgt);
      });
    }
  }

  for (const Tuple& t : MonotoneTuples::get(n, degree + 2).all()) {
    int last = -1;
    for (const auto& sub : subsequences(t, degree)) last = std::max(last, obj_pos[obj_tuples.index(sub)]);
    for (const auto& sub : subsequences(t, degree + 1)) last = std::max(last, mor_pos[mor_tuples.index(sub)]);
    problem.constraints.push_back({last, [&, t](const SearchProblem::Assignment& as) {
                                     return degree == 2 ? coherence_2(k, t, obj_in(as), mor_in(as))
                                                        : coherence_3(k, t, obj_in(as), mor_in(as));
                                   }});
  }

  std::vector<Cocycle> out;
  for (const auto& solution : solve_all(problem, budget)) {
    Cocycle c;
    c.degree = degree;
    c.n = n;
    auto obj = obj_in(solution);
    auto mor = mor_in(solution);
    for (const Tuple& t : obj_tuples.all()) c.objects.push_back(obj(t));
    for (const Tuple& t : mor_tuples.all()) c.morphisms.push_back(mor(t));
    out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end(), [](const Cocycle& a, const Cocycle& b) { return a.encode() < b.encode(); });
  return out;
}

}  // namespace

Coefficients Coefficients::constant(int n, const MonoidalCategory& m) {
  Coefficients k;
  k.n_ = n;
  k.fibers_.assign(n + 1, &m);
  k.identity_ = std::make_shared<MonoidalFunctor>(identity_monoidal_functor(m));
  k.transfers_.assign(MonotoneTuples::get(n, 2).size(), k.identity_.get());
  return k;
}

Coefficients Coefficients::along(const MonoidalDiagram& d, const ChainFunctor& g) {
  Coefficients k;
  k.n_ = g.n;
  for (ObjectId x : g.objects) k.fibers_.push_back(&d.fibers.at(x));
  for (MorphismId a : g.arrows) k.transfers_.push_back(&d.transfers.at(a));
  return k;
}

const MonoidalFunctor& Coefficients::transfer(int i, int j) const {
  return *transfers_[MonotoneTuples::get(n_, 2).index(i, j)];
}

ObjectId Cocycle::object(const std::vector<int>& t) const {
  return objects[MonotoneTuples::get(n, degree).index(t)];
}

MorphismId Cocycle::morphism(const std::vector<int>& t) const {
  return morphisms[MonotoneTuples::get(n, degree + 1).index(t)];
}

void Cocycle::encode_into(Simplex& out) const {
  out.push_back(degree);
  out.push_back(n);
  out.insert(out.end(), objects.begin(), objects.end());
  out.insert(out.end(), morphisms.begin(), morphisms.end());
}

Simplex Cocycle::encode() const {
  Simplex out;
  encode_into(out);
  return out;
}

Cocycle Cocycle::decode(const Simplex& in, std::size_t& pos) {
  Cocycle c;
  c.degree = in.at(pos++);
  c.n = in.at(pos++);
  const std::size_t objs = MonotoneTuples::get(c.n, c.degree).size();
  const std::size_t mors = MonotoneTuples::get(c.n, c.degree + 1).size();
  c.objects.assign(in.begin() + pos, in.begin() + pos + objs);
  pos += objs;
  c.morphisms.assign(in.begin() + pos, in.begin() + pos + mors);
  pos += mors;
  return c;
}

std::pair<ObjectId, ObjectId> entry_endpoints(const Cocycle& c, const Coefficients& k, const std::vector<int>& t) {
  return endpoints_with(c.degree, k, t, [&](const Tuple& s) { return c.object(s); });
}

ObjectId forced_object(int degree, const Coefficients& k, const std::vector<int>& t) {
  if (degree == 2) return t[0] == t[1] ? k.fiber(t[1]).unit : kUndefined;
  return (t[0] == t[1] || t[1] == t[2]) ? k.fiber(t[2]).unit : kUndefined;
}

MorphismId forced_morphism(const Cocycle& c, const Coefficients& k, const std::vector<int>& t) {
  return forced_with(c.degree, k, t, [&](const Tuple& s) { return c.object(s); });
}

ValidationReport validate_2cocycle(const Cocycle& c, const Coefficients& k) {
  ValidationReport r = check_entries(c, k, 2);
  if (r.has_structural()) return r;
  auto obj = [&](const Tuple& t) { return c.object(t); };
  auto mor = [&](const Tuple& t) { return c.morphism(t); };
  for (const Tuple& t : MonotoneTuples::get(c.n, 4).all()) {
    if (!coherence_2(k, t, obj, mor)) {
      r.law_violation("coherence", "coherence square fails at " + tuple_text(t), witness(t));
    }
  }
  return r;
}

ValidationReport validate_3cocycle(const Cocycle& c, const Coefficients& k) {
  ValidationReport r = check_entries(c, k, 3);
  if (r.has_structural()) return r;
  auto obj = [&](const Tuple& t) { return c.object(t); };
  auto mor = [&](const Tuple& t) { return c.morphism(t); };
  for (const Tuple& t : MonotoneTuples::get(c.n, 5).all()) {
    if (!coherence_3(k, t, obj, mor)) {
      r.law_violation("coherence", "five-index diagram fails at " + tuple_text(t), witness(t));
    }
  }
  return r;
}

ValidationReport validate_3cocycle_constant(const Cocycle& c, const MonoidalCategory& m) {
  const Coefficients k = Coefficients::constant(c.n, m);
  ValidationReport r = check_entries(c, k, 3);
  if (r.has_structural()) return r;
  auto obj = [&](const Tuple& t) { return c.object(t); };
  auto mor = [&](const Tuple& t) { return c.morphism(t); };
  for (const Tuple& t : MonotoneTuples::get(c.n, 5).all()) {
    if (!coherence_3_constant(m, t, obj, mor)) {
      r.law_violation("coherence", "five-index diagram fails at " + tuple_text(t), witness(t));
    }
  }
  return r;
}

std::vector<Cocycle> enumerate_2cocycles(const Coefficients& k, std::uint64_t budget) {
  return enumerate(2, k, budget);
}

std::vector<Cocycle> enumerate_3cocycles(const Coefficients& k, std::uint64_t budget) {
  return enumerate(3, k, budget);
}

Cocycle reindex(const Cocycle& c, const std::vector<int>& alpha) {
  Cocycle out;
  out.degree = c.degree;
  out.n = static_cast<int>(alpha.size()) - 1;
  auto image = [&](const Tuple& t) {
    Tuple s(t.size());
    for (std::size_t p = 0; p < t.size(); ++p) s[p] = alpha[t[p]];
    return s;
  };
  for (const Tuple& t : MonotoneTuples::get(out.n, c.degree).all()) out.objects.push_back(c.object(image(t)));
  for (const Tuple& t : MonotoneTuples::get(out.n, c.degree + 1).all()) out.morphisms.push_back(c.morphism(image(t)));
  return out;
}

Cocycle transport(const Cocycle& c, const MonoidalFunctor& f, const MonoidalCategory& source,
                  const MonoidalCategory& target) {
  for (ObjectId y : c.objects) {
    if (y < 0 || y >= source.object_count()) throw std::invalid_argument("transport: cocycle is not in the source");
  }
  const Coefficients k = Coefficients::constant(c.n, target);
  Cocycle out;
  out.degree = c.degree;
  out.n = c.n;
  const auto& obj_tuples = MonotoneTuples::get(c.n, c.degree);
  const auto& mor_tuples = MonotoneTuples::get(c.n, c.degree + 1);
  for (std::size_t idx = 0; idx < obj_tuples.size(); ++idx) {
    const Tuple& t = obj_tuples.tuple(idx);
    out.objects.push_back(is_degenerate(t) ? forced_object(c.degree, k, t) : f.obj(c.objects[idx]));
  }
  for (std::size_t idx = 0; idx < mor_tuples.size(); ++idx) {
    const Tuple& t = mor_tuples.tuple(idx);
    if (is_degenerate(t)) {
      out.morphisms.push_back(kUndefined);
      continue;
    }
    const MorphismId g = c.morphisms[idx];
    if (c.degree == 2) {
      const ObjectId y1 = c.object({t[0], t[1]}), y2 = c.object({t[1], t[2]});
      out.morphisms.push_back(target.comp(f.mor(g), f.phi[y1][y2]));
    } else {
      const ObjectId y1 = c.object({t[0], t[1], t[2]}), y2 = c.object({t[0], t[2], t[3]});
      const ObjectId z1 = c.object({t[1], t[2], t[3]}), z2 = c.object({t[0], t[1], t[3]});
      out.morphisms.push_back(target.chain({f.phi[y1][y2], f.mor(g), target.inv(f.phi[z1][z2])}));
    }
  }
  for (std::size_t idx = 0; idx < mor_tuples.size(); ++idx) {
    const Tuple& t = mor_tuples.tuple(idx);
    if (is_degenerate(t)) out.morphisms[idx] = forced_morphism(out, k, t);
  }
  return out;
}

}  // namespace nervekit
