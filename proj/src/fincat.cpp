#include "nervekit/fincat.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "nervekit/tuples.hpp"

namespace nervekit {

namespace {

const std::vector<MorphismId> kEmptyHom;

std::string ids(std::initializer_list<long long> values) {
  std::ostringstream out;
  out << "(";
  bool first = true;
  for (auto v : values) {
    out << (first ? "" : ",") << v;
    first = false;
  }
  out << ")";
  return out.str();
}

}  // namespace

FiniteCategory::FiniteCategory(int object_count, std::vector<ObjectId> src,
                               std::vector<ObjectId> tgt, std::vector<MorphismId> identity,
                               std::vector<std::vector<MorphismId>> composition)
    : object_count_(object_count),
      src_(std::move(src)),
      tgt_(std::move(tgt)),
      identity_(std::move(identity)),
      composition_(std::move(composition)) {
  build_caches();
}

void FiniteCategory::build_caches() {
  const int n = object_count_;
  const int m = morphism_count();
  hom_.assign(std::max(n, 0), std::vector<std::vector<MorphismId>>(std::max(n, 0)));
  auto in_range = [n](int x) { return x >= 0 && x < n; };
  for (int f = 0; f < m; ++f) {
    if (f < static_cast<int>(tgt_.size()) && in_range(src_[f]) && in_range(tgt_[f])) {
      hom_[src_[f]][tgt_[f]].push_back(f);
    }
  }
  inverse_.assign(m, kUndefined);
  auto defined = [&](int g, int f) {
    return g >= 0 && g < static_cast<int>(composition_.size()) && f >= 0 &&
           f < static_cast<int>(composition_[g].size());
  };
  for (int f = 0; f < m; ++f) {
    if (f >= static_cast<int>(tgt_.size()) || !in_range(src_[f]) || !in_range(tgt_[f])) continue;
    if (static_cast<int>(identity_.size()) != n) continue;
    for (int g : hom_[tgt_[f]][src_[f]]) {
      if (defined(g, f) && defined(f, g) && composition_[g][f] == identity_[src_[f]] &&
          composition_[f][g] == identity_[tgt_[f]]) {
        inverse_[f] = g;
        break;
      }
    }
  }
}

bool FiniteCategory::is_identity(MorphismId f) const { return identity_[src_[f]] == f; }

MorphismId FiniteCategory::compose(MorphismId g, MorphismId f) const {
  const MorphismId gf = composition_[g][f];
  if (gf == kUndefined) {
    throw std::invalid_argument("compose: morphisms " + std::to_string(g) + " and " +
                                std::to_string(f) + " are not composable");
  }
  return gf;
}

const std::vector<MorphismId>& FiniteCategory::hom(ObjectId from, ObjectId to) const {
  if (from < 0 || to < 0 || from >= object_count_ || to >= object_count_) return kEmptyHom;
  return hom_[from][to];
}

bool FiniteCategory::is_discrete() const { return morphism_count() == object_count_; }

FiniteCategory FiniteCategory::with_composite(MorphismId g, MorphismId f, MorphismId gf) const {
  auto table = composition_;
  table.at(g).at(f) = gf;
  return FiniteCategory(object_count_, src_, tgt_, identity_, std::move(table));
}

bool FiniteCategory::operator==(const FiniteCategory& other) const {
  return object_count_ == other.object_count_ && src_ == other.src_ && tgt_ == other.tgt_ &&
         identity_ == other.identity_ && composition_ == other.composition_;
}

Functor identity_functor(const FiniteCategory& c) {
  Functor f;
  for (int x = 0; x < c.object_count(); ++x) f.objects.push_back(x);
  for (int m = 0; m < c.morphism_count(); ++m) f.morphisms.push_back(m);
  return f;
}

Functor compose(const Functor& g, const Functor& f) {
  Functor out;
  for (ObjectId x : f.objects) out.objects.push_back(g.objects.at(x));
  for (MorphismId m : f.morphisms) out.morphisms.push_back(g.morphisms.at(m));
  return out;
}

ValidationReport validate_category(const FiniteCategory& c) {
  ValidationReport r;
  const int n = c.object_count();
  const int m = c.morphism_count();
  auto obj_ok = [n](int x) { return x >= 0 && x < n; };
  auto mor_ok = [m](int f) { return f >= 0 && f < m; };

  if (static_cast<int>(c.targets().size()) != m) {
    r.structural_error("shape", "source and target tables differ in length");
    return r;
  }
  for (int f = 0; f < m; ++f) {
    if (!obj_ok(c.src(f)) || !obj_ok(c.tgt(f))) {
      r.structural_error("dangling-object", "morphism " + std::to_string(f) + " references an unknown object", {f});
    }
  }
  if (static_cast<int>(c.identities().size()) != n) {
    r.structural_error("shape", "identity table does not cover every object");
    return r;
  }
  for (int x = 0; x < n; ++x) {
    const MorphismId e = c.id(x);
    if (!mor_ok(e)) {
      r.structural_error("dangling-morphism", "identity of object " + std::to_string(x) + " is unknown", {x});
    } else if (c.src(e) != x || c.tgt(e) != x) {
      r.structural_error("identity-shape",
                         "identity of object " + std::to_string(x) + " is morphism " + std::to_string(e) +
                             " which is not an endomorphism of it",
                         {x, e});
    }
  }
  if (static_cast<int>(c.composition().size()) != m) {
    r.structural_error("shape", "composition table has the wrong number of rows");
    return r;
  }
  for (int g = 0; g < m; ++g) {
    if (static_cast<int>(c.composition()[g].size()) != m) {
      r.structural_error("shape", "composition row " + std::to_string(g) + " has the wrong length", {g});
    }
  }
  if (r.has_structural()) return r;

  for (int g = 0; g < m; ++g) {
    for (int f = 0; f < m; ++f) {
      const MorphismId gf = c.composite_or_undefined(g, f);
      const bool composable = c.src(g) == c.tgt(f);
      if (!composable) {
        if (gf != kUndefined) {
          r.structural_error("composite-not-composable",
                             "composite defined for non-composable pair " + ids({g, f}), {g, f});
        }
        continue;
      }
      if (gf == kUndefined) {
        r.structural_error("missing-composite", "no composite for composable pair " + ids({g, f}), {g, f});
      } else if (!mor_ok(gf)) {
        r.structural_error("dangling-morphism", "composite of " + ids({g, f}) + " is unknown", {g, f});
      } else if (c.src(gf) != c.src(f) || c.tgt(gf) != c.tgt(g)) {
        r.structural_error("composite-shape", "composite of " + ids({g, f}) + " has the wrong source or target",
                           {g, f, gf});
      }
    }
  }
  if (r.has_structural()) return r;

  for (int f = 0; f < m; ++f) {
    if (c.compose(c.id(c.tgt(f)), f) != f) {
      r.law_violation("left-identity", "id o f != f for f=" + std::to_string(f), {f});
    }
    if (c.compose(f, c.id(c.src(f))) != f) {
      r.law_violation("right-identity", "f o id != f for f=" + std::to_string(f), {f});
    }
  }
  for (int h = 0; h < m; ++h) {
    for (int g = 0; g < m; ++g) {
      if (c.src(h) != c.tgt(g)) continue;
      for (int f = 0; f < m; ++f) {
        if (c.src(g) != c.tgt(f)) continue;
        if (c.compose(c.compose(h, g), f) != c.compose(h, c.compose(g, f))) {
          r.law_violation("associativity", "(h o g) o f != h o (g o f) for (h,g,f)=" + ids({h, g, f}), {h, g, f});
        }
      }
    }
  }
  return r;
}

ValidationReport validate_functor(const Functor& fun, const FiniteCategory& source,
                                  const FiniteCategory& target) {
  ValidationReport r;
  if (static_cast<int>(fun.objects.size()) != source.object_count() ||
      static_cast<int>(fun.morphisms.size()) != source.morphism_count()) {
    r.structural_error("shape", "functor tables do not cover the source category");
    return r;
  }
  for (int x = 0; x < source.object_count(); ++x) {
    if (fun.objects[x] < 0 || fun.objects[x] >= target.object_count()) {
      r.structural_error("dangling-object", "object " + std::to_string(x) + " maps outside the target", {x});
    }
  }
  for (int f = 0; f < source.morphism_count(); ++f) {
    if (fun.morphisms[f] < 0 || fun.morphisms[f] >= target.morphism_count()) {
      r.structural_error("dangling-morphism", "morphism " + std::to_string(f) + " maps outside the target", {f});
    }
  }
  if (r.has_structural()) return r;
  for (int f = 0; f < source.morphism_count(); ++f) {
    const MorphismId ff = fun.morphisms[f];
    if (target.src(ff) != fun.objects[source.src(f)] || target.tgt(ff) != fun.objects[source.tgt(f)]) {
      r.structural_error("functor-shape", "image of morphism " + std::to_string(f) + " has the wrong endpoints", {f});
    }
  }
  if (r.has_structural()) return r;
  for (int x = 0; x < source.object_count(); ++x) {
    if (fun.morphisms[source.id(x)] != target.id(fun.objects[x])) {
      r.law_violation("functor-identity", "identity of object " + std::to_string(x) + " is not preserved", {x});
    }
  }
  for (int g = 0; g < source.morphism_count(); ++g) {
    for (int f = 0; f < source.morphism_count(); ++f) {
      if (source.src(g) != source.tgt(f)) continue;
      if (fun.morphisms[source.compose(g, f)] != target.compose(fun.morphisms[g], fun.morphisms[f])) {
        r.law_violation("functor-composition", "composite " + ids({g, f}) + " is not preserved", {g, f});
      }
    }
  }
  return r;
}

FiniteCategory ordinal(int n) {
  if (n < 0) throw std::invalid_argument("ordinal: n must be >= 0");
  const auto& pairs = MonotoneTuples::get(n, 2);
  const int m = static_cast<int>(pairs.size());
  std::vector<ObjectId> src(m), tgt(m);
  std::vector<MorphismId> identity(n + 1);
  for (int a = 0; a < m; ++a) {
    const auto& p = pairs.tuple(a);
    tgt[a] = p[0];
    src[a] = p[1];
    if (p[0] == p[1]) identity[p[0]] = a;
  }
  std::vector<std::vector<MorphismId>> comp(m, std::vector<MorphismId>(m, kUndefined));
  for (int g = 0; g < m; ++g) {
    for (int f = 0; f < m; ++f) {
      if (src[g] == tgt[f]) comp[g][f] = static_cast<MorphismId>(pairs.index(tgt[g], src[f]));
    }
  }
  return FiniteCategory(n + 1, std::move(src), std::move(tgt), std::move(identity), std::move(comp));
}

FiniteCategory span_category() {
  // morphisms: 0,1,2 identities; 3 : 0 -> 1; 4 : 0 -> 2
  std::vector<ObjectId> src{0, 1, 2, 0, 0};
  std::vector<ObjectId> tgt{0, 1, 2, 1, 2};
  std::vector<MorphismId> identity{0, 1, 2};
  std::vector<std::vector<MorphismId>> comp(5, std::vector<MorphismId>(5, kUndefined));
  for (int f = 0; f < 5; ++f) {
    comp[identity[tgt[f]]][f] = f;
    comp[f][identity[src[f]]] = f;
  }
  return FiniteCategory(3, std::move(src), std::move(tgt), std::move(identity), std::move(comp));
}

FiniteCategory cyclic_group_category(int order) {
  if (order < 1) throw std::invalid_argument("cyclic_group_category: order must be >= 1");
  std::vector<ObjectId> src(order, 0), tgt(order, 0);
  std::vector<std::vector<MorphismId>> comp(order, std::vector<MorphismId>(order));
  for (int g = 0; g < order; ++g)
    for (int f = 0; f < order; ++f) comp[g][f] = (g + f) % order;
  return FiniteCategory(1, std::move(src), std::move(tgt), {0}, std::move(comp));
}

FiniteCategory product(const FiniteCategory& c, const FiniteCategory& d) {
  const int n = c.object_count() * d.object_count();
  const int mc = c.morphism_count(), md = d.morphism_count();
  const int m = mc * md;
  std::vector<ObjectId> src(m), tgt(m);
  std::vector<MorphismId> identity(n);
  for (int a = 0; a < mc; ++a) {
    for (int b = 0; b < md; ++b) {
      src[a * md + b] = c.src(a) * d.object_count() + d.src(b);
      tgt[a * md + b] = c.tgt(a) * d.object_count() + d.tgt(b);
    }
  }
  for (int x = 0; x < c.object_count(); ++x)
    for (int y = 0; y < d.object_count(); ++y) identity[x * d.object_count() + y] = c.id(x) * md + d.id(y);
  std::vector<std::vector<MorphismId>> comp(m, std::vector<MorphismId>(m, kUndefined));
  for (int g = 0; g < m; ++g) {
    for (int f = 0; f < m; ++f) {
      const int gc = c.composite_or_undefined(g / md, f / md);
      const int gd = d.composite_or_undefined(g % md, f % md);
      if (gc != kUndefined && gd != kUndefined) comp[g][f] = gc * md + gd;
    }
  }
  return FiniteCategory(n, std::move(src), std::move(tgt), std::move(identity), std::move(comp));
}

MorphismId ChainFunctor::arrow(int i, int j) const {
  return arrows[MonotoneTuples::get(n, 2).index(i, j)];
}

ChainFunctor ChainFunctor::precompose(const std::vector<int>& alpha) const {
  ChainFunctor out;
  out.n = static_cast<int>(alpha.size()) - 1;
  for (int v : alpha) out.objects.push_back(objects[v]);
  for (const auto& p : MonotoneTuples::get(out.n, 2).all()) {
    out.arrows.push_back(arrow(alpha[p[0]], alpha[p[1]]));
  }
  return out;
}

void ChainFunctor::encode_into(Simplex& out) const {
  out.push_back(n);
  out.insert(out.end(), objects.begin(), objects.end());
  out.insert(out.end(), arrows.begin(), arrows.end());
}

Simplex ChainFunctor::encode() const {
  Simplex out;
  encode_into(out);
  return out;
}

ChainFunctor ChainFunctor::decode(const Simplex& in, std::size_t& pos) {
  ChainFunctor g;
  g.n = in.at(pos++);
  g.objects.assign(in.begin() + pos, in.begin() + pos + g.n + 1);
  pos += g.n + 1;
  const std::size_t pairs = MonotoneTuples::get(g.n, 2).size();
  g.arrows.assign(in.begin() + pos, in.begin() + pos + pairs);
  pos += pairs;
  return g;
}

std::vector<ChainFunctor> enumerate_functors(int n, const FiniteCategory& index) {
  // A functor [n] -> I is a chain of arrows G(i+1) -> G(i); the remaining arrows are composites.
  std::vector<ChainFunctor> out;
  std::vector<ObjectId> objs(n + 1);
  std::vector<MorphismId> steps(n);
  const auto& pairs = MonotoneTuples::get(n, 2);
  std::function<void(int)> extend = [&](int i) {
    if (i == n + 1) {
      ChainFunctor g;
      g.n = n;
      g.objects = objs;
      g.arrows.resize(pairs.size());
      for (std::size_t a = 0; a < pairs.size(); ++a) {
        const int lo = pairs.tuple(a)[0], hi = pairs.tuple(a)[1];
        MorphismId m = index.id(objs[lo]);
        for (int s = lo; s < hi; ++s) m = index.compose(m, steps[s]);
        g.arrows[a] = m;
      }
      out.push_back(std::move(g));
      return;
    }
    for (ObjectId x = 0; x < index.object_count(); ++x) {
      objs[i] = x;
      if (i == 0) {
        extend(i + 1);
        continue;
      }
      for (MorphismId step : index.hom(x, objs[i - 1])) {
        steps[i - 1] = step;
        extend(i + 1);
      }
    }
  };
  extend(0);
  std::sort(out.begin(), out.end(), [](const ChainFunctor& a, const ChainFunctor& b) {
    if (a.objects != b.objects) return a.objects < b.objects;
    return a.arrows < b.arrows;
  });
  return out;
}

TruncatedSimplicialSet nerve(const FiniteCategory& c, int bound) {
  SimplicialModel model;
  model.bound = bound;
  model.simplices = [&c](int k) {
    std::vector<Simplex> out;
    for (const auto& g : enumerate_functors(k, c)) out.push_back(g.encode());
    return out;
  };
  model.face = [](int k, int i, const Simplex& s) {
    std::size_t pos = 0;
    return ChainFunctor::decode(s, pos).precompose(coface(k, i)).encode();
  };
  model.degeneracy = [](int k, int i, const Simplex& s) {
    std::size_t pos = 0;
    return ChainFunctor::decode(s, pos).precompose(codegeneracy(k, i)).encode();
  };
  return materialize(model);
}

ValidationReport validate_diagram(const DiagramOfCategories& d) {
  ValidationReport r = validate_category(d.index);
  if (!r.ok()) return r;
  if (static_cast<int>(d.fibers.size()) != d.index.object_count() ||
      static_cast<int>(d.transfers.size()) != d.index.morphism_count()) {
    r.structural_error("shape", "diagram needs one fiber per object and one transfer per arrow");
    return r;
  }
  for (int x = 0; x < d.index.object_count(); ++x) {
    r.merge(validate_category(d.fibers[x]), "fiber " + std::to_string(x));
  }
  for (int a = 0; a < d.index.morphism_count(); ++a) {
    // a : j -> i gives a^* : C_i -> C_j
    r.merge(validate_functor(d.transfers[a], d.fibers[d.index.tgt(a)], d.fibers[d.index.src(a)]),
            "transfer " + std::to_string(a));
  }
  if (!r.ok()) return r;
  for (int x = 0; x < d.index.object_count(); ++x) {
    if (!(d.transfers[d.index.id(x)] == identity_functor(d.fibers[x]))) {
      r.law_violation("strict-identity", "transfer along the identity of " + std::to_string(x) + " is not the identity", {x});
    }
  }
  for (int a = 0; a < d.index.morphism_count(); ++a) {
    for (int b = 0; b < d.index.morphism_count(); ++b) {
      if (d.index.src(a) != d.index.tgt(b)) continue;
      if (!(d.transfers[d.index.compose(a, b)] == compose(d.transfers[b], d.transfers[a]))) {
        r.law_violation("strict-composition", "(ab)^* != b^* a^*", {a, b});
      }
    }
  }
  return r;
}

namespace {

// Cell layout: [G encoding..., F encoding...]
struct DiagramCell {
  ChainFunctor index_chain;  // G : [q] -> I
  ChainFunctor fiber_chain;  // F : [p] -> C_{G0}

  Simplex encode() const {
    Simplex out;
    index_chain.encode_into(out);
    fiber_chain.encode_into(out);
    return out;
  }
  static DiagramCell decode(const Simplex& s) {
    std::size_t pos = 0;
    DiagramCell c;
    c.index_chain = ChainFunctor::decode(s, pos);
    c.fiber_chain = ChainFunctor::decode(s, pos);
    return c;
  }
};

ChainFunctor apply(const Functor& f, const ChainFunctor& g) {
  ChainFunctor out = g;
  for (auto& x : out.objects) x = f.objects[x];
  for (auto& m : out.arrows) m = f.morphisms[m];
  return out;
}

}  // namespace

BisimplicialSet nerve_diagram_bisimplicial(const DiagramOfCategories& d, int bound) {
  BisimplicialModel model;
  model.bound = bound;
  model.cells = [&d](int p, int q) {
    std::vector<Simplex> out;
    for (const auto& g : enumerate_functors(q, d.index)) {
      for (const auto& f : enumerate_functors(p, d.fibers[g.objects[0]])) {
        out.push_back(DiagramCell{g, f}.encode());
      }
    }
    return out;
  };
  model.hface = [](int p, int, int i, const Simplex& s) {
    auto c = DiagramCell::decode(s);
    c.fiber_chain = c.fiber_chain.precompose(coface(p, i));
    return c.encode();
  };
  model.hdeg = [](int p, int, int i, const Simplex& s) {
    auto c = DiagramCell::decode(s);
    c.fiber_chain = c.fiber_chain.precompose(codegeneracy(p, i));
    return c.encode();
  };
  model.vface = [&d](int, int q, int j, const Simplex& s) {
    auto c = DiagramCell::decode(s);
    if (j == 0) c.fiber_chain = apply(d.transfers[c.index_chain.arrow(0, 1)], c.fiber_chain);
    c.index_chain = c.index_chain.precompose(coface(q, j));
    return c.encode();
  };
  model.vdeg = [](int, int q, int j, const Simplex& s) {
    auto c = DiagramCell::decode(s);
    c.index_chain = c.index_chain.precompose(codegeneracy(q, j));
    return c.encode();
  };
  return materialize(model);
}

TruncatedSimplicialSet hocolim_of_nerve_diagram(const DiagramOfCategories& d, int bound) {
  return diag(nerve_diagram_bisimplicial(d, bound));
}

}  // namespace nervekit
