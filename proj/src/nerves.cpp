#include "nervekit/nerves.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "nervekit/parallel.hpp"
#include "nervekit/tuples.hpp"

namespace nervekit {

Simplex DiagramSimplex::encode() const {
  Simplex out;
  g.encode_into(out);
  cocycle.encode_into(out);
  return out;
}

DiagramSimplex DiagramSimplex::decode(const Simplex& s) {
  std::size_t pos = 0;
  DiagramSimplex out;
  out.g = ChainFunctor::decode(s, pos);
  out.cocycle = Cocycle::decode(s, pos);
  return out;
}

namespace {

// Simplices of a diagram nerve, one cocycle search per functor [dim] -> I.
std::vector<Simplex> diagram_simplices(const MonoidalDiagram& d, int dim, int degree, std::uint64_t budget) {
  const std::vector<ChainFunctor> functors = enumerate_functors(dim, d.index);
  std::vector<std::vector<Simplex>> per_functor(functors.size());
  parallel_for(functors.size(), [&](std::size_t idx) {
    const Coefficients k = Coefficients::along(d, functors[idx]);
    const auto cocycles = degree == 2 ? enumerate_2cocycles(k, budget) : enumerate_3cocycles(k, budget);
    for (const Cocycle& c : cocycles) per_functor[idx].push_back(DiagramSimplex{functors[idx], c}.encode());
  });
  std::vector<Simplex> out;
  for (auto& chunk : per_functor) out.insert(out.end(), chunk.begin(), chunk.end());
  return out;
}

Simplex reindex_diagram_simplex(const Simplex& s, const std::vector<int>& alpha) {
  const DiagramSimplex x = DiagramSimplex::decode(s);
  return DiagramSimplex{x.g.precompose(alpha), reindex(x.cocycle, alpha)}.encode();
}

TruncatedSimplicialSet diagram_nerve(const MonoidalDiagram& d, int bound, int degree, std::uint64_t budget) {
  SimplicialModel model;
  model.bound = bound;
  model.simplices = [&](int dim) { return diagram_simplices(d, dim, degree, budget); };
  model.face = [](int dim, int i, const Simplex& s) { return reindex_diagram_simplex(s, coface(dim, i)); };
  model.degeneracy = [](int dim, int i, const Simplex& s) {
    return reindex_diagram_simplex(s, codegeneracy(dim, i));
  };
  return materialize(model);
}

// Strictly increasing r-tuples of [n] in lexicographic order.
class StrictTuples {
 public:
  StrictTuples(int n, int arity) {
    std::vector<int> t;
    auto rec = [&](auto&& self, int from) -> void {
      if (static_cast<int>(t.size()) == arity) {
        index_[t] = tuples_.size();
        tuples_.push_back(t);
        return;
      }
      for (int v = from; v <= n; ++v) {
        t.push_back(v);
        self(self, v + 1);
        t.pop_back();
      }
    };
    rec(rec, 0);
  }
  std::size_t size() const { return tuples_.size(); }
  const std::vector<int>& tuple(std::size_t idx) const { return tuples_[idx]; }
  std::size_t index(const std::vector<int>& t) const { return index_.at(t); }

 private:
  std::vector<std::vector<int>> tuples_;
  std::map<std::vector<int>, std::size_t> index_;
};

// The Grothendieck bicategory of the delooped diagram. Objects are the objects of I; a
// 1-cell j -> i is a pair (X, a) with a : j -> i in I and X an object of M_j; a 2-cell
// (X, a) => (X', a) is a morphism X -> X' of M_j. Horizontal composition is
//   (X, a) o (Z, b) = (b^* X (x) Z, a b),  alpha o beta = b^* alpha (x) beta.
class Bicategory {
 public:
  explicit Bicategory(const MonoidalDiagram& d) : d_(d) {}

  const MonoidalCategory& fiber(ObjectId i) const { return d_.fibers[i]; }
  const MonoidalFunctor& pullback(MorphismId a) const { return d_.transfers[a]; }
  ObjectId source(MorphismId a) const { return d_.index.src(a); }

  ObjectId compose_cells(ObjectId x, MorphismId b, ObjectId z) const {
    return fiber(source(b)).obj_tensor(pullback(b).obj(x), z);
  }

  // ((X,a)(Z,b))(W,c) => (X,a)((Z,b)(W,c)) as a morphism of M_{src c}.
  MorphismId associator(ObjectId x, MorphismId b, ObjectId z, MorphismId c, ObjectId w) const {
    const MonoidalCategory& m = fiber(source(c));
    const MonoidalFunctor& cs = pullback(c);
    const ObjectId bx = pullback(b).obj(x);
    const MorphismId split = m.inv(cs.phi[bx][z]);
    return m.comp(m.a(cs.obj(bx), cs.obj(z), w), m.mor_tensor(split, m.id(w)));
  }

  // 1 o (X, a) => (X, a): l_X (phi0^{-1} (x) 1) with phi0 the unit constraint of a^*.
  MorphismId left_unitor(ObjectId x, MorphismId a) const {
    const MonoidalCategory& m = fiber(source(a));
    return m.comp(m.l(x), m.mor_tensor(m.inv(pullback(a).phi0), m.id(x)));
  }

  // (X, a) o 1 => (X, a): r_X.
  MorphismId right_unitor(ObjectId x, MorphismId a) const { return fiber(source(a)).r(x); }

 private:
  const MonoidalDiagram& d_;
};

// A normal lax functor [n] -> the bicategory, nondegenerate data only.
struct LaxSimplex {
  int n = 0;
  std::vector<ObjectId> objects;
  std::vector<MorphismId> arrows;   // F_{i,j}, strict pairs
  std::vector<ObjectId> cells;      // X_{i,j}, strict pairs
  std::vector<MorphismId> twocells;  // F_{i,j,k}, strict triples

  Simplex encode() const {
    Simplex out{n};
    out.insert(out.end(), objects.begin(), objects.end());
    out.insert(out.end(), arrows.begin(), arrows.end());
    out.insert(out.end(), cells.begin(), cells.end());
    out.insert(out.end(), twocells.begin(), twocells.end());
    return out;
  }

  static LaxSimplex decode(const Simplex& s) {
    LaxSimplex x;
    x.n = s.at(0);
    const std::size_t pairs = StrictTuples(x.n, 2).size();
    const std::size_t triples = StrictTuples(x.n, 3).size();
    auto at = s.begin() + 1;
    x.objects.assign(at, at + x.n + 1);
    at += x.n + 1;
    x.arrows.assign(at, at + pairs);
    at += pairs;
    x.cells.assign(at, at + pairs);
    at += pairs;
    x.twocells.assign(at, at + triples);
    return x;
  }
};

// Lax functor composed with the monotone map alpha : [m] -> [n]. Collapsed pairs become
// identity 1-cells and collapsed triples the unitors of the bicategory.
LaxSimplex reindex_lax(const LaxSimplex& x, const std::vector<int>& alpha, const MonoidalDiagram& d) {
  const Bicategory bicat(d);
  const StrictTuples old_pairs(x.n, 2), old_triples(x.n, 3);
  const int m = static_cast<int>(alpha.size()) - 1;
  const StrictTuples pairs(m, 2), triples(m, 3);
  LaxSimplex out;
  out.n = m;
  for (int v = 0; v <= m; ++v) out.objects.push_back(x.objects[alpha[v]]);
  auto arrow = [&](int i, int j) {
    return i == j ? d.index.id(x.objects[i]) : x.arrows[old_pairs.index({i, j})];
  };
  auto cell = [&](int i, int j) {
    return i == j ? d.fibers[x.objects[i]].unit : x.cells[old_pairs.index({i, j})];
  };
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    const int i = alpha[pairs.tuple(p)[0]], j = alpha[pairs.tuple(p)[1]];
    out.arrows.push_back(arrow(i, j));
    out.cells.push_back(cell(i, j));
  }
  for (std::size_t t = 0; t < triples.size(); ++t) {
    const int i = alpha[triples.tuple(t)[0]], j = alpha[triples.tuple(t)[1]], k = alpha[triples.tuple(t)[2]];
    if (i == j) {
      out.twocells.push_back(bicat.left_unitor(cell(j, k), arrow(j, k)));
    } else if (j == k) {
      out.twocells.push_back(bicat.right_unitor(cell(i, j), arrow(i, j)));
    } else {
      out.twocells.push_back(x.twocells[old_triples.index({i, j, k})]);
    }
  }
  return out;
}

std::vector<Simplex> lax_simplices(const MonoidalDiagram& d, int n, std::uint64_t budget) {
  const Bicategory bicat(d);
  const StrictTuples pairs(n, 2), triples(n, 3);
  const std::vector<ChainFunctor> functors = enumerate_functors(n, d.index);
  std::vector<std::vector<Simplex>> per_functor(functors.size());

  parallel_for(functors.size(), [&](std::size_t idx) {
    const ChainFunctor& g = functors[idx];
    // Variables: X_{i,j} then F_{i,j,k}, grouped by their last vertex.
    struct Var {
      bool twocell;
      std::size_t tuple;
    };
    std::vector<Var> vars;
    std::vector<int> cell_var(pairs.size()), twocell_var(triples.size());
    for (int last = 1; last <= n; ++last) {
      for (std::size_t p = 0; p < pairs.size(); ++p)
        if (pairs.tuple(p)[1] == last) {
          cell_var[p] = static_cast<int>(vars.size());
          vars.push_back({false, p});
        }
      for (std::size_t t = 0; t < triples.size(); ++t)
        if (triples.tuple(t)[2] == last) {
          twocell_var[t] = static_cast<int>(vars.size());
          vars.push_back({true, t});
        }
    }
    auto x = [&](const SearchProblem::Assignment& as, int i, int j) { return as[cell_var[pairs.index({i, j})]]; };
    auto f = [&](const SearchProblem::Assignment& as, int i, int j, int k) {
      return as[twocell_var[triples.index({i, j, k})]];
    };

    SearchProblem problem;
    problem.estimate = 1;
    for (const Var& v : vars) {
      if (!v.twocell) {
        const int count = d.fibers[g.objects[pairs.tuple(v.tuple)[1]]].object_count();
        problem.estimate *= count;
        problem.domains.push_back([count](const SearchProblem::Assignment&) {
          std::vector<int> all(count);
          for (int y = 0; y < count; ++y) all[y] = y;
          return all;
        });
      } else {
        const std::vector<int> t = triples.tuple(v.tuple);
        const MonoidalCategory& m = d.fibers[g.objects[t[2]]];
        std::size_t widest = 0;
        for (int a = 0; a < m.object_count(); ++a)
          for (int b = 0; b < m.object_count(); ++b) widest = std::max(widest, m.base.hom(a, b).size());
        problem.estimate *= static_cast<double>(widest);
        problem.domains.push_back([&, t](const SearchProblem::Assignment& as) {
          const int i = t[0], j = t[1], k = t[2];
          const ObjectId src = bicat.compose_cells(x(as, i, j), g.arrow(j, k), x(as, j, k));
          return d.fibers[g.objects[k]].base.hom(src, x(as, i, k));
        });
      }
    }
    for (int i = 0; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j)
        for (int k = j + 1; k <= n; ++k)
          for (int l = k + 1; l <= n; ++l) {
            const int last = std::max({twocell_var[triples.index({i, j, k})], twocell_var[triples.index({i, k, l})],
                                       twocell_var[triples.index({i, j, l})], twocell_var[triples.index({j, k, l})]});
            problem.constraints.push_back({last, [&, i, j, k, l](const SearchProblem::Assignment& as) {
                                             const MonoidalCategory& m = d.fibers[g.objects[l]];
                                             const MorphismId bkl = g.arrow(k, l);
                                             const ObjectId xkl = x(as, k, l);
                                             const MorphismId lhs =
                                                 m.comp(f(as, i, k, l),
                                                        m.mor_tensor(bicat.pullback(bkl).mor(f(as, i, j, k)), m.id(xkl)));
                                             const MorphismId assoc =
                                                 bicat.associator(x(as, i, j), g.arrow(j, k), x(as, j, k), bkl, xkl);
                                             const MorphismId whisker =
                                                 m.mor_tensor(m.id(bicat.pullback(g.arrow(j, l)).obj(x(as, i, j))),
                                                              f(as, j, k, l));
                                             const MorphismId rhs = m.chain({assoc, whisker, f(as, i, j, l)});
                                             return lhs == rhs;
                                           }});
          }

    for (const auto& solution : solve_all(problem, budget)) {
      LaxSimplex s;
      s.n = n;
      s.objects = g.objects;
      for (std::size_t p = 0; p < pairs.size(); ++p) {
        s.arrows.push_back(g.arrow(pairs.tuple(p)[0], pairs.tuple(p)[1]));
        s.cells.push_back(solution[cell_var[p]]);
      }
      for (std::size_t t = 0; t < triples.size(); ++t) s.twocells.push_back(solution[twocell_var[t]]);
      per_functor[idx].push_back(s.encode());
    }
  });

  std::vector<Simplex> out;
  for (auto& chunk : per_functor) out.insert(out.end(), chunk.begin(), chunk.end());
  return out;
}

}  // namespace

TruncatedSimplicialSet ner_I_mon(const MonoidalDiagram& d, int bound, std::uint64_t budget) {
  return diagram_nerve(d, bound, 2, budget);
}

TruncatedSimplicialSet ner_I_br(const MonoidalDiagram& d, int bound, std::uint64_t budget) {
  if (!d.braided) throw std::invalid_argument("ner_I_br needs a braided diagram");
  return diagram_nerve(d, bound, 3, budget);
}

TruncatedSimplicialSet ner_br(const MonoidalCategory& b, int bound, std::uint64_t budget) {
  if (!b.braided()) throw std::invalid_argument("ner_br needs a braided category");
  SimplicialModel model;
  model.bound = bound;
  model.simplices = [&](int dim) {
    std::vector<Simplex> out;
    for (const Cocycle& c : enumerate_3cocycles(Coefficients::constant(dim, b), budget)) out.push_back(c.encode());
    return out;
  };
  auto act = [](const Simplex& s, const std::vector<int>& alpha) {
    std::size_t pos = 0;
    return reindex(Cocycle::decode(s, pos), alpha).encode();
  };
  model.face = [act](int dim, int i, const Simplex& s) { return act(s, coface(dim, i)); };
  model.degeneracy = [act](int dim, int i, const Simplex& s) { return act(s, codegeneracy(dim, i)); };
  return materialize(model);
}

TruncatedSimplicialSet delooping_grothendieck_nerve(const MonoidalDiagram& d, int bound, std::uint64_t budget) {
  SimplicialModel model;
  model.bound = bound;
  model.simplices = [&](int dim) { return lax_simplices(d, dim, budget); };
  model.face = [&](int dim, int i, const Simplex& s) {
    return reindex_lax(LaxSimplex::decode(s), coface(dim, i), d).encode();
  };
  model.degeneracy = [&](int dim, int i, const Simplex& s) {
    return reindex_lax(LaxSimplex::decode(s), codegeneracy(dim, i), d).encode();
  };
  return materialize(model);
}

SimplicialMap proposition_iso(SimplicialSetPtr ner_i_mon, SimplicialSetPtr delooping) {
  return make_map(ner_i_mon, delooping, [](int, const Simplex& s) {
    const DiagramSimplex x = DiagramSimplex::decode(s);
    const int n = x.g.n;
    const StrictTuples pairs(n, 2), triples(n, 3);
    LaxSimplex out;
    out.n = n;
    out.objects = x.g.objects;
    for (std::size_t p = 0; p < pairs.size(); ++p) {
      const auto& t = pairs.tuple(p);
      out.arrows.push_back(x.g.arrow(t[0], t[1]));
      out.cells.push_back(x.cocycle.object(t));
    }
    for (std::size_t t = 0; t < triples.size(); ++t) out.twocells.push_back(x.cocycle.morphism(triples.tuple(t)));
    return out.encode();
  });
}

}  // namespace nervekit
