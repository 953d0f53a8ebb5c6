#include "nervekit/hocolim.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>

#include "nervekit/nerves.hpp"
#include "nervekit/tuples.hpp"

namespace nervekit {

int cocycle_degree(Variant v) { return v == Variant::monoidal ? 2 : 3; }

const char* variant_name(Variant v) { return v == Variant::monoidal ? "monoidal" : "braided"; }

namespace {

using Tuple = std::vector<int>;

std::vector<Cocycle> cocycles(int degree, const Coefficients& k, std::uint64_t budget) {
  return degree == 2 ? enumerate_2cocycles(k, budget) : enumerate_3cocycles(k, budget);
}

ValidationReport validate(const Cocycle& c, const Coefficients& k) {
  return c.degree == 2 ? validate_2cocycle(c, k) : validate_3cocycle(c, k);
}

// Fills the degenerate entries of `c` with the forced values of `k`.
void force_degenerate(Cocycle& c, const Coefficients& k) {
  const auto& obj_tuples = MonotoneTuples::get(c.n, c.degree);
  const auto& mor_tuples = MonotoneTuples::get(c.n, c.degree + 1);
  for (std::size_t idx = 0; idx < obj_tuples.size(); ++idx)
    if (is_degenerate(obj_tuples.tuple(idx))) c.objects[idx] = forced_object(c.degree, k, obj_tuples.tuple(idx));
  for (std::size_t idx = 0; idx < mor_tuples.size(); ++idx)
    if (is_degenerate(mor_tuples.tuple(idx))) c.morphisms[idx] = forced_morphism(c, k, mor_tuples.tuple(idx));
}

// Inclusion [m] -> [p] and the shift [p-m] -> [p], v |-> v + m.
std::vector<int> initial_segment(int m) {
  std::vector<int> alpha(m + 1);
  for (int v = 0; v <= m; ++v) alpha[v] = v;
  return alpha;
}

std::vector<int> shift(int p, int m) {
  std::vector<int> alpha(p - m + 1);
  for (int v = 0; v <= p - m; ++v) alpha[v] = v + m;
  return alpha;
}

}  // namespace

BisimplicialSet build_bisimplicial_S(const MonoidalDiagram& d, int bound, Variant v, std::uint64_t budget) {
  if (v == Variant::braided && !d.braided) throw std::invalid_argument("braided S needs a braided diagram");
  if (const ValidationReport r = check_strictly_unitary(d); !r.ok())
    throw std::invalid_argument("S needs strictly unitary transfers: " + r.to_text());
  const int degree = cocycle_degree(v);
  auto cache = std::make_shared<std::map<std::pair<int, ObjectId>, std::vector<Cocycle>>>();
  auto mutex = std::make_shared<std::mutex>();
  auto fiber_cocycles = [&d, degree, budget, cache, mutex](int p, ObjectId x) -> const std::vector<Cocycle>& {
    std::lock_guard<std::mutex> lock(*mutex);
    auto it = cache->find({p, x});
    if (it == cache->end()) {
      it = cache->emplace(std::make_pair(p, x), cocycles(degree, Coefficients::constant(p, d.fibers[x]), budget)).first;
    }
    return it->second;
  };

  BisimplicialModel model;
  model.bound = bound;
  model.cells = [&d, fiber_cocycles](int p, int q) {
    std::vector<Simplex> out;
    for (const ChainFunctor& g : enumerate_functors(q, d.index))
      for (const Cocycle& c : fiber_cocycles(p, g.objects[0])) out.push_back(DiagramSimplex{g, c}.encode());
    return out;
  };
  model.hface = [](int p, int, int i, const Simplex& s) {
    DiagramSimplex x = DiagramSimplex::decode(s);
    x.cocycle = reindex(x.cocycle, coface(p, i));
    return x.encode();
  };
  model.hdeg = [](int p, int, int i, const Simplex& s) {
    DiagramSimplex x = DiagramSimplex::decode(s);
    x.cocycle = reindex(x.cocycle, codegeneracy(p, i));
    return x.encode();
  };
  model.vface = [&d](int, int q, int j, const Simplex& s) {
    DiagramSimplex x = DiagramSimplex::decode(s);
    if (j == 0) {
      const ObjectId from = x.g.objects[0], to = x.g.objects[1];
      x.cocycle = transport(x.cocycle, d.transfers[x.g.arrow(0, 1)], d.fibers[from], d.fibers[to]);
    }
    x.g = x.g.precompose(coface(q, j));
    return x.encode();
  };
  model.vdeg = [](int, int q, int j, const Simplex& s) {
    DiagramSimplex x = DiagramSimplex::decode(s);
    x.g = x.g.precompose(codegeneracy(q, j));
    return x.encode();
  };
  return materialize(model);
}

TruncatedSimplicialSet hocolim_br(const MonoidalDiagram& d, int bound, std::uint64_t budget) {
  return diag(build_bisimplicial_S(d, bound, Variant::braided, budget));
}

TruncatedSimplicialSet hocolim_mon(const MonoidalDiagram& d, int bound, std::uint64_t budget) {
  return diag(build_bisimplicial_S(d, bound, Variant::monoidal, budget));
}

Cocycle push_forward(const Cocycle& c, const Coefficients& source, const Coefficients& target,
                     const std::function<const MonoidalFunctor&(int l)>& along) {
  Cocycle out;
  out.degree = c.degree;
  out.n = c.n;
  const auto& obj_tuples = MonotoneTuples::get(c.n, c.degree);
  const auto& mor_tuples = MonotoneTuples::get(c.n, c.degree + 1);
  out.objects.assign(obj_tuples.size(), kUndefined);
  out.morphisms.assign(mor_tuples.size(), kUndefined);
  for (std::size_t idx = 0; idx < obj_tuples.size(); ++idx) {
    const Tuple& t = obj_tuples.tuple(idx);
    if (!is_degenerate(t)) out.objects[idx] = along(t.back()).obj(c.objects[idx]);
  }
  for (std::size_t idx = 0; idx < mor_tuples.size(); ++idx) {
    const Tuple& t = mor_tuples.tuple(idx);
    if (is_degenerate(t)) continue;
    const int l = t.back();
    const MonoidalFunctor& f = along(l);
    const MonoidalCategory& m = target.fiber(l);
    if (c.degree == 2) {
      const ObjectId left = source.transfer(t[1], t[2]).obj(c.object({t[0], t[1]}));
      const ObjectId right = c.object({t[1], t[2]});
      out.morphisms[idx] = m.comp(f.mor(c.morphisms[idx]), f.phi[left][right]);
    } else {
      const ObjectId left = source.transfer(t[2], t[3]).obj(c.object({t[0], t[1], t[2]}));
      const ObjectId right = c.object({t[0], t[2], t[3]});
      const ObjectId z1 = c.object({t[1], t[2], t[3]}), z2 = c.object({t[0], t[1], t[3]});
      out.morphisms[idx] = m.chain({f.phi[left][right], f.mor(c.morphisms[idx]), m.inv(f.phi[z1][z2])});
    }
  }
  force_degenerate(out, target);
  return out;
}

SimplicialMap eta(const MonoidalDiagram& d, SimplicialSetPtr hocolim, SimplicialSetPtr ner_i) {
  return make_map(hocolim, ner_i, [&d](int, const Simplex& s) {
    const DiagramSimplex x = DiagramSimplex::decode(s);
    const Coefficients source = Coefficients::constant(x.g.n, d.fibers[x.g.objects[0]]);
    const Coefficients target = Coefficients::along(d, x.g);
    const Cocycle image = push_forward(x.cocycle, source, target,
                                       [&](int l) -> const MonoidalFunctor& { return target.transfer(0, l); });
    const ValidationReport r = validate(image, target);
    if (!r.ok()) throw std::logic_error("eta produced an invalid cocycle: " + r.to_text());
    return DiagramSimplex{x.g, image}.encode();
  });
}

SimplicialMap psi(const MonoidalDiagram& d, Variant v, const BisimplicialSet& s, SimplicialSetPtr wbar,
                  SimplicialSetPtr ner_i) {
  const int degree = cocycle_degree(v);
  return make_map(wbar, ner_i, [&d, &s, degree](int p, const Simplex& simplex) {
    const auto t = wbar_components(simplex);
    std::vector<DiagramSimplex> parts;
    for (int m = 0; m <= p; ++m) parts.push_back(DiagramSimplex::decode(s.cell(m, p - m, t[m])));
    const ChainFunctor& g = parts[0].g;
    const Coefficients k = Coefficients::along(d, g);
    Cocycle c;
    c.degree = degree;
    c.n = p;
    const auto& obj_tuples = MonotoneTuples::get(p, degree);
    const auto& mor_tuples = MonotoneTuples::get(p, degree + 1);
    for (const Tuple& tuple : obj_tuples.all()) c.objects.push_back(parts[tuple.back()].cocycle.object(tuple));
    for (const Tuple& tuple : mor_tuples.all()) c.morphisms.push_back(parts[tuple.back()].cocycle.morphism(tuple));
    force_degenerate(c, k);
    return DiagramSimplex{g, c}.encode();
  });
}

SimplicialMap psi_inverse(const MonoidalDiagram& d, const BisimplicialSet& s, SimplicialSetPtr ner_i,
                          SimplicialSetPtr wbar) {
  return make_map(ner_i, wbar, [&d, &s](int p, const Simplex& simplex) {
    const DiagramSimplex x = DiagramSimplex::decode(simplex);
    Simplex out;
    for (int m = 0; m <= p; ++m) {
      const std::vector<int> head = initial_segment(m);
      const Coefficients source = Coefficients::along(d, x.g.precompose(head));
      const Coefficients target = Coefficients::constant(m, d.fibers[x.g.objects[m]]);
      const Cocycle pushed = push_forward(reindex(x.cocycle, head), source, target,
                                          [&](int l) -> const MonoidalFunctor& { return source.transfer(l, m); });
      const Simplex cell = DiagramSimplex{x.g.precompose(shift(p, m)), pushed}.encode();
      const auto idx = s.find(m, p - m, cell);
      if (!idx) throw std::logic_error("psi inverse: component is not a cell of S: " + simplex_to_string(cell));
      out.push_back(static_cast<std::int32_t>(*idx));
    }
    return out;
  });
}

nlohmann::json TriangleCertificate::to_json() const {
  nlohmann::json j;
  j["agree"] = agree;
  j["agreements"] = agreements;
  j["totals"] = totals;
  j["witness"] = witness ? *witness : nlohmann::json(nullptr);
  return j;
}

TriangleCertificate check_triangle(const SimplicialMap& eta_map, const SimplicialMap& psi_map,
                                   const SimplicialMap& phi_map) {
  TriangleCertificate cert;
  for (int dim = 0; dim <= eta_map.bound(); ++dim) {
    std::size_t agree = 0;
    const std::size_t total = eta_map.source().count(dim);
    for (std::size_t s = 0; s < total; ++s) {
      const std::size_t direct = eta_map(dim, s);
      const std::size_t routed = psi_map(dim, phi_map(dim, s));
      if (direct == routed) {
        ++agree;
      } else if (!cert.witness) {
        cert.witness = nlohmann::json{{"dimension", dim},
                                      {"simplex", eta_map.source().simplex(dim, s)},
                                      {"eta", eta_map.target().simplex(dim, direct)},
                                      {"psi_phi", psi_map.target().simplex(dim, routed)}};
      }
    }
    cert.agreements.push_back(agree);
    cert.totals.push_back(total);
    if (agree != total) cert.agree = false;
  }
  return cert;
}

TheoremObjects build_theorem_objects(const MonoidalDiagram& d, Variant v, int bound, std::uint64_t budget) {
  TheoremObjects out;
  out.variant = v;
  out.bound = bound;
  out.s = build_bisimplicial_S(d, bound, v, budget);
  out.hocolim = std::make_shared<TruncatedSimplicialSet>(diag(out.s));
  out.wbar = std::make_shared<TruncatedSimplicialSet>(wbar(out.s));
  out.ner_i = std::make_shared<TruncatedSimplicialSet>(v == Variant::monoidal ? ner_I_mon(d, bound, budget)
                                                                              : ner_I_br(d, bound, budget));
  out.phi = phi(out.s, out.hocolim, out.wbar);
  out.eta = eta(d, out.hocolim, out.ner_i);
  out.psi = psi(d, v, out.s, out.wbar, out.ner_i);
  out.psi_inverse = psi_inverse(d, out.s, out.ner_i, out.wbar);
  return out;
}

}  // namespace nervekit
