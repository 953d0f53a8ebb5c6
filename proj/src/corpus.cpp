#include "nervekit/corpus.hpp"

#include <stdexcept>
#include <string>

namespace nervekit {

namespace {

// One object per element of Z/order, identities only.
FiniteCategory discrete_category(int order) {
  std::vector<ObjectId> ends(order);
  std::vector<MorphismId> identity(order);
  std::vector<std::vector<MorphismId>> comp(order, std::vector<MorphismId>(order, kUndefined));
  for (int x = 0; x < order; ++x) {
    ends[x] = x;
    identity[x] = x;
    comp[x][x] = x;
  }
  return FiniteCategory(order, ends, ends, identity, comp);
}

// Objects Z/2, morphism (x, s) : x -> x has id 2x + s.
FiniteCategory z2_two_group_base() {
  std::vector<ObjectId> ends{0, 0, 1, 1};
  std::vector<std::vector<MorphismId>> comp(4, std::vector<MorphismId>(4, kUndefined));
  for (int x = 0; x < 2; ++x)
    for (int s = 0; s < 2; ++s)
      for (int t = 0; t < 2; ++t) comp[2 * x + s][2 * x + t] = 2 * x + (s + t) % 2;
  return FiniteCategory(2, ends, ends, {0, 2}, comp);
}

MonoidalCategory z2_two_group(bool with_associator, bool with_braiding) {
  MonoidalCategory m;
  m.base = z2_two_group_base();
  m.tensor_obj = {{0, 1}, {1, 0}};
  m.tensor_mor.assign(4, std::vector<MorphismId>(4));
  for (int f = 0; f < 4; ++f)
    for (int g = 0; g < 4; ++g) m.tensor_mor[f][g] = 2 * ((f / 2 + g / 2) % 2) + (f % 2 + g % 2) % 2;
  m.unit = 0;
  m.assoc.assign(2, std::vector<std::vector<MorphismId>>(2, std::vector<MorphismId>(2)));
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y)
      for (int z = 0; z < 2; ++z) m.assoc[x][y][z] = 2 * ((x + y + z) % 2) + (with_associator ? x * y * z : 0);
  m.lunit = {0, 2};
  m.runit = {0, 2};
  if (with_braiding) {
    m.braiding.assign(2, std::vector<MorphismId>(2));
    for (int x = 0; x < 2; ++x)
      for (int y = 0; y < 2; ++y) m.braiding[x][y] = 2 * ((x + y) % 2) + x * y;
  }
  return m;
}

}  // namespace

MonoidalCategory discrete_cyclic(int order) {
  if (order < 1) throw std::invalid_argument("discrete_cyclic: order must be >= 1");
  MonoidalCategory m;
  m.base = discrete_category(order);
  m.tensor_obj.assign(order, std::vector<ObjectId>(order));
  for (int x = 0; x < order; ++x)
    for (int y = 0; y < order; ++y) m.tensor_obj[x][y] = (x + y) % order;
  m.tensor_mor = m.tensor_obj;
  m.unit = 0;
  m.assoc.assign(order, std::vector<std::vector<MorphismId>>(order, std::vector<MorphismId>(order)));
  for (int x = 0; x < order; ++x)
    for (int y = 0; y < order; ++y)
      for (int z = 0; z < order; ++z) m.assoc[x][y][z] = (x + y + z) % order;
  for (int x = 0; x < order; ++x) {
    m.lunit.push_back(x);
    m.runit.push_back(x);
  }
  m.braiding = m.tensor_obj;
  return m;
}

MonoidalCategory one_object_z2(bool unit_twist) {
  MonoidalCategory m;
  m.base = cyclic_group_category(2);
  m.tensor_obj = {{0}};
  m.tensor_mor = {{0, 1}, {1, 0}};
  m.unit = 0;
  m.assoc = {{{0}}};
  m.lunit = {unit_twist ? 1 : 0};
  m.runit = {unit_twist ? 1 : 0};
  m.braiding = {{0}};
  return m;
}

MonoidalCategory trivial_monoidal() { return discrete_cyclic(1); }

MonoidalCategory z2_two_group_with_associator() { return z2_two_group(true, false); }

MonoidalCategory z2_two_group_with_braiding() { return z2_two_group(false, true); }

MonoidalFunctor reduction_functor(const MonoidalCategory& from, const MonoidalCategory& to) {
  const int p = from.object_count(), q = to.object_count();
  if (q == 0 || p % q != 0) throw std::invalid_argument("reduction_functor: target order must divide source order");
  MonoidalFunctor f;
  for (int x = 0; x < p; ++x) {
    f.functor.objects.push_back(x % q);
    f.functor.morphisms.push_back(to.id(x % q));
  }
  f.phi.assign(p, std::vector<MorphismId>(p));
  for (int x = 0; x < p; ++x)
    for (int y = 0; y < p; ++y) f.phi[x][y] = to.id(((x + y) % p) % q);
  f.phi0 = to.id(to.unit);
  return f;
}

MonoidalFunctor twisted_identity_two_group() {
  const MonoidalCategory g = z2_two_group_with_braiding();
  MonoidalFunctor f = identity_monoidal_functor(g);
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y) f.phi[x][y] = 2 * ((x + y) % 2) + (x & y);
  return f;
}

MonoidalFunctor twisted_identity_z2() {
  MonoidalFunctor f = identity_monoidal_functor(one_object_z2());
  f.phi = {{1}};
  f.phi0 = 1;
  return f;
}

MonoidalDiagram make_diagram(const FiniteCategory& index, std::vector<MonoidalCategory> fibers,
                             const std::vector<std::pair<MorphismId, MonoidalFunctor>>& transfers, bool braided) {
  MonoidalDiagram d;
  d.index = index;
  d.fibers = std::move(fibers);
  d.braided = braided;
  d.transfers.resize(index.morphism_count());
  std::vector<bool> given(index.morphism_count(), false);
  for (const auto& [arrow, functor] : transfers) {
    d.transfers.at(arrow) = functor;
    given[arrow] = true;
  }
  for (int a = 0; a < index.morphism_count(); ++a) {
    if (index.is_identity(a)) {
      d.transfers[a] = identity_monoidal_functor(d.fibers.at(index.src(a)));
    } else if (!given[a]) {
      throw std::invalid_argument("make_diagram: no transfer for arrow " + std::to_string(a));
    }
  }
  return d;
}

MonoidalDiagram constant_diagram(const FiniteCategory& index, const MonoidalCategory& fiber, bool braided) {
  std::vector<std::pair<MorphismId, MonoidalFunctor>> transfers;
  for (int a = 0; a < index.morphism_count(); ++a) {
    if (!index.is_identity(a)) transfers.emplace_back(a, identity_monoidal_functor(fiber));
  }
  return make_diagram(index, std::vector<MonoidalCategory>(index.object_count(), fiber), transfers, braided);
}

MonoidalDiagram arrow_reduction_diagram(bool braided) {
  const FiniteCategory arrow = ordinal(1);
  const MonoidalCategory z4 = discrete_cyclic(4), z2 = discrete_cyclic(2);
  // arrow 1 -> 0 has id 1 in the pair order (0,0), (0,1), (1,1)
  return make_diagram(arrow, {z4, z2}, {{1, reduction_functor(z4, z2)}}, braided);
}

MonoidalDiagram arrow_identity_diagram(const MonoidalCategory& fiber, bool braided) {
  return constant_diagram(ordinal(1), fiber, braided);
}

MonoidalDiagram span_twisted_diagram() {
  const MonoidalCategory g = z2_two_group_with_braiding();
  return make_diagram(span_category(), {g, g, g},
                      {{3, twisted_identity_two_group()}, {4, twisted_identity_two_group()}}, true);
}

MonoidalDiagram span_reduction_diagram(bool braided) {
  const MonoidalCategory z4 = discrete_cyclic(4), z2 = discrete_cyclic(2);
  return make_diagram(span_category(), {z2, z4, z2},
                      {{3, reduction_functor(z4, z2)}, {4, identity_monoidal_functor(z2)}}, braided);
}

ValidationReport validate_diagram(const MonoidalDiagram& d) {
  ValidationReport r = validate_category(d.index);
  if (!r.ok()) return r;
  const FiniteCategory& idx = d.index;
  if (static_cast<int>(d.fibers.size()) != idx.object_count() ||
      static_cast<int>(d.transfers.size()) != idx.morphism_count()) {
    r.structural_error("shape", "diagram needs one fiber per object and one transfer per arrow");
    return r;
  }
  for (int x = 0; x < idx.object_count(); ++x) {
    r.merge(d.braided ? validate_braided(d.fibers[x]) : validate_monoidal(d.fibers[x]), "fiber " + std::to_string(x));
  }
  if (!r.ok()) return r;
  for (int a = 0; a < idx.morphism_count(); ++a) {
    const auto& source = d.fibers[idx.tgt(a)];
    const auto& target = d.fibers[idx.src(a)];
    r.merge(d.braided ? validate_braided_functor(d.transfers[a], source, target)
                      : validate_monoidal_functor(d.transfers[a], source, target),
            "transfer " + std::to_string(a));
  }
  if (!r.ok()) return r;
  for (int x = 0; x < idx.object_count(); ++x) {
    if (!(d.transfers[idx.id(x)] == identity_monoidal_functor(d.fibers[x]))) {
      r.law_violation("strict-identity",
                      "transfer along the identity of object " + std::to_string(x) + " is not the identity", {x});
    }
  }
  for (int a = 0; a < idx.morphism_count(); ++a) {
    for (int b = 0; b < idx.morphism_count(); ++b) {
      if (idx.src(a) != idx.tgt(b)) continue;
      const MonoidalFunctor composite = compose(d.transfers[b], d.transfers[a], d.fibers[idx.src(b)]);
      if (!(d.transfers[idx.compose(a, b)] == composite)) {
        r.law_violation("strict-composition",
                        "(ab)^* != b^* a^* for arrows (" + std::to_string(a) + "," + std::to_string(b) + ")", {a, b});
      }
    }
  }
  return r;
}

ValidationReport check_strictly_unitary(const MonoidalDiagram& d) {
  ValidationReport r;
  for (MorphismId a = 0; a < d.index.morphism_count(); ++a) {
    const MonoidalFunctor& f = d.transfers[a];
    const MonoidalCategory& target = d.fibers[d.index.src(a)];
    const ObjectId unit = d.fibers[d.index.tgt(a)].unit;
    if (f.obj(unit) != target.unit || f.phi0 != target.id(target.unit)) {
      r.law_violation("strictly-unitary", "transfer of arrow " + std::to_string(a) + " has a nontrivial unit constraint",
                      {a});
    }
  }
  return r;
}

}  // namespace nervekit
