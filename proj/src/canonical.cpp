#include "nervekit/canonical.hpp"

#include <array>
#include <utility>

namespace nervekit {

namespace {

struct ShapeInfo {
  CanShape shape;
  std::string_view name;
  CanShape reverse;
  bool functor;
  int arity;
  bool braiding;
};

constexpr std::array<ShapeInfo, 18> kShapes{{
    {CanShape::AssocRight, "assoc-right", CanShape::AssocLeft, false, 3, false},
    {CanShape::AssocLeft, "assoc-left", CanShape::AssocRight, false, 3, false},
    {CanShape::FunctorMerge, "functor-merge", CanShape::FunctorSplit, true, 2, false},
    {CanShape::FunctorSplit, "functor-split", CanShape::FunctorMerge, true, 2, false},
    {CanShape::FunctorDistributes, "functor-distributes", CanShape::FunctorCollects, true, 3, false},
    {CanShape::FunctorCollects, "functor-collects", CanShape::FunctorDistributes, true, 3, false},
    {CanShape::UnitLeftTransfer, "unit-left-transfer", CanShape::UnitLeftAbsorb, true, 1, false},
    {CanShape::UnitLeftAbsorb, "unit-left-absorb", CanShape::UnitLeftTransfer, true, 1, false},
    {CanShape::UnitRight, "unit-right", CanShape::UnitRightInverse, false, 1, false},
    {CanShape::UnitRightInverse, "unit-right-inverse", CanShape::UnitRight, false, 1, false},
    {CanShape::UnitTransferLeft, "unit-transfer-left", CanShape::UnitTransferBack, true, 1, false},
    {CanShape::UnitTransferBack, "unit-transfer-back", CanShape::UnitTransferLeft, true, 1, false},
    {CanShape::UnitBraidLeft, "unit-braid-left", CanShape::UnitBraidBack, true, 1, true},
    {CanShape::UnitBraidBack, "unit-braid-back", CanShape::UnitBraidLeft, true, 1, true},
    {CanShape::BraidUnitRight, "braid-unit-right", CanShape::BraidUnitBack, false, 1, true},
    {CanShape::BraidUnitBack, "braid-unit-back", CanShape::BraidUnitRight, false, 1, true},
    {CanShape::BraidOverFirst, "braid-over-first", CanShape::UnbraidOverFirst, false, 3, true},
    {CanShape::UnbraidOverFirst, "unbraid-over-first", CanShape::BraidOverFirst, false, 3, true},
}};

const ShapeInfo& info(CanShape shape) {
  for (const auto& s : kShapes)
    if (s.shape == shape) return s;
  throw CanonicalError("unregistered canonical shape");
}

void check_object(const MonoidalCategory& m, ObjectId x, std::string_view shape) {
  if (x < 0 || x >= m.object_count()) {
    throw CanonicalError(std::string(shape) + ": bound object " + std::to_string(x) + " is out of range");
  }
}

}  // namespace

const std::vector<CanShape>& all_shapes() {
  static const std::vector<CanShape> shapes = [] {
    std::vector<CanShape> out;
    for (const auto& s : kShapes) out.push_back(s.shape);
    return out;
  }();
  return shapes;
}

std::string_view shape_name(CanShape shape) { return info(shape).name; }

CanShape shape_from_name(std::string_view name) {
  for (const auto& s : kShapes)
    if (s.name == name) return s.shape;
  throw CanonicalError("unknown canonical shape '" + std::string(name) + "'");
}

CanShape reverse(CanShape shape) { return info(shape).reverse; }
bool uses_functor(CanShape shape) { return info(shape).functor; }
int object_arity(CanShape shape) { return info(shape).arity; }

MorphismId canonical_iso(CanShape shape, const CanBindings& b) {
  const ShapeInfo& s = info(shape);
  if (b.category == nullptr) throw CanonicalError(std::string(s.name) + ": no category bound");
  const MonoidalCategory& m = *b.category;
  if (static_cast<int>(b.objects.size()) != s.arity) {
    throw CanonicalError(std::string(s.name) + ": expects " + std::to_string(s.arity) + " objects, got " +
                         std::to_string(b.objects.size()));
  }
  if (s.functor && (b.functor == nullptr || b.functor_source == nullptr)) {
    throw CanonicalError(std::string(s.name) + ": a functor and its source must be bound");
  }
  if (!s.functor && b.functor != nullptr) {
    throw CanonicalError(std::string(s.name) + ": shape takes no functor");
  }
  if (s.braiding && !m.braided()) throw CanonicalError(std::string(s.name) + ": category has no braiding");

  const auto& o = b.objects;
  // Source-side objects for functor shapes, target-side objects otherwise.
  auto source_object = [&](int idx) {
    check_object(*b.functor_source, o[idx], s.name);
    return o[idx];
  };
  auto target_object = [&](int idx) {
    check_object(m, o[idx], s.name);
    return o[idx];
  };

  switch (shape) {
    case CanShape::AssocRight:
      return m.a(target_object(0), target_object(1), target_object(2));
    case CanShape::AssocLeft:
      return m.inv(m.a(target_object(0), target_object(1), target_object(2)));
    case CanShape::FunctorMerge:
      return b.functor->phi[source_object(0)][source_object(1)];
    case CanShape::FunctorSplit:
      return m.inv(b.functor->phi[source_object(0)][source_object(1)]);
    case CanShape::FunctorDistributes: {
      const MonoidalFunctor& f = *b.functor;
      const ObjectId x = source_object(0), y = source_object(1), z = target_object(2);
      return m.comp(m.mor_tensor(f.phi[x][y], m.id(z)), m.inv(m.a(f.obj(x), f.obj(y), z)));
    }
    case CanShape::FunctorCollects: {
      const MonoidalFunctor& f = *b.functor;
      const ObjectId x = source_object(0), y = source_object(1), z = target_object(2);
      return m.comp(m.a(f.obj(x), f.obj(y), z), m.mor_tensor(m.inv(f.phi[x][y]), m.id(z)));
    }
    case CanShape::UnitLeftTransfer: {
      const ObjectId y = target_object(0);
      return m.comp(m.l(y), m.mor_tensor(m.inv(b.functor->phi0), m.id(y)));
    }
    case CanShape::UnitLeftAbsorb: {
      const ObjectId y = target_object(0);
      return m.comp(m.mor_tensor(b.functor->phi0, m.id(y)), m.inv(m.l(y)));
    }
    case CanShape::UnitRight:
      return m.r(target_object(0));
    case CanShape::UnitRightInverse:
      return m.inv(m.r(target_object(0)));
    case CanShape::UnitTransferLeft:
      return m.mor_tensor(m.inv(b.functor->phi0), m.id(target_object(0)));
    case CanShape::UnitTransferBack:
      return m.mor_tensor(b.functor->phi0, m.id(target_object(0)));
    case CanShape::UnitBraidLeft: {
      const ObjectId y = target_object(0);
      return m.comp(m.c(m.unit, y), m.mor_tensor(m.inv(b.functor->phi0), m.id(y)));
    }
    case CanShape::UnitBraidBack: {
      const ObjectId y = target_object(0);
      return m.comp(m.mor_tensor(b.functor->phi0, m.id(y)), m.inv(m.c(m.unit, y)));
    }
    case CanShape::BraidUnitRight:
      return m.c(target_object(0), m.unit);
    case CanShape::BraidUnitBack:
      return m.inv(m.c(target_object(0), m.unit));
    case CanShape::BraidOverFirst: {
      const ObjectId x = target_object(0), y = target_object(1), z = target_object(2);
      return m.chain({m.inv(m.a(x, y, z)), m.mor_tensor(m.c(x, y), m.id(z)), m.a(y, x, z)});
    }
    case CanShape::UnbraidOverFirst: {
      const ObjectId x = target_object(0), y = target_object(1), z = target_object(2);
      return m.chain({m.inv(m.a(y, x, z)), m.mor_tensor(m.inv(m.c(x, y)), m.id(z)), m.a(x, y, z)});
    }
  }
  throw CanonicalError("unregistered canonical shape");
}

}  // namespace nervekit
