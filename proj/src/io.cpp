#include "nervekit/io.hpp"

#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <utility>

namespace nervekit {

namespace {

using nlohmann::json;

const json& field(const json& j, const std::string& key) {
  if (!j.is_object()) throw InputError("expected an object holding \"" + key + "\"");
  const auto it = j.find(key);
  if (it == j.end()) throw InputError("missing field \"" + key + "\"");
  return *it;
}

int as_int(const json& j, const std::string& what) {
  if (!j.is_number_integer()) throw InputError(what + " must be an integer");
  const auto value = j.get<long long>();
  if (value < -(1LL << 30) || value > (1LL << 30)) throw InputError(what + " is out of range");
  return static_cast<int>(value);
}

std::vector<int> int_vector(const json& j, const std::string& what) {
  if (!j.is_array()) throw InputError(what + " must be an array");
  std::vector<int> out;
  for (const auto& x : j) out.push_back(as_int(x, what + " entry"));
  return out;
}

std::vector<std::vector<int>> int_matrix(const json& j, const std::string& what) {
  if (!j.is_array()) throw InputError(what + " must be an array of arrays");
  std::vector<std::vector<int>> out;
  for (const auto& row : j) out.push_back(int_vector(row, what));
  return out;
}

std::vector<std::vector<std::vector<int>>> int_cube(const json& j, const std::string& what) {
  if (!j.is_array()) throw InputError(what + " must be a nested array");
  std::vector<std::vector<std::vector<int>>> out;
  for (const auto& slab : j) out.push_back(int_matrix(slab, what));
  return out;
}

void flatten(const json& j, const std::string& path, std::string& out) {
  if (j.is_object() && !j.empty()) {
    for (const auto& [key, value] : j.items()) flatten(value, path.empty() ? key : path + "." + key, out);
  } else if (j.is_array() && !j.empty()) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], path + "[" + std::to_string(i) + "]", out);
  } else {
    out += path + " = " + j.dump() + "\n";
  }
}

}  // namespace

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

json load_json_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_json(buffer.str());
}

std::string document_kind(const json& doc) {
  static const std::set<std::string> kinds{"category", "monoidal", "braided", "functor", "monoidal_functor",
                                           "diagram"};
  const json& kind = field(doc, "kind");
  if (!kind.is_string() || !kinds.count(kind.get<std::string>())) throw InputError("unknown kind " + kind.dump());
  return kind.get<std::string>();
}

FiniteCategory category_from_json(const json& j) {
  const int objects = as_int(field(j, "objects"), "objects");
  if (objects < 0) throw InputError("objects must be nonnegative");
  const json& morphisms = field(j, "morphisms");
  if (!morphisms.is_array()) throw InputError("morphisms must be an array");
  std::vector<ObjectId> src, tgt;
  for (std::size_t k = 0; k < morphisms.size(); ++k) {
    if (as_int(field(morphisms[k], "id"), "morphism id") != static_cast<int>(k))
      throw InputError("morphism ids must be 0..m-1 in order; entry " + std::to_string(k) + " differs");
    src.push_back(as_int(field(morphisms[k], "src"), "src"));
    tgt.push_back(as_int(field(morphisms[k], "tgt"), "tgt"));
  }
  std::vector<MorphismId> identity = int_vector(field(j, "identity"), "identity");
  if (static_cast<int>(identity.size()) != objects) throw InputError("identity needs one entry per object");

  const int m = static_cast<int>(src.size());
  std::vector<std::vector<MorphismId>> composition(m, std::vector<MorphismId>(m, kUndefined));
  const json& compose = field(j, "compose");
  if (!compose.is_array()) throw InputError("compose must be an array");
  for (const auto& entry : compose) {
    const std::vector<int> t = int_vector(entry, "compose entry");
    if (t.size() != 3) throw InputError("compose entries are [g, f, g o f]");
    const int g = t[0], f = t[1];
    if (g < 0 || g >= m || f < 0 || f >= m) throw InputError("compose entry " + entry.dump() + " names no morphism");
    if (src[g] != tgt[f]) throw InputError("compose entry " + entry.dump() + " is not a composable pair");
    if (composition[g][f] != kUndefined) throw InputError("compose entry " + entry.dump() + " is repeated");
    composition[g][f] = t[2];
  }
  for (int g = 0; g < m; ++g)
    for (int f = 0; f < m; ++f)
      if (src[g] == tgt[f] && composition[g][f] == kUndefined)
        throw InputError("compose has no entry for " + std::to_string(g) + " o " + std::to_string(f));
  return FiniteCategory(objects, std::move(src), std::move(tgt), std::move(identity), std::move(composition));
}

json category_to_json(const FiniteCategory& c) {
  json morphisms = json::array();
  for (int f = 0; f < c.morphism_count(); ++f) morphisms.push_back({{"id", f}, {"src", c.src(f)}, {"tgt", c.tgt(f)}});
  json compose = json::array();
  for (int g = 0; g < c.morphism_count(); ++g)
    for (int f = 0; f < c.morphism_count(); ++f)
      if (c.src(g) == c.tgt(f)) compose.push_back({g, f, c.composite_or_undefined(g, f)});
  return {{"objects", c.object_count()},
          {"morphisms", morphisms},
          {"identity", c.identities()},
          {"compose", compose}};
}

MonoidalCategory monoidal_from_json(const json& j) {
  MonoidalCategory m;
  m.base = category_from_json(j);
  m.tensor_obj = int_matrix(field(j, "tensor_obj"), "tensor_obj");
  m.tensor_mor = int_matrix(field(j, "tensor_mor"), "tensor_mor");
  m.unit = as_int(field(j, "unit"), "unit");
  m.assoc = int_cube(field(j, "assoc"), "assoc");
  m.lunit = int_vector(field(j, "lunit"), "lunit");
  m.runit = int_vector(field(j, "runit"), "runit");
  if (j.contains("braiding")) {
    m.braiding = int_matrix(j["braiding"], "braiding");
    if (m.braiding.empty() && m.object_count() > 0) throw InputError("braiding must not be empty");
  }
  return m;
}

json monoidal_to_json(const MonoidalCategory& m) {
  json j = category_to_json(m.base);
  j["tensor_obj"] = m.tensor_obj;
  j["tensor_mor"] = m.tensor_mor;
  j["unit"] = m.unit;
  j["assoc"] = m.assoc;
  j["lunit"] = m.lunit;
  j["runit"] = m.runit;
  if (m.braided()) j["braiding"] = m.braiding;
  return j;
}

Functor functor_from_json(const json& j) {
  return Functor{int_vector(field(j, "objects"), "functor objects"),
                 int_vector(field(j, "morphisms"), "functor morphisms")};
}

json functor_to_json(const Functor& f) { return {{"objects", f.objects}, {"morphisms", f.morphisms}}; }

MonoidalFunctor monoidal_functor_from_json(const json& j) {
  MonoidalFunctor f;
  f.functor = functor_from_json(j);
  f.phi = int_matrix(field(j, "phi"), "phi");
  f.phi0 = as_int(field(j, "phi0"), "phi0");
  return f;
}

json monoidal_functor_to_json(const MonoidalFunctor& f) {
  json j = functor_to_json(f.functor);
  j["phi"] = f.phi;
  j["phi0"] = f.phi0;
  return j;
}

MonoidalDiagram diagram_from_json(const json& j) {
  MonoidalDiagram d;
  d.index = category_from_json(field(j, "index"));
  const json& braided = field(j, "braided");
  if (!braided.is_boolean()) throw InputError("braided must be a boolean");
  d.braided = braided.get<bool>();
  const json& fibers = field(j, "fibers");
  if (!fibers.is_array() || static_cast<int>(fibers.size()) != d.index.object_count())
    throw InputError("fibers needs one monoidal category per index object");
  for (const auto& fiber : fibers) d.fibers.push_back(monoidal_from_json(fiber));

  const int arrows = d.index.morphism_count();
  std::vector<bool> given(arrows, false);
  d.transfers.resize(arrows);
  const json& transfers = field(j, "transfers");
  if (!transfers.is_array()) throw InputError("transfers must be an array");
  for (const auto& t : transfers) {
    const int a = as_int(field(t, "arrow"), "transfer arrow");
    if (a < 0 || a >= arrows) throw InputError("transfer for unknown arrow " + std::to_string(a));
    if (given[a]) throw InputError("two transfers for arrow " + std::to_string(a));
    d.transfers[a] = monoidal_functor_from_json(t);
    given[a] = true;
  }
  for (int a = 0; a < arrows; ++a) {
    if (given[a]) continue;
    const int x = d.index.src(a);
    if (x < 0 || x >= d.index.object_count() || !d.index.is_identity(a))
      throw InputError("no transfer for arrow " + std::to_string(a));
    d.transfers[a] = identity_monoidal_functor(d.fibers[x]);
  }
  return d;
}

json diagram_to_json(const MonoidalDiagram& d) {
  json fibers = json::array();
  for (const auto& f : d.fibers) fibers.push_back(monoidal_to_json(f));
  json transfers = json::array();
  for (int a = 0; a < static_cast<int>(d.transfers.size()); ++a) {
    json t = monoidal_functor_to_json(d.transfers[a]);
    t["arrow"] = a;
    transfers.push_back(std::move(t));
  }
  return {{"kind", "diagram"},
          {"braided", d.braided},
          {"index", category_to_json(d.index)},
          {"fibers", fibers},
          {"transfers", transfers}};
}

std::string render_json(const json& j) { return j.dump(2) + "\n"; }

std::string render_text(const json& j) {
  std::string out;
  flatten(j, "", out);
  return out;
}

void write_file_atomically(const std::string& path, const std::string& content) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path temp = target;
  temp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(temp, std::ios::binary | std::ios::trunc);
    if (!out) throw InputError("cannot write " + temp.string());
    out << content;
    out.flush();
    if (!out) throw InputError("cannot write " + temp.string());
  }
  std::error_code ec;
  fs::rename(temp, target, ec);
  if (ec) {
    fs::remove(temp);
    throw InputError("cannot replace " + path + ": " + ec.message());
  }
}

}  // namespace nervekit
