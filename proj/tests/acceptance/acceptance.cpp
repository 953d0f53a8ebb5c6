// Acceptance run: one PASS/FAIL line per criterion with its runtime.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <memory>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "nervekit/cocycle.hpp"
#include "nervekit/corpus.hpp"
#include "nervekit/hocolim.hpp"
#include "nervekit/homology.hpp"
#include "nervekit/monoidal.hpp"
#include "nervekit/nerves.hpp"
#include "nervekit/theorem.hpp"
#include "oracles.hpp"
#include "random_diagrams.hpp"

using namespace nervekit;
using nlohmann::json;

namespace {

SimplicialSetPtr share(TruncatedSimplicialSet x) { return std::make_shared<const TruncatedSimplicialSet>(std::move(x)); }

// Collects failed expectations for one criterion.
struct Outcome {
  std::vector<std::string> failures;
  std::string summary;

  void expect(bool condition, const std::string& what) {
    if (!condition) failures.push_back(what);
  }
};

template <class T>
std::string join(const std::vector<T>& xs, const char* sep = ",") {
  std::ostringstream out;
  for (std::size_t i = 0; i < xs.size(); ++i) out << (i ? sep : "") << xs[i];
  return out.str();
}

std::string group_string(const ChainComplex& c, int k) { return homology(c, k).group.to_string(); }

// Single-entry mutation of every constraint table, as in the unit suite.
std::size_t count_undetected_mutants(MonoidalCategory m, std::size_t& mutants) {
  std::size_t undetected = 0;
  const int objects = m.object_count(), morphisms = m.morphism_count();
  auto vary = [&](int& slot, int range) {
    const int original = slot;
    for (int v = 0; v < range; ++v) {
      if (v == original) continue;
      slot = v;
      ++mutants;
      undetected += validate_braided(m).ok();
    }
    slot = original;
  };
  for (auto& row : m.tensor_obj)
    for (int& x : row) vary(x, objects);
  for (auto& row : m.tensor_mor)
    for (int& x : row) vary(x, morphisms);
  for (auto& slab : m.assoc)
    for (auto& row : slab)
      for (int& x : row) vary(x, morphisms);
  for (int& x : m.lunit) vary(x, morphisms);
  for (int& x : m.runit) vary(x, morphisms);
  for (auto& row : m.braiding)
    for (int& x : row) vary(x, morphisms);
  vary(m.unit, objects);
  return undetected;
}

Outcome coherence_validators() {
  Outcome o;
  std::size_t mutants = 0, undetected = 0;
  for (const MonoidalCategory& m : {discrete_cyclic(2), discrete_cyclic(3), discrete_cyclic(4), one_object_z2()}) {
    o.expect(validate_braided(m).ok(), "corpus category rejected");
    undetected += count_undetected_mutants(m, mutants);
  }
  o.expect(undetected == 0, std::to_string(undetected) + " undetected mutants");
  o.summary = std::to_string(mutants) + " mutants, " + std::to_string(mutants - undetected) + " detected";
  return o;
}

Outcome cocycle_counts() {
  Outcome o;
  const MonoidalCategory disc = discrete_cyclic(2), one = one_object_z2();
  std::vector<std::size_t> d, u;
  for (int n = 0; n <= 5; ++n) {
    d.push_back(enumerate_3cocycles(Coefficients::constant(n, disc)).size());
    u.push_back(enumerate_3cocycles(Coefficients::constant(n, one)).size());
    o.expect(static_cast<long long>(d.back()) == oracle::normalized_cocycle_count(n, 2, 2), "disc(Z/2) oracle mismatch");
    o.expect(static_cast<long long>(u.back()) == oracle::normalized_cocycle_count(n, 3, 2), "one-object oracle mismatch");
  }
  o.expect(d == std::vector<std::size_t>{1, 1, 2, 8, 64, 1024}, "disc(Z/2) counts");
  o.expect(u == std::vector<std::size_t>{1, 1, 1, 2, 16, 1024}, "one-object counts");
  o.summary = "disc(Z/2) " + join(d) + "; one-object " + join(u);
  return o;
}

Outcome nerve_homology() {
  Outcome o;
  const ChainComplex disc = normalized_complex(ner_br(discrete_cyclic(2), 5));
  const ChainComplex one = normalized_complex(ner_br(one_object_z2(), 5));
  const ChainComplex mon = normalized_complex(ner_I_mon(constant_diagram(ordinal(0), discrete_cyclic(2), false), 4));
  for (const ChainComplex* c : {&disc, &one, &mon}) o.expect(boundary_squares_to_zero(*c), "boundary does not square to zero");
  o.expect(group_string(disc, 0) == "Z" && group_string(disc, 1) == "0" && group_string(disc, 2) == "Z/2",
           "ner_br(disc Z/2)");
  o.expect(group_string(one, 1) == "0" && group_string(one, 2) == "0" && group_string(one, 3) == "Z/2",
           "ner_br(one-object)");
  o.expect(group_string(mon, 1) == "Z/2", "ner_I_mon over a point");
  o.summary = "disc H0..H2 = " + group_string(disc, 0) + "," + group_string(disc, 1) + "," + group_string(disc, 2) +
              "; one-object H1..H3 = " + group_string(one, 1) + "," + group_string(one, 2) + "," + group_string(one, 3) +
              "; Ner_I H1 = " + group_string(mon, 1);
  return o;
}

Outcome proposition_check() {
  Outcome o;
  const std::vector<std::pair<std::string, MonoidalDiagram>> diagrams{
      {"constant", constant_diagram(ordinal(0), discrete_cyclic(2), false)},
      {"arrow identity", arrow_identity_diagram(discrete_cyclic(2), false)},
      {"arrow reduction", arrow_reduction_diagram(false)}};
  std::vector<std::string> sizes;
  for (const auto& [name, d] : diagrams) {
    const SimplicialSetPtr ner = share(ner_I_mon(d, 4)), del = share(delooping_grothendieck_nerve(d, 4));
    const SimplicialMap f = proposition_iso(ner, del);
    o.expect(check_simplicial(*del).ok(), name + ": delooping nerve not simplicial");
    o.expect(check_simplicial(f).ok(), name + ": map not simplicial");
    const IsoVerdict v = is_isomorphism(f);
    o.expect(v.iso && v.inverse && check_simplicial(*v.inverse).ok(), name + ": not an isomorphism");
    sizes.push_back(name + " " + join(ner->cardinalities()));
  }
  o.summary = join(sizes, "; ");
  return o;
}

// Certificate checks that every theorem run must pass.
void expect_certificate(Outcome& o, const std::string& name, const json& cert, int bound) {
  for (const char* check : {"bisimplicial_S", "phi_map", "eta_map", "psi_map", "psi_inverse_map", "psi_isomorphism",
                            "psi_two_sided_inverse", "triangle_eta_equals_psi_phi", "eta_homology_isomorphism"})
    o.expect(cert["checks"][check]["ok"] == true, name + ": " + check);
  const json& tri = cert["checks"]["triangle_eta_equals_psi_phi"];
  o.expect(tri["agreements"] == tri["totals"] && tri["totals"].size() == static_cast<std::size_t>(bound) + 1,
           name + ": triangle not certified in every dimension");
  int trusted_isos = 0;
  for (const json& m : cert["checks"]["eta_homology_isomorphism"]["degrees"])
    trusted_isos += m["trusted"] == true && m["iso"] == true && m["degree"].get<int>() <= 2;
  o.expect(trusted_isos == 3, name + ": eta not certified on H0, H1, H2");
  o.expect(cert["passed"] == true, name + ": certificate failed at " + cert["first_failure"].dump());
}

struct TimedDiagram {
  std::string name;
  MonoidalDiagram d;
};

Outcome theorem_pipeline(Variant v, const std::vector<TimedDiagram>& diagrams, double limit_seconds) {
  Outcome o;
  std::vector<std::string> parts;
  for (const TimedDiagram& t : diagrams) {
    const auto start = std::chrono::steady_clock::now();
    const json cert = certify_theorem(t.d, v, 4);
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    expect_certificate(o, t.name, cert, 4);
    if (v == Variant::monoidal)
      for (const char* check : {"proposition_map", "proposition_isomorphism", "psi_then_proposition"})
        o.expect(cert["checks"][check]["ok"] == true, t.name + ": " + check);
    o.expect(seconds < limit_seconds, t.name + ": over the time limit");
    char buf[64];
    std::snprintf(buf, sizeof buf, " %.1fs", seconds);
    parts.push_back(t.name + buf);
  }
  o.summary = join(parts, "; ");
  return o;
}

Outcome constant_collapse(Variant v) {
  Outcome o;
  const MonoidalDiagram d = constant_diagram(ordinal(0), discrete_cyclic(2), v == Variant::braided);
  const json cert = certify_theorem(d, v, 4);
  const json& c = cert["checks"]["constant_collapse"];
  o.expect(cert["passed"] == true, "certificate failed");
  o.expect(c["ok"] == true && c["eta_isomorphism"] == true && c["psi_isomorphism"] == true && c["eta_identity"] == true,
           "collapse not recorded");
  const TheoremObjects t = build_theorem_objects(d, v, 4);
  for (int n = 0; n <= 4; ++n) {
    o.expect(t.hocolim->count(n) == t.ner_i->count(n), "eta not bijective in dimension " + std::to_string(n));
    o.expect(t.wbar->count(n) == t.ner_i->count(n), "Psi not bijective in dimension " + std::to_string(n));
  }
  o.expect(is_isomorphism(t.eta).iso && is_isomorphism(t.psi).iso, "dimension-wise isomorphism");
  o.summary = std::string(variant_name(v)) + " sizes " + join(t.hocolim->cardinalities());
  return o;
}

Outcome monoidal_mirror() {
  Outcome o;
  const Outcome prop = proposition_check();
  const Outcome pipeline = theorem_pipeline(Variant::monoidal,
                                            {{"ord0", constant_diagram(ordinal(0), discrete_cyclic(2), false)},
                                             {"arrow identity", arrow_identity_diagram(discrete_cyclic(2), false)},
                                             {"arrow reduction", arrow_reduction_diagram(false)},
                                             {"span reduction", span_reduction_diagram(false)}},
                                            300);
  const Outcome collapse = constant_collapse(Variant::monoidal);
  for (const Outcome* part : {&prop, &pipeline, &collapse})
    o.failures.insert(o.failures.end(), part->failures.begin(), part->failures.end());
  o.summary = pipeline.summary + "; " + collapse.summary;
  return o;
}

Outcome phi_properties() {
  Outcome o;
  std::mt19937 rng(20240917);
  std::size_t largest = 0, simplices = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const BisimplicialSet s = nerve_diagram_bisimplicial(random_bisimplicial::random_diagram(rng), 3);
    o.expect(check_bisimplicial(s).ok(), "sample is not bisimplicial");
    for (int p = 0; p <= 3; ++p)
      for (int q = 0; q <= 3; ++q) largest = std::max(largest, s.count(p, q));
    const SimplicialSetPtr d = share(diag(s)), w = share(wbar(s));
    const SimplicialMap f = phi(s, d, w);
    o.expect(check_simplicial(f).ok(), "phi is not simplicial");
    for (int p = 0; p <= 3; ++p)
      for (std::size_t t = 0; t < d->count(p); ++t) {
        const std::vector<std::size_t> c = wbar_components(w->simplex(p, f(p, t)));
        ++simplices;
        for (int m = 0; m < p; ++m)
          o.expect(s.vface(m, p - m, 0, c[m]) == s.hface(m + 1, p - m - 1, m + 1, c[m + 1]), "matching condition");
      }
  }
  o.summary = "100 samples, " + std::to_string(simplices) + " simplices, largest bidegree " + std::to_string(largest);
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    std::string name;
    double limit_seconds;  // 0 when only per-item limits apply
    std::function<Outcome()> run;
  };
  const std::vector<TimedDiagram> braided{{"ord0", constant_diagram(ordinal(0), discrete_cyclic(2), true)},
                                          {"arrow identity", arrow_identity_diagram(discrete_cyclic(2), true)},
                                          {"arrow reduction", arrow_reduction_diagram(true)},
                                          {"span twisted", span_twisted_diagram()},
                                          {"span reduction", span_reduction_diagram(true)}};
  const std::vector<Criterion> criteria{
      {1, "coherence validators", 10, coherence_validators},
      {2, "cocycle counts vs oracle", 60, cocycle_counts},
      {3, "geometric nerve homology", 0, nerve_homology},
      {4, "proposition isomorphism", 0, proposition_check},
      {5, "braided theorem pipeline", 0, [&] { return theorem_pipeline(Variant::braided, braided, 300); }},
      {6, "constant diagram collapse", 0, [] { return constant_collapse(Variant::braided); }},
      {7, "monoidal mirror", 0, monoidal_mirror},
      {8, "phi property suite", 0, phi_properties},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.failures.push_back(std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_seconds > 0 && seconds >= c.limit_seconds) o.failures.push_back("over the time limit");
    const bool pass = o.failures.empty();
    failed += !pass;
    std::printf("criterion %d %s: %s (%.2fs) %s\n", c.id, c.name.c_str(), pass ? "PASS" : "FAIL", seconds,
                o.summary.c_str());
    for (const std::string& f : o.failures) std::printf("  - %s\n", f.c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
