#include <cstdint>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "nervekit/cocycle.hpp"
#include "nervekit/corpus.hpp"
#include "nervekit/fincat.hpp"
#include "nervekit/hocolim.hpp"
#include "nervekit/homology.hpp"
#include "nervekit/io.hpp"
#include "nervekit/monoidal.hpp"
#include "nervekit/nerves.hpp"
#include "nervekit/search.hpp"
#include "nervekit/simplicial.hpp"
#include "nervekit/theorem.hpp"

namespace {

using nlohmann::json;
using namespace nervekit;

enum Exit { kOk = 0, kMathFailure = 1, kInputError = 2, kBudget = 3 };

struct RunConfig {
  std::string command;
  std::string input;
  int truncation = 4;
  std::uint64_t budget = kDefaultBudget;
  std::string output;
  std::string format = "json";
  std::string which;
  bool monoidal = false;
  bool dump = false;
};

struct Outcome {
  json report;
  int code = kOk;
};

// Thrown for data that parses but fails a validator before a construction can start.
struct InvalidInput {
  json report;
};

void require(const ValidationReport& r, const std::string& what) {
  if (!r.ok()) throw InvalidInput{{{"invalid", what}, {"validation", r.to_json()}}};
}

MonoidalCategory load_monoidal(const json& doc, const std::string& kind) {
  MonoidalCategory m = monoidal_from_json(doc);
  if (kind == "braided" && !m.braided()) throw InputError("kind braided needs a braiding table");
  if (kind == "monoidal" && m.braided()) throw InputError("kind monoidal must not carry a braiding table");
  require(m.braided() ? validate_braided(m) : validate_monoidal(m), kind);
  return m;
}

MonoidalDiagram load_diagram(const json& doc) {
  MonoidalDiagram d = diagram_from_json(doc);
  require(validate_diagram(d), "diagram");
  return d;
}

Outcome cmd_validate(const json& doc, const std::string& kind) {
  ValidationReport r;
  if (kind == "category") {
    r = validate_category(category_from_json(doc));
  } else if (kind == "monoidal" || kind == "braided") {
    const MonoidalCategory m = monoidal_from_json(doc);
    if (kind == "braided" && !m.braided()) throw InputError("kind braided needs a braiding table");
    if (kind == "monoidal" && m.braided()) throw InputError("kind monoidal must not carry a braiding table");
    r = m.braided() ? validate_braided(m) : validate_monoidal(m);
  } else if (kind == "functor") {
    const FiniteCategory source = category_from_json(doc.at("source")), target = category_from_json(doc.at("target"));
    r.merge(validate_category(source), "source: ");
    r.merge(validate_category(target), "target: ");
    if (r.ok()) r.merge(validate_functor(functor_from_json(doc.at("functor")), source, target));
  } else if (kind == "monoidal_functor") {
    const MonoidalCategory source = monoidal_from_json(doc.at("source")), target = monoidal_from_json(doc.at("target"));
    const bool braided = doc.value("braided", false);
    auto category_check = [braided](const MonoidalCategory& m) {
      return braided ? validate_braided(m) : validate_monoidal(m);
    };
    r.merge(category_check(source), "source: ");
    r.merge(category_check(target), "target: ");
    if (r.ok()) {
      const MonoidalFunctor f = monoidal_functor_from_json(doc.at("functor"));
      r.merge(braided ? validate_braided_functor(f, source, target) : validate_monoidal_functor(f, source, target));
    }
  } else {
    r = validate_diagram(diagram_from_json(doc));
  }
  return {{{"kind", kind}, {"valid", r.ok()}, {"validation", r.to_json()}}, r.ok() ? kOk : kMathFailure};
}

std::string default_which(const std::string& kind, bool monoidal) {
  if (kind == "category") return "category";
  if (kind == "braided") return monoidal ? "ner_mon" : "ner_br";
  if (kind == "monoidal") return "ner_mon";
  if (kind == "diagram") return "ner_i";
  throw InputError("no nerve for kind " + kind);
}

// Braided diagrams default to 3-cocycles; --monoidal or a monoidal diagram selects 2-cocycles.
Variant diagram_variant(const RunConfig& cfg, bool braided) {
  return cfg.monoidal || !braided ? Variant::monoidal : Variant::braided;
}

// The simplicial set selected by --which.
TruncatedSimplicialSet select_nerve(const json& doc, const std::string& kind, const RunConfig& cfg,
                                    std::string& which) {
  which = cfg.which.empty() ? default_which(kind, cfg.monoidal) : cfg.which;
  const int n = cfg.truncation;
  if (which == "category") {
    if (kind == "category") {
      const FiniteCategory c = category_from_json(doc);
      require(validate_category(c), "category");
      return nerve(c, n);
    }
    if (kind == "diagram") return nerve(load_diagram(doc).index, n);
    if (kind == "monoidal" || kind == "braided") return nerve(load_monoidal(doc, kind).base, n);
  } else if (which == "ner_br" || which == "ner_mon") {
    if (kind == "monoidal" || kind == "braided") {
      const MonoidalCategory m = load_monoidal(doc, kind);
      if (which == "ner_br") {
        if (!m.braided()) throw InputError("ner_br needs a braided monoidal category");
        return ner_br(m, n, cfg.budget);
      }
      return ner_I_mon(constant_diagram(ordinal(0), m, false), n, cfg.budget);
    }
  } else if (which == "ner_i" || which == "delooping") {
    if (kind == "diagram") {
      const MonoidalDiagram d = load_diagram(doc);
      if (which == "delooping") return delooping_grothendieck_nerve(d, n, cfg.budget);
      return diagram_variant(cfg, d.braided) == Variant::monoidal ? ner_I_mon(d, n, cfg.budget)
                                                                  : ner_I_br(d, n, cfg.budget);
    }
  } else if (which == "hocolim" || which == "wbar") {
    if (kind == "diagram") {
      const MonoidalDiagram d = load_diagram(doc);
      const Variant v = diagram_variant(cfg, d.braided);
      require(check_strictly_unitary(d), "strictly unitary transfers");
      const BisimplicialSet s = build_bisimplicial_S(d, n, v, cfg.budget);
      return which == "hocolim" ? diag(s) : wbar(s);
    }
  } else {
    throw InputError("unknown --which " + which);
  }
  throw InputError("--which " + which + " does not apply to kind " + kind);
}

json dump_simplices(const TruncatedSimplicialSet& x) {
  json out = json::array();
  for (int k = 0; k <= x.bound(); ++k) {
    json dim = json::array();
    for (const Simplex& s : x.simplices(k)) dim.push_back(simplex_to_string(s));
    out.push_back(std::move(dim));
  }
  return out;
}

Outcome cmd_nerve(const json& doc, const std::string& kind, const RunConfig& cfg) {
  std::string which;
  const TruncatedSimplicialSet x = select_nerve(doc, kind, cfg, which);
  const ValidationReport r = check_simplicial(x);
  json report{{"kind", kind},
              {"which", which},
              {"truncation", cfg.truncation},
              {"cardinalities", x.cardinalities()},
              {"simplicial", r.ok()}};
  if (!r.ok()) report["validation"] = r.to_json();
  if (cfg.dump) report["simplices"] = dump_simplices(x);
  return {report, r.ok() ? kOk : kMathFailure};
}

Outcome cmd_hocolim(const json& doc, const std::string& kind, RunConfig cfg) {
  if (kind != "diagram") throw InputError("hocolim needs a diagram");
  if (cfg.which.empty()) cfg.which = "hocolim";
  if (cfg.which != "hocolim" && cfg.which != "wbar") throw InputError("hocolim takes --which hocolim or wbar");
  Outcome out = cmd_nerve(doc, kind, cfg);
  out.report["variant"] = variant_name(diagram_variant(cfg, doc.value("braided", false)));
  return out;
}

Outcome cmd_homology(const json& doc, const std::string& kind, const RunConfig& cfg) {
  std::string which;
  const TruncatedSimplicialSet x = select_nerve(doc, kind, cfg, which);
  const ChainComplex c = normalized_complex(x);
  json table = json::array();
  for (const HomologyGroup& h : homology_table(c)) {
    json row = h.to_json();
    row["group"] = h.group.to_string();
    table.push_back(std::move(row));
  }
  const bool squares = boundary_squares_to_zero(c);
  return {{{"kind", kind},
           {"which", which},
           {"truncation", cfg.truncation},
           {"cardinalities", x.cardinalities()},
           {"normalized_ranks", c.ranks()},
           {"boundary_squares_to_zero", squares},
           {"homology", table},
           {"note", "degree " + std::to_string(cfg.truncation) + " sees no boundaries from above and is untrusted"}},
          squares ? kOk : kMathFailure};
}

Outcome cmd_check_theorem(const json& doc, const std::string& kind, const RunConfig& cfg) {
  if (kind != "diagram") throw InputError("check-theorem needs a diagram");
  const MonoidalDiagram d = diagram_from_json(doc);
  json cert = certify_theorem(d, diagram_variant(cfg, d.braided), cfg.truncation, cfg.budget);
  const bool passed = cert["passed"].get<bool>();
  return {cert, passed ? kOk : kMathFailure};
}

Outcome run(const RunConfig& cfg) {
  const json doc = load_json_file(cfg.input);
  const std::string kind = document_kind(doc);
  if (cfg.command == "validate") return cmd_validate(doc, kind);
  if (cfg.command == "nerve") return cmd_nerve(doc, kind, cfg);
  if (cfg.command == "hocolim") return cmd_hocolim(doc, kind, cfg);
  if (cfg.command == "homology") return cmd_homology(doc, kind, cfg);
  return cmd_check_theorem(doc, kind, cfg);
}

int emit(const RunConfig& cfg, Outcome out) {
  out.report["command"] = cfg.command;
  out.report["exit_code"] = out.code;
  const std::string text = cfg.format == "text" ? render_text(out.report) : render_json(out.report);
  try {
    if (cfg.output.empty()) {
      std::cout << text << std::flush;
    } else {
      write_file_atomically(cfg.output, text);
    }
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return out.code;
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig cfg;
  CLI::App app{"nervekit: nerves, homotopy colimits and homology of finite monoidal diagrams"};
  app.require_subcommand(1, 1);
  struct Spec {
    const char* name;
    const char* help;
  };
  const Spec specs[] = {
      {"validate", "Run the validator matching the input kind"},
      {"nerve", "Cardinalities of a truncated nerve"},
      {"hocolim", "Cardinalities of the homotopy colimit (or its bar construction) of a diagram"},
      {"check-theorem", "Compare the homotopy colimit with the Grothendieck nerve of a diagram"},
      {"homology", "Integral homology of a truncated nerve"},
  };
  for (const Spec& spec : specs) {
    CLI::App* sub = app.add_subcommand(spec.name, spec.help);
    sub->add_option("--input", cfg.input, "Input JSON document")->required()->check(CLI::ExistingFile);
    sub->add_option("--format", cfg.format, "Report format")->check(CLI::IsMember({"json", "text"}));
    sub->add_option("--output", cfg.output, "Write the report here instead of stdout");
    const std::string command = spec.name;
    if (command == "validate") continue;
    sub->add_option("--truncation", cfg.truncation, "Top dimension N")->check(CLI::Range(1, 64));
    sub->add_option("--budget", cfg.budget, "Node budget per cocycle search")
        ->check(CLI::Range(std::uint64_t{1}, std::numeric_limits<std::uint64_t>::max()));
    sub->add_flag("--monoidal", cfg.monoidal, "Use the monoidal constructions (2-cocycles); implied for monoidal input");
    if (command == "check-theorem") continue;
    sub->add_option("--which", cfg.which,
                    "category | ner_br | ner_mon | ner_i | delooping | hocolim | wbar (default by input kind)");
    if (command == "nerve") sub->add_flag("--dump", cfg.dump, "Include every simplex in the report");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }
  cfg.command = app.get_subcommands().front()->get_name();

  try {
    return emit(cfg, run(cfg));
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return emit(cfg, {{{"error", e.what()}}, kInputError});
  } catch (const json::exception& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return emit(cfg, {{{"error", e.what()}}, kInputError});
  } catch (const InvalidInput& e) {
    std::cerr << "validation failed: " << e.report["invalid"].get<std::string>() << "\n";
    return emit(cfg, {e.report, kMathFailure});
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exhausted: " << e.what() << "\n";
    return emit(cfg, {{{"error", e.what()}, {"budget", e.budget()}}, kBudget});
  } catch (const std::exception& e) {
    std::cerr << "failure: " << e.what() << "\n";
    return emit(cfg, {{{"error", e.what()}}, kMathFailure});
  }
}
