#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace nervekit {

/// One failed check. `kind` is a short stable tag ("pentagon", "face-identity", ...),
/// `witness` carries the ids or indices that exhibit the failure.
struct Violation {
  std::string kind;
  std::string detail;
  std::vector<long long> witness;

  bool operator==(const Violation&) const = default;
};

/// Result of a validator. Structural errors (dangling ids, morphisms with the wrong
/// source/target, non-invertible constraint entries) are kept apart from law
/// violations so callers can tell ill-formed input from data that breaks an axiom.
struct ValidationReport {
  std::vector<Violation> structural;
  std::vector<Violation> laws;
  std::vector<std::string> notes;

  bool ok() const { return structural.empty() && laws.empty(); }
  bool has_structural() const { return !structural.empty(); }

  void structural_error(std::string kind, std::string detail, std::vector<long long> witness = {});
  void law_violation(std::string kind, std::string detail, std::vector<long long> witness = {});
  void note(std::string text);

  /// Appends `other` with every detail prefixed by `context`.
  void merge(const ValidationReport& other, const std::string& context = {});

  nlohmann::json to_json() const;
  std::string to_text() const;
};

}  // namespace nervekit
