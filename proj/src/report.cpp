#include "nervekit/report.hpp"

#include <sstream>

namespace nervekit {

void ValidationReport::structural_error(std::string kind, std::string detail,
                                        std::vector<long long> witness) {
  structural.push_back({std::move(kind), std::move(detail), std::move(witness)});
}

void ValidationReport::law_violation(std::string kind, std::string detail,
                                     std::vector<long long> witness) {
  laws.push_back({std::move(kind), std::move(detail), std::move(witness)});
}

void ValidationReport::note(std::string text) { notes.push_back(std::move(text)); }

void ValidationReport::merge(const ValidationReport& other, const std::string& context) {
  auto prefixed = [&](Violation v) {
    if (!context.empty()) v.detail = context + ": " + v.detail;
    return v;
  };
  for (const auto& v : other.structural) structural.push_back(prefixed(v));
  for (const auto& v : other.laws) laws.push_back(prefixed(v));
  for (const auto& n : other.notes) notes.push_back(context.empty() ? n : context + ": " + n);
}

namespace {

nlohmann::json violations_json(const std::vector<Violation>& vs) {
  auto arr = nlohmann::json::array();
  for (const auto& v : vs) {
    arr.push_back({{"kind", v.kind}, {"detail", v.detail}, {"witness", v.witness}});
  }
  return arr;
}

}  // namespace

nlohmann::json ValidationReport::to_json() const {
  return {{"ok", ok()},
          {"structural", violations_json(structural)},
          {"laws", violations_json(laws)},
          {"notes", notes}};
}

std::string ValidationReport::to_text() const {
  std::ostringstream out;
  out << (ok() ? "ok" : "FAILED") << "\n";
  for (const auto& v : structural) out << "structural " << v.kind << ": " << v.detail << "\n";
  for (const auto& v : laws) out << "law " << v.kind << ": " << v.detail << "\n";
  for (const auto& n : notes) out << "note: " << n << "\n";
  return out.str();
}

}  // namespace nervekit
