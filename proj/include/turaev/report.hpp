#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "turaev/carrier.hpp"
#include "turaev/export.hpp"
#include "turaev/gauss_code.hpp"
#include "turaev/moves.hpp"
#include "turaev/prime.hpp"
#include "turaev/subcodes.hpp"
#include "turaev/surface.hpp"

namespace turaev {

using json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

/// Everything the analysis pipeline learns about one code. Optional parts are
/// absent when their preconditions fail (for example no surface for a
/// disconnected diagram).
struct TuraevReport {
  std::string canonical_code;
  std::size_t crossings = 0;
  std::size_t components = 0;
  bool generalized = false;
  bool connected = true;
  bool reduced = true;
  std::optional<SurfaceReport> surface;
  std::optional<StateCount> states;
  std::optional<CarrierGenus> carrier;
  std::optional<PrimenessCertificate> primeness;
  std::optional<ExceptionalCase> exceptional;
  HyperbolicityVerdict verdict;
};

struct AnalyzeOptions {
  bool states = false;
  bool carrier = false;
};

/// parse -> canonicalize -> structure -> surface -> states -> carrier ->
/// primeness -> exceptional case -> verdict. States and carrier genus are
/// always computed when defined; the options only decide what to_json emits.
inline TuraevReport analyze(const GaussCode& input) {
  TuraevReport r;
  const GaussCode code = canonicalize(input);
  r.canonical_code = render(code);
  r.crossings = code.crossing_count();
  r.components = code.components.size();
  r.generalized = code.generalized;
  r.connected = is_connected(code);
  r.reduced = is_reduced(code);
  const bool surface_ok = code.is_trivial() || (r.connected && !code.has_empty_component());
  if (surface_ok) {
    r.surface = surface_report(code);
    if (!code.generalized) {
      r.states = state_circles(code);
      r.carrier = carrier_genus(code);
    }
    if (r.reduced) {
      r.primeness = primeness_certificate(code);
      r.exceptional = exceptional_case(code);
    }
  }
  r.verdict = hyperbolicity_certificate(code);
  return r;
}

inline json to_json(const SubcodeInterval& iv) {
  return json{{"component", iv.component},
              {"start", iv.start},
              {"length", iv.length},
              {"absorbed_components", iv.absorbed_components}};
}

inline json to_json(const TuraevReport& r, const AnalyzeOptions& opt = {}) {
  json j;
  j["schema_version"] = kSchemaVersion;
  j["canonical_code"] = r.canonical_code;
  j["crossings"] = r.crossings;
  j["components"] = r.components;
  j["generalized"] = r.generalized;
  j["connected"] = r.connected;
  j["reduced"] = r.reduced;
  if (r.surface) {
    j["surface"] = json{{"boundary_count", r.surface->boundary_count},
                        {"euler_characteristic", r.surface->euler_characteristic},
                        {"orientable", r.surface->orientable},
                        {"twice_genus", r.surface->twice_genus},
                        {"genus", Genus{r.surface->twice_genus}.str()}};
  } else {
    j["surface"] = nullptr;
  }
  if (opt.states) j["states"] = r.states ? json{{"a_circles", r.states->a_circles}, {"b_circles", r.states->b_circles}} : json();
  if (opt.carrier)
    j["carrier"] = r.carrier ? json{{"genus", r.carrier->genus}, {"realizable", r.carrier->realizable}} : json();
  if (r.primeness) {
    json w = json::array();
    for (const auto& iv : r.primeness->witnesses) w.push_back(to_json(iv));
    j["primeness"] = json{{"status", to_string(r.primeness->status)}, {"witnesses", w}};
  } else {
    j["primeness"] = nullptr;
  }
  j["exceptional"] = r.exceptional ? json(to_string(*r.exceptional)) : json();
  json reasons = json::array();
  for (auto reason : r.verdict.reasons) reasons.push_back(to_string(reason));
  j["verdict"] = json{{"verdict", to_string(r.verdict.verdict)}, {"reasons", reasons}};
  return j;
}

enum class ExportFormat { GaussText, JsonReport, DTCode, PDCode };

struct ExportBundle {
  ExportFormat format = ExportFormat::GaussText;
  std::string payload;
};

inline std::string_view to_string(ExportFormat f) {
  switch (f) {
    case ExportFormat::GaussText: return "GaussText";
    case ExportFormat::JsonReport: return "JsonReport";
    case ExportFormat::DTCode: return "DTCode";
    case ExportFormat::PDCode: return "PDCode";
  }
  return "?";
}

/// Accepts the command-line spellings gauss, json, dt, pd.
inline ExportFormat parse_export_format(std::string_view s) {
  if (s == "gauss") return ExportFormat::GaussText;
  if (s == "json") return ExportFormat::JsonReport;
  if (s == "dt") return ExportFormat::DTCode;
  if (s == "pd") return ExportFormat::PDCode;
  throw Error(ErrorKind::UnsupportedFormat, "unknown export format '" + std::string(s) + "'");
}

inline ExportBundle export_diagram(const GaussCode& code, ExportFormat format) {
  switch (format) {
    case ExportFormat::GaussText: return {format, render(code)};
    case ExportFormat::JsonReport: return {format, to_json(analyze(code), {true, true}).dump(2)};
    case ExportFormat::DTCode: return {format, dt_code(code)};
    case ExportFormat::PDCode: return {format, pd_code(code)};
  }
  throw Error(ErrorKind::UnsupportedFormat, "unknown export format");
}

inline json to_json(const ExportBundle& b) { return json{{"format", to_string(b.format)}, {"payload", b.payload}}; }

// ---- move descriptors as JSON lines ----

inline json to_json(const MoveDescriptor& m) {
  json j;
  j["kind"] = to_string(m.kind);
  j["arc"] = {m.arc.component, m.arc.position};
  j["arc2"] = {m.arc2.component, m.arc2.position};
  j["labels"] = m.labels;
  j["sign"] = m.sign == Sign::Plus ? "+" : "-";
  j["first"] = m.first == Strand::Over ? "O" : "U";
  j["reversed"] = m.reversed;
  j["n"] = m.n;
  if (m.operand) j["operand"] = render(*m.operand);
  return j;
}

inline MoveKind parse_move_kind(std::string_view s) {
  for (auto k : {MoveKind::R1Add, MoveKind::R1Remove, MoveKind::R2Add, MoveKind::R2Remove, MoveKind::R3,
                 MoveKind::Virtualize, MoveKind::Compose, MoveKind::DTwist})
    if (to_string(k) == s) return k;
  throw Error(ErrorKind::MovePreconditionFailed, "unknown move kind '" + std::string(s) + "'");
}

/// Missing fields take their defaults.
inline MoveDescriptor move_from_json(const json& j) {
  MoveDescriptor m;
  try {
    m.kind = parse_move_kind(j.at("kind").get<std::string>());
    auto arc = [&](const char* key) {
      if (!j.contains(key)) return ArcRef{};
      const auto& a = j.at(key);
      return ArcRef{a.at(0).get<std::size_t>(), a.at(1).get<std::size_t>()};
    };
    m.arc = arc("arc");
    m.arc2 = arc("arc2");
    if (j.contains("labels")) m.labels = j.at("labels").get<std::vector<int>>();
    if (j.contains("sign")) m.sign = j.at("sign").get<std::string>() == "-" ? Sign::Minus : Sign::Plus;
    if (j.contains("first")) m.first = j.at("first").get<std::string>() == "U" ? Strand::Under : Strand::Over;
    if (j.contains("reversed")) m.reversed = j.at("reversed").get<bool>();
    if (j.contains("n")) m.n = j.at("n").get<int>();
    if (j.contains("operand")) m.operand = parse(j.at("operand").get<std::string>());
  } catch (const json::exception& e) {
    throw Error(ErrorKind::MovePreconditionFailed, std::string("malformed move: ") + e.what());
  }
  return m;
}

inline std::string hash_hex(std::uint64_t h) {
  std::ostringstream s;
  s << std::hex;
  s.width(16);
  s.fill('0');
  s << h;
  return s.str();
}

inline json to_json(const MoveLog& log) {
  json a = json::array();
  for (const auto& r : log.records)
    a.push_back(json{{"move", to_json(r.move)}, {"before", hash_hex(r.hash_before)}, {"after", hash_hex(r.hash_after)}});
  return a;
}

inline json error_json(ErrorKind kind, const std::string& message, const ValidationReport* report = nullptr) {
  json e{{"kind", to_string(kind)}, {"message", message}};
  if (report) {
    json v = json::array();
    for (const auto& x : report->violations)
      v.push_back(json{{"rule", to_string(x.rule)}, {"where", x.where}, {"message", x.message}});
    e["violations"] = v;
  }
  return json{{"schema_version", kSchemaVersion}, {"error", e}};
}

}  // namespace turaev
