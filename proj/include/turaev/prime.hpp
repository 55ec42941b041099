#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "turaev/carrier.hpp"
#include "turaev/gauss_code.hpp"
#include "turaev/moves.hpp"
#include "turaev/subcodes.hpp"
#include "turaev/surface.hpp"

namespace turaev {

enum class PrimenessStatus { SubcodeFree, Obstructed };

inline std::string_view to_string(PrimenessStatus s) {
  return s == PrimenessStatus::SubcodeFree ? "SubcodeFree" : "Obstructed";
}

struct PrimenessCertificate {
  PrimenessStatus status = PrimenessStatus::SubcodeFree;
  std::vector<SubcodeInterval> witnesses;
};

enum class ExceptionalCase { None, Sphere2Braid, ProjectivePlaneSuspect, Unknown };

inline std::string_view to_string(ExceptionalCase e) {
  switch (e) {
    case ExceptionalCase::None: return "None";
    case ExceptionalCase::Sphere2Braid: return "Sphere2Braid";
    case ExceptionalCase::ProjectivePlaneSuspect: return "ProjectivePlaneSuspect";
    case ExceptionalCase::Unknown: return "Unknown";
  }
  return "?";
}

enum class Verdict { Certified, NotCertified };

inline std::string_view to_string(Verdict v) { return v == Verdict::Certified ? "Certified" : "NotCertified"; }

enum class Reason {
  EmptyComponent,
  NotConnected,
  NotReduced,
  Obstructed,
  Sphere2Braid,
  ProjectivePlaneSuspect,
  UnknownProjectivePlane,
};

inline std::string_view to_string(Reason r) {
  switch (r) {
    case Reason::EmptyComponent: return "EmptyComponent";
    case Reason::NotConnected: return "NotConnected";
    case Reason::NotReduced: return "NotReduced";
    case Reason::Obstructed: return "Obstructed";
    case Reason::Sphere2Braid: return "Sphere2Braid";
    case Reason::ProjectivePlaneSuspect: return "ProjectivePlaneSuspect";
    case Reason::UnknownProjectivePlane: return "UnknownProjectivePlane";
  }
  return "?";
}

struct HyperbolicityVerdict {
  Verdict verdict = Verdict::NotCertified;
  std::vector<Reason> reasons;
  bool has(Reason r) const { return std::find(reasons.begin(), reasons.end(), r) != reasons.end(); }
};

namespace detail {

inline void require_prime_input(const GaussCode& code, bool need_nonempty) {
  if (code.is_trivial()) return;
  if (need_nonempty && code.has_empty_component())
    throw Error(ErrorKind::EmptyComponent, "component without crossings");
  if (!is_connected(code)) throw Error(ErrorKind::NotConnected, "diagram is not connected");
  if (!is_reduced(code)) throw Error(ErrorKind::NotReduced, "diagram has a kink");
}

inline std::vector<int> label_word(const Component& comp) {
  std::vector<int> w;
  for (const auto& p : comp) w.push_back(p.label);
  return w;
}

inline bool is_rotation_of(const std::vector<int>& a, const std::vector<int>& b) {
  if (a.size() != b.size()) return false;
  if (a.empty()) return true;
  for (std::size_t r = 0; r < a.size(); ++r)
    if (std::equal(a.begin() + static_cast<std::ptrdiff_t>(r), a.end(), b.begin()) &&
        std::equal(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(r), b.end() - static_cast<std::ptrdiff_t>(r)))
      return true;
  return false;
}

/// Label pattern of a closed 2-braid: one component reading 1..q 1..q, or
/// two components each meeting every crossing once in the same or the
/// opposite cyclic order.
inline bool two_braid_word(const GaussCode& code) {
  if (code.components.size() == 1) {
    const auto w = label_word(code.components[0]);
    const std::size_t n = w.size();
    if (n < 2 || n % 2 != 0) return false;
    for (std::size_t i = 0; i < n / 2; ++i)
      if (w[i] != w[i + n / 2]) return false;
    return true;
  }
  if (code.components.size() == 2) {
    const auto a = label_word(code.components[0]);
    auto b = label_word(code.components[1]);
    if (a.empty() || a.size() != b.size()) return false;
    std::vector<int> sa = a;
    std::sort(sa.begin(), sa.end());
    if (std::adjacent_find(sa.begin(), sa.end()) != sa.end()) return false;
    if (is_rotation_of(a, b)) return true;
    std::reverse(b.begin(), b.end());
    return is_rotation_of(a, b);
  }
  return false;
}

/// Label structure of the lift of the diagram to the orientation double
/// cover of its Turaev surface. Crossing k with local orientation o becomes
/// label 2k-1+o; strand letters and signs of the result are placeholders,
/// only the labels carry meaning.
inline GaussCode double_cover_lift(const GaussCode& code) {
  std::vector<Component> comps;
  for (const auto& comp : code.components) {
    const std::size_t n = comp.size();
    int twists = 0;
    for (std::size_t i = 0; i < n; ++i) twists += comp[i].strand == comp[(i + 1) % n].strand ? 1 : 0;
    const bool single = twists % 2 == 1;
    auto walk = [&](int o, std::size_t steps) {
      Component out;
      for (std::size_t k = 0; k < steps; ++k) {
        const auto& p = comp[k % n];
        out.push_back(Passage{2 * p.label - 1 + o, Strand::Over, Sign::Plus});
        o ^= p.strand == comp[(k + 1) % n].strand ? 1 : 0;
      }
      return out;
    };
    if (single) {
      comps.push_back(walk(0, 2 * n));
    } else {
      comps.push_back(walk(0, n));
      comps.push_back(walk(1, n));
    }
  }
  // second occurrence of each label passes under
  std::map<int, int> seen;
  for (auto& c : comps)
    for (auto& p : c)
      if (seen[p.label]++ == 1) p.strand = Strand::Under;
  return make_code(std::move(comps));
}

/// True when some band has the same capping disk on both of its sides, i.e.
/// a simple closed curve on the Turaev surface meets the diagram once.
inline bool has_once_crossing_curve(const GaussCode& code) {
  const auto g = build_turaev_ribbon(code);
  for (const auto& walk : trace_boundaries(g)) {
    std::vector<std::size_t> e = walk.edges;
    std::sort(e.begin(), e.end());
    if (std::adjacent_find(e.begin(), e.end()) != e.end()) return true;
  }
  return false;
}

}  // namespace detail

inline PrimenessCertificate primeness_certificate(const GaussCode& code) {
  detail::require_prime_input(code, true);
  PrimenessCertificate cert;
  cert.witnesses = subcodes(code);
  cert.status = cert.witnesses.empty() ? PrimenessStatus::SubcodeFree : PrimenessStatus::Obstructed;
  return cert;
}

/// Diagrams excluded from the tg-hyperbolicity theorem even when prime. A
/// crossingless diagram counts as a degenerate 2-braid. On the projective
/// plane the checks are the 2-braid label pattern of the code or of its lift
/// to the sphere, and a band with one capping disk on both sides; a lift that
/// is unreduced or has subcodes without any of these is reported as Unknown.
inline ExceptionalCase exceptional_case(const GaussCode& code) {
  detail::require_prime_input(code, false);
  if (code.is_trivial()) return ExceptionalCase::Sphere2Braid;
  if (code.has_empty_component()) return ExceptionalCase::None;
  const auto surface = surface_report(code);
  if (surface.twice_genus == 0) {
    // The Turaev realization is alternating on a sphere, so the label word
    // alone decides; virtualizations of a 2-braid land here too.
    return detail::two_braid_word(code) ? ExceptionalCase::Sphere2Braid : ExceptionalCase::None;
  }
  if (surface.twice_genus != 1) return ExceptionalCase::None;
  if (detail::two_braid_word(code)) return ExceptionalCase::ProjectivePlaneSuspect;
  if (detail::has_once_crossing_curve(code)) return ExceptionalCase::ProjectivePlaneSuspect;
  const auto lift = detail::double_cover_lift(code);
  if (detail::two_braid_word(lift)) return ExceptionalCase::ProjectivePlaneSuspect;
  if (!is_reduced(lift) || !subcodes(lift).empty()) return ExceptionalCase::Unknown;
  return ExceptionalCase::None;
}

inline HyperbolicityVerdict hyperbolicity_certificate(const GaussCode& code) {
  HyperbolicityVerdict v;
  if (code.is_trivial()) {
    v.reasons.push_back(Reason::Sphere2Braid);
    return v;
  }
  if (code.has_empty_component()) v.reasons.push_back(Reason::EmptyComponent);
  const bool connected = is_connected(code), reduced = is_reduced(code);
  if (!connected) v.reasons.push_back(Reason::NotConnected);
  if (!reduced) v.reasons.push_back(Reason::NotReduced);
  if (connected && reduced && !code.has_empty_component()) {
    if (!subcodes(code).empty()) v.reasons.push_back(Reason::Obstructed);
    switch (exceptional_case(code)) {
      case ExceptionalCase::None: break;
      case ExceptionalCase::Sphere2Braid: v.reasons.push_back(Reason::Sphere2Braid); break;
      case ExceptionalCase::ProjectivePlaneSuspect: v.reasons.push_back(Reason::ProjectivePlaneSuspect); break;
      case ExceptionalCase::Unknown: v.reasons.push_back(Reason::UnknownProjectivePlane); break;
    }
  }
  v.verdict = v.reasons.empty() ? Verdict::Certified : Verdict::NotCertified;
  return v;
}

struct PrimeifyResult {
  GaussCode code;
  MoveLog log;
};

namespace detail {

inline std::optional<int> find_kink(const GaussCode& code) {
  for (const auto& [label, pos] : occurrences(code))
    if (cyclically_adjacent(pos[0], pos[1], code.components[pos[0].component].size())) return label;
  return std::nullopt;
}

inline std::vector<ArcRef> all_arcs(const GaussCode& code) {
  std::vector<ArcRef> arcs;
  for (std::size_t c = 0; c < code.components.size(); ++c) {
    const std::size_t n = std::max<std::size_t>(code.components[c].size(), 1);
    for (std::size_t p = 0; p < n; ++p) arcs.push_back(ArcRef{c, p});
  }
  return arcs;
}

/// Arcs on either side of the passage at `pos`.
inline std::vector<ArcRef> arcs_beside(const GaussCode& code, const Position& pos) {
  const std::size_t n = code.components[pos.component].size();
  return {ArcRef{pos.component, (pos.index + n - 1) % n}, ArcRef{pos.component, pos.index}};
}

inline Position partner(const OccurrenceMap& occ, const GaussCode& code, const Position& pos) {
  const auto& both = occ.at(code.at(pos).label);
  return both[0] == pos ? both[1] : both[0];
}

}  // namespace detail

/// Rewrites a diagram by logged Reidemeister moves until it is connected,
/// reduced, free of subcodes and not one of the exceptional diagrams. A
/// classical input stays classical throughout.
inline PrimeifyResult make_turaev_prime(const GaussCode& input) {
  PrimeifyResult res{input, {}};
  GaussCode& cur = res.code;
  if (cur.components.empty()) return res;
  const bool classical = is_realizable(input);
  auto apply = [&](const MoveDescriptor& m) { cur = apply_logged(cur, m, res.log); };
  auto keeps_class = [&](const GaussCode& out) { return !classical || is_realizable(out); };

  // Kinks first; removing one can expose another.
  while (auto k = detail::find_kink(cur)) {
    MoveDescriptor m;
    m.kind = MoveKind::R1Remove;
    m.labels = {*k};
    apply(m);
  }
  if (cur.is_trivial()) {
    for (const auto& m : d_sequence_moves(cur, ArcRef{0, 0}, 1)) apply(m);
  }
  // Join connected classes pairwise with clasps.
  for (auto classes = connectivity(cur); classes.size() > 1; classes = connectivity(cur)) {
    const ArcRef a{classes[0].front(), 0}, b{classes[1].front(), 0};
    apply(choose_r2_add(cur, a, b));
  }

  const std::size_t c0 = std::max<std::size_t>(cur.crossing_count(), 2);
  const std::size_t cap = 10 * c0 * c0;
  std::size_t steps = 0;
  auto count_after = [&](const MoveDescriptor& m) -> std::optional<std::size_t> {
    GaussCode out = apply_move(cur, m);
    if (!keeps_class(out) || !is_reduced(out)) return std::nullopt;
    return subcodes(out).size();
  };

  for (auto subs = subcodes(cur); !subs.empty(); subs = subcodes(cur)) {
    if (++steps > cap) throw Error(ErrorKind::ProgressStalled, "iteration cap reached while removing subcodes");
    const auto& iv = subs.front();
    const auto occ = occurrences(cur);
    const std::size_t n = cur.components[iv.component].size();
    // w leaves the subcode after its last entry: q crosses it at the first
    // crossing outside, r at the last crossing inside.
    const Position out_pos{iv.component, (iv.start + iv.length) % n};
    const Position in_pos{iv.component, (iv.start + iv.length + n - 1) % n};
    const Position q = detail::partner(occ, cur, out_pos);
    const Position r = detail::partner(occ, cur, in_pos);
    std::optional<MoveDescriptor> pick;
    for (const auto& qa : detail::arcs_beside(cur, q)) {
      for (const auto& ra : detail::arcs_beside(cur, r)) {
        if (qa == ra) continue;
        for (const auto& m : r2_add_options(qa, ra)) {
          auto after = count_after(m);
          if (after && *after < subs.size()) {
            pick = m;
            break;
          }
        }
        if (pick) break;
      }
      if (pick) break;
    }
    if (!pick) {
      // No clasp next to q and r helps; take the first one anywhere that does.
      const auto arcs = detail::all_arcs(cur);
      for (std::size_t i = 0; i < arcs.size() && !pick; ++i)
        for (std::size_t j = i + 1; j < arcs.size() && !pick; ++j)
          for (const auto& m : r2_add_options(arcs[i], arcs[j])) {
            auto after = count_after(m);
            if (after && *after < subs.size()) {
              pick = m;
              break;
            }
          }
    }
    if (!pick) throw Error(ErrorKind::ProgressStalled, "no clasp reduces the subcode count");
    apply(*pick);
  }

  // Exceptional diagrams get one more clasp that keeps everything else.
  while (exceptional_case(cur) != ExceptionalCase::None) {
    if (++steps > cap) throw Error(ErrorKind::ProgressStalled, "iteration cap reached on an exceptional diagram");
    const auto arcs = detail::all_arcs(cur);
    std::optional<MoveDescriptor> pick;
    for (std::size_t i = 0; i < arcs.size() && !pick; ++i)
      for (std::size_t j = i + 1; j < arcs.size() && !pick; ++j)
        for (const auto& m : r2_add_options(arcs[i], arcs[j])) {
          GaussCode out = apply_move(cur, m);
          if (!keeps_class(out) || !is_reduced(out) || !subcodes(out).empty()) continue;
          if (exceptional_case(out) != ExceptionalCase::None) continue;
          pick = m;
          break;
        }
    if (!pick) throw Error(ErrorKind::ProgressStalled, "no clasp removes the exceptional pattern");
    apply(*pick);
  }
  return res;
}

}  // namespace turaev
