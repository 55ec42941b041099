#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "turaev/carrier.hpp"
#include "turaev/gauss_code.hpp"

namespace turaev {

/// A gap between consecutive entries of a component: position p is the arc
/// leaving entry p. A crossingless component has the single arc 0.
struct ArcRef {
  std::size_t component = 0;
  std::size_t position = 0;
  friend bool operator==(const ArcRef&, const ArcRef&) = default;
  friend auto operator<=>(const ArcRef&, const ArcRef&) = default;
};

enum class MoveKind { R1Add, R1Remove, R2Add, R2Remove, R3, Virtualize, Compose, DTwist };

inline std::string_view to_string(MoveKind k) {
  switch (k) {
    case MoveKind::R1Add: return "R1Add";
    case MoveKind::R1Remove: return "R1Remove";
    case MoveKind::R2Add: return "R2Add";
    case MoveKind::R2Remove: return "R2Remove";
    case MoveKind::R3: return "R3";
    case MoveKind::Virtualize: return "Virtualize";
    case MoveKind::Compose: return "Compose";
    case MoveKind::DTwist: return "DTwist";
  }
  return "?";
}

/// Enough parameters to replay one rewrite. Fields unused by a kind keep
/// their defaults.
///  - R1Add: arc, sign, first (letter of the first new entry)
///  - R1Remove, Virtualize: labels = {k}
///  - R2Add: arc (strand passing over), arc2 (strand passing under), sign (of
///    the first new crossing along the over strand), reversed (the under
///    strand meets the two crossings in the opposite order)
///  - R2Remove: labels = {a, b};  R3: labels = {a, b, c}
///  - Compose: arc (in the code), arc2 (in operand), operand
///  - DTwist: arc, n
struct MoveDescriptor {
  MoveKind kind = MoveKind::R1Add;
  ArcRef arc;
  ArcRef arc2;
  std::vector<int> labels;
  Sign sign = Sign::Plus;
  Strand first = Strand::Over;
  bool reversed = false;
  int n = 0;
  std::optional<GaussCode> operand;

  friend bool operator==(const MoveDescriptor&, const MoveDescriptor&) = default;
};

struct MoveRecord {
  MoveDescriptor move;
  std::uint64_t hash_before = 0;
  std::uint64_t hash_after = 0;
  friend bool operator==(const MoveRecord&, const MoveRecord&) = default;
};

struct MoveLog {
  std::vector<MoveRecord> records;
  bool empty() const { return records.empty(); }
  std::size_t size() const { return records.size(); }
};

namespace detail {

inline void check_arc(const GaussCode& code, const ArcRef& a) {
  if (a.component >= code.components.size())
    throw Error(ErrorKind::StaleReference, "component " + std::to_string(a.component) + " does not exist");
  const auto n = code.components[a.component].size();
  if ((n == 0 && a.position != 0) || (n > 0 && a.position >= n))
    throw Error(ErrorKind::StaleReference, "arc " + std::to_string(a.component) + ":" + std::to_string(a.position) +
                                               " is out of range");
}

/// Index at which entries inserted on an arc land.
inline std::size_t insertion_index(const GaussCode& code, const ArcRef& a) {
  return code.components[a.component].empty() ? 0 : a.position + 1;
}

inline bool cyclically_adjacent(const Position& a, const Position& b, std::size_t len) {
  if (a.component != b.component || len < 2) return false;
  return (a.index + 1) % len == b.index || (b.index + 1) % len == a.index;
}

inline void erase_positions(GaussCode& code, std::vector<Position> pos) {
  std::sort(pos.begin(), pos.end(), [](const Position& a, const Position& b) { return b < a; });
  for (const auto& p : pos) {
    auto& comp = code.components[p.component];
    comp.erase(comp.begin() + static_cast<std::ptrdiff_t>(p.index));
  }
}

[[noreturn]] inline void precondition(const std::string& what) { throw Error(ErrorKind::MovePreconditionFailed, what); }

inline GaussCode finish(GaussCode code) { return make_code(std::move(code.components)); }

inline int as_unit(Sign s) { return s == Sign::Plus ? 1 : -1; }

inline GaussCode r1_add(const GaussCode& code, const MoveDescriptor& m) {
  check_arc(code, m.arc);
  GaussCode out = code;
  const int label = code.max_label() + 1;
  auto& comp = out.components[m.arc.component];
  const auto at = static_cast<std::ptrdiff_t>(insertion_index(code, m.arc));
  comp.insert(comp.begin() + at, {Passage{label, m.first, m.sign}, Passage{label, flip(m.first), m.sign}});
  return finish(std::move(out));
}

inline GaussCode r1_remove(const GaussCode& code, const MoveDescriptor& m) {
  if (m.labels.size() != 1) precondition("R1Remove takes one label");
  const auto occ = occurrences(code);
  auto it = occ.find(m.labels[0]);
  if (it == occ.end()) throw Error(ErrorKind::StaleReference, "label " + std::to_string(m.labels[0]) + " not present");
  const auto& [p, q] = it->second;
  if (!cyclically_adjacent(p, q, code.components[p.component].size()))
    precondition("R1Remove: the two entries of label " + std::to_string(m.labels[0]) + " are not adjacent");
  GaussCode out = code;
  erase_positions(out, {p, q});
  return finish(std::move(out));
}

inline GaussCode r2_add(const GaussCode& code, const MoveDescriptor& m) {
  check_arc(code, m.arc);
  check_arc(code, m.arc2);
  if (m.arc == m.arc2) precondition("R2Add needs two distinct arcs");
  GaussCode out = code;
  const int a = code.max_label() + 1, b = code.max_label() + 2;
  const Sign sa = m.sign, sb = flip(m.sign);
  std::vector<Passage> over{{a, Strand::Over, sa}, {b, Strand::Over, sb}};
  std::vector<Passage> under{{a, Strand::Under, sa}, {b, Strand::Under, sb}};
  if (m.reversed) std::swap(under[0], under[1]);
  struct Ins {
    std::size_t comp, at;
    std::vector<Passage> entries;
  };
  std::vector<Ins> ins{{m.arc.component, insertion_index(code, m.arc), over},
                       {m.arc2.component, insertion_index(code, m.arc2), under}};
  // later insertion first so the earlier index stays valid
  std::sort(ins.begin(), ins.end(), [](const Ins& x, const Ins& y) { return std::tie(x.comp, x.at) > std::tie(y.comp, y.at); });
  for (auto& i : ins) {
    auto& comp = out.components[i.comp];
    comp.insert(comp.begin() + static_cast<std::ptrdiff_t>(i.at), i.entries.begin(), i.entries.end());
  }
  return finish(std::move(out));
}

inline GaussCode r2_remove(const GaussCode& code, const MoveDescriptor& m) {
  if (m.labels.size() != 2 || m.labels[0] == m.labels[1]) precondition("R2Remove takes two distinct labels");
  const auto occ = occurrences(code);
  auto ia = occ.find(m.labels[0]), ib = occ.find(m.labels[1]);
  if (ia == occ.end() || ib == occ.end()) throw Error(ErrorKind::StaleReference, "R2Remove: label not present");
  if (code.at(ia->second[0]).sign == code.at(ib->second[0]).sign)
    precondition("R2Remove: the two crossings must have opposite signs");
  std::optional<Position> ao, au, bo, bu;
  for (const auto& p : ia->second) (code.at(p).strand == Strand::Over ? ao : au) = p;
  for (const auto& p : ib->second) (code.at(p).strand == Strand::Over ? bo : bu) = p;
  if (!ao || !au || !bo || !bu) precondition("R2Remove: each crossing needs one over and one under entry");
  if (!cyclically_adjacent(*ao, *bo, code.components[ao->component].size()))
    precondition("R2Remove: over entries are not adjacent");
  if (!cyclically_adjacent(*au, *bu, code.components[au->component].size()))
    precondition("R2Remove: under entries are not adjacent");
  GaussCode out = code;
  erase_positions(out, {*ao, *au, *bo, *bu});
  return finish(std::move(out));
}

struct Triangle {
  // adjacent entry pairs along the top (OO), middle (UO) and bottom (UU) strands
  std::array<Position, 2> top, mid, bottom;
};

/// Looks for three adjacent entry pairs pairing up the labels {a,b,c} with the
/// strand letters and sign/order pattern of an actual triangle face.
inline std::optional<Triangle> find_triangle(const GaussCode& code, const std::array<int, 3>& labels) {
  const auto occ = occurrences(code);
  std::vector<Position> ents;
  for (int l : labels) {
    auto it = occ.find(l);
    if (it == occ.end()) throw Error(ErrorKind::StaleReference, "R3: label " + std::to_string(l) + " not present");
    ents.push_back(it->second[0]);
    ents.push_back(it->second[1]);
  }
  if (labels[0] == labels[1] || labels[1] == labels[2] || labels[0] == labels[2])
    precondition("R3 takes three distinct labels");
  // candidate ordered pairs (p, successor of p)
  std::vector<std::array<std::size_t, 2>> cand;
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j) {
      const auto& p = ents[i];
      const auto& q = ents[j];
      const auto len = code.components[p.component].size();
      if (i / 2 != j / 2 && p.component == q.component && (p.index + 1) % len == q.index) cand.push_back({i, j});
    }
  auto label_at = [&](std::size_t e) { return code.at(ents[e]).label; };
  auto strand_at = [&](std::size_t e) { return code.at(ents[e]).strand; };
  for (std::size_t x = 0; x < cand.size(); ++x)
    for (std::size_t y = x + 1; y < cand.size(); ++y)
      for (std::size_t z = y + 1; z < cand.size(); ++z) {
        std::array<std::array<std::size_t, 2>, 3> pairs{cand[x], cand[y], cand[z]};
        std::array<bool, 6> used{};
        bool ok = true;
        for (auto& pr : pairs)
          for (auto e : pr) {
            if (used[e]) ok = false;
            used[e] = true;
          }
        if (!ok) continue;
        std::optional<std::size_t> t, mm, bt;
        for (std::size_t k = 0; k < 3; ++k) {
          const auto s0 = strand_at(pairs[k][0]), s1 = strand_at(pairs[k][1]);
          if (s0 == Strand::Over && s1 == Strand::Over)
            t = k;
          else if (s0 == Strand::Under && s1 == Strand::Under)
            bt = k;
          else
            mm = k;
        }
        if (!t || !mm || !bt) continue;
        auto shared = [&](std::size_t p, std::size_t q) -> std::optional<int> {
          for (auto e : pairs[p])
            for (auto f : pairs[q])
              if (label_at(e) == label_at(f)) return label_at(e);
          return std::nullopt;
        };
        auto lx = shared(*t, *mm), ly = shared(*t, *bt), lz = shared(*mm, *bt);
        if (!lx || !ly || !lz) continue;
        auto before = [&](std::size_t k, int first_label) { return label_at(pairs[k][0]) == first_label ? 1 : -1; };
        const int tau_t = before(*t, *lx), tau_m = before(*mm, *lx), tau_b = before(*bt, *ly);
        auto sign_of = [&](int l) { return as_unit(code.at(occ.at(l)[0]).sign); };
        const int sx = sign_of(*lx), sy = sign_of(*ly), sz = sign_of(*lz);
        if (tau_m * tau_b != sx * sy || tau_t * tau_b != sx * sz) continue;
        auto posn = [&](std::size_t k) { return std::array<Position, 2>{ents[pairs[k][0]], ents[pairs[k][1]]}; };
        return Triangle{posn(*t), posn(*mm), posn(*bt)};
      }
  return std::nullopt;
}

inline GaussCode r3(const GaussCode& code, const MoveDescriptor& m) {
  if (m.labels.size() != 3) precondition("R3 takes three labels");
  auto tri = find_triangle(code, {m.labels[0], m.labels[1], m.labels[2]});
  if (!tri) precondition("R3: labels do not form a triangle pattern");
  GaussCode out = code;
  for (const auto& pr : {tri->top, tri->mid, tri->bottom}) std::swap(out.at(pr[0]), out.at(pr[1]));
  return finish(std::move(out));
}

}  // namespace detail

/// Flips the sign of a crossing, keeping its strand letters: the crossing
/// flanked by two virtual crossings.
inline GaussCode virtualize(const GaussCode& code, int label) {
  GaussCode out = code;
  bool found = false;
  for (auto& comp : out.components)
    for (auto& p : comp)
      if (p.label == label) {
        p.sign = flip(p.sign);
        found = true;
      }
  if (!found) throw Error(ErrorKind::UnknownLabel, "label " + std::to_string(label) + " not present");
  return out;
}

/// Connected sum: the component of `b` holding `arc_b` is cut open there and
/// spliced into `arc_a`; the other components of `b` follow those of `a`.
/// Labels of `b` are shifted past those of `a`.
inline GaussCode compose(const GaussCode& a, const GaussCode& b, const ArcRef& arc_a, const ArcRef& arc_b) {
  detail::check_arc(a, arc_a);
  detail::check_arc(b, arc_b);
  const int shift = a.max_label();
  GaussCode out = a;
  std::vector<Component> rest;
  Component spliced;
  for (std::size_t c = 0; c < b.components.size(); ++c) {
    Component comp = b.components[c];
    for (auto& p : comp) p.label += shift;
    if (c == arc_b.component) {
      const auto n = comp.size();
      for (std::size_t k = 0; k < n; ++k) spliced.push_back(comp[(arc_b.position + 1 + k) % n]);
    } else {
      rest.push_back(std::move(comp));
    }
  }
  auto& target = out.components[arc_a.component];
  const auto at = static_cast<std::ptrdiff_t>(detail::insertion_index(a, arc_a));
  target.insert(target.begin() + at, spliced.begin(), spliced.end());
  for (auto& c : rest) out.components.push_back(std::move(c));
  return detail::finish(std::move(out));
}

/// Kinks and clasp used by d_sequence. A Minus kink alone splits a B circle;
/// the clasp through its loop turns that into an A circle, and every further
/// Plus kink splits one more A circle.
struct TwistGadget {
  Sign first_kink_sign = Sign::Minus;
  Sign kink_sign = Sign::Plus;
  Strand kink_first = Strand::Over;
  bool inner_over = true;  // the first loop passes over the arc leaving the kinks
  Sign clasp_sign = Sign::Plus;
  bool clasp_reversed = false;
};

/// Primitive moves realizing the n-twist family on an arc: n consecutive
/// Reidemeister I kinks along the arc, then a Reidemeister II clasp between
/// the first loop and the arc leaving the last kink.
inline std::vector<MoveDescriptor> d_sequence_moves(const GaussCode& code, const ArcRef& arc, int n,
                                                    const TwistGadget& gadget = {}) {
  detail::check_arc(code, arc);
  if (n < 1) detail::precondition("twist count must be positive");
  std::vector<MoveDescriptor> moves;
  const std::size_t q = detail::insertion_index(code, arc);
  const auto count = static_cast<std::size_t>(n);
  for (std::size_t i = 0; i < count; ++i) {
    MoveDescriptor m;
    m.kind = MoveKind::R1Add;
    // kink i goes right after the second entry of kink i-1
    m.arc = ArcRef{arc.component, i == 0 ? arc.position : q + 2 * i - 1};
    m.sign = i == 0 ? gadget.first_kink_sign : gadget.kink_sign;
    m.first = gadget.kink_first;
    moves.push_back(m);
  }
  const std::size_t len = code.components[arc.component].size() + 2 * count;
  const ArcRef inner{arc.component, q};
  const ArcRef outer{arc.component, (q + 2 * count - 1) % len};
  MoveDescriptor clasp;
  clasp.kind = MoveKind::R2Add;
  clasp.arc = gadget.inner_over ? inner : outer;
  clasp.arc2 = gadget.inner_over ? outer : inner;
  clasp.sign = gadget.clasp_sign;
  clasp.reversed = gadget.clasp_reversed;
  moves.push_back(clasp);
  return moves;
}

inline GaussCode apply_move(const GaussCode& code, const MoveDescriptor& m);

inline GaussCode d_sequence(const GaussCode& code, const ArcRef& arc, int n) {
  GaussCode cur = code;
  for (const auto& m : d_sequence_moves(code, arc, n)) cur = apply_move(cur, m);
  return cur;
}

inline GaussCode apply_move(const GaussCode& code, const MoveDescriptor& m) {
  switch (m.kind) {
    case MoveKind::R1Add: return detail::r1_add(code, m);
    case MoveKind::R1Remove: return detail::r1_remove(code, m);
    case MoveKind::R2Add: return detail::r2_add(code, m);
    case MoveKind::R2Remove: return detail::r2_remove(code, m);
    case MoveKind::R3: return detail::r3(code, m);
    case MoveKind::Virtualize:
      if (m.labels.size() != 1) detail::precondition("Virtualize takes one label");
      return virtualize(code, m.labels[0]);
    case MoveKind::Compose:
      if (!m.operand) detail::precondition("Compose needs an operand code");
      return compose(code, *m.operand, m.arc, m.arc2);
    case MoveKind::DTwist: return d_sequence(code, m.arc, m.n);
  }
  detail::precondition("unknown move kind");
}

/// Applies `m` and appends it to `log`.
inline GaussCode apply_logged(const GaussCode& code, const MoveDescriptor& m, MoveLog& log) {
  GaussCode out = apply_move(code, m);
  log.records.push_back(MoveRecord{m, code_hash(code), code_hash(out)});
  return out;
}

/// Replays a log from `start`; nullopt if any recorded hash disagrees.
inline std::optional<GaussCode> replay(const GaussCode& start, const MoveLog& log) {
  GaussCode cur = start;
  for (const auto& r : log.records) {
    if (code_hash(cur) != r.hash_before) return std::nullopt;
    cur = apply_move(cur, r.move);
    if (code_hash(cur) != r.hash_after) return std::nullopt;
  }
  return cur;
}

/// Every R2Add on the two arcs (both strand roles, signs, orders), in a fixed
/// order.
inline std::vector<MoveDescriptor> r2_add_options(const ArcRef& x, const ArcRef& y) {
  std::vector<MoveDescriptor> out;
  for (int role = 0; role < 2; ++role)
    for (Sign s : {Sign::Plus, Sign::Minus})
      for (bool rev : {false, true}) {
        MoveDescriptor m;
        m.kind = MoveKind::R2Add;
        m.arc = role == 0 ? x : y;
        m.arc2 = role == 0 ? y : x;
        m.sign = s;
        m.reversed = rev;
        out.push_back(m);
      }
  return out;
}

/// R2Add of the strand at `over` across the strand at `under`. Of the two
/// entry orders (and the two sign choices) the first one keeping a classical
/// input classical wins; otherwise the lexicographically least result.
inline MoveDescriptor choose_r2_add(const GaussCode& code, const ArcRef& over, const ArcRef& under) {
  const bool classical = is_realizable(code);
  std::optional<MoveDescriptor> best;
  std::string best_text;
  for (const auto& m : r2_add_options(over, under)) {
    if (m.arc != over) continue;
    GaussCode out = apply_move(code, m);
    if (classical && is_realizable(out)) return m;
    std::string text = render(canonicalize(out));
    if (!best || text < best_text) {
      best = m;
      best_text = std::move(text);
    }
  }
  return *best;
}

}  // namespace turaev
