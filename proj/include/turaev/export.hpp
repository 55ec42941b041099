#pragma once

#include <algorithm>
#include <array>
#include <cctype>
#include <cstddef>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "turaev/carrier.hpp"
#include "turaev/errors.hpp"
#include "turaev/gauss_code.hpp"

namespace turaev {

namespace detail {

inline void require_classical(const GaussCode& code) {
  if (code.generalized) throw Error(ErrorKind::NotRealizable, "generalized codes have no planar diagram");
  if (!is_realizable(code)) throw Error(ErrorKind::NotRealizable, "the code is virtual");
}

}  // namespace detail

/// Dowker-Thistlethwaite code of a classical knot diagram: for the odd
/// traversal positions 1, 3, 5, ... the paired even position, negated when
/// the strand passes over at that even position. The crossingless unknot
/// gives the empty string.
inline std::string dt_code(const GaussCode& code) {
  if (code.is_trivial()) return "";
  if (code.components.size() != 1) throw Error(ErrorKind::UnsupportedFormat, "DT codes describe knots only");
  detail::require_classical(code);
  const auto& comp = code.components[0];
  const std::size_t n = comp.size();
  std::map<int, std::array<std::size_t, 2>> at;
  std::map<int, int> seen;
  for (std::size_t i = 0; i < n; ++i) at[comp[i].label][static_cast<std::size_t>(seen[comp[i].label]++)] = i + 1;
  std::ostringstream out;
  for (std::size_t odd = 1; odd <= n; odd += 2) {
    const auto& pair = at[comp[odd - 1].label];
    const std::size_t even = pair[0] == odd ? pair[1] : pair[0];
    if (even % 2 != 0) throw Error(ErrorKind::NotRealizable, "crossing visited twice at odd positions");
    const bool over = comp[even - 1].strand == Strand::Over;
    if (odd > 1) out << ' ';
    out << (over ? "-" : "") << even;
  }
  return out.str();
}

/// Planar diagram code. Arcs are numbered 1, 2, ... along each component in
/// turn, arc k entering the k-th passage; each crossing is written
/// X[incoming under, then the other three arcs counterclockwise], listed in
/// the order in which their over passages are traversed.
inline std::string pd_code(const GaussCode& code) {
  if (code.is_trivial()) return "PD[]";
  if (code.has_empty_component()) throw Error(ErrorKind::UnsupportedFormat, "crossingless components have no PD arcs");
  detail::require_classical(code);
  struct Ends {
    int ui = 0, uo = 0, oi = 0, oo = 0;
    Sign sign = Sign::Plus;
    Position over_at;
  };
  std::map<int, Ends> x;
  int offset = 0;
  for (const auto& comp : code.components) {
    const int n = static_cast<int>(comp.size());
    for (int i = 0; i < n; ++i) {
      const int in = offset + i + 1, out = offset + (i + 1) % n + 1;
      auto& e = x[comp[static_cast<std::size_t>(i)].label];
      e.sign = comp[static_cast<std::size_t>(i)].sign;
      if (comp[static_cast<std::size_t>(i)].strand == Strand::Under) {
        e.ui = in;
        e.uo = out;
      } else {
        e.oi = in;
        e.oo = out;
        e.over_at = Position{static_cast<std::size_t>(&comp - code.components.data()), static_cast<std::size_t>(i)};
      }
    }
    offset += n;
  }
  // Crossings are listed in the order their over passages are traversed.
  std::vector<const Ends*> order;
  for (const auto& [label, e] : x) order.push_back(&e);
  std::sort(order.begin(), order.end(), [](const Ends* a, const Ends* b) { return a->over_at < b->over_at; });
  std::ostringstream out;
  out << "PD[";
  bool first = true;
  for (const Ends* ep : order) {
    const Ends& e = *ep;
    if (!first) out << ", ";
    first = false;
    if (e.sign == Sign::Plus)
      out << "X[" << e.ui << ',' << e.oo << ',' << e.uo << ',' << e.oi << ']';
    else
      out << "X[" << e.ui << ',' << e.oi << ',' << e.uo << ',' << e.oo << ']';
  }
  out << ']';
  return out.str();
}

namespace detail {

inline std::vector<std::array<int, 4>> parse_pd_tuples(std::string_view text) {
  std::vector<std::array<int, 4>> out;
  std::size_t i = 0;
  auto fail = [&](const std::string& what) {
    throw ParseError(ValidationReport{{Violation{ErrorKind::SyntaxError, i, what}}});
  };
  while (i < text.size()) {
    const char ch = text[i];
    if (ch == 'X' || ch == 'x') {
      ++i;
      while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
      if (i >= text.size() || (text[i] != '[' && text[i] != '(')) fail("expected '[' after X");
      ++i;
      std::array<int, 4> t{};
      for (int k = 0; k < 4; ++k) {
        while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ',')) ++i;
        std::size_t j = i;
        while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
        if (j == i) fail("expected an arc number");
        t[static_cast<std::size_t>(k)] = std::stoi(std::string(text.substr(i, j - i)));
        i = j;
      }
      while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
      if (i >= text.size() || (text[i] != ']' && text[i] != ')')) fail("expected ']' closing a crossing");
      ++i;
      out.push_back(t);
    } else if (std::isspace(static_cast<unsigned char>(ch)) || ch == ',' || ch == '[' || ch == ']' || ch == 'P' ||
               ch == 'D') {
      ++i;
    } else {
      fail(std::string("unexpected character '") + ch + "'");
    }
  }
  return out;
}

}  // namespace detail

/// Reads a planar diagram code back into a Gauss code. Crossing k of the
/// list gets label k. Over-strand directions follow from the under strands
/// where possible and from consecutive arc numbers otherwise.
inline GaussCode from_pd(std::string_view text) {
  const auto xs = detail::parse_pd_tuples(text);
  if (xs.empty()) return parse("0");
  struct Slot {
    std::size_t x, s;
  };
  std::map<int, std::vector<Slot>> where;
  for (std::size_t k = 0; k < xs.size(); ++k)
    for (std::size_t s = 0; s < 4; ++s) where[xs[k][s]].push_back(Slot{k, s});
  for (const auto& [arc, slots] : where)
    if (slots.size() != 2)
      throw ParseError(ValidationReport{
          {Violation{ErrorKind::PairingError, static_cast<std::size_t>(arc), "arc must occur exactly twice"}}});
  // head[x][s]: 1 if the arc at (x, s) enters x, 0 if it leaves, -1 unknown
  std::vector<std::array<int, 4>> head(xs.size(), {1, -1, 0, -1});
  auto other = [&](std::size_t x, std::size_t s) {
    const auto& sl = where[xs[x][s]];
    return (sl[0].x == x && sl[0].s == s) ? sl[1] : sl[0];
  };
  auto propagate = [&] {
    for (bool changed = true; changed;) {
      changed = false;
      for (std::size_t x = 0; x < xs.size(); ++x) {
        if (head[x][1] >= 0) continue;
        for (std::size_t s : {std::size_t{1}, std::size_t{3}}) {
          const auto o = other(x, s);
          if (o.x == x && (o.s == 1 || o.s == 3)) continue;  // over strand closing on itself
          if (head[o.x][o.s] < 0) continue;
          const int h = 1 - head[o.x][o.s];
          head[x][s] = h;
          head[x][4 - s] = 1 - h;
          changed = true;
          break;
        }
      }
    }
  };
  propagate();
  // Components that never pass under: arcs are numbered consecutively along
  // each component, so the strand runs from d to b when b follows d, or when
  // d is the largest and b the smallest arc of that component. With only two
  // arcs that is ambiguous; the first listed crossing then runs low to high.
  std::map<int, int> parent;
  auto find = [&](int a) {
    while (parent.count(a) && parent[a] != a) a = parent[a];
    return a;
  };
  for (std::size_t x = 0; x < xs.size(); ++x)
    if (head[x][1] < 0) {
      for (int a : {xs[x][1], xs[x][3]})
        if (!parent.count(a)) parent[a] = a;
      parent[find(xs[x][1])] = find(xs[x][3]);
    }
  std::map<int, std::pair<int, int>> range;  // root -> (min, max)
  for (const auto& [a, p] : parent) {
    auto [it, fresh] = range.try_emplace(find(a), a, a);
    it->second.first = std::min(it->second.first, a);
    it->second.second = std::max(it->second.second, a);
  }
  std::map<int, bool> first_seen;
  for (std::size_t x = 0; x < xs.size(); ++x) {
    if (head[x][1] >= 0) continue;
    const int b = xs[x][1], d = xs[x][3];
    const int root = find(b);
    const auto [lo, hi] = range[root];
    bool d_to_b = b == d + 1 || (d == hi && b == lo);
    if (hi == lo + 1) {
      const bool first_here = !first_seen[root];
      first_seen[root] = true;
      d_to_b = first_here == (d == lo);
    }
    head[x][1] = d_to_b ? 0 : 1;
    head[x][3] = d_to_b ? 1 : 0;
  }
  // Follow arcs: enter at a head slot, leave by the opposite slot.
  std::map<int, bool> used;
  std::vector<Component> comps;
  for (const auto& [arc0, slots] : where) {
    if (used[arc0]) continue;
    Component comp;
    int arc = arc0;
    while (!used[arc]) {
      used[arc] = true;
      const auto& sl = where[arc];
      const Slot in = head[sl[0].x][sl[0].s] == 1 ? sl[0] : sl[1];
      if (head[in.x][in.s] != 1)
        throw ParseError(ValidationReport{
            {Violation{ErrorKind::PairingError, static_cast<std::size_t>(arc), "arc has no consistent direction"}}});
      const bool under = in.s == 0;
      // Plus when the over strand runs from slot 3 to slot 1
      const bool over_31 = head[in.x][3] == 1;
      comp.push_back(Passage{static_cast<int>(in.x) + 1, under ? Strand::Under : Strand::Over,
                             over_31 ? Sign::Plus : Sign::Minus});
      arc = xs[in.x][(in.s + 2) % 4];
    }
    comps.push_back(std::move(comp));
  }
  return make_code(std::move(comps));
}

}  // namespace turaev
