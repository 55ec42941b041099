#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <queue>
#include <vector>

#include "turaev/gauss_code.hpp"

namespace turaev {

/// Which end of a passage a slot belongs to, and which of the two strands
/// through the crossing. The primary strand is the Over passage (for a label
/// passing the same way twice, its first occurrence).
enum class SlotRole : std::uint8_t { PrimaryIn, PrimaryOut, SecondaryIn, SecondaryOut };

/// Counterclockwise slot order at a crossing as a function of its sign.
/// `Standard` puts (over-in, under-in, over-out, under-out) at a Plus crossing
/// and (over-in, under-out, over-out, under-in) at a Minus crossing;
/// `Swapped` exchanges the two. Only `Standard` reads classical diagrams as
/// planar (checked by the calibration tests).
enum class RotationConvention { Standard, Swapped };

inline std::array<SlotRole, 4> rotation_order(Sign sign, RotationConvention conv = RotationConvention::Standard) {
  const bool plus_layout = (sign == Sign::Plus) == (conv == RotationConvention::Standard);
  if (plus_layout) return {SlotRole::PrimaryIn, SlotRole::SecondaryIn, SlotRole::PrimaryOut, SlotRole::SecondaryOut};
  return {SlotRole::PrimaryIn, SlotRole::SecondaryOut, SlotRole::PrimaryOut, SlotRole::SecondaryIn};
}

/// A slot at a crossing disk: (vertex, index in counterclockwise order).
struct HalfEdge {
  std::size_t vertex = 0;
  std::size_t slot = 0;
  friend bool operator==(const HalfEdge&, const HalfEdge&) = default;
  friend auto operator<=>(const HalfEdge&, const HalfEdge&) = default;
};

struct SlotRecord {
  Position passage;
  bool outgoing = false;
};

struct RibbonEdge {
  HalfEdge from;  // out-slot of a passage
  HalfEdge to;    // in-slot of the next passage along the component
  bool twist = false;
};

/// Crossing disks joined by bands, one band per consecutive passage pair.
struct RibbonGraph {
  std::vector<int> labels;                         // vertex -> crossing label
  std::vector<std::array<SlotRecord, 4>> slots;    // counterclockwise per vertex
  std::vector<std::array<std::size_t, 4>> edge_at; // edge index at each slot
  std::vector<RibbonEdge> edges;

  std::size_t vertex_count() const { return labels.size(); }

  HalfEdge opposite(const HalfEdge& h) const {
    const auto& e = edges[edge_at[h.vertex][h.slot]];
    return e.from == h ? e.to : e.from;
  }
  bool twisted_at(const HalfEdge& h) const { return edges[edge_at[h.vertex][h.slot]].twist; }
};

namespace detail {

inline std::size_t role_index(SlotRole r) { return static_cast<std::size_t>(r); }

/// Role of the passage at `pos`: primary or secondary strand of its crossing.
inline bool is_primary(const GaussCode& code, const OccurrenceMap& occ, const Position& pos) {
  const auto& p = code.at(pos);
  const auto& both = occ.at(p.label);
  const auto& a = code.at(both[0]);
  const auto& b = code.at(both[1]);
  if (a.strand != b.strand) return p.strand == Strand::Over;
  return pos == both[0];
}

}  // namespace detail

/// Assembles the ribbon graph of a code. With `with_twists` each band carries
/// a half-twist when its two end passages share a strand letter.
inline RibbonGraph assemble_ribbon(const GaussCode& code, bool with_twists,
                                   RotationConvention conv = RotationConvention::Standard) {
  const auto occ = occurrences(code);
  RibbonGraph g;
  std::map<int, std::size_t> vertex_of;
  for (const auto& [label, pos] : occ) {
    vertex_of[label] = g.labels.size();
    g.labels.push_back(label);
  }
  const std::size_t V = g.labels.size();
  g.slots.resize(V);
  g.edge_at.resize(V);
  // slot index of each role at each vertex
  std::vector<std::array<std::size_t, 4>> where(V);
  for (std::size_t v = 0; v < V; ++v) {
    const auto& pos = occ.at(g.labels[v]);
    auto order = rotation_order(code.at(pos[0]).sign, conv);
    for (std::size_t k = 0; k < 4; ++k) where[v][detail::role_index(order[k])] = k;
  }
  auto slot_of = [&](const Position& pos, bool outgoing) {
    const auto v = vertex_of.at(code.at(pos).label);
    const bool prim = detail::is_primary(code, occ, pos);
    SlotRole role = prim ? (outgoing ? SlotRole::PrimaryOut : SlotRole::PrimaryIn)
                         : (outgoing ? SlotRole::SecondaryOut : SlotRole::SecondaryIn);
    return HalfEdge{v, where[v][detail::role_index(role)]};
  };
  for (std::size_t c = 0; c < code.components.size(); ++c) {
    const auto& comp = code.components[c];
    const std::size_t n = comp.size();
    for (std::size_t i = 0; i < n; ++i) {
      Position here{c, i}, next{c, (i + 1) % n};
      HalfEdge a = slot_of(here, true), b = slot_of(next, false);
      g.slots[a.vertex][a.slot] = SlotRecord{here, true};
      g.slots[b.vertex][b.slot] = SlotRecord{next, false};
      const bool twist = with_twists && comp[i].strand == comp[(i + 1) % n].strand;
      g.edge_at[a.vertex][a.slot] = g.edges.size();
      g.edge_at[b.vertex][b.slot] = g.edges.size();
      g.edges.push_back(RibbonEdge{a, b, twist});
    }
  }
  return g;
}

/// A boundary component of the ribbon surface, as the sequence of bands it
/// runs along.
struct BoundaryWalk {
  std::vector<std::size_t> edges;
};

/// Traces the boundary of the ribbon surface. A walk leaves a disk along a
/// band, flips its local orientation across a twisted band, and turns to the
/// rotation successor (or predecessor when flipped) at the next disk. Every
/// boundary curve is found once per direction; one direction is returned.
inline std::vector<BoundaryWalk> trace_boundaries(const RibbonGraph& g) {
  const std::size_t V = g.vertex_count();
  auto state_id = [](const HalfEdge& h, int eps) { return (h.vertex * 4 + h.slot) * 2 + static_cast<std::size_t>(eps); };
  std::vector<long> orbit(V * 8, -1);
  std::vector<BoundaryWalk> orbits;
  for (std::size_t v = 0; v < V; ++v)
    for (std::size_t s = 0; s < 4; ++s)
      for (int eps = 0; eps < 2; ++eps) {
        HalfEdge h{v, s};
        if (orbit[state_id(h, eps)] >= 0) continue;
        const long id = static_cast<long>(orbits.size());
        BoundaryWalk walk;
        HalfEdge cur = h;
        int e = eps;
        while (orbit[state_id(cur, e)] < 0) {
          orbit[state_id(cur, e)] = id;
          walk.edges.push_back(g.edge_at[cur.vertex][cur.slot]);
          const HalfEdge arrive = g.opposite(cur);
          e ^= g.twisted_at(cur) ? 1 : 0;
          cur = HalfEdge{arrive.vertex, e == 0 ? (arrive.slot + 1) % 4 : (arrive.slot + 3) % 4};
        }
        orbits.push_back(std::move(walk));
      }
  // Pair each orbit with its reverse: leaving along h with orientation e is
  // undone by leaving the far end with the opposite orientation.
  std::vector<bool> keep(orbits.size(), false), seen(orbits.size(), false);
  for (std::size_t v = 0; v < V; ++v)
    for (std::size_t s = 0; s < 4; ++s)
      for (int eps = 0; eps < 2; ++eps) {
        HalfEdge h{v, s};
        const auto id = static_cast<std::size_t>(orbit[state_id(h, eps)]);
        if (seen[id]) continue;
        const int arrive_eps = eps ^ (g.twisted_at(h) ? 1 : 0);
        const auto rev = static_cast<std::size_t>(orbit[state_id(g.opposite(h), 1 - arrive_eps)]);
        seen[id] = seen[rev] = true;
        keep[id] = true;
      }
  std::vector<BoundaryWalk> out;
  for (std::size_t i = 0; i < orbits.size(); ++i)
    if (keep[i]) out.push_back(std::move(orbits[i]));
  return out;
}

/// Orientable iff vertex flips can untwist every band, i.e. every cycle
/// carries an even number of half-twists.
inline bool ribbon_orientable(const RibbonGraph& g) {
  const std::size_t V = g.vertex_count();
  std::vector<std::vector<std::pair<std::size_t, bool>>> adj(V);
  for (const auto& e : g.edges) {
    adj[e.from.vertex].emplace_back(e.to.vertex, e.twist);
    adj[e.to.vertex].emplace_back(e.from.vertex, e.twist);
  }
  std::vector<int> flip(V, -1);
  for (std::size_t root = 0; root < V; ++root) {
    if (flip[root] >= 0) continue;
    flip[root] = 0;
    std::queue<std::size_t> q;
    q.push(root);
    while (!q.empty()) {
      auto u = q.front();
      q.pop();
      for (auto [w, twist] : adj[u]) {
        const int want = flip[u] ^ (twist ? 1 : 0);
        if (flip[w] < 0) {
          flip[w] = want;
          q.push(w);
        } else if (flip[w] != want) {
          return false;
        }
      }
    }
  }
  return true;
}

}  // namespace turaev
