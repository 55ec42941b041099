#pragma once

#include <cstddef>
#include <numeric>
#include <queue>
#include <string>
#include <vector>

#include "turaev/carrier.hpp"
#include "turaev/gauss_code.hpp"
#include "turaev/ribbon.hpp"

namespace turaev {

/// Closed surface obtained by capping the Turaev ribbon. `twice_genus` is 2g
/// when orientable and the crosscap count otherwise, so that genus is always
/// twice_genus / 2 and a projective plane has genus 1/2.
struct SurfaceReport {
  std::size_t boundary_count = 2;
  long euler_characteristic = 2;
  bool orientable = true;
  int twice_genus = 0;
  friend bool operator==(const SurfaceReport&, const SurfaceReport&) = default;
};

struct StateCount {
  std::size_t a_circles = 1;
  std::size_t b_circles = 1;
  friend bool operator==(const StateCount&, const StateCount&) = default;
};

/// Half-integer genus.
struct Genus {
  int twice = 0;
  friend bool operator==(const Genus&, const Genus&) = default;
  friend auto operator<=>(const Genus&, const Genus&) = default;
  double value() const { return twice / 2.0; }
  std::string str() const { return twice % 2 == 0 ? std::to_string(twice / 2) : std::to_string(twice) + "/2"; }
};

/// Which adjacent slot pairs the A smoothing joins. `Standard` joins each
/// over slot to its clockwise neighbour, i.e. the region swept by turning the
/// over strand counterclockwise is opened up.
enum class SmoothingConvention { Standard, Swapped };

namespace detail {

inline void require_surface_input(const GaussCode& code) {
  if (code.has_empty_component())
    throw Error(ErrorKind::EmptyComponent, "a crossingless component cannot carry a Turaev band");
  if (!is_connected(code)) throw Error(ErrorKind::NotConnected, "the Turaev surface needs a connected diagram");
}

}  // namespace detail

/// Rewrites strand letters so every component reads O, U, O, U, ... from its
/// first entry. Labels and signs are kept.
inline GaussCode turaev_code(const GaussCode& code) {
  if (code.is_trivial()) return code;
  if (code.has_empty_component()) throw Error(ErrorKind::EmptyComponent, "component without crossings");
  GaussCode out = code;
  for (auto& comp : out.components)
    for (std::size_t i = 0; i < comp.size(); ++i) comp[i].strand = i % 2 == 0 ? Strand::Over : Strand::Under;
  out.generalized = detail::any_same_strand_pair(out);
  return out;
}

/// Orientability decided from entry positions alone. A knot is nonorientable
/// iff some crossing's two entries enclose an odd number of entries. For
/// links a component of odd length is nonorientable too, and crossings shared
/// by two components require that the per-component choices of starting
/// letter can be made consistently.
inline bool parity_orientable(const GaussCode& code) {
  if (code.is_trivial()) return true;
  if (code.has_empty_component()) throw Error(ErrorKind::EmptyComponent, "component without crossings");
  for (const auto& comp : code.components)
    if (comp.size() % 2 == 1) return false;
  const std::size_t n = code.components.size();
  std::vector<std::vector<std::pair<std::size_t, int>>> adj(n);
  for (const auto& [label, pos] : occurrences(code)) {
    if (pos[0].component == pos[1].component) {
      const std::size_t between = pos[1].index - pos[0].index - 1;
      if (between % 2 == 1) return false;
    } else {
      // starting letters of the two components must differ by this parity
      const int need = static_cast<int>((pos[0].index + pos[1].index + 1) % 2);
      adj[pos[0].component].emplace_back(pos[1].component, need);
      adj[pos[1].component].emplace_back(pos[0].component, need);
    }
  }
  std::vector<int> start(n, -1);
  for (std::size_t root = 0; root < n; ++root) {
    if (start[root] >= 0) continue;
    start[root] = 0;
    std::queue<std::size_t> q;
    q.push(root);
    while (!q.empty()) {
      auto u = q.front();
      q.pop();
      for (auto [w, need] : adj[u]) {
        if (start[w] < 0) {
          start[w] = start[u] ^ need;
          q.push(w);
        } else if (start[w] != (start[u] ^ need)) {
          return false;
        }
      }
    }
  }
  return true;
}

/// Ribbon graph of the Turaev surface: crossing disks joined by bands,
/// half-twisted where both ends pass the same way.
inline RibbonGraph build_turaev_ribbon(const GaussCode& code) {
  detail::require_surface_input(code);
  return assemble_ribbon(code, true);
}

inline SurfaceReport surface_report(const GaussCode& code) {
  if (code.is_trivial()) return SurfaceReport{};
  const auto g = build_turaev_ribbon(code);
  SurfaceReport r;
  r.boundary_count = trace_boundaries(g).size();
  r.euler_characteristic =
      static_cast<long>(g.vertex_count()) - static_cast<long>(g.edges.size()) + static_cast<long>(r.boundary_count);
  r.orientable = ribbon_orientable(g);
  r.twice_genus = static_cast<int>(2 - r.euler_characteristic);
  return r;
}

/// Circles of the all-A and all-B smoothings.
inline StateCount state_circles(const GaussCode& code, SmoothingConvention conv = SmoothingConvention::Standard) {
  if (code.is_trivial()) return StateCount{};
  if (code.generalized) throw Error(ErrorKind::GeneralizedCodeUnsupported, "smoothing needs O/U pairs");
  detail::require_surface_input(code);
  const auto g = assemble_ribbon(code, false);
  const std::size_t V = g.vertex_count();
  auto count = [&](bool a_state) {
    std::vector<std::size_t> parent(4 * V);
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto find = [&](std::size_t x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    auto join = [&](std::size_t a, std::size_t b) { parent[find(a)] = find(b); };
    for (const auto& e : g.edges) join(e.from.vertex * 4 + e.from.slot, e.to.vertex * 4 + e.to.slot);
    // Over slots sit at positions 0 and 2 of every rotation.
    const bool clockwise = a_state == (conv == SmoothingConvention::Standard);
    for (std::size_t v = 0; v < V; ++v) {
      const std::size_t base = v * 4;
      if (clockwise) {
        join(base + 0, base + 3);
        join(base + 2, base + 1);
      } else {
        join(base + 0, base + 1);
        join(base + 2, base + 3);
      }
    }
    std::size_t circles = 0;
    for (std::size_t x = 0; x < 4 * V; ++x)
      if (find(x) == x) ++circles;
    return circles;
  };
  return StateCount{count(true), count(false)};
}

inline Genus turaev_genus(const GaussCode& code) { return Genus{surface_report(code).twice_genus}; }

}  // namespace turaev
