#pragma once

#include <cstddef>

#include "turaev/gauss_code.hpp"
#include "turaev/ribbon.hpp"

namespace turaev {

struct CarrierGenus {
  int genus = 0;
  bool realizable = true;
  friend bool operator==(const CarrierGenus&, const CarrierGenus&) = default;
};

namespace detail {

inline int flat_genus(const GaussCode& code, RotationConvention conv) {
  const auto g = assemble_ribbon(code, false, conv);
  const auto V = static_cast<long>(g.vertex_count());
  const auto E = static_cast<long>(g.edges.size());
  const auto F = static_cast<long>(trace_boundaries(g).size());
  const long chi = V - E + F;
  return static_cast<int>((2 - chi) / 2);
}

/// Keeps only the listed components (labels untouched).
inline GaussCode restrict_to(const GaussCode& code, const std::vector<std::size_t>& comps) {
  GaussCode out;
  out.generalized = code.generalized;
  for (auto c : comps) out.components.push_back(code.components[c]);
  return out;
}

}  // namespace detail

/// Genus of the closed orientable surface carrying the diagram cellularly,
/// read off the twist-free rotation system; zero iff the code is classical.
inline CarrierGenus carrier_genus(const GaussCode& code, RotationConvention conv = RotationConvention::Standard) {
  if (code.is_trivial()) return {};
  if (code.generalized) throw Error(ErrorKind::GeneralizedCodeUnsupported, "carrier genus needs O/U pairs");
  if (code.has_empty_component()) throw Error(ErrorKind::EmptyComponent, "crossingless component in a link");
  if (!is_connected(code)) throw Error(ErrorKind::NotConnected, "carrier genus needs a connected diagram");
  const int g = detail::flat_genus(code, conv);
  return CarrierGenus{g, g == 0};
}

/// Classical realizability for any non-generalized code: every connected
/// class must be planar. Crossingless components are always fine.
inline bool is_realizable(const GaussCode& code) {
  if (code.generalized) return false;
  for (const auto& cls : connectivity(code)) {
    auto sub = detail::restrict_to(code, cls);
    if (sub.entry_count() == 0) continue;
    if (detail::flat_genus(sub, RotationConvention::Standard) != 0) return false;
  }
  return true;
}

}  // namespace turaev
