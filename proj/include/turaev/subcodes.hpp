#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <set>
#include <tuple>
#include <vector>

#include "turaev/gauss_code.hpp"

namespace turaev {

/// A pair-closed piece of a code: `length` consecutive entries of
/// `component` starting at `start` (cyclically), plus whole components.
/// When the piece consists of whole components only, `component` is the
/// smallest of them, `start` is 0 and `length` its full size.
struct SubcodeInterval {
  std::size_t component = 0;
  std::size_t start = 0;
  std::size_t length = 0;
  std::vector<std::size_t> absorbed_components;  // sorted

  friend bool operator==(const SubcodeInterval&, const SubcodeInterval&) = default;
  friend auto operator<=>(const SubcodeInterval&, const SubcodeInterval&) = default;

  std::size_t entry_count(const GaussCode& code) const {
    std::size_t n = length;
    for (auto c : absorbed_components) n += code.components[c].size();
    return n;
  }
};

namespace detail {

/// Connected classes of the components other than `skip` (crossingless ones
/// left out); returns the class index of every component.
inline std::vector<std::size_t> label_classes_without(const GaussCode& code, std::size_t skip,
                                                      std::vector<std::vector<std::size_t>>& classes) {
  classes.clear();
  const std::size_t n = code.components.size();
  std::vector<std::size_t> cls(n, n);
  const auto occ = occurrences(code);
  std::vector<std::vector<std::size_t>> adj(n);
  for (const auto& [label, pos] : occ) {
    adj[pos[0].component].push_back(pos[1].component);
    adj[pos[1].component].push_back(pos[0].component);
  }
  for (std::size_t r = 0; r < n; ++r) {
    if (r == skip || cls[r] != n || code.components[r].empty()) continue;
    classes.emplace_back();
    std::vector<std::size_t> stack{r};
    cls[r] = classes.size() - 1;
    while (!stack.empty()) {
      auto u = stack.back();
      stack.pop_back();
      classes.back().push_back(u);
      for (auto w : adj[u])
        if (w != skip && cls[w] == n) {
          cls[w] = cls[r];
          stack.push_back(w);
        }
    }
    std::sort(classes.back().begin(), classes.back().end());
  }
  return cls;
}

inline std::vector<std::size_t> sorted_union(std::vector<std::size_t> a, const std::vector<std::size_t>& b) {
  a.insert(a.end(), b.begin(), b.end());
  std::sort(a.begin(), a.end());
  a.erase(std::unique(a.begin(), a.end()), a.end());
  return a;
}

/// Every union of a subset of `classes`, each added to `base`.
inline std::vector<std::vector<std::size_t>> class_unions(const std::vector<std::size_t>& base,
                                                          const std::vector<std::vector<std::size_t>>& classes) {
  std::vector<std::vector<std::size_t>> out{base};
  for (const auto& cls : classes) {
    const auto k = out.size();
    for (std::size_t i = 0; i < k; ++i) out.push_back(sorted_union(out[i], cls));
  }
  return out;
}

}  // namespace detail

/// All proper, nonempty pair-closed pieces of the code. Crossingless
/// components carry no entries and are never absorbed.
inline std::vector<SubcodeInterval> subcodes(const GaussCode& code) {
  std::set<SubcodeInterval> found;
  const std::size_t total = code.entry_count();
  const std::size_t ncomp = code.components.size();
  const auto occ = occurrences(code);

  for (std::size_t c = 0; c < ncomp; ++c) {
    const auto& comp = code.components[c];
    const std::size_t n = comp.size();
    if (n < 2) continue;
    std::vector<std::vector<std::size_t>> others;
    const auto cls_of = detail::label_classes_without(code, c, others);
    for (std::size_t s = 0; s < n; ++s) {
      // count of each label inside the run, grown one entry at a time
      std::map<int, int> inside;
      for (std::size_t len = 1; len < n; ++len) {
        ++inside[comp[(s + len - 1) % n].label];
        // labels seen once must have their partner in another component
        bool closed = true;
        std::set<std::size_t> need_classes;
        for (const auto& [label, k] : inside) {
          if (k != 1) continue;
          const auto& pos = occ.at(label);
          if (pos[0].component == c && pos[1].component == c) {
            closed = false;
            break;
          }
          need_classes.insert(cls_of[pos[0].component == c ? pos[1].component : pos[0].component]);
        }
        if (!closed) continue;
        // a class may join only if it does not touch the rest of component c
        auto allowed = [&](std::size_t k) {
          for (auto d : others[k])
            for (const auto& p : code.components[d])
              for (const auto& q : occ.at(p.label))
                if (q.component == c && inside.count(p.label) == 0) return false;
          return true;
        };
        bool ok = true;
        std::vector<std::size_t> base;
        for (auto k : need_classes) {
          if (!allowed(k)) {
            ok = false;
            break;
          }
          base = detail::sorted_union(base, others[k]);
        }
        if (!ok) continue;
        std::vector<std::vector<std::size_t>> free_classes;
        for (std::size_t k = 0; k < others.size(); ++k)
          if (!need_classes.count(k) && allowed(k)) free_classes.push_back(others[k]);
        for (auto& absorbed : detail::class_unions(base, free_classes)) {
          SubcodeInterval iv{c, s, len, absorbed};
          if (iv.entry_count(code) < total) found.insert(std::move(iv));
        }
      }
    }
  }

  // Pieces made of whole components only: proper unions of connected classes.
  std::vector<std::vector<std::size_t>> classes;
  for (auto& cls : connectivity(code)) {
    std::vector<std::size_t> nonempty;
    for (auto c : cls)
      if (!code.components[c].empty()) nonempty.push_back(c);
    if (!nonempty.empty()) classes.push_back(std::move(nonempty));
  }
  for (auto& set : detail::class_unions({}, classes)) {
    if (set.empty()) continue;
    SubcodeInterval iv{set.front(), 0, code.components[set.front()].size(),
                       std::vector<std::size_t>(set.begin() + 1, set.end())};
    if (iv.entry_count(code) < total) found.insert(std::move(iv));
  }
  return {found.begin(), found.end()};
}

/// The piece made of every entry not in `iv`.
inline SubcodeInterval complement(const GaussCode& code, const SubcodeInterval& iv) {
  const auto& comp = code.components[iv.component];
  std::vector<std::size_t> rest;
  const bool whole = iv.start == 0 && iv.length == comp.size();
  for (std::size_t d = 0; d < code.components.size(); ++d) {
    if (code.components[d].empty() || d == iv.component) continue;
    if (!std::binary_search(iv.absorbed_components.begin(), iv.absorbed_components.end(), d)) rest.push_back(d);
  }
  if (whole) {
    if (rest.empty()) return SubcodeInterval{iv.component, 0, 0, {}};
    return SubcodeInterval{rest.front(), 0, code.components[rest.front()].size(),
                           std::vector<std::size_t>(rest.begin() + 1, rest.end())};
  }
  const std::size_t n = comp.size();
  return SubcodeInterval{iv.component, (iv.start + iv.length) % n, n - iv.length, std::move(rest)};
}

/// Labels of the entries covered by `iv`, in traversal order.
inline std::vector<int> subcode_labels(const GaussCode& code, const SubcodeInterval& iv) {
  std::vector<int> out;
  const auto& comp = code.components[iv.component];
  for (std::size_t k = 0; k < iv.length; ++k) out.push_back(comp[(iv.start + k) % comp.size()].label);
  for (auto d : iv.absorbed_components)
    for (const auto& p : code.components[d]) out.push_back(p.label);
  return out;
}

}  // namespace turaev
