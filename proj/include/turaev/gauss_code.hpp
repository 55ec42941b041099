#pragma once

#include <algorithm>
#include <array>
#include <cctype>
#include <cstddef>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "turaev/errors.hpp"

namespace turaev {

enum class Strand : std::uint8_t { Over = 0, Under = 1 };
enum class Sign : std::uint8_t { Plus = 0, Minus = 1 };

constexpr Strand flip(Strand s) noexcept { return s == Strand::Over ? Strand::Under : Strand::Over; }
constexpr Sign flip(Sign s) noexcept { return s == Sign::Plus ? Sign::Minus : Sign::Plus; }

/// One visit of a strand to a crossing.
struct Passage {
  int label = 1;
  Strand strand = Strand::Over;
  Sign sign = Sign::Plus;

  friend bool operator==(const Passage&, const Passage&) = default;
};

/// Total order used for canonical forms: Over < Under, Plus < Minus, then label.
inline bool entry_less(const Passage& a, const Passage& b) {
  return std::tie(a.strand, a.sign, a.label) < std::tie(b.strand, b.sign, b.label);
}

using Component = std::vector<Passage>;

/// Location of a passage inside a code.
struct Position {
  std::size_t component = 0;
  std::size_t index = 0;
  friend bool operator==(const Position&, const Position&) = default;
  friend auto operator<=>(const Position&, const Position&) = default;
};

/// Signed (possibly generalized) Gauss code of a link diagram. Each component
/// is cyclic; an empty component is a crossingless unknotted circle.
struct GaussCode {
  std::vector<Component> components;
  bool generalized = false;

  friend bool operator==(const GaussCode&, const GaussCode&) = default;

  std::size_t entry_count() const {
    std::size_t n = 0;
    for (const auto& c : components) n += c.size();
    return n;
  }
  std::size_t crossing_count() const { return entry_count() / 2; }

  int max_label() const {
    int m = 0;
    for (const auto& c : components)
      for (const auto& p : c) m = std::max(m, p.label);
    return m;
  }

  bool has_empty_component() const {
    return std::any_of(components.begin(), components.end(), [](const Component& c) { return c.empty(); });
  }

  /// Zero components, or a single crossingless circle.
  bool is_trivial() const {
    return components.empty() || (components.size() == 1 && components[0].empty());
  }

  const Passage& at(const Position& p) const { return components[p.component][p.index]; }
  Passage& at(const Position& p) { return components[p.component][p.index]; }
};

/// Both positions of every label, in traversal order.
using OccurrenceMap = std::map<int, std::array<Position, 2>>;

inline OccurrenceMap occurrences(const GaussCode& code) {
  OccurrenceMap occ;
  std::map<int, int> seen;
  for (std::size_t c = 0; c < code.components.size(); ++c)
    for (std::size_t i = 0; i < code.components[c].size(); ++i) {
      int l = code.components[c][i].label;
      int k = seen[l]++;
      if (k < 2) occ[l][k] = Position{c, i};
    }
  return occ;
}

namespace detail {

inline bool any_same_strand_pair(const GaussCode& code) {
  for (const auto& [label, pos] : occurrences(code))
    if (code.at(pos[0]).strand == code.at(pos[1]).strand) return true;
  return false;
}

}  // namespace detail

/// Checks the pairing, sign and strand rules. A code flagged non-generalized
/// must pair every Over with an Under.
inline ValidationReport validate(const GaussCode& code) {
  ValidationReport r;
  std::map<int, std::vector<Passage>> by_label;
  for (const auto& comp : code.components)
    for (const auto& p : comp) {
      if (p.label < 1) {
        r.violations.push_back({ErrorKind::PairingError, static_cast<std::size_t>(std::max(p.label, 0)),
                                "label " + std::to_string(p.label) + " is not positive"});
        continue;
      }
      by_label[p.label].push_back(p);
    }
  for (const auto& [label, ps] : by_label) {
    const auto where = static_cast<std::size_t>(label);
    if (ps.size() != 2) {
      r.violations.push_back({ErrorKind::PairingError, where,
                              "label " + std::to_string(label) + " occurs " + std::to_string(ps.size()) +
                                  " time(s), expected 2"});
      continue;
    }
    if (ps[0].sign != ps[1].sign)
      r.violations.push_back(
          {ErrorKind::SignMismatch, where, "label " + std::to_string(label) + " carries both signs"});
    if (!code.generalized && ps[0].strand == ps[1].strand)
      r.violations.push_back({ErrorKind::PairingError, where,
                              "label " + std::to_string(label) + " passes " +
                                  (ps[0].strand == Strand::Over ? "over" : "under") +
                                  " twice in a non-generalized code"});
  }
  return r;
}

/// Builds a code from components, setting the generalized flag from the data.
/// Throws ParseError listing every violation.
inline GaussCode make_code(std::vector<Component> components) {
  GaussCode code{std::move(components), false};
  code.generalized = true;
  auto report = validate(code);
  if (!report.valid()) throw ParseError(std::move(report));
  code.generalized = detail::any_same_strand_pair(code);
  return code;
}

namespace detail {

class Parser {
 public:
  explicit Parser(std::string_view text) : s_(text) {}

  GaussCode run() {
    skip();
    std::vector<Component> comps;
    if (at_end()) return GaussCode{};
    for (;;) {
      comps.push_back(component());
      skip();
      if (at_end()) break;
      if (s_[i_] != ';') fail("';' or end of input");
      ++i_;
      skip();
    }
    return make_code(std::move(comps));
  }

 private:
  bool at_end() const { return i_ >= s_.size(); }

  void skip() {
    while (!at_end()) {
      char ch = s_[i_];
      if (ch == ' ' || ch == '\t' || ch == '\n' || ch == '\r') {
        ++i_;
      } else if (ch == '#') {
        while (!at_end() && s_[i_] != '\n') ++i_;
      } else {
        break;
      }
    }
  }

  [[noreturn]] void fail(const std::string& expected) const {
    std::string got = at_end() ? std::string("end of input") : "'" + std::string(1, s_[i_]) + "'";
    ValidationReport r;
    r.violations.push_back(
        {ErrorKind::SyntaxError, i_, "at offset " + std::to_string(i_) + ": expected " + expected + ", got " + got});
    throw ParseError(std::move(r));
  }

  Component component() {
    if (!at_end() && s_[i_] == '0') {
      ++i_;
      return {};
    }
    Component c;
    for (;;) {
      skip();
      if (at_end() || s_[i_] == ';') break;
      c.push_back(entry());
    }
    if (c.empty()) fail("an entry or '0'");
    return c;
  }

  Passage entry() {
    Passage p;
    char ch = static_cast<char>(std::toupper(static_cast<unsigned char>(s_[i_])));
    if (ch == 'O')
      p.strand = Strand::Over;
    else if (ch == 'U')
      p.strand = Strand::Under;
    else
      fail("'O' or 'U'");
    ++i_;
    skip();
    if (at_end() || s_[i_] < '1' || s_[i_] > '9') fail("a label in [1-9][0-9]*");
    long v = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(s_[i_]))) {
      v = v * 10 + (s_[i_] - '0');
      if (v > 1'000'000'000) fail("a label below 10^9");
      ++i_;
    }
    p.label = static_cast<int>(v);
    skip();
    if (at_end() || (s_[i_] != '+' && s_[i_] != '-')) fail("'+' or '-'");
    p.sign = s_[i_] == '+' ? Sign::Plus : Sign::Minus;
    ++i_;
    return p;
  }

  std::string_view s_;
  std::size_t i_ = 0;
};

}  // namespace detail

/// Reads the text form (`O1+ U2- ...; ...`, `0` for a crossingless component,
/// `#` comments). Throws ParseError.
inline GaussCode parse(std::string_view text) { return detail::Parser(text).run(); }

inline std::string render(const Passage& p) {
  std::string s(1, p.strand == Strand::Over ? 'O' : 'U');
  s += std::to_string(p.label);
  s += p.sign == Sign::Plus ? '+' : '-';
  return s;
}

inline std::string render(const GaussCode& code) {
  std::string out;
  for (std::size_t c = 0; c < code.components.size(); ++c) {
    if (c) out += "; ";
    if (code.components[c].empty()) {
      out += '0';
      continue;
    }
    for (std::size_t i = 0; i < code.components[c].size(); ++i) {
      if (i) out += ' ';
      out += render(code.components[c][i]);
    }
  }
  return out;
}

/// FNV-1a over the rendered text; used to fingerprint codes in move logs.
inline std::uint64_t code_hash(const GaussCode& code) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char ch : render(code)) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  return h;
}

/// Partition of component indices into classes linked by shared crossings.
inline std::vector<std::vector<std::size_t>> connectivity(const GaussCode& code) {
  const std::size_t n = code.components.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& [label, pos] : occurrences(code)) {
    auto a = find(pos[0].component), b = find(pos[1].component);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::map<std::size_t, std::vector<std::size_t>> classes;
  for (std::size_t c = 0; c < n; ++c) classes[find(c)].push_back(c);
  std::vector<std::vector<std::size_t>> out;
  for (auto& [root, members] : classes) out.push_back(std::move(members));
  return out;
}

inline bool is_connected(const GaussCode& code) { return connectivity(code).size() <= 1; }

/// True iff no label has its two passages cyclically adjacent in one component.
inline bool is_reduced(const GaussCode& code) {
  for (const auto& comp : code.components) {
    const std::size_t n = comp.size();
    for (std::size_t i = 0; i < n; ++i)
      if (n > 1 && comp[i].label == comp[(i + 1) % n].label) return false;
  }
  return true;
}

/// Each component alternates O/U around its cycle (an odd-length cycle never does).
inline bool is_alternating(const GaussCode& code) {
  for (const auto& comp : code.components) {
    const std::size_t n = comp.size();
    for (std::size_t i = 0; i < n; ++i)
      if (comp[i].strand == comp[(i + 1) % n].strand) return false;
  }
  return true;
}

namespace detail {

using EntryKey = std::tuple<Strand, Sign, int>;
using CanonKey = std::vector<std::vector<EntryKey>>;

struct CanonSearch {
  const GaussCode& code;
  CanonKey best;
  bool have_best = false;
  std::set<std::tuple<CanonKey, std::vector<std::size_t>, std::map<int, int>>> visited;

  void descend(CanonKey& prefix, std::vector<bool>& used, std::map<int, int>& relabel, int next_label) {
    const std::size_t n = code.components.size();
    if (prefix.size() == n) {
      if (!have_best || prefix < best) {
        best = prefix;
        have_best = true;
      }
      return;
    }
    // All (component, rotation) choices giving the least next block.
    std::vector<std::vector<EntryKey>> blocks;
    std::vector<std::pair<std::size_t, std::size_t>> choices;
    std::optional<std::vector<EntryKey>> least;
    for (std::size_t c = 0; c < n; ++c) {
      if (used[c]) continue;
      const auto& comp = code.components[c];
      const std::size_t len = comp.size();
      for (std::size_t r = 0; r < std::max<std::size_t>(len, 1); ++r) {
        std::vector<EntryKey> block;
        std::map<int, int> local;
        int nl = next_label;
        for (std::size_t k = 0; k < len; ++k) {
          const auto& p = comp[(r + k) % len];
          int lab;
          if (auto it = relabel.find(p.label); it != relabel.end())
            lab = it->second;
          else if (auto jt = local.find(p.label); jt != local.end())
            lab = jt->second;
          else
            lab = local[p.label] = nl++;
          block.emplace_back(p.strand, p.sign, lab);
        }
        if (!least || block < *least) {
          least = block;
          choices.clear();
        }
        if (block == *least) choices.emplace_back(c, r);
      }
    }
    // Prune against the best complete key found so far.
    if (have_best) {
      CanonKey probe(prefix);
      probe.push_back(*least);
      CanonKey head(best.begin(), best.begin() + static_cast<std::ptrdiff_t>(probe.size()));
      if (head < probe) return;
    }
    for (auto [c, r] : choices) {
      const auto& comp = code.components[c];
      std::map<int, int> saved = relabel;
      int nl = next_label;
      for (std::size_t k = 0; k < comp.size(); ++k) {
        int l = comp[(r + k) % comp.size()].label;
        if (!relabel.count(l)) relabel[l] = nl++;
      }
      used[c] = true;
      // Branches with the same prefix, the same remaining components and the
      // same bindings for their labels complete identically.
      std::vector<std::size_t> rest;
      std::map<int, int> live;
      for (std::size_t d = 0; d < n; ++d)
        if (!used[d]) {
          rest.push_back(d);
          for (const auto& p : code.components[d])
            if (auto it = relabel.find(p.label); it != relabel.end()) live[p.label] = it->second;
        }
      prefix.push_back(*least);
      if (visited.insert(std::make_tuple(prefix, std::move(rest), std::move(live))).second)
        descend(prefix, used, relabel, nl);
      prefix.pop_back();
      used[c] = false;
      relabel = std::move(saved);
    }
  }
};

}  // namespace detail

/// Relabels crossings 1..c by first appearance and picks the rotation of every
/// component and the component order giving the least entry sequence.
inline GaussCode canonicalize(const GaussCode& code) {
  detail::CanonSearch search{code, {}, false, {}};
  detail::CanonKey prefix;
  std::vector<bool> used(code.components.size(), false);
  std::map<int, int> relabel;
  search.descend(prefix, used, relabel, 1);
  GaussCode out;
  out.generalized = code.generalized;
  for (const auto& block : search.best) {
    Component comp;
    for (const auto& [strand, sign, label] : block) comp.push_back(Passage{label, strand, sign});
    out.components.push_back(std::move(comp));
  }
  return out;
}

}  // namespace turaev
