#include <gtest/gtest.h>

#include <random>

#include "support/plane_curves.hpp"
#include "support/random_codes.hpp"
#include "turaev/moves.hpp"
#include "turaev/subcodes.hpp"
#include "turaev/surface.hpp"

using namespace turaev;
using namespace turaev::testing;

namespace {

const char* kTrefoil = "O1+ U2+ O3+ U1+ O2+ U3+";
const char* kFigureEight = "O1+ U2- O3- U1+ O4+ U3- O2- U4+";
const char* kSwitchedTrefoil = "U1- U2+ O3+ O1- O2+ U3+";

ArcRef random_arc(std::mt19937_64& rng, const GaussCode& code) {
  std::uniform_int_distribution<std::size_t> c(0, code.components.size() - 1);
  const auto comp = c(rng);
  const auto n = code.components[comp].size();
  std::uniform_int_distribution<std::size_t> p(0, n == 0 ? 0 : n - 1);
  return ArcRef{comp, p(rng)};
}

MoveDescriptor r1_add(ArcRef arc, Sign s = Sign::Plus, Strand first = Strand::Over) {
  MoveDescriptor m;
  m.kind = MoveKind::R1Add;
  m.arc = arc;
  m.sign = s;
  m.first = first;
  return m;
}

MoveDescriptor with_labels(MoveKind k, std::vector<int> labels) {
  MoveDescriptor m;
  m.kind = k;
  m.labels = std::move(labels);
  return m;
}

}  // namespace

TEST(R1, AddOnUnknot) { EXPECT_EQ(render(apply_move(parse("0"), r1_add({0, 0}))), "O1+ U1+"); }

TEST(R1, AddThenRemoveIsIdentity) {
  std::mt19937_64 rng(corpus_seed() ^ 41);
  for (int i = 0; i < 500; ++i) {
    std::uniform_int_distribution<std::size_t> c(0, 7), k(1, 3);
    auto code = random_code(rng, c(rng), k(rng));
    auto arc = random_arc(rng, code);
    auto out = apply_move(code, r1_add(arc, i % 2 ? Sign::Plus : Sign::Minus, i % 3 ? Strand::Over : Strand::Under));
    EXPECT_EQ(out.crossing_count(), code.crossing_count() + 1);
    EXPECT_FALSE(is_reduced(out));
    auto back = apply_move(out, with_labels(MoveKind::R1Remove, {code.max_label() + 1}));
    EXPECT_EQ(back, code) << render(code);
  }
}

TEST(R1, RemoveNeedsAdjacentEntries) {
  try {
    apply_move(parse(kTrefoil), with_labels(MoveKind::R1Remove, {1}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::MovePreconditionFailed);
  }
  try {
    apply_move(parse(kTrefoil), with_labels(MoveKind::R1Remove, {9}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::StaleReference);
  }
}

TEST(R1, KinkSignDecidesWhichStateSplits) {
  std::mt19937_64 rng(corpus_seed() ^ 42);
  for (int i = 0; i < 300; ++i) {
    auto code = random_code(rng, 1 + static_cast<std::size_t>(i % 6), 1);
    const auto before = state_circles(code);
    for (Sign s : {Sign::Plus, Sign::Minus})
      for (Strand f : {Strand::Over, Strand::Under}) {
        const auto after = state_circles(apply_move(code, r1_add(random_arc(rng, code), s, f)));
        if (s == Sign::Plus) {
          EXPECT_EQ(after.a_circles, before.a_circles + 1);
          EXPECT_EQ(after.b_circles, before.b_circles);
        } else {
          EXPECT_EQ(after.a_circles, before.a_circles);
          EXPECT_EQ(after.b_circles, before.b_circles + 1);
        }
      }
  }
}

TEST(R2, AddPutsOverEntriesOnTheOverArc) {
  MoveDescriptor m;
  m.kind = MoveKind::R2Add;
  m.arc = {0, 0};
  m.arc2 = {0, 3};
  auto out = apply_move(parse(kTrefoil), m);
  EXPECT_EQ(out.crossing_count(), 5u);
  const auto occ = occurrences(out);
  for (int l : {4, 5}) {
    const auto& pos = occ.at(l);
    EXPECT_NE(out.at(pos[0]).strand, out.at(pos[1]).strand);
  }
  EXPECT_EQ(out.components[0][1].strand, Strand::Over);
  EXPECT_EQ(out.components[0][2].strand, Strand::Over);
  EXPECT_NE(out.components[0][1].sign, out.components[0][2].sign);
}

TEST(R2, AddThenRemoveIsIdentity) {
  std::mt19937_64 rng(corpus_seed() ^ 43);
  for (int i = 0; i < 500; ++i) {
    std::uniform_int_distribution<std::size_t> c(1, 7), k(1, 3);
    auto code = random_code(rng, c(rng), k(rng));
    auto x = random_arc(rng, code), y = random_arc(rng, code);
    if (x == y) continue;
    for (const auto& m : r2_add_options(x, y)) {
      auto out = apply_move(code, m);
      auto back = apply_move(out, with_labels(MoveKind::R2Remove, {code.max_label() + 1, code.max_label() + 2}));
      EXPECT_EQ(back, code) << render(code);
    }
  }
}

TEST(R2, RemoveChecksThePattern) {
  try {
    apply_move(parse(kTrefoil), with_labels(MoveKind::R2Remove, {1, 2}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::MovePreconditionFailed);
  }
}

TEST(R2, ChooseKeepsPlaneCodesPlanar) {
  std::mt19937_64 rng(corpus_seed() ^ 44);
  CorpusFilter f;
  auto corpus = plane_corpus(rng, 200, f, LetterMode::Random, 1, 6);
  std::size_t kept = 0;
  for (const auto& code : corpus) {
    auto x = random_arc(rng, code), y = random_arc(rng, code);
    if (x == y) continue;
    auto m = choose_r2_add(code, x, y);
    EXPECT_EQ(m, choose_r2_add(code, x, y));
    EXPECT_EQ(m.arc, x);
    if (is_realizable(apply_move(code, m))) ++kept;
  }
  // Arcs on a common face admit a planar clasp; others do not, so only some.
  EXPECT_GT(kept, 0u);
}

TEST(R3, IsAnInvolutionAndKeepsPlaneCodesPlanar) {
  std::mt19937_64 rng(corpus_seed() ^ 45);
  CorpusFilter f;
  f.max_crossings = 9;
  auto corpus = plane_corpus(rng, 400, f, LetterMode::Random, 2, 7);
  std::size_t moves = 0;
  for (const auto& code : corpus) {
    const int c = code.max_label();
    for (int a = 1; a <= c; ++a)
      for (int b = a + 1; b <= c; ++b)
        for (int d = b + 1; d <= c; ++d) {
          if (!turaev::detail::find_triangle(code, {a, b, d})) continue;
          auto out = apply_move(code, with_labels(MoveKind::R3, {a, b, d}));
          ++moves;
          EXPECT_TRUE(is_realizable(out)) << render(code) << " " << a << b << d;
          // When one component is exactly the six triangle passages, the
          // labels also bound a second triangle and the inverse is ambiguous.
          bool whole = false;
          for (const auto& comp : out.components)
            whole = whole || (comp.size() == 6 && std::all_of(comp.begin(), comp.end(), [&](const Passage& e) {
                               return e.label == a || e.label == b || e.label == d;
                             }));
          if (!whole) {
            EXPECT_EQ(apply_move(out, with_labels(MoveKind::R3, {a, b, d})), code);
          }
        }
  }
  EXPECT_GT(moves, 20u);
}

TEST(Virtualize, FlipsTheSigns) {
  auto out = virtualize(parse(kTrefoil), 1);
  EXPECT_EQ(render(out), "O1- U2+ O3+ U1- O2+ U3+");
  EXPECT_GT(carrier_genus(out).genus, carrier_genus(parse(kTrefoil)).genus);
  try {
    virtualize(parse(kTrefoil), 7);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::UnknownLabel);
  }
}

TEST(Compose, TrefoilWithTrefoil) {
  auto t = parse(kTrefoil);
  auto sum = compose(t, t, {0, 5}, {0, 5});
  EXPECT_EQ(sum.crossing_count(), 6u);
  EXPECT_EQ(render(sum), "O1+ U2+ O3+ U1+ O2+ U3+ O4+ U5+ O6+ U4+ O5+ U6+");
  bool found = false;
  for (const auto& iv : subcodes(sum)) {
    auto l = subcode_labels(sum, iv);
    found = found || l == std::vector<int>{4, 5, 6, 4, 5, 6};
  }
  EXPECT_TRUE(found);
}

TEST(Compose, GenusAddsUp) {
  auto s = parse(kSwitchedTrefoil);
  for (std::size_t a = 0; a < 6; ++a)
    for (std::size_t b = 0; b < 6; ++b) {
      auto sum = compose(s, s, {0, a}, {0, b});
      EXPECT_EQ(surface_report(sum).twice_genus, 4);
      EXPECT_TRUE(is_realizable(sum));
    }
}

TEST(Compose, KeepsPlaneCodesPlanar) {
  std::mt19937_64 rng(corpus_seed() ^ 46);
  CorpusFilter f;
  auto corpus = plane_corpus(rng, 100, f, LetterMode::Random, 2, 6);
  for (std::size_t i = 0; i + 1 < corpus.size(); i += 2) {
    auto sum = compose(corpus[i], corpus[i + 1], random_arc(rng, corpus[i]), random_arc(rng, corpus[i + 1]));
    EXPECT_TRUE(is_realizable(sum));
    EXPECT_EQ(sum.crossing_count(), corpus[i].crossing_count() + corpus[i + 1].crossing_count());
  }
}

TEST(DSequence, UnknotWithOneTwist) {
  auto out = d_sequence(parse("0"), {0, 0}, 1);
  EXPECT_EQ(out.crossing_count(), 3u);
  EXPECT_EQ(surface_report(out).twice_genus, 2);
  EXPECT_TRUE(is_realizable(out));
  EXPECT_TRUE(is_reduced(out));
}

TEST(DSequence, StateLawOnEveryArc) {
  for (const char* base_text : {"0", kTrefoil, kFigureEight}) {
    auto base = parse(base_text);
    const auto bs = state_circles(base);
    const int bg = surface_report(base).twice_genus;
    const std::size_t arcs = std::max<std::size_t>(1, base.components[0].size());
    for (std::size_t p = 0; p < arcs; ++p)
      for (int n = 1; n <= 6; ++n) {
        auto out = d_sequence(base, {0, p}, n);
        const auto s = state_circles(out);
        EXPECT_EQ(out.crossing_count(), base.crossing_count() + static_cast<std::size_t>(n) + 2);
        EXPECT_EQ(s.a_circles, bs.a_circles + static_cast<std::size_t>(n));
        EXPECT_EQ(s.b_circles, bs.b_circles);
        EXPECT_EQ(surface_report(out).twice_genus, bg + 2);
        EXPECT_TRUE(is_realizable(out));
      }
  }
}

TEST(DSequence, PlaneCodesStayPlanar) {
  std::mt19937_64 rng(corpus_seed() ^ 47);
  CorpusFilter f;
  f.reduced = true;
  auto corpus = plane_corpus(rng, 100, f, LetterMode::Random, 2, 6);
  for (const auto& code : corpus) {
    auto out = d_sequence(code, random_arc(rng, code), 3);
    EXPECT_TRUE(is_realizable(out)) << render(code);
    EXPECT_EQ(surface_report(out).twice_genus, surface_report(code).twice_genus + 2) << render(code);
  }
}

TEST(DSequence, RejectsBadInput) {
  EXPECT_THROW(d_sequence(parse(kTrefoil), {0, 0}, 0), Error);
  try {
    d_sequence(parse(kTrefoil), {0, 6}, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::StaleReference);
  }
}

TEST(MoveLog, ReplayReproducesTheResult) {
  std::mt19937_64 rng(corpus_seed() ^ 48);
  for (int i = 0; i < 200; ++i) {
    auto start = random_code(rng, 1 + static_cast<std::size_t>(i % 6), 1 + static_cast<std::size_t>(i % 2));
    GaussCode cur = start;
    MoveLog log;
    cur = apply_logged(cur, r1_add(random_arc(rng, cur)), log);
    auto x = random_arc(rng, cur), y = random_arc(rng, cur);
    if (x != y) {
      MoveDescriptor m;
      m.kind = MoveKind::R2Add;
      m.arc = x;
      m.arc2 = y;
      cur = apply_logged(cur, m, log);
    }
    MoveDescriptor tw;
    tw.kind = MoveKind::DTwist;
    tw.arc = random_arc(rng, cur);
    tw.n = 2;
    cur = apply_logged(cur, tw, log);
    auto again = replay(start, log);
    ASSERT_TRUE(again.has_value());
    EXPECT_EQ(*again, cur);
    EXPECT_EQ(log.records.front().hash_before, code_hash(start));
    EXPECT_EQ(log.records.back().hash_after, code_hash(cur));
  }
}

TEST(MoveLog, ReplayFromTheWrongStartFails) {
  MoveLog log;
  apply_logged(parse(kTrefoil), r1_add({0, 0}), log);
  EXPECT_FALSE(replay(parse(kFigureEight), log).has_value());
}

TEST(Moves, StaleArcIsReported) {
  try {
    apply_move(parse(kTrefoil), r1_add({1, 0}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::StaleReference);
  }
}
