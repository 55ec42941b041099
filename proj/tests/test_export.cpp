#include <gtest/gtest.h>

#include <random>

#include "support/plane_curves.hpp"
#include "support/random_codes.hpp"
#include "turaev/report.hpp"

using namespace turaev;
using namespace turaev::testing;

namespace {

const char* kTrefoil = "O1+ U2+ O3+ U1+ O2+ U3+";
const char* kFigureEight = "O1+ U2- O3- U1+ O4+ U3- O2- U4+";
const char* kVirtualTrefoil = "O1+ O2+ U1+ U2+";

/// DT numbers read straight off the label sequence: number the passages
/// 1..2c, pair the two numbers of each crossing, and list the even partner
/// of 1, 3, 5, ..., negated when that even passage is over.
std::vector<int> dt_oracle(const GaussCode& code) {
  const auto& comp = code.components[0];
  std::map<int, std::vector<int>> numbers;
  for (std::size_t i = 0; i < comp.size(); ++i) numbers[comp[i].label].push_back(static_cast<int>(i) + 1);
  std::map<int, int> even_of_odd;
  for (const auto& [label, nums] : numbers) {
    const int odd = nums[0] % 2 ? nums[0] : nums[1];
    const int even = nums[0] % 2 ? nums[1] : nums[0];
    even_of_odd[odd] = comp[static_cast<std::size_t>(even - 1)].strand == Strand::Over ? -even : even;
  }
  std::vector<int> out;
  for (const auto& [odd, even] : even_of_odd) out.push_back(even);
  return out;
}

std::vector<int> parse_ints(const std::string& s) {
  std::vector<int> out;
  std::istringstream in(s);
  for (int v; in >> v;) out.push_back(v);
  return out;
}

}  // namespace

TEST(DTCode, Examples) {
  EXPECT_EQ(dt_code(parse(kTrefoil)), "4 6 2");
  EXPECT_EQ(dt_code(parse(kFigureEight)), "4 6 8 2");
  EXPECT_EQ(dt_code(parse("0")), "");
}

TEST(DTCode, Rejections) {
  try {
    dt_code(parse(kVirtualTrefoil));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotRealizable);
  }
  try {
    dt_code(parse("O1+ U2+; U1+ O2+"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::UnsupportedFormat);
  }
}

TEST(DTCode, MatchesOracleOnPlaneKnots) {
  std::mt19937_64 rng(corpus_seed() ^ 61);
  CorpusFilter f;
  f.max_crossings = 12;
  auto corpus = plane_corpus(rng, 300, f, LetterMode::Random, 1, 8);
  for (const auto& code : corpus) EXPECT_EQ(parse_ints(dt_code(code)), dt_oracle(code)) << render(code);
}

TEST(PDCode, TrivialAndRejections) {
  EXPECT_EQ(pd_code(parse("0")), "PD[]");
  EXPECT_THROW(pd_code(parse(kVirtualTrefoil)), Error);
  EXPECT_THROW(pd_code(parse("O1+ U1+; 0")), Error);
}

TEST(PDCode, EveryArcAppearsTwice) {
  auto pd = pd_code(parse(kFigureEight));
  std::map<int, int> seen;
  for (char& ch : pd)
    if (!std::isdigit(static_cast<unsigned char>(ch))) ch = ' ';
  for (int v : parse_ints(pd)) ++seen[v];
  EXPECT_EQ(seen.size(), 8u);
  for (const auto& [arc, n] : seen) EXPECT_EQ(n, 2) << arc;
}

TEST(PDCode, RoundTripOnPlaneLinks) {
  std::mt19937_64 rng(corpus_seed() ^ 62);
  CorpusFilter f;
  f.connected = false;
  f.max_crossings = 12;
  auto corpus = plane_corpus(rng, 500, f, LetterMode::Random, 3, 7);
  ASSERT_GE(corpus.size(), 500u);
  for (const auto& code : corpus) {
    auto back = from_pd(pd_code(code));
    EXPECT_EQ(canonicalize(back), canonicalize(code)) << render(code) << "\n" << pd_code(code);
  }
}

TEST(PDCode, ImportErrors) {
  EXPECT_THROW(from_pd("PD[X[1,2,3]]"), ParseError);
  EXPECT_THROW(from_pd("PD[X[1,2,3,4]]"), ParseError);
  EXPECT_THROW(from_pd("hello"), ParseError);
  EXPECT_TRUE(from_pd("PD[]").is_trivial());
}

TEST(ExportBundle, Formats) {
  auto t = parse(kTrefoil);
  EXPECT_EQ(export_diagram(t, ExportFormat::GaussText).payload, kTrefoil);
  EXPECT_EQ(export_diagram(t, ExportFormat::DTCode).payload, "4 6 2");
  auto j = json::parse(export_diagram(t, ExportFormat::JsonReport).payload);
  EXPECT_EQ(j["surface"]["twice_genus"], 0);
  auto b = to_json(export_diagram(t, ExportFormat::PDCode));
  EXPECT_EQ(b["format"], "PDCode");
  EXPECT_EQ(from_pd(b["payload"].get<std::string>()).crossing_count(), 3u);
  EXPECT_EQ(parse_export_format("pd"), ExportFormat::PDCode);
  try {
    parse_export_format("svg");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::UnsupportedFormat);
  }
}

TEST(Report, Trefoil) {
  auto r = analyze(parse(kTrefoil));
  ASSERT_TRUE(r.surface);
  EXPECT_EQ(r.surface->twice_genus, 0);
  EXPECT_EQ(r.exceptional, ExceptionalCase::Sphere2Braid);
  EXPECT_EQ(r.verdict.verdict, Verdict::NotCertified);
  auto j = to_json(r, {true, true});
  EXPECT_EQ(j["schema_version"], kSchemaVersion);
  EXPECT_EQ(j["states"]["a_circles"].get<int>() + j["states"]["b_circles"].get<int>(), 5);
  EXPECT_EQ(j["carrier"]["realizable"], true);
  EXPECT_EQ(j["verdict"]["verdict"], "NotCertified");
  EXPECT_EQ(j["verdict"]["reasons"][0], "Sphere2Braid");
}

TEST(Report, SwitchedTrefoilAndVirtualFigureEight) {
  auto s = analyze(parse("U1- U2+ O3+ O1- O2+ U3+"));
  EXPECT_EQ(s.surface->twice_genus, 2);
  auto v = analyze(parse("O1+ U2- O3- U1+ U3- O2-"));
  EXPECT_EQ(v.surface->twice_genus, 1);
  EXPECT_FALSE(v.surface->orientable);
  EXPECT_EQ(to_json(v)["surface"]["genus"], "1/2");
}

TEST(Report, OptionalSectionsFollowPreconditions) {
  auto split = analyze(parse("O1+ U1+; O2+ U2+"));
  EXPECT_FALSE(split.connected);
  EXPECT_FALSE(split.surface);
  EXPECT_FALSE(split.primeness);
  EXPECT_TRUE(split.verdict.has(Reason::NotConnected));
  auto j = to_json(split);
  EXPECT_TRUE(j["surface"].is_null());
  EXPECT_FALSE(j.contains("states"));
  auto gen = analyze(parse("O1+ O1+"));
  EXPECT_TRUE(gen.generalized);
  EXPECT_FALSE(gen.states);
}

TEST(Report, FieldsAreConsistent) {
  std::mt19937_64 rng(corpus_seed() ^ 63);
  for (int i = 0; i < 300; ++i) {
    std::uniform_int_distribution<std::size_t> c(0, 7), k(1, 2);
    auto r = analyze(random_code(rng, c(rng), k(rng)));
    if (r.verdict.verdict == Verdict::Certified) {
      ASSERT_TRUE(r.primeness);
      EXPECT_EQ(r.primeness->status, PrimenessStatus::SubcodeFree);
      EXPECT_EQ(r.exceptional, ExceptionalCase::None);
      EXPECT_TRUE(r.connected && r.reduced);
    }
    if (r.surface && r.states) {
      EXPECT_EQ(r.surface->boundary_count, r.states->a_circles + r.states->b_circles);
    }
  }
}

TEST(MoveJson, RoundTrip) {
  MoveDescriptor a;
  a.kind = MoveKind::R2Add;
  a.arc = {0, 3};
  a.arc2 = {1, 2};
  a.sign = Sign::Minus;
  a.reversed = true;
  EXPECT_EQ(move_from_json(to_json(a)), a);
  MoveDescriptor c;
  c.kind = MoveKind::Compose;
  c.operand = parse(kTrefoil);
  EXPECT_EQ(move_from_json(to_json(c)), c);
  MoveDescriptor d;
  d.kind = MoveKind::DTwist;
  d.n = 4;
  d.first = Strand::Under;
  EXPECT_EQ(move_from_json(json::parse(to_json(d).dump())), d);
}

TEST(MoveJson, Malformed) {
  EXPECT_THROW(move_from_json(json{{"kind", "R9"}}), Error);
  EXPECT_THROW(move_from_json(json{{"arc", {0, 0}}}), Error);
  EXPECT_THROW(move_from_json(json{{"kind", "R1Add"}, {"arc", "x"}}), Error);
}

TEST(MoveJson, LogCarriesHashes) {
  MoveLog log;
  MoveDescriptor m;
  m.kind = MoveKind::R1Add;
  apply_logged(parse(kTrefoil), m, log);
  auto j = to_json(log);
  ASSERT_EQ(j.size(), 1u);
  EXPECT_EQ(j[0]["before"], hash_hex(code_hash(parse(kTrefoil))));
  EXPECT_EQ(j[0]["before"].get<std::string>().size(), 16u);
}
