#include <gtest/gtest.h>

#include <map>
#include <set>

#include "longhom/errors.hpp"
#include "longhom/symmap.hpp"
#include "oracles/finite_closure.hpp"
#include "oracles/omega_blocks.hpp"

using namespace longhom;

namespace {

Universe U(const char* s) { return Universe::parse(s); }
const DirectionSeq kUud = DirectionSeq::from_dirs("uud");

SymbolicMap map3(const char* letters) { return SymbolicMap::from_letters(kUud, letters); }
IntervalSet pts(const char* text) { return parse_interval_set(kUud.alpha(), text); }

std::string labels_of(std::uint32_t code, std::size_t n) {
  static const char kLetters[] = {'z', 'h', 'v'};
  std::string out(n, 'z');
  for (std::size_t i = 0; i < n; ++i, code /= 3) out[i] = kLetters[code % 3];
  return out;
}

}  // namespace

TEST(BrickLabel, NoLabelIsCofinalOnlyOnItsHSide) {
  for (BrickLabel l : {BrickLabel::Zero, BrickLabel::Horiz, BrickLabel::Vert})
    EXPECT_FALSE(sides(l).h_cofinal && !sides(l).d_cofinal) << to_string(l);
  EXPECT_EQ(parse_label("vert"), BrickLabel::Vert);
  EXPECT_EQ(parse_label("H"), BrickLabel::Horiz);
  EXPECT_THROW(parse_label("diag"), ParseError);
}

TEST(Verdicts, ThreeBrickClasses) {
  // The two nontrivial proper classes of the three-brick surface with one Down brick.
  EXPECT_EQ(verdicts(map3("zvv")).cofinal_set, pts("{2}"));
  EXPECT_EQ(verdicts(map3("vhv")).cofinal_set, pts("{1,2}"));
  EXPECT_EQ(verdicts(map3("zzz")).cofinal_set, pts("{}"));
  EXPECT_EQ(verdicts(map3("hhh")).cofinal_set, pts("{0,1,2}"));
}

TEST(Verdicts, AllZeroIsBounded) {
  const Universe u = U("w^2");
  const DirectionSeq s(u, parse_interval_set(u, "[3,w) u [w*5,tail]"));
  const SymbolicMap m = SymbolicMap::from_runs(s, {{Interval::tail(Ordinal{}), BrickLabel::Zero}});
  EXPECT_TRUE(verdicts(m).cofinal_set.empty());
  EXPECT_TRUE(is_consistent(m).consistent);
}

TEST(Consistency, Examples) {
  EXPECT_TRUE(is_consistent(map3("zvv")).consistent);
  EXPECT_TRUE(is_consistent(map3("vhv")).consistent);
  const Consistency bad = is_consistent(map3("hzz"));
  EXPECT_FALSE(bad.consistent);
  EXPECT_EQ(*bad.boundary, Ordinal::finite(1));
}

TEST(Consistency, LabelVectorsThatLookPlausibleButClash) {
  // zzv: C_1 leaves Delta_2 bounded from below while C_2 (Down, Vert) makes it cofinal.
  const Consistency a = is_consistent(map3("zzv"));
  EXPECT_FALSE(a.consistent);
  EXPECT_EQ(*a.boundary, Ordinal::finite(2));
  // vhh: C_2 (Down, Horiz) makes Delta_0 cofinal from its top, C_0 (Up, Vert) bounded at its bottom.
  const Consistency b = is_consistent(map3("vhh"));
  EXPECT_FALSE(b.consistent);
  EXPECT_EQ(*b.boundary, Ordinal{});
}

TEST(Consistency, TailRuleAtTheTopOfOmega) {
  const DirectionSeq s = DirectionSeq::constant(U("w"), Direction::Up);
  const SymbolicMap m = SymbolicMap::from_runs(
      s, {{Interval::half_open(Ordinal{}, Ordinal::finite(1)), BrickLabel::Vert},
          {Interval::tail(Ordinal::finite(1)), BrickLabel::Horiz}});
  const Consistency c = is_consistent(m);
  EXPECT_FALSE(c.consistent);
  EXPECT_EQ(*c.boundary, Ordinal{});
}

TEST(Consistency, LimitBoundaries) {
  const Universe u = U("w*2");
  const DirectionSeq s = DirectionSeq::constant(u, Direction::Up);
  // Cofinal final segment below w but C_w bounded at its bottom.
  const SymbolicMap m = SymbolicMap::from_runs(
      s, {{Interval::half_open(Ordinal{}, Ordinal::finite(4)), BrickLabel::Zero},
          {Interval::closed(Ordinal::finite(4), Ordinal::finite(4)), BrickLabel::Vert},
          {Interval::half_open(Ordinal::finite(5), Ordinal::omega()), BrickLabel::Horiz},
          {Interval::tail(Ordinal::omega()), BrickLabel::Zero}});
  const Consistency c = is_consistent(m);
  EXPECT_FALSE(c.consistent);
  EXPECT_EQ(*c.boundary, Ordinal::omega());
}

TEST(Consistency, OmegaOneTailRuleIsOneDirectional) {
  const DirectionSeq up = DirectionSeq::constant(U("w1"), Direction::Up);
  const SymbolicMap tail_only = SymbolicMap::from_runs(
      up, {{Interval::half_open(Ordinal{}, Ordinal::finite(2)), BrickLabel::Zero},
           {Interval::closed(Ordinal::finite(2), Ordinal::finite(2)), BrickLabel::Vert},
           {Interval::tail(Ordinal::finite(3)), BrickLabel::Horiz}});
  EXPECT_FALSE(is_consistent(tail_only).consistent);
  const DirectionSeq down = DirectionSeq::constant(U("w1"), Direction::Down);
  const SymbolicMap head_only = SymbolicMap::from_runs(
      down, {{Interval::closed(Ordinal{}, Ordinal{}), BrickLabel::Vert}, {Interval::tail(Ordinal::finite(1)), BrickLabel::Zero}});
  EXPECT_TRUE(is_consistent(head_only).consistent);
  EXPECT_EQ(verdicts(head_only).cofinal_set, parse_interval_set(U("w1"), "{0}"));
}

TEST(CanonicalMap, Examples) {
  EXPECT_EQ(canonical_map(kUud, pts("{2}")).letters(), "zvv");
  EXPECT_EQ(canonical_map(kUud, pts("{1,2}")).letters(), "vhv");
  EXPECT_EQ(canonical_map(kUud, pts("{0,1,2}")).letters(), "hhh");
  EXPECT_EQ(canonical_map(kUud, pts("{}")).letters(), "zzz");
  EXPECT_THROW(canonical_map(kUud, pts("{1}")), DomainError);
}

TEST(CanonicalMap, ConsistentMapsAreDeterminedByTheirVerdicts) {
  // Each label is fixed by the verdicts on its two sides, so no two distinct
  // consistent label vectors share a verdict set.
  for (std::size_t n = 2; n <= 6; ++n)
    for (std::uint32_t code = 0; code < (1U << n); ++code) {
      const DirectionSeq s = DirectionSeq::from_dirs(oracle::dirs_of(code, n));
      std::map<std::string, std::string> seen;
      std::uint32_t total = 1;
      for (std::size_t i = 0; i < n; ++i) total *= 3;
      for (std::uint32_t lc = 0; lc < total; ++lc) {
        const std::string labels = labels_of(lc, n);
        const SymbolicMap m = SymbolicMap::from_letters(s, labels);
        if (!is_consistent(m).consistent) continue;
        const IntervalSet v = verdicts(m).cofinal_set;
        const auto [it, fresh] = seen.emplace(to_string(v), labels);
        EXPECT_TRUE(fresh) << s.dirs() << ": " << it->second << " and " << labels;
        EXPECT_EQ(canonical_map(s, v).letters(), labels);
      }
    }
}

TEST(Homotopic, Examples) {
  EXPECT_TRUE(homotopic(map3("zvv"), map3("zvv")));
  EXPECT_FALSE(homotopic(map3("vhv"), map3("zvv")));
  EXPECT_THROW(homotopic(map3("hzz"), map3("zvv")), InconsistentMap);
  EXPECT_THROW(homotopic(map3("zzz"), SymbolicMap::from_letters(DirectionSeq::from_dirs("uuu"), "zzz")), DomainError);
}

TEST(Homotopic, InfiniteCanonicalRepresentatives) {
  const DirectionSeq s = DirectionSeq::constant(U("w"), Direction::Up);
  const SymbolicMap full = canonical_map(s, IntervalSet::full(s.alpha()));
  const SymbolicMap empty = canonical_map(s, IntervalSet(s.alpha()));
  EXPECT_FALSE(homotopic(full, empty));
  EXPECT_TRUE(homotopic(full, SymbolicMap::from_runs(s, {{Interval::tail(Ordinal{}), BrickLabel::Horiz}})));
}

TEST(CountClasses, Examples) {
  EXPECT_EQ(count_classes(kUud).count, 4u);
  EXPECT_EQ(count_classes(DirectionSeq::from_dirs("udududud")).count, 47u);
  const ClassCount w = count_classes(DirectionSeq::constant(U("w"), Direction::Up));
  EXPECT_EQ(w.count, 2u);
  EXPECT_EQ(w.completeness, Completeness::Complete);
  EXPECT_THROW(count_classes(DirectionSeq::constant(U("w"), Direction::Up), {0, 1}), BoundError);
}

TEST(SymbolicMap, Construction) {
  EXPECT_THROW(SymbolicMap::from_letters(kUud, "zv"), DomainError);
  EXPECT_THROW(SymbolicMap::from_letters(kUud, "zvq"), ParseError);
  const Universe u = U("w");
  const DirectionSeq s = DirectionSeq::constant(u, Direction::Up);
  EXPECT_THROW(SymbolicMap::from_runs(s, {{Interval::half_open(Ordinal{}, Ordinal::finite(3)), BrickLabel::Zero}}),
               DomainError);
  EXPECT_THROW(SymbolicMap::from_runs(s, {{Interval::tail(Ordinal{}), BrickLabel::Zero},
                                          {Interval::tail(Ordinal::finite(3)), BrickLabel::Vert}}),
               DomainError);
  const SymbolicMap m = SymbolicMap::from_runs(
      s, {{Interval::tail(Ordinal::finite(2)), BrickLabel::Horiz}, {Interval::closed(Ordinal{}, Ordinal::finite(1)), BrickLabel::Vert}});
  ASSERT_EQ(m.runs().size(), 2u);
  EXPECT_EQ(m.runs()[0].label, BrickLabel::Vert);
  EXPECT_EQ(m.label(Ordinal::finite(9)), BrickLabel::Horiz);
}

TEST(ModelEquivalence, RandomSequencesUpToTen) {
  oracle::Rng rng(71);
  for (std::size_t n = 7; n <= 10; ++n)
    for (int t = 0; t < 3; ++t) {
      const std::string dirs = oracle::dirs_of(static_cast<std::uint32_t>(rng.uniform(0, (1U << n) - 1)), n);
      const DirectionSeq s = DirectionSeq::from_dirs(dirs);
      std::uint32_t total = 1;
      for (std::size_t i = 0; i < n; ++i) total *= 3;
      std::set<oracle::Mask> got;
      for (std::uint32_t lc = 0; lc < total; ++lc) {
        const SymbolicMap m = SymbolicMap::from_letters(s, labels_of(lc, n));
        if (is_consistent(m).consistent) got.insert(to_mask(verdicts(m).cofinal_set));
      }
      const auto want = oracle::adapted_masks(dirs);
      EXPECT_EQ(got, std::set<oracle::Mask>(want.begin(), want.end())) << dirs;
    }
}

TEST(ModelEquivalence, InfiniteRoundTrip) {
  oracle::Rng rng(72);
  for (int t = 0; t < 60; ++t) {
    const std::uint64_t k = rng.uniform(1, 3);
    const Universe u = Universe::ordinal(oracle::wb(k, 0));
    const DirectionSeq s(u, IntervalSet(u, oracle::random_up_blocks(rng, k)));
    for (const auto& w : enumerate_adapted(s, {4, 2}).classes) {
      const SymbolicMap m = canonical_map(s, w);
      ASSERT_TRUE(is_consistent(m).consistent) << to_string(s.up_set()) << " / " << to_string(w);
      EXPECT_EQ(verdicts(m).cofinal_set, w);
    }
  }
  for (const auto dir : {Direction::Up, Direction::Down}) {
    const DirectionSeq s = DirectionSeq::constant(U("w1"), dir);
    for (const auto& w : enumerate_adapted(s, {3, 3}).classes) {
      const SymbolicMap m = canonical_map(s, w);
      EXPECT_TRUE(is_consistent(m).consistent);
      EXPECT_EQ(verdicts(m).cofinal_set, w);
    }
  }
}

TEST(ModelEquivalence, RandomInfiniteMapsHaveAdaptedVerdicts) {
  // Random labellings with breakpoints on a small grid; every consistent one
  // has an adapted verdict set, checked pointwise.
  oracle::Rng rng(73);
  int consistent = 0;
  for (int t = 0; t < 3000; ++t) {
    const std::uint64_t k = rng.uniform(1, 2);
    const Universe u = Universe::ordinal(oracle::wb(k, 0));
    const oracle::Raw up = oracle::random_up_blocks(rng, k);
    const DirectionSeq s(u, IntervalSet(u, up));
    std::set<Ordinal> cuts{Ordinal{}};
    for (std::uint64_t i = rng.uniform(0, 3); i > 0; --i) cuts.insert(oracle::wb(rng.uniform(0, k - 1), rng.uniform(0, 3)));
    std::vector<Ordinal> c(cuts.begin(), cuts.end());
    std::vector<LabelRun> runs;
    for (std::size_t i = 0; i < c.size(); ++i)
      runs.push_back({i + 1 < c.size() ? Interval::half_open(c[i], c[i + 1]) : Interval::tail(c[i]),
                      static_cast<BrickLabel>(rng.uniform(0, 2))});
    const SymbolicMap m = SymbolicMap::from_runs(s, runs);
    if (!is_consistent(m).consistent) continue;
    ++consistent;
    const IntervalSet v = verdicts(m).cofinal_set;
    EXPECT_TRUE(oracle::adapted_blocks(k, up, v.parts())) << to_string(s.up_set()) << " / " << to_string(v);
    EXPECT_EQ(canonical_map(s, v), m);
  }
  EXPECT_GT(consistent, 100);
}
