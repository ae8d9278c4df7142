#include <gtest/gtest.h>

#include <random>

#include "chg/error.hpp"
#include "chg/group.hpp"

using namespace chg;

namespace {

GSet ints(std::int64_t n, std::vector<std::int64_t> v) {
  std::vector<Elem> e;
  for (auto x : v) e.push_back(Elem{x});
  return GSet(GroupDescriptor::interval(n), e);
}

}  // namespace

TEST(Group, AddExamples) {
  EXPECT_EQ(add(GroupDescriptor::cyclic(7), Elem{5}, Elem{4}), Elem{2});
  EXPECT_EQ(add(GroupDescriptor::product(3, 3), Elem{1, 2, 0}, Elem{2, 2, 1}), (Elem{0, 1, 1}));
  EXPECT_EQ(add(GroupDescriptor::interval(10), Elem{7}, Elem{6}), Elem{13});
}

TEST(Group, AddDimensionMismatch) {
  EXPECT_THROW(add(GroupDescriptor::product(3, 3), Elem{1, 2}, Elem{2, 2, 1}), StructuralError);
}

TEST(Group, ParseRoundTrip) {
  for (const char* s : {"cyclic:7", "product:3^3", "interval:100"}) {
    EXPECT_EQ(GroupDescriptor::parse(s).to_string(), s);
  }
  EXPECT_THROW(GroupDescriptor::parse("torus:3"), Error);
}

TEST(Group, TranslateExamples) {
  auto c5 = GroupDescriptor::cyclic(5);
  EXPECT_EQ(translate(c5, GSet(c5, {Elem{0}, Elem{1}}), Elem{3}), GSet(c5, {Elem{3}, Elem{4}}));
  EXPECT_EQ(translate(c5, GSet(c5, {Elem{0}, Elem{1}}), Elem{0}), GSet(c5, {Elem{0}, Elem{1}}));
  auto p = GroupDescriptor::product(3, 2);
  EXPECT_EQ(translate(p, GSet(p, {Elem{0, 0}, Elem{1, 2}}), Elem{2, 1}),
            GSet(p, {Elem{2, 1}, Elem{0, 0}}));
}

TEST(Group, CanonicalizeExamples) {
  auto z = GroupDescriptor::interval(20);
  auto c = canonicalize(z, ints(20, {4, 7, 9}));
  EXPECT_EQ(c.pattern.keys(), (std::vector<Key>{0, 3, 5}));
  EXPECT_EQ(c.shift, Elem{4});

  auto c7 = GroupDescriptor::cyclic(7);
  EXPECT_EQ(canonicalize(c7, GSet(c7, {Elem{1}, Elem{3}})).pattern,
            canonicalize(c7, GSet(c7, {Elem{4}, Elem{6}})).pattern);

  auto c5 = GroupDescriptor::cyclic(5);
  EXPECT_EQ(canonicalize(c5, GSet(c5, {Elem{0}, Elem{1}, Elem{2}})).pattern.keys(),
            (std::vector<Key>{0, 1, 2}));
  EXPECT_THROW(canonicalize(c5, GSet(c5, {})), StructuralError);
}

TEST(Group, EnumerateExamples) {
  auto z = GroupDescriptor::interval(3);
  auto cls = enumerate_pattern_classes(z, ints(3, {0, 1, 2}), 2);
  ASSERT_EQ(cls.size(), 2u);
  EXPECT_EQ(cls[0].pattern.keys(), (std::vector<Key>{0, 1}));
  EXPECT_EQ(cls[0].bases, (std::vector<Elem>{Elem{0}, Elem{1}}));
  EXPECT_EQ(cls[1].pattern.keys(), (std::vector<Key>{0, 2}));
  EXPECT_EQ(cls[1].bases, (std::vector<Elem>{Elem{0}}));

  auto ap = enumerate_pattern_classes(GroupDescriptor::interval(5), ints(5, {0, 1, 2, 3, 4}), 2);
  EXPECT_EQ(ap[0].bases.size(), 4u);

  EXPECT_TRUE(enumerate_pattern_classes(z, ints(3, {0, 1}), 3).empty());
}

TEST(Group, FullCyclicGroupOrbits) {
  auto c5 = GroupDescriptor::cyclic(5);
  std::vector<Elem> all;
  for (int i = 0; i < 5; ++i) all.push_back(Elem{i});
  auto cls = enumerate_pattern_classes(c5, GSet(c5, all), 2);
  ASSERT_EQ(cls.size(), 2u);  // {0,1} and {0,2}
  for (const auto& c : cls) EXPECT_EQ(c.bases.size(), 5u);
}

TEST(Group, PeriodicSubsetRecordsEveryShift) {
  // {0,2,4} in Z_6 is fixed by shifting by 2 and 4.
  auto c6 = GroupDescriptor::cyclic(6);
  auto a = GSet(c6, {Elem{0}, Elem{2}, Elem{4}});
  auto cls = enumerate_pattern_classes(c6, a, 3);
  ASSERT_EQ(cls.size(), 1u);
  EXPECT_EQ(cls[0].bases.size(), 3u);
}

TEST(Group, TranslationInvarianceRandom) {
  std::mt19937_64 rng(7);
  std::vector<GroupDescriptor> groups{GroupDescriptor::cyclic(11), GroupDescriptor::product(3, 3),
                                      GroupDescriptor::product(5, 2), GroupDescriptor::interval(30)};
  for (const auto& g : groups) {
    const std::int64_t span = g.is_group() ? g.order() : 30;
    for (int it = 0; it < 200; ++it) {
      std::vector<Key> keys;
      const int size = 1 + static_cast<int>(rng() % 5);
      for (int i = 0; i < size; ++i) keys.push_back(static_cast<Key>(rng() % span));
      auto x = GSet::from_keys(g, keys);
      auto k = g.decode(static_cast<Key>(rng() % span));
      auto tx = translate(g, x, k);
      EXPECT_EQ(tx.size(), x.size());
      EXPECT_EQ(canonicalize(g, tx).pattern, canonicalize(g, x).pattern);
    }
  }
}

TEST(Group, AddCommutativeAssociativeRandom) {
  std::mt19937_64 rng(11);
  auto g = GroupDescriptor::product(7, 3);
  for (int it = 0; it < 500; ++it) {
    auto a = g.decode(static_cast<Key>(rng() % 343));
    auto b = g.decode(static_cast<Key>(rng() % 343));
    auto c = g.decode(static_cast<Key>(rng() % 343));
    EXPECT_EQ(add(g, a, b), add(g, b, a));
    EXPECT_EQ(add(g, add(g, a, b), c), add(g, a, add(g, b, c)));
  }
}

TEST(Group, BaseCountsSumToBinomial) {
  std::mt19937_64 rng(3);
  for (int it = 0; it < 60; ++it) {
    std::vector<Key> keys;
    for (int i = 0; i < 12; ++i) keys.push_back(static_cast<Key>(rng() % 40));
    auto a = GSet::from_keys(GroupDescriptor::interval(40), keys);
    for (int h = 1; h <= 4; ++h) {
      std::uint64_t total = 0;
      for (const auto& c : enumerate_pattern_classes(a.group(), a, h)) total += c.bases.size();
      EXPECT_EQ(total, binomial(a.size(), static_cast<std::uint64_t>(h)));
    }
  }
}

TEST(Group, ThreadedEnumerationMatchesSequential) {
  std::mt19937_64 rng(5);
  auto g = GroupDescriptor::product(5, 3);
  std::vector<Key> keys;
  for (int i = 0; i < 30; ++i) keys.push_back(static_cast<Key>(rng() % 125));
  auto a = GSet::from_keys(g, keys);
  auto one = enumerate_pattern_classes(g, a, 3, {100'000'000, 1});
  auto four = enumerate_pattern_classes(g, a, 3, {100'000'000, 4});
  ASSERT_EQ(one.size(), four.size());
  for (std::size_t i = 0; i < one.size(); ++i) {
    EXPECT_EQ(one[i].pattern, four[i].pattern);
    EXPECT_EQ(one[i].bases, four[i].bases);
  }
}

TEST(Group, SubsetCapRaises) {
  std::vector<Key> keys;
  for (int i = 0; i < 50; ++i) keys.push_back(i);
  auto a = GSet::from_keys(GroupDescriptor::interval(50), keys);
  EXPECT_THROW(enumerate_pattern_classes(a.group(), a, 3, {1000, 1}), ResourceError);
}

TEST(Group, SetValidation) {
  EXPECT_THROW(GSet::from_keys(GroupDescriptor::cyclic(5), {7}), StructuralError);
  auto s = GSet::from_keys(GroupDescriptor::cyclic(5), {3, 1, 3});
  EXPECT_EQ(s.keys(), (std::vector<Key>{1, 3}));
}

TEST(Group, Binomial) {
  EXPECT_EQ(binomial(13, 3), 286u);
  EXPECT_EQ(binomial(5, 7), 0u);
  EXPECT_EQ(binomial(200, 100), UINT64_MAX);
}
