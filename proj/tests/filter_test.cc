#include "tashkeel/filter.h"

#include <gtest/gtest.h>

#include "test_util.h"

namespace tashkeel {
namespace {

using testing::Rng;

constexpr const char* kFull = "قَلْبٌ";
constexpr const char* kBare = "قلب";
constexpr const char* kPartial = "قَلب";

std::string sample(std::size_t full, std::size_t bare, std::size_t partial, std::string_view extra = "") {
  std::string out;
  auto add = [&](const char* w, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) out += std::string(out.empty() ? "" : " ") + w;
  };
  add(kFull, full);
  add(kBare, bare);
  add(kPartial, partial);
  if (!extra.empty()) out += " " + std::string(extra);
  return out;
}

Chunk chunk_of(std::string text, std::string id = "c") {
  Chunk c;
  c.word_count = word_count(text);
  c.text = std::move(text);
  c.source_id = std::move(id);
  c.span_end = c.word_count;
  return c;
}

TEST(JudgeTest, Examples) {
  EXPECT_EQ(judge(sample(10, 3, 0)).reason, FilterReason::kTooManyUndiacritized);
  EXPECT_EQ(judge(sample(10, 2, 2)).reason, FilterReason::kOk);
  EXPECT_EQ(judge(sample(10, 0, 3)).reason, FilterReason::kTooManyPartial);
}

TEST(JudgeTest, ThresholdBoundaries) {
  struct Case {
    std::size_t bare, partial;
    FilterReason want;
  };
  const Case cases[] = {
      {0, 0, FilterReason::kOk},
      {2, 0, FilterReason::kOk},
      {0, 2, FilterReason::kOk},
      {2, 2, FilterReason::kOk},
      {3, 0, FilterReason::kTooManyUndiacritized},
      {3, 5, FilterReason::kTooManyUndiacritized},
      {0, 3, FilterReason::kTooManyPartial},
      {2, 3, FilterReason::kTooManyPartial},
      {1, 7, FilterReason::kTooManyPartial},
  };
  for (const Case& c : cases) {
    const FilterVerdict v = judge(sample(20, c.bare, c.partial));
    EXPECT_EQ(v.reason, c.want) << c.bare << " bare, " << c.partial << " partial";
    EXPECT_EQ(v.kept, c.want == FilterReason::kOk);
    EXPECT_EQ(v.undiacritized_count, c.bare);
    EXPECT_EQ(v.partial_count, c.partial);
  }
}

TEST(JudgeTest, NonArabicTokensAreIgnored) {
  const FilterVerdict v = judge(sample(5, 2, 2, "abc 123 ... ٣٤ (x)"));
  EXPECT_TRUE(v.kept);
  EXPECT_EQ(v.undiacritized_count, 2u);
}

TEST(JudgeTest, CustomThresholdsAndChunkOverload) {
  FilterThresholds strict;
  strict.max_undiacritized = 0;
  EXPECT_EQ(judge(chunk_of(sample(3, 1, 0)), strict).reason, FilterReason::kTooManyUndiacritized);
  strict.max_undiacritized = 5;
  strict.partial_reject_at = 1;
  EXPECT_EQ(judge(sample(3, 1, 1), strict).reason, FilterReason::kTooManyPartial);
}

TEST(JudgeTest, MarkOrderDoesNotMatter) {
  const std::string a = testing::cps({0x0642, cp::kShadda, cp::kFatha, 0x0644, 0x0628});
  const std::string b = testing::cps({0x0642, cp::kFatha, cp::kShadda, 0x0644, 0x0628});
  const std::string ta = a + " " + a + " " + a;
  const std::string tb = b + " " + b + " " + b;
  EXPECT_EQ(judge(ta).partial_count, judge(tb).partial_count);
  EXPECT_EQ(judge(ta).reason, judge(tb).reason);
}

TEST(SegmentIndexTest, Examples) {
  const std::vector<std::string> two_short = {"قلب كبير. بيت صغير"};
  EXPECT_EQ(build_segment_index(two_short).size(), 0u);

  const std::vector<std::string> ten = {"و1 و2 و3 و4 و5 و6 و7 و8 و9 و10"};
  const SegmentIndex index10 = build_segment_index(ten);
  EXPECT_EQ(index10.size(), 1u);
  EXPECT_EQ(index10.word_count("و1 و2 و3 و4 و5 و6 و7 و8 و9 و10"), 10u);

  const std::vector<std::string> mixed = {"ا ب ت، ث ج ح خ"};
  const SegmentIndex index = build_segment_index(mixed);
  EXPECT_EQ(index.size(), 2u);
  EXPECT_EQ(index.word_count("ا ب ت"), 3u);
  EXPECT_EQ(index.word_count("ث ج ح خ"), 4u);
  // Brute-force split agrees.
  EXPECT_EQ(oracle::segments(mixed[0]).size(), 2u);
}

TEST(SegmentIndexTest, StripsAndNormalizes) {
  const std::vector<std::string> test = {"قَلْبٌ   كَبِيرٌ\tجِدًّا!"};
  const SegmentIndex index = build_segment_index(test);
  EXPECT_TRUE(index.contains("قلب كبير جدا"));
  SegmentIndex other(3);
  EXPECT_FALSE(other.insert("a b"));
  EXPECT_TRUE(other.insert("a b c"));
  other.merge(index);
  EXPECT_EQ(other.size(), 2u);
}

TEST(DedupTest, Examples) {
  const std::vector<std::string> test = {"كان الولد يلعب في الحديقة. ثم عاد"};
  const SegmentIndex index = build_segment_index(test);
  const std::vector<Chunk> train = {
      chunk_of("قَالَ، كَانَ الْوَلَدُ يَلْعَبُ فِي الْحَدِيقَةِ. وَمَضَى", "verbatim"),
      chunk_of("ثُمَّ عَادَ الرَّجُلُ إِلَى بَيْتِهِ", "two_word_phrase"),
      chunk_of("السَّمَاءُ صَافِيَةٌ الْيَوْمَ", "disjoint"),
  };
  const DedupResult result = dedup(train, index);
  ASSERT_EQ(result.dropped.size(), 1u);
  EXPECT_EQ(result.dropped[0].chunk.source_id, "verbatim");
  EXPECT_EQ(result.dropped[0].matching_segment, "كان الولد يلعب في الحديقة");
  ASSERT_EQ(result.kept.size(), 2u);
  EXPECT_EQ(result.kept[0].source_id, "two_word_phrase");
  EXPECT_EQ(result.kept[1].source_id, "disjoint");
}

TEST(DedupTest, LeakageIsWholeSegmentIdentity) {
  // Leakage is exact segment identity, not shared n-grams.
  const std::vector<std::string> test = {"ا ب ت ث"};
  const std::vector<Chunk> train = {chunk_of("ا ب ت ث ج"), chunk_of("ج، ا ب ت ث، ح")};
  const DedupResult result = dedup(train, build_segment_index(test));
  ASSERT_EQ(result.kept.size(), 1u);
  EXPECT_EQ(result.kept[0].text, "ا ب ت ث ج");
}

TEST(FilterPropertyTest, DedupIsAFixpoint) {
  Rng rng(31);
  std::vector<std::string> test;
  std::vector<Chunk> train;
  for (int i = 0; i < 60; ++i) test.push_back(strip_diacritics(testing::random_document(rng, 12, 0.3)));
  for (int i = 0; i < 200; ++i) {
    std::string text = testing::random_document(rng, 20, 0.3);
    // Plant a test segment in some samples.
    if (i % 4 == 0) text += " ، " + test[testing::uniform(rng, 0, test.size() - 1)];
    train.push_back(chunk_of(text, std::to_string(i)));
  }
  const SegmentIndex index = build_segment_index(test);
  const DedupResult first = dedup(train, index);
  EXPECT_GT(first.dropped.size(), 0u);
  const DedupResult second = dedup(first.kept, index);
  EXPECT_TRUE(second.dropped.empty());
  EXPECT_EQ(second.kept.size(), first.kept.size());
  // Survivors share no indexed segment with the test set.
  for (const Chunk& c : first.kept) {
    for (const auto& seg : split_segments(c.text, SeparatorTiers::defaults())) {
      ASSERT_FALSE(index.contains(seg));
    }
  }
}

}  // namespace
}  // namespace tashkeel
