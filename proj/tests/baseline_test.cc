#include "tashkeel/baseline.h"

#include <gtest/gtest.h>

#include <sstream>

#include "tashkeel/arabic.h"
#include "tashkeel/errors.h"
#include "tashkeel/metrics.h"
#include "test_util.h"

namespace tashkeel {
namespace {

using testing::Rng;
using Corpus = std::vector<std::string>;

TEST(TrainTest, MajorityWins) {
  const LookupModel m = LookupModel::train(Corpus{"قَلْب قَلْب قَلَب"});
  ASSERT_EQ(m.vocabulary_size(), 1u);
  const auto* e = m.find("قلب");
  ASSERT_NE(e, nullptr);
  EXPECT_EQ(e->form, "قَلْب");
  EXPECT_EQ(e->count, 2u);
  EXPECT_EQ(m.training_word_count(), 3u);
}

TEST(TrainTest, TieGoesToSmallestCodepointSequence) {
  // fatha U+064E sorts before damma U+064F.
  const LookupModel m = LookupModel::train(Corpus{"قُلْب", "قَلْب"});
  EXPECT_EQ(m.find("قلب")->form, "قَلْب");
  const LookupModel r = LookupModel::train(Corpus{"قَلْب", "قُلْب"});
  EXPECT_EQ(r.find("قلب")->form, "قَلْب");
}

TEST(TrainTest, SingleWordAndPunctuation) {
  const LookupModel m = LookupModel::train(Corpus{"«كِتَابٌ»."});
  EXPECT_EQ(m.find("كتاب")->form, "كِتَابٌ");
  EXPECT_THROW(LookupModel::train(Corpus{}), EmptyCorpusError);
  EXPECT_THROW(LookupModel::train(Corpus{"abc 123 ..."}), EmptyCorpusError);
}

TEST(TrainTest, MarkOrderIsCanonicalized) {
  const std::string a = testing::cps({0x0644, cp::kFatha, cp::kShadda});
  const std::string b = testing::cps({0x0644, cp::kShadda, cp::kFatha});
  const LookupModel m = LookupModel::train(Corpus{a, b});
  EXPECT_EQ(m.find("ل")->form, b);
  EXPECT_EQ(m.find("ل")->count, 2u);
}

TEST(PredictTest, Examples) {
  const LookupModel m = LookupModel::train(Corpus{"قَلْب قَلْب قَلَب"});
  EXPECT_EQ(m.predict("قلب"), "قَلْب");
  EXPECT_EQ(m.predict("بيت"), "بيت");
  EXPECT_EQ(m.predict("قلب."), "قَلْب.");
  EXPECT_EQ(m.predict("  «قلب»، x  قلب\n"), "  «قَلْب»، x  قَلْب\n");
}

TEST(PersistenceTest, SaveLoadRoundTrip) {
  const LookupModel m = LookupModel::train(Corpus{"قَلْب كَبِيرٌ فِي الْبَيْتِ", "قَلْب"});
  std::ostringstream out;
  m.save(out);
  const std::string text = out.str();
  EXPECT_EQ(text.rfind("#tashkeel-lookup-model\tversion=1\ttraining_words=5\tvocabulary=4\n", 0), 0u);
  std::istringstream in(text);
  const LookupModel back = LookupModel::load(in);
  EXPECT_EQ(back.vocabulary_size(), 4u);
  EXPECT_EQ(back.training_word_count(), 5u);
  EXPECT_EQ(back.find("قلب")->count, 2u);
  std::ostringstream again;
  back.save(again);
  EXPECT_EQ(again.str(), text);
}

TEST(PersistenceTest, RejectsMalformedModels) {
  const std::string header = "#tashkeel-lookup-model\tversion=1\ttraining_words=1\tvocabulary=1\n";
  auto load = [](const std::string& s) {
    std::istringstream in(s);
    return LookupModel::load(in);
  };
  EXPECT_NO_THROW(load(header + "قلب\tقَلْب\t1\n"));
  EXPECT_THROW(load(""), FormatError);
  EXPECT_THROW(load("قلب\tقَلْب\t1\n"), FormatError);
  EXPECT_THROW(load("#tashkeel-lookup-model\tversion=2\ttraining_words=1\tvocabulary=1\n"), FormatError);
  EXPECT_THROW(load(header + "قلب\tكَلْب\t1\n"), FormatError);
  EXPECT_THROW(load(header + "قلب\tقَلْب\t0\n"), FormatError);
  EXPECT_THROW(load(header + "قلب\tقَلْب\tx\n"), FormatError);
  EXPECT_THROW(load(header + "قلب\tقَلْب\n"), FormatError);
  EXPECT_THROW(load(header + "قلب\tقَلْب\t1\nقلب\tقَلْب\t1\n"), FormatError);
  EXPECT_THROW(load(header), FormatError);  // vocabulary count mismatch
}

TEST(BaselinePropertyTest, NeverChangesBaseText) {
  Rng rng(71);
  Corpus corpus;
  for (int i = 0; i < 50; ++i) corpus.push_back(testing::random_document(rng, 30, 0.2));
  const LookupModel m = LookupModel::train(corpus);
  for (int i = 0; i < 300; ++i) {
    const std::string t = testing::random_noisy_line(rng);
    ASSERT_EQ(strip_diacritics(m.predict(strip_diacritics(t))), strip_diacritics(t));
    ASSERT_EQ(strip_diacritics(m.predict(t)), strip_diacritics(t));
  }
}

TEST(BaselinePropertyTest, PerfectOnUniquelyDiacritizedCorpus) {
  Rng rng(72);
  // One form per stripped word: build a vocabulary keyed by its stripped
  // form.
  std::map<std::string, std::string> vocab;
  while (vocab.size() < 300) {
    const std::string w = testing::random_canonical_word(rng, 2, 6);
    vocab.emplace(strip_diacritics(w), w);
  }
  std::vector<std::string> forms;
  for (const auto& [k, v] : vocab) forms.push_back(v);
  Corpus corpus;
  for (int s = 0; s < 40; ++s) {
    std::string sample;
    for (int w = 0; w < 25; ++w) sample += (w ? " " : "") + forms[testing::uniform(rng, 0, forms.size() - 1)];
    corpus.push_back(sample);
  }
  const LookupModel m = LookupModel::train(corpus);
  std::vector<EvalPair> pairs;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    pairs.push_back({std::to_string(i), corpus[i], m.predict(strip_diacritics(corpus[i]))});
  }
  const MetricsReport r = evaluate_corpus(pairs);
  for (const PairCounts& c : r.variants) {
    EXPECT_GT(c.counted_chars, 0u);
    EXPECT_EQ(c.wrong_chars, 0u);
    EXPECT_EQ(c.wrong_words, 0u);
  }
}

}  // namespace
}  // namespace tashkeel
