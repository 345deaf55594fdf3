// Runs the installed command-line tool end to end.

#include <gtest/gtest.h>
#include <sys/wait.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "tashkeel/json_io.h"
#include "test_util.h"

namespace tashkeel {
namespace {

namespace fs = std::filesystem;
using testing::Rng;

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::path(::testing::TempDir()) /
           ("tashkeel_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  void write(const std::string& name, const std::string& text) const {
    std::ofstream out(path(name), std::ios::binary);
    out << text;
  }

  std::string read(const std::string& name) const {
    std::ifstream in(path(name), std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
  }

  std::vector<Json> read_jsonl(const std::string& name) const {
    std::vector<Json> out;
    std::istringstream in(read(name));
    for (std::string line; std::getline(in, line);) out.push_back(Json::parse(line));
    return out;
  }

  // Exit status of `tashkeel <args>`; stderr goes to err.txt.
  int run(const std::string& args) const {
    const std::string cmd = std::string(TASHKEEL_CLI) + " " + args + " 2>" + path("err.txt");
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  }

  fs::path dir_;
};

TEST_F(CliTest, EvalOfIdenticalFilesIsAllZero) {
  write("ref.txt", "قَلْبٌ كَبِيرٌ.\nكَتَبَ الْوَلَدُ الدَّرْسَ\n");
  ASSERT_EQ(run("eval --reference " + path("ref.txt") + " --hypothesis " + path("ref.txt") + " --json " +
                path("r.json") + " -o " + path("table.txt")),
            0);
  const Json r = Json::parse(read("r.json"));
  EXPECT_EQ(r["pairs"], 2);
  for (const auto& [nd, by_ce] : r["metrics"].items()) {
    for (const auto& [ce, m] : by_ce.items()) {
      EXPECT_EQ(m["wrong_chars"], 0) << nd << ce;
      EXPECT_EQ(m["der"], 0.0);
      EXPECT_EQ(m["wer"], 0.0);
      EXPECT_GT(m["counted_chars"].get<int>(), 0);
    }
  }
  EXPECT_NE(read("table.txt").find("Including No Diacritic, w/case ending"), std::string::npos);
}

TEST_F(CliTest, TemplatizeOneRecord) {
  write("c.jsonl", R"({"id":"d:0-2","text":"قَلْبٌ كَبِيرٌ."})" "\n");
  ASSERT_EQ(run("templatize --system-prompt sys -i " + path("c.jsonl") + " -o " + path("t.jsonl")), 0);
  EXPECT_EQ(read("t.jsonl"), R"({"id":"d:0-2","system":"sys","input":"قلب كبير.","output":"قَلْبٌ كَبِيرٌ."})" "\n");
}

TEST_F(CliTest, ExitCodes) {
  write("ok.txt", "قَلْبٌ\n");
  write("bad.jsonl", "{not json\n");
  write("other.txt", "كَلْبٌ\n");
  EXPECT_EQ(run(""), 1);
  EXPECT_EQ(run("chunk --no-such-flag"), 1);
  EXPECT_EQ(run("chunk --min-words 9 --max-words 3 -i " + path("ok.txt")), 1);
  EXPECT_EQ(run("eval -i " + path("ok.txt") + " --reference " + path("ok.txt")), 1);
  EXPECT_EQ(run("chunk -i " + path("missing.txt")), 2);
  EXPECT_EQ(run("chunk -i " + path("ok.txt") + " -o " + path("no/such/dir/out")), 2);
  EXPECT_EQ(run("filter -i " + path("bad.jsonl")), 3);
  EXPECT_EQ(run("eval --reference " + path("ok.txt") + " --hypothesis " + path("other.txt")), 3);
  EXPECT_NE(read("err.txt").find("line1"), std::string::npos);
  EXPECT_EQ(run("--help >/dev/null"), 0);
}

TEST_F(CliTest, ConfigFileAndFlagPrecedence) {
  Rng rng(91);
  std::string doc = testing::random_document(rng, 100, 0.0);
  std::replace(doc.begin(), doc.end(), '\n', ' ');
  write("doc.txt", doc + "\n");
  write("cfg.json", R"({"min_words": 10, "max_words": 20})");
  ASSERT_EQ(run("--config " + path("cfg.json") + " chunk -i " + path("doc.txt") + " -o " + path("a.jsonl")), 0);
  for (const Json& c : read_jsonl("a.jsonl")) EXPECT_LE(c["word_count"].get<int>(), 20);
  EXPECT_EQ(read_jsonl("a.jsonl").size(), 5u);
  ASSERT_EQ(run("chunk --config " + path("cfg.json") + " --max-words 25 -i " + path("doc.txt") + " -o " +
                path("b.jsonl")),
            0);
  EXPECT_EQ(read_jsonl("b.jsonl").size(), 4u);
  write("bad.json", R"({"bogus": 1})");
  EXPECT_EQ(run("--config " + path("bad.json") + " chunk -i " + path("doc.txt")), 3);
}

TEST_F(CliTest, JobsDoNotChangeOutput) {
  Rng rng(92);
  std::string docs;
  for (int d = 0; d < 40; ++d) docs += testing::random_document(rng, testing::uniform(rng, 20, 300), 0.15) + "\n\n";
  write("docs.txt", docs);
  ASSERT_EQ(run("-j 1 chunk --min-words 5 --max-words 12 -i " + path("docs.txt") + " -o " + path("j1.jsonl")), 0);
  ASSERT_EQ(run("-j 4 chunk --min-words 5 --max-words 12 -i " + path("docs.txt") + " -o " + path("j4.jsonl")), 0);
  EXPECT_EQ(read("j1.jsonl"), read("j4.jsonl"));
  ASSERT_EQ(run("--jobs 3 clean -i " + path("docs.txt") + " -o " + path("c3.txt")), 0);
  ASSERT_EQ(run("clean -i " + path("docs.txt") + " -o " + path("c1.txt")), 0);
  EXPECT_EQ(read("c1.txt"), read("c3.txt"));
}

// Every word of the cleaned corpus lands in exactly one chunk, every chunk
// is kept or logged as dropped, and the chunking itself passes the
// independent checker.
TEST_F(CliTest, PipelineAccountsForEveryWord) {
  Rng rng(93);
  std::vector<std::string> docs;
  std::string raw;
  std::size_t total = 0;
  while (total < 500) {
    const std::size_t n = testing::uniform(rng, 30, 150);
    docs.push_back(testing::random_document(rng, n, 0.12));
    raw += docs.back() + "\n\n";
    total += n;
  }
  write("raw.txt", raw);

  ASSERT_EQ(run("clean -i " + path("raw.txt") + " -o " + path("clean.txt")), 0);
  ASSERT_EQ(run("chunk --min-words 8 --max-words 12 --source-id c -i " + path("clean.txt") + " -o " +
                path("chunks.jsonl")),
            0);
  const std::vector<Json> chunks = read_jsonl("chunks.jsonl");
  // Every third chunk, undiacritized, goes into the test set to force
  // leakage drops.
  std::string test;
  for (std::size_t i = 0; i < chunks.size(); i += 3) {
    test += utf8::from_u32(oracle::strip(chunks[i]["text"].get<std::string>())) + "\n";
  }
  write("test.txt", test);
  ASSERT_EQ(run("filter -i " + path("chunks.jsonl") + " -o " +
                path("kept.jsonl") + " --drop-log " + path("fdrop.jsonl")),
            0);
  ASSERT_EQ(run("dedup --test " + path("test.txt") + " -i " + path("kept.jsonl") + " -o " + path("dedup.jsonl") +
                " --drop-log " + path("ddrop.jsonl")),
            0);

  ASSERT_EQ(run("templatize -i " + path("dedup.jsonl") + " -o " + path("train.jsonl")), 0);

  std::map<std::string, std::vector<oracle::ChunkView>> by_doc;
  std::size_t chunk_words = 0;
  for (const Json& c : chunks) {
    by_doc[c["source_id"]].push_back({c["text"], c["word_count"], c["start"], c["end"], c["flag"]});
    chunk_words += c["word_count"].get<std::size_t>();
  }
  // Cleaning keeps word boundaries, so the word total is unchanged.
  EXPECT_EQ(chunk_words, total);
  std::istringstream cleaned(read("clean.txt"));
  std::size_t doc = 0;
  for (std::string line, text; std::getline(cleaned, line);) {
    if (!line.empty()) {
      text += (text.empty() ? "" : "\n") + line;
      continue;
    }
    if (text.empty()) continue;
    const std::string id = "c/" + std::to_string(++doc);
    ASSERT_TRUE(by_doc.count(id)) << id;
    const auto problem = oracle::check_chunking(text, by_doc[id], 8, 12);
    EXPECT_FALSE(problem) << id << ": " << *problem;
    text.clear();
  }
  EXPECT_EQ(doc, docs.size());
  EXPECT_EQ(by_doc.size(), docs.size());

  std::vector<std::string> ids;
  for (const Json& c : chunks) ids.push_back(c["id"]);
  auto id_list = [this](const std::string& name) {
    std::vector<std::string> out;
    for (const Json& j : read_jsonl(name)) out.push_back(j["id"]);
    return out;
  };
  const auto kept = id_list("kept.jsonl"), fdrop = id_list("fdrop.jsonl");
  const auto dedup_kept = id_list("dedup.jsonl"), ddrop = id_list("ddrop.jsonl");
  EXPECT_EQ(kept.size() + fdrop.size(), chunks.size());
  EXPECT_EQ(dedup_kept.size() + ddrop.size(), kept.size());
  EXPECT_GT(fdrop.size(), 0u);
  EXPECT_GT(ddrop.size(), 0u);
  EXPECT_GT(dedup_kept.size(), 0u);
  // Each survivor list is an ordered sub-sequence of its input.
  auto ordered_subset = [](const std::vector<std::string>& sub, const std::vector<std::string>& all) {
    std::size_t j = 0;
    for (const auto& s : sub) {
      while (j < all.size() && all[j] != s) ++j;
      if (j++ == all.size()) return false;
    }
    return true;
  };
  EXPECT_TRUE(ordered_subset(kept, ids));
  EXPECT_TRUE(ordered_subset(fdrop, ids));
  EXPECT_TRUE(ordered_subset(dedup_kept, kept));
  std::set<std::string> all(kept.begin(), kept.end());
  for (const auto& id : fdrop) EXPECT_FALSE(all.count(id)) << id;
  // Every leakage drop names a segment that really is in the test file.
  for (const Json& d : read_jsonl("ddrop.jsonl")) {
    EXPECT_NE(test.find(d["matching_segment"].get<std::string>()), std::string::npos);
  }
  // One training record per surviving chunk, in order, input = stripped output.
  const std::vector<Json> records = read_jsonl("train.jsonl");
  ASSERT_EQ(records.size(), dedup_kept.size());
  for (std::size_t i = 0; i < records.size(); ++i) {
    EXPECT_EQ(records[i]["id"], dedup_kept[i]);
    EXPECT_EQ(utf8::to_u32(records[i]["input"].get<std::string>()),
              oracle::strip(records[i]["output"].get<std::string>()));
  }
}

TEST_F(CliTest, BaselineRoundTripThroughFiles) {
  write("train.txt", "قَلْبٌ كَبِيرٌ\nقَلْبٌ صَغِيرٌ\n");
  write("in.txt", "قلب كبير وصغير\n");
  ASSERT_EQ(run("baseline train -i " + path("train.txt") + " -o " + path("m.tsv")), 0);
  ASSERT_EQ(run("baseline predict -m " + path("m.tsv") + " -i " + path("in.txt") + " -o " + path("out.txt")), 0);
  EXPECT_EQ(read("out.txt"), "قَلْبٌ كَبِيرٌ وصغير\n");
  write("bad.tsv", "nonsense\n");
  EXPECT_EQ(run("baseline predict -m " + path("bad.tsv") + " -i " + path("in.txt")), 3);
}

TEST_F(CliTest, RepairAndEvalWithRepair) {
  write("p.jsonl", R"({"id":"a","input":"قلب حجر كبير","output":"قَلْبٌ computer كَبِيرٌ","reference":"قَلْبٌ حَجَرٌ كَبِيرٌ"})"
                   "\n");
  ASSERT_EQ(run("repair -i " + path("p.jsonl") + " -o " + path("r.jsonl")), 0);
  const Json r = read_jsonl("r.jsonl").at(0);
  EXPECT_EQ(r["id"], "a");
  EXPECT_EQ(r["repaired"], "قَلْبٌ حجر كَبِيرٌ");
  EXPECT_EQ(r["stats"]["substituted"], 1);
  EXPECT_EQ(r["ops"].size(), 3u);
  // Without repair the base texts differ: a data error.
  EXPECT_EQ(run("eval -i " + path("p.jsonl") + " --hypothesis-field output"), 3);
  ASSERT_EQ(run("eval --repair -i " + path("p.jsonl") + " --hypothesis-field output --json " + path("e.json") +
                " -o /dev/null"),
            0);
  const Json e = Json::parse(read("e.json"));
  EXPECT_NEAR(e["hallucination_rate"].get<double>(), 100.0 / 3, 1e-9);
}

TEST_F(CliTest, OverlapReport) {
  write("a.txt", "ا ب ت. ث ج ح خ\nد ذ\n");
  write("b.txt", "ثَ جَ حَ خَ\nس\n");
  ASSERT_EQ(run("overlap --a " + path("a.txt") + " --b " + path("b.txt") + " --name-a Abbad --name-b Fadel -o " +
                path("t.txt") + " --json " + path("o.json")),
            0);
  EXPECT_NE(read("t.txt").find("| Fadel | 2 | 1 (50.00%) | - |"), std::string::npos) << read("t.txt");
  const Json o = Json::parse(read("o.json"));
  EXPECT_EQ(o["above_threshold_in_a"]["count"], 1);
  write("empty.txt", "\n\n");
  EXPECT_EQ(run("overlap --a " + path("empty.txt") + " --b " + path("b.txt")), 3);
}

}  // namespace
}  // namespace tashkeel
