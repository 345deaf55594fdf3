#pragma once

// Stream plumbing for the command-line tool. Work runs in batches on a
// thread pool and results come back in input order.

#include <atomic>
#include <cstddef>
#include <exception>
#include <fstream>
#include <functional>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "tashkeel/json_io.h"

namespace tashkeel::cli {

// Exit statuses.
inline constexpr int kExitUsage = 1;
inline constexpr int kExitIo = 2;
inline constexpr int kExitData = 3;

// "-" is stdin / stdout. Opening failures throw std::ios_base::failure.
class Input {
 public:
  explicit Input(const std::string& path);
  std::istream& stream() { return *in_; }
  const std::string& path() const { return path_; }

 private:
  std::string path_;
  std::unique_ptr<std::ifstream> file_;
  std::istream* in_;
};

class Output {
 public:
  explicit Output(const std::string& path);
  ~Output();
  std::ostream& stream() { return *out_; }
  // Flushes and throws if any write failed.
  void close();

 private:
  std::string path_;
  std::unique_ptr<std::ofstream> file_;
  std::ostream* out_;
  bool closed_ = false;
};

void write_text_file(const std::string& path, const std::string& text);

struct Item {
  std::string text;
  // 1-based line number of the item's first line.
  std::size_t line = 0;
  // 1-based position among the items of its source.
  std::size_t ordinal = 0;
};

// Pulls the next item; returns false at end of input.
using Source = std::function<bool(Item&)>;

// One item per line; trailing CR is dropped. skip_blank drops empty lines.
Source line_source(std::istream& in, bool skip_blank);
// Documents separated by one or more blank lines; a document keeps its
// internal line breaks.
Source document_source(std::istream& in);
std::vector<Item> read_all(Source source);

// Parses one JSONL line into an object, raising FormatError with the line
// number on failure.
Json parse_record(const Item& item);
// The record's "id" as a string, else "line<N>".
std::string record_id(const Json& record, std::size_t line);
std::string string_field_at(const Json& record, const std::string& key, std::size_t line);

// Reads samples either as plain lines (empty field) or as one string field
// of JSONL records.
std::vector<std::string> read_samples(const std::string& path, const std::string& field);

// Applies map to every item with up to `jobs` threads, batch by batch, and
// hands the results to sink in input order. The first failing item in
// input order rethrows its exception.
template <typename Map, typename Sink>
void ordered_map(Source source, unsigned jobs, Map map, Sink sink) {
  using R = decltype(map(std::declval<const Item&>()));
  jobs = std::max(1u, jobs);
  const std::size_t batch = 512 * jobs;
  std::vector<Item> items;
  std::vector<std::optional<R>> results;
  std::vector<std::exception_ptr> errors;
  Item next;
  bool more = true;
  while (more) {
    items.clear();
    while (items.size() < batch && (more = source(next))) items.push_back(std::move(next));
    const std::size_t n = items.size();
    if (n == 0) break;
    results.assign(n, std::nullopt);
    errors.assign(n, nullptr);
    auto work = [&](std::atomic<std::size_t>& cursor) {
      for (std::size_t i; (i = cursor++) < n;) {
        try {
          results[i].emplace(map(items[i]));
        } catch (...) {
          errors[i] = std::current_exception();
        }
      }
    };
    std::atomic<std::size_t> cursor{0};
    if (jobs == 1 || n == 1) {
      work(cursor);
    } else {
      std::vector<std::jthread> pool;
      for (unsigned t = 0; t < std::min<std::size_t>(jobs, n); ++t) pool.emplace_back([&] { work(cursor); });
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (errors[i]) std::rethrow_exception(errors[i]);
      sink(std::move(*results[i]));
    }
  }
}

}  // namespace tashkeel::cli
