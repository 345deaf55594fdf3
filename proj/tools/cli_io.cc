#include "cli_io.h"

#include <iostream>

#include "tashkeel/errors.h"

namespace tashkeel::cli {

Input::Input(const std::string& path) : path_(path) {
  if (path == "-") {
    in_ = &std::cin;
    return;
  }
  file_ = std::make_unique<std::ifstream>(path, std::ios::binary);
  if (!*file_) throw std::ios_base::failure("cannot open " + path);
  in_ = file_.get();
}

Output::Output(const std::string& path) : path_(path) {
  if (path == "-") {
    out_ = &std::cout;
    return;
  }
  file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
  if (!*file_) throw std::ios_base::failure("cannot write " + path);
  out_ = file_.get();
}

Output::~Output() {
  if (!closed_) out_->flush();
}

void Output::close() {
  closed_ = true;
  out_->flush();
  if (file_) file_->close();
  if (out_->fail() || (file_ && file_->fail())) throw std::ios_base::failure("write failed: " + path_);
}

void write_text_file(const std::string& path, const std::string& text) {
  Output out(path);
  out.stream() << text;
  out.close();
}

namespace {

bool next_line(std::istream& in, std::string& line) {
  if (!std::getline(in, line)) {
    if (in.bad()) throw std::ios_base::failure("read failed");
    return false;
  }
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return true;
}

bool blank(const std::string& line) { return line.find_first_not_of(" \t") == std::string::npos; }

}  // namespace

Source line_source(std::istream& in, bool skip_blank) {
  return [&in, skip_blank, lineno = std::size_t{0}, count = std::size_t{0}](Item& item) mutable {
    std::string line;
    while (next_line(in, line)) {
      ++lineno;
      if (skip_blank && blank(line)) continue;
      item.text = std::move(line);
      item.line = lineno;
      item.ordinal = ++count;
      return true;
    }
    return false;
  };
}

Source document_source(std::istream& in) {
  return [&in, lineno = std::size_t{0}, count = std::size_t{0}](Item& item) mutable {
    std::string line;
    item.text.clear();
    item.line = 0;
    item.ordinal = count + 1;
    while (next_line(in, line)) {
      ++lineno;
      if (blank(line)) {
        if (item.line) {
          ++count;
          return true;
        }
        continue;
      }
      if (item.line) {
        item.text += '\n';
      } else {
        item.line = lineno;
      }
      item.text += line;
    }
    if (item.line == 0) return false;
    ++count;
    return true;
  };
}

std::vector<Item> read_all(Source source) {
  std::vector<Item> items;
  Item item;
  while (source(item)) items.push_back(std::move(item));
  return items;
}

Json parse_record(const Item& item) {
  Json j;
  try {
    j = Json::parse(item.text);
  } catch (const Json::parse_error& e) {
    throw FormatError("line " + std::to_string(item.line) + ": invalid JSON: " + e.what());
  }
  if (!j.is_object()) throw FormatError("line " + std::to_string(item.line) + ": record is not an object");
  return j;
}

std::string record_id(const Json& record, std::size_t line) {
  const auto it = record.find("id");
  if (it != record.end()) {
    if (it->is_string()) return it->get<std::string>();
    if (it->is_number_integer()) return std::to_string(it->get<long long>());
  }
  return "line" + std::to_string(line);
}

std::string string_field_at(const Json& record, const std::string& key, std::size_t line) {
  try {
    return string_field(record, key);
  } catch (const FormatError& e) {
    throw FormatError("line " + std::to_string(line) + ": " + e.what());
  }
}

std::vector<std::string> read_samples(const std::string& path, const std::string& field) {
  Input in(path);
  std::vector<std::string> samples;
  for (Item& item : read_all(line_source(in.stream(), !field.empty()))) {
    if (field.empty()) {
      samples.push_back(std::move(item.text));
    } else {
      samples.push_back(string_field_at(parse_record(item), field, item.line));
    }
  }
  return samples;
}

}  // namespace tashkeel::cli
