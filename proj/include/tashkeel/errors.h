#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace tashkeel {

// Base class for all errors raised by the library. Everything below is a
// data problem (bad input text, malformed file), never a programming error;
// precondition violations on arguments throw std::invalid_argument instead.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A diacritic mark appeared before any base letter of a word.
class LeadingMarkError : public Error {
 public:
  using Error::Error;
};

class EmptyDocumentError : public Error {
 public:
  using Error::Error;
};

class EmptyCorpusError : public Error {
 public:
  using Error::Error;
};

// Similarity of a sample with no words is undefined.
class ZeroWordSampleError : public Error {
 public:
  using Error::Error;
};

class EmptyInputError : public Error {
 public:
  using Error::Error;
};

// Reference and hypothesis do not share the same undiacritized text. The
// hypothesis has to go through align::repair before it can be scored.
class BaseTextMismatchError : public Error {
 public:
  BaseTextMismatchError(std::string sample_id, const std::string& what)
      : Error(sample_id.empty() ? what : sample_id + ": " + what),
        sample_id_(std::move(sample_id)) {}

  const std::string& sample_id() const { return sample_id_; }

 private:
  std::string sample_id_;
};

// Malformed lexicon, model, config or JSONL record.
class FormatError : public Error {
 public:
  using Error::Error;
};

}  // namespace tashkeel
