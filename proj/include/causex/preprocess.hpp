// Copyright 2026 The causex Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace causex {

enum class TokenizeMode {
  // Split on whitespace only; punctuation and case preserved.
  Whitespace,
  // Whitespace split, strip leading/trailing punctuation, lowercase, drop
  // tokens without any letter (numbers, dates, times).
  Standard,
};

std::vector<std::string> tokenize(std::string_view text,
                                  TokenizeMode mode = TokenizeMode::Standard);

class StopList {
 public:
  StopList() = default;
  // `excluded` words are never members, whatever the word list says.
  StopList(const std::vector<std::string>& words,
           const std::vector<std::string>& excluded);

  static StopList parse(std::string_view content,
                        const std::vector<std::string>& excluded = {});
  static StopList load(const std::filesystem::path& path,
                       const std::vector<std::string>& excluded = {});
  // The shipped list with the shipped connective lexicon excluded.
  static const StopList& builtin();

  bool contains(std::string_view word) const;
  std::size_t size() const { return words_.size(); }

 private:
  std::unordered_set<std::string> words_;
};

std::vector<std::string> remove_stopwords(std::span<const std::string> tokens,
                                          const StopList& stops);

// Porter (1980) suffix stripper, following the reference C implementation
// distributed by the algorithm's author. Tokens that are not entirely
// lowercase ASCII letters are returned unchanged.
std::string porter_stem(std::string_view token);

struct PipelineCounts {
  std::size_t raw_tokens = 0;
  std::size_t content_tokens = 0;

  PipelineCounts& operator+=(const PipelineCounts& o) {
    raw_tokens += o.raw_tokens;
    content_tokens += o.content_tokens;
    return *this;
  }
};

// Standard tokenization, stopword removal, stemming.
std::vector<std::string> analyze(std::string_view text, const StopList& stops,
                                 PipelineCounts* counts = nullptr);

class Vocabulary {
 public:
  Vocabulary() = default;

  // Explicit dictionary: columns follow the given order; frequencies unknown.
  static Vocabulary from_terms(std::vector<std::string> terms);

  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }
  const std::vector<std::string>& terms() const { return terms_; }
  const std::string& term(std::size_t col) const { return terms_.at(col); }
  std::optional<std::size_t> index_of(std::string_view term) const;
  std::size_t frequency(std::string_view term) const;
  std::size_t min_freq() const { return min_freq_; }

  // FNV-1a 64 over the ordered term list, as 16 hex digits.
  std::string fingerprint() const;

  void write(std::ostream& out) const;
  static Vocabulary read(std::istream& in);

  friend Vocabulary build_vocabulary(
      std::span<const std::vector<std::string>> sentences,
      std::size_t min_freq);

 private:
  std::vector<std::string> terms_;
  std::vector<std::size_t> freq_;
  std::unordered_map<std::string, std::size_t> index_;
  std::size_t min_freq_ = 0;
};

// Keeps every term whose corpus frequency is strictly greater than min_freq,
// ordered lexicographically.
Vocabulary build_vocabulary(std::span<const std::vector<std::string>> sentences,
                            std::size_t min_freq = 5);

}  // namespace causex
