// Copyright 2026 The causex Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <unordered_set>
#include <utility>
#include <vector>

namespace causex {

enum class Label : int { Causal = 1, NonCausal = -1 };

inline int to_int(Label l) { return static_cast<int>(l); }

struct Sentence {
  std::string doc_id;
  std::size_t index = 0;
  std::string text;
};

struct Document {
  std::string id;
  std::string text;
  std::vector<Sentence> sentences;
};

struct LabeledSentence {
  Sentence sentence;
  Label label = Label::NonCausal;
};

class LabeledDataset {
 public:
  LabeledDataset() = default;
  explicit LabeledDataset(std::vector<LabeledSentence> items);

  const std::vector<LabeledSentence>& items() const { return items_; }
  std::size_t size() const { return items_.size(); }
  bool empty() const { return items_.empty(); }
  const LabeledSentence& operator[](std::size_t i) const { return items_[i]; }

  std::size_t count(Label label) const {
    return label == Label::Causal ? causal_ : non_causal_;
  }

  std::vector<Label> labels() const;
  std::vector<std::string> texts() const;

  // Items at the given positions, in the order given.
  LabeledDataset subset(const std::vector<std::size_t>& positions) const;

 private:
  std::vector<LabeledSentence> items_;
  std::size_t causal_ = 0;
  std::size_t non_causal_ = 0;
};

// Case-insensitive set of tokens ending in '.' that do not end a sentence.
class AbbreviationList {
 public:
  AbbreviationList() = default;
  explicit AbbreviationList(const std::vector<std::string>& words);

  static AbbreviationList load(const std::filesystem::path& path);
  static AbbreviationList parse(std::string_view content);
  static const AbbreviationList& builtin();

  bool contains(std::string_view word) const;
  std::size_t size() const { return words_.size(); }

 private:
  std::unordered_set<std::string> words_;
};

// Splits on '.', '!' or '?' followed by whitespace or end of input. Listed
// abbreviations and decimals ("3.5") do not split. Segments are trimmed and
// never empty.
std::vector<std::string> segment_sentences(
    std::string_view text,
    const AbbreviationList& abbreviations = AbbreviationList::builtin());

Document make_document(std::string id, std::string text,
                       const AbbreviationList& abbreviations =
                           AbbreviationList::builtin());

Document load_report(const std::filesystem::path& path,
                     const AbbreviationList& abbreviations =
                         AbbreviationList::builtin());

// Labeled-TSV: doc_id, sentence_index, label (+1/-1), text. Lines starting
// with '#' (provenance headers) are skipped.
LabeledDataset parse_labeled_dataset(std::istream& in);
LabeledDataset load_labeled_dataset(const std::filesystem::path& path);
void write_labeled_dataset(std::ostream& out, const LabeledDataset& ds);

// Stratified per class; round(fraction * n_c) items of each class go to the
// training side. Both halves keep the original item order.
std::pair<LabeledDataset, LabeledDataset> split_train_test(
    const LabeledDataset& ds, double train_fraction, std::uint64_t seed);

// Reads a whole file; rejects invalid UTF-8.
std::string read_text_file(const std::filesystem::path& path);
bool is_valid_utf8(std::string_view s);

}  // namespace causex
