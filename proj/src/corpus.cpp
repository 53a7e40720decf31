// Copyright 2026 The causex Authors.
// SPDX-License-Identifier: Apache-2.0

#include "causex/corpus.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "causex/error.hpp"
#include "causex/resources.hpp"
#include "causex/rng.hpp"
#include "text_util.hpp"

namespace causex {

LabeledDataset::LabeledDataset(std::vector<LabeledSentence> items)
    : items_(std::move(items)) {
  for (const auto& item : items_) {
    if (item.label == Label::Causal) {
      ++causal_;
    } else {
      ++non_causal_;
    }
  }
}

std::vector<Label> LabeledDataset::labels() const {
  std::vector<Label> out;
  out.reserve(items_.size());
  for (const auto& item : items_) out.push_back(item.label);
  return out;
}

std::vector<std::string> LabeledDataset::texts() const {
  std::vector<std::string> out;
  out.reserve(items_.size());
  for (const auto& item : items_) out.push_back(item.sentence.text);
  return out;
}

LabeledDataset LabeledDataset::subset(
    const std::vector<std::size_t>& positions) const {
  std::vector<LabeledSentence> out;
  out.reserve(positions.size());
  for (std::size_t p : positions) out.push_back(items_.at(p));
  return LabeledDataset(std::move(out));
}

AbbreviationList::AbbreviationList(const std::vector<std::string>& words) {
  for (const auto& w : words) words_.insert(detail::to_lower(w));
}

AbbreviationList AbbreviationList::parse(std::string_view content) {
  return AbbreviationList(detail::parse_word_list(content));
}

AbbreviationList AbbreviationList::load(const std::filesystem::path& path) {
  return parse(read_text_file(path));
}

const AbbreviationList& AbbreviationList::builtin() {
  static const AbbreviationList list = parse(resources::abbreviations());
  return list;
}

bool AbbreviationList::contains(std::string_view word) const {
  return words_.count(detail::to_lower(word)) > 0;
}

namespace {

bool is_terminator(char c) { return c == '.' || c == '!' || c == '?'; }

bool is_closer(char c) {
  return c == '"' || c == '\'' || c == ')' || c == ']';
}

// The whitespace-delimited word ending at position `end` (inclusive), with
// leading brackets and quotes removed.
std::string_view word_ending_at(std::string_view text, std::size_t end) {
  std::size_t begin = end;
  while (begin > 0 && !detail::is_space(text[begin - 1])) --begin;
  while (begin < end && (text[begin] == '(' || text[begin] == '"' ||
                         text[begin] == '\'' || text[begin] == '[')) {
    ++begin;
  }
  return text.substr(begin, end - begin + 1);
}

}  // namespace

std::vector<std::string> segment_sentences(
    std::string_view text, const AbbreviationList& abbreviations) {
  std::vector<std::string> out;
  auto emit = [&](std::size_t begin, std::size_t end) {
    std::string_view seg = detail::trim(text.substr(begin, end - begin));
    if (!seg.empty()) out.emplace_back(seg);
  };

  std::size_t start = 0;
  std::size_t i = 0;
  while (i < text.size()) {
    if (!is_terminator(text[i])) {
      ++i;
      continue;
    }
    std::size_t last = i;
    while (last + 1 < text.size() && is_terminator(text[last + 1])) ++last;
    std::size_t after = last + 1;
    while (after < text.size() && is_closer(text[after])) ++after;
    const bool at_boundary =
        after == text.size() || detail::is_space(text[after]);
    if (at_boundary && text[i] == '.' && last == i &&
        abbreviations.contains(word_ending_at(text, i))) {
      i = after;
      continue;
    }
    if (at_boundary) {
      emit(start, after);
      start = after;
    }
    i = after;
  }
  emit(start, text.size());
  return out;
}

Document make_document(std::string id, std::string text,
                       const AbbreviationList& abbreviations) {
  Document doc{std::move(id), std::move(text), {}};
  auto segments = segment_sentences(doc.text, abbreviations);
  doc.sentences.reserve(segments.size());
  for (std::size_t i = 0; i < segments.size(); ++i) {
    doc.sentences.push_back(Sentence{doc.id, i, std::move(segments[i])});
  }
  return doc;
}

bool is_valid_utf8(std::string_view s) {
  std::size_t i = 0;
  while (i < s.size()) {
    const auto c = static_cast<unsigned char>(s[i]);
    std::size_t extra = 0;
    std::uint32_t cp = 0;
    if (c < 0x80) {
      ++i;
      continue;
    } else if ((c & 0xE0) == 0xC0) {
      extra = 1;
      cp = c & 0x1F;
    } else if ((c & 0xF0) == 0xE0) {
      extra = 2;
      cp = c & 0x0F;
    } else if ((c & 0xF8) == 0xF0) {
      extra = 3;
      cp = c & 0x07;
    } else {
      return false;
    }
    if (i + extra >= s.size()) return false;
    for (std::size_t k = 1; k <= extra; ++k) {
      const auto cc = static_cast<unsigned char>(s[i + k]);
      if ((cc & 0xC0) != 0x80) return false;
      cp = (cp << 6) | (cc & 0x3F);
    }
    static constexpr std::uint32_t kMin[] = {0, 0x80, 0x800, 0x10000};
    if (cp < kMin[extra] || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) {
      return false;
    }
    i += extra + 1;
  }
  return true;
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorKind::Io, "cannot open " + path.string());
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw Error(ErrorKind::Io, "read failed: " + path.string());
  std::string content = buf.str();
  if (!is_valid_utf8(content)) {
    throw Error(ErrorKind::Format, path.string() + ": not valid UTF-8");
  }
  return content;
}

Document load_report(const std::filesystem::path& path,
                     const AbbreviationList& abbreviations) {
  std::string ext = detail::to_lower(path.extension().string());
  if (ext == ".pdf") {
    throw Error(ErrorKind::Format,
                path.string() +
                    ": PDF input is not supported; convert the report to "
                    "plain text first (e.g. pdftotext)");
  }
  std::ifstream probe(path, std::ios::binary);
  char magic[5] = {};
  if (probe && probe.read(magic, 5) && std::string_view(magic, 5) == "%PDF-") {
    throw Error(ErrorKind::Format,
                path.string() +
                    ": PDF input is not supported; convert the report to "
                    "plain text first (e.g. pdftotext)");
  }
  std::string text = read_text_file(path);
  if (detail::trim(text).empty()) {
    throw Error(ErrorKind::Format, path.string() + ": empty document");
  }
  return make_document(path.stem().string(), std::move(text), abbreviations);
}

LabeledDataset parse_labeled_dataset(std::istream& in) {
  std::vector<LabeledSentence> items;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    auto fail = [&](const std::string& why) {
      return Error(ErrorKind::Format,
                   "line " + std::to_string(line_no) + ": " + why);
    };
    std::vector<std::string_view> cols = detail::split(line, '\t');
    if (cols.size() != 4) {
      throw fail("expected 4 tab-separated columns, found " +
                 std::to_string(cols.size()));
    }
    std::size_t index = 0;
    auto [ptr, ec] = std::from_chars(cols[1].data(),
                                     cols[1].data() + cols[1].size(), index);
    if (ec != std::errc() || ptr != cols[1].data() + cols[1].size() ||
        cols[1].empty()) {
      throw fail("sentence_index is not a decimal integer");
    }
    Label label;
    if (cols[2] == "+1" || cols[2] == "1") {
      label = Label::Causal;
    } else if (cols[2] == "-1") {
      label = Label::NonCausal;
    } else {
      throw fail("label must be +1 or -1, got '" + std::string(cols[2]) +
                 "'");
    }
    if (cols[0].empty()) throw fail("empty doc_id");
    items.push_back(LabeledSentence{
        Sentence{std::string(cols[0]), index, std::string(cols[3])}, label});
  }
  return LabeledDataset(std::move(items));
}

LabeledDataset load_labeled_dataset(const std::filesystem::path& path) {
  std::istringstream in(read_text_file(path));
  try {
    return parse_labeled_dataset(in);
  } catch (const Error& e) {
    throw Error(e.kind(), path.string() + ": " + e.what());
  }
}

void write_labeled_dataset(std::ostream& out, const LabeledDataset& ds) {
  for (const auto& item : ds.items()) {
    out << item.sentence.doc_id << '\t' << item.sentence.index << '\t'
        << (item.label == Label::Causal ? "+1" : "-1") << '\t'
        << item.sentence.text << '\n';
  }
}

std::pair<LabeledDataset, LabeledDataset> split_train_test(
    const LabeledDataset& ds, double train_fraction, std::uint64_t seed) {
  if (!(train_fraction > 0.0 && train_fraction < 1.0)) {
    throw Error(ErrorKind::InvalidArgument,
                "train fraction must lie strictly between 0 and 1");
  }
  Rng rng(seed);
  std::vector<std::size_t> train_idx;
  std::vector<std::size_t> test_idx;
  for (Label cls : {Label::Causal, Label::NonCausal}) {
    std::vector<std::size_t> members;
    for (std::size_t i = 0; i < ds.size(); ++i) {
      if (ds[i].label == cls) members.push_back(i);
    }
    if (members.empty()) {
      throw Error(ErrorKind::InvalidArgument,
                  "cannot stratify: class " + std::to_string(to_int(cls)) +
                      " has no members");
    }
    rng.shuffle(std::span<std::size_t>(members));
    auto n_train = static_cast<std::size_t>(
        std::floor(train_fraction * static_cast<double>(members.size()) +
                   0.5));
    n_train = std::min(n_train, members.size());
    train_idx.insert(train_idx.end(), members.begin(),
                     members.begin() + static_cast<std::ptrdiff_t>(n_train));
    test_idx.insert(test_idx.end(),
                    members.begin() + static_cast<std::ptrdiff_t>(n_train),
                    members.end());
  }
  std::sort(train_idx.begin(), train_idx.end());
  std::sort(test_idx.begin(), test_idx.end());
  return {ds.subset(train_idx), ds.subset(test_idx)};
}

}  // namespace causex
