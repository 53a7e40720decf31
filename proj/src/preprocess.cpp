// Copyright 2026 The causex Authors.
// SPDX-License-Identifier: Apache-2.0

#include "causex/preprocess.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>

#include "causex/connectives.hpp"
#include "causex/corpus.hpp"
#include "causex/error.hpp"
#include "causex/resources.hpp"
#include "text_util.hpp"

namespace causex {
namespace {

// Multi-byte punctuation stripped from token edges in standard mode.
constexpr std::string_view kUnicodePunct[] = {
    "‘", "’", "“", "”", "–", "—", "…",
    "«", "»",
};

bool strip_front(std::string_view& s) {
  if (s.empty()) return false;
  if (static_cast<unsigned char>(s.front()) < 0x80) {
    if (detail::is_ascii_alpha(s.front()) || detail::is_ascii_digit(s.front()))
      return false;
    s.remove_prefix(1);
    return true;
  }
  for (auto p : kUnicodePunct) {
    if (s.starts_with(p)) {
      s.remove_prefix(p.size());
      return true;
    }
  }
  return false;
}

bool strip_back(std::string_view& s) {
  if (s.empty()) return false;
  if (static_cast<unsigned char>(s.back()) < 0x80) {
    if (detail::is_ascii_alpha(s.back()) || detail::is_ascii_digit(s.back()))
      return false;
    s.remove_suffix(1);
    return true;
  }
  for (auto p : kUnicodePunct) {
    if (s.ends_with(p)) {
      s.remove_suffix(p.size());
      return true;
    }
  }
  return false;
}

bool has_letter(std::string_view s) {
  return std::any_of(s.begin(), s.end(), [](char c) {
    return detail::is_ascii_alpha(c) || static_cast<unsigned char>(c) >= 0x80;
  });
}

}  // namespace

std::vector<std::string> tokenize(std::string_view text, TokenizeMode mode) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && detail::is_space(text[i])) ++i;
    std::size_t begin = i;
    while (i < text.size() && !detail::is_space(text[i])) ++i;
    if (begin == i) continue;
    std::string_view word = text.substr(begin, i - begin);
    if (mode == TokenizeMode::Whitespace) {
      out.emplace_back(word);
      continue;
    }
    while (strip_front(word)) {
    }
    while (strip_back(word)) {
    }
    if (word.empty() || !has_letter(word)) continue;
    out.push_back(detail::to_lower(word));
  }
  return out;
}

StopList::StopList(const std::vector<std::string>& words,
                   const std::vector<std::string>& excluded) {
  std::unordered_set<std::string> drop;
  for (const auto& w : excluded) drop.insert(detail::to_lower(w));
  for (const auto& w : words) {
    std::string lw = detail::to_lower(w);
    if (drop.count(lw) == 0) words_.insert(std::move(lw));
  }
}

StopList StopList::parse(std::string_view content,
                         const std::vector<std::string>& excluded) {
  return StopList(detail::parse_word_list(content), excluded);
}

StopList StopList::load(const std::filesystem::path& path,
                        const std::vector<std::string>& excluded) {
  return parse(read_text_file(path), excluded);
}

const StopList& StopList::builtin() {
  static const StopList list = [] {
    auto words = detail::parse_word_list(resources::stoplist());
    return StopList(words,
                    ConnectiveLexicon::builtin().stoplist_exclusions(words));
  }();
  return list;
}

bool StopList::contains(std::string_view word) const {
  return words_.count(detail::to_lower(word)) > 0;
}

std::vector<std::string> remove_stopwords(std::span<const std::string> tokens,
                                          const StopList& stops) {
  std::vector<std::string> out;
  out.reserve(tokens.size());
  for (const auto& t : tokens) {
    if (!stops.contains(t)) out.push_back(t);
  }
  return out;
}

std::vector<std::string> analyze(std::string_view text, const StopList& stops,
                                 PipelineCounts* counts) {
  std::vector<std::string> tokens = tokenize(text, TokenizeMode::Standard);
  std::vector<std::string> content = remove_stopwords(tokens, stops);
  if (counts != nullptr) {
    counts->raw_tokens += tokens.size();
    counts->content_tokens += content.size();
  }
  for (auto& t : content) t = porter_stem(t);
  return content;
}

Vocabulary Vocabulary::from_terms(std::vector<std::string> terms) {
  Vocabulary v;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (!v.index_.emplace(terms[i], i).second) {
      throw Error(ErrorKind::InvalidArgument,
                  "duplicate vocabulary term '" + terms[i] + "'");
    }
  }
  v.terms_ = std::move(terms);
  v.freq_.assign(v.terms_.size(), 0);
  return v;
}

std::optional<std::size_t> Vocabulary::index_of(std::string_view term) const {
  auto it = index_.find(std::string(term));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t Vocabulary::frequency(std::string_view term) const {
  auto idx = index_of(term);
  return idx ? freq_[*idx] : 0;
}

std::string Vocabulary::fingerprint() const {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  auto mix = [&h](unsigned char c) {
    h ^= c;
    h *= 0x100000001b3ULL;
  };
  for (const auto& t : terms_) {
    for (char c : t) mix(static_cast<unsigned char>(c));
    mix('\n');
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

void Vocabulary::write(std::ostream& out) const {
  out << "# vocabulary terms=" << terms_.size() << " min_freq=" << min_freq_
      << " fingerprint=" << fingerprint() << '\n';
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    out << terms_[i] << '\t' << freq_[i] << '\n';
  }
}

Vocabulary Vocabulary::read(std::istream& in) {
  std::vector<std::string> terms;
  std::vector<std::size_t> freqs;
  std::size_t min_freq = 0;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    if (line.front() == '#') {
      if (auto pos = line.find("min_freq="); pos != std::string::npos) {
        std::from_chars(line.data() + pos + 9, line.data() + line.size(),
                        min_freq);
      }
      continue;
    }
    auto cols = detail::split(line, '\t');
    std::size_t f = 0;
    if (cols.size() != 2 || cols[0].empty() ||
        std::from_chars(cols[1].data(), cols[1].data() + cols[1].size(), f)
                .ec != std::errc()) {
      throw Error(ErrorKind::Format,
                  "vocabulary line " + std::to_string(line_no) +
                      ": expected term<TAB>frequency");
    }
    terms.emplace_back(cols[0]);
    freqs.push_back(f);
  }
  Vocabulary v = from_terms(std::move(terms));
  v.freq_ = std::move(freqs);
  v.min_freq_ = min_freq;
  return v;
}

Vocabulary build_vocabulary(std::span<const std::vector<std::string>> sentences,
                            std::size_t min_freq) {
  std::map<std::string, std::size_t> counts;
  for (const auto& tokens : sentences) {
    for (const auto& t : tokens) ++counts[t];
  }
  Vocabulary v;
  v.min_freq_ = min_freq;
  for (const auto& [term, n] : counts) {
    if (n > min_freq) {
      v.index_.emplace(term, v.terms_.size());
      v.terms_.push_back(term);
      v.freq_.push_back(n);
    }
  }
  return v;
}

}  // namespace causex
