// Copyright 2026 The causex Authors.
// SPDX-License-Identifier: Apache-2.0

#include "causex/connectives.hpp"

#include <algorithm>

#include "causex/error.hpp"
#include "causex/preprocess.hpp"
#include "causex/resources.hpp"
#include "text_util.hpp"

namespace causex {

std::string_view to_string(ConnectiveCategory c) {
  switch (c) {
    case ConnectiveCategory::Transition:
      return "transition";
    case ConnectiveCategory::Conjunction:
      return "conjunction";
    case ConnectiveCategory::VerbPhrase:
      return "verb_phrase";
  }
  return "unknown";
}

namespace {

std::string normalize_phrase(std::string_view phrase) {
  std::string out;
  for (char c : detail::trim(phrase)) {
    if (detail::is_space(c)) {
      if (!out.empty() && out.back() != ' ') out.push_back(' ');
    } else {
      out.push_back(c);
    }
  }
  return detail::to_lower(out);
}

struct WordSpan {
  std::size_t begin;
  std::size_t end;
  std::string lower;
};

std::vector<WordSpan> word_spans(std::string_view text) {
  std::vector<WordSpan> out;
  std::size_t i = 0;
  while (i < text.size()) {
    if (!detail::is_word_char(text[i])) {
      ++i;
      continue;
    }
    std::size_t b = i;
    while (i < text.size() && detail::is_word_char(text[i])) ++i;
    out.push_back({b, i, detail::to_lower(text.substr(b, i - b))});
  }
  return out;
}

bool only_space_between(std::string_view text, std::size_t a, std::size_t b) {
  for (std::size_t i = a; i < b; ++i) {
    if (!detail::is_space(text[i])) return false;
  }
  return true;
}

bool is_ambiguous(std::string_view phrase) {
  return phrase == "as" || phrase == "since" || phrase == "so";
}

// Number of words in phrase starting at token i that match, or 0.
std::size_t phrase_match_len(std::string_view text,
                             const std::vector<WordSpan>& words, std::size_t i,
                             const std::vector<std::string_view>& phrase) {
  if (i + phrase.size() > words.size()) return 0;
  for (std::size_t k = 0; k < phrase.size(); ++k) {
    if (words[i + k].lower != phrase[k]) return 0;
    if (k > 0 &&
        !only_space_between(text, words[i + k - 1].end, words[i + k].begin)) {
      return 0;
    }
  }
  return phrase.size();
}

}  // namespace

void ConnectiveLexicon::add(ConnectiveCategory category,
                            std::string_view phrase) {
  std::string p = normalize_phrase(phrase);
  if (p.empty()) {
    throw Error(ErrorKind::Format, "empty connective phrase");
  }
  switch (category) {
    case ConnectiveCategory::Transition:
      transitions_.insert(std::move(p));
      break;
    case ConnectiveCategory::Conjunction:
      conjunctions_.insert(std::move(p));
      break;
    case ConnectiveCategory::VerbPhrase:
      if (p.find(' ') != std::string::npos) {
        throw Error(ErrorKind::Format,
                    "verb entries must be single words: '" + p + "'");
      }
      verb_stems_.insert(porter_stem(p));
      break;
  }
}

ConnectiveLexicon ConnectiveLexicon::parse(std::string_view content) {
  ConnectiveLexicon lex;
  std::size_t line_no = 0;
  for (std::string_view line : detail::split(content, '\n')) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (detail::trim(line).empty() || detail::trim(line).front() == '#') {
      continue;
    }
    auto fail = [&](const std::string& why) {
      return Error(ErrorKind::Format,
                   "lexicon line " + std::to_string(line_no) + ": " + why);
    };
    auto cols = detail::split(line, '\t');
    if (cols.size() != 2) throw fail("expected category<TAB>phrase");
    std::string tag = detail::to_lower(detail::trim(cols[0]));
    ConnectiveCategory cat;
    if (tag == "transition") {
      cat = ConnectiveCategory::Transition;
    } else if (tag == "conjunction") {
      cat = ConnectiveCategory::Conjunction;
    } else if (tag == "verb") {
      cat = ConnectiveCategory::VerbPhrase;
    } else {
      throw fail("unknown category '" + tag + "'");
    }
    try {
      lex.add(cat, cols[1]);
    } catch (const Error& e) {
      throw fail(e.what());
    }
  }
  return lex;
}

ConnectiveLexicon ConnectiveLexicon::load(const std::filesystem::path& path) {
  try {
    return parse(read_text_file(path));
  } catch (const Error& e) {
    throw Error(e.kind(), path.string() + ": " + e.what());
  }
}

const ConnectiveLexicon& ConnectiveLexicon::builtin() {
  static const ConnectiveLexicon lex = parse(resources::connectives());
  return lex;
}

std::vector<std::string> ConnectiveLexicon::stoplist_exclusions(
    const std::vector<std::string>& candidates) const {
  std::vector<std::string> out;
  for (const auto& raw : candidates) {
    std::string w = detail::to_lower(raw);
    if (transitions_.count(w) || conjunctions_.count(w) ||
        verb_stems_.count(porter_stem(w))) {
      out.push_back(std::move(w));
    }
  }
  return out;
}

std::optional<CausalMatch> match_sentence(const Sentence& s,
                                          const ConnectiveLexicon& lex,
                                          const MatchOptions& options) {
  if (lex.empty()) return std::nullopt;
  const std::string_view text = s.text;
  const std::vector<WordSpan> words = word_spans(text);

  struct Entry {
    std::string phrase;
    std::vector<std::string_view> parts;
    ConnectiveCategory category;
  };
  // Conjunctions first: an equal-length tie reports the conjunction.
  std::vector<Entry> entries;
  for (const auto& p : lex.conjunctions()) {
    entries.push_back({p, {}, ConnectiveCategory::Conjunction});
  }
  for (const auto& p : lex.transitions()) {
    entries.push_back({p, {}, ConnectiveCategory::Transition});
  }
  for (auto& e : entries) e.parts = detail::split(e.phrase, ' ');

  for (std::size_t i = 0; i < words.size(); ++i) {
    const Entry* best = nullptr;
    std::size_t best_len = 0;
    for (const auto& e : entries) {
      std::size_t len = phrase_match_len(text, words, i, e.parts);
      if (len == 0 || len <= best_len) continue;
      if (options.strict_ambiguous && is_ambiguous(e.phrase) &&
          words.size() - (i + 1) < 3) {
        continue;
      }
      best = &e;
      best_len = len;
    }
    if (best != nullptr) {
      return CausalMatch{s, best->phrase, best->category, words[i].begin,
                         words[i + best_len - 1].end};
    }
    std::string stem = porter_stem(words[i].lower);
    if (lex.verb_stems().count(stem)) {
      return CausalMatch{s, stem, ConnectiveCategory::VerbPhrase,
                         words[i].begin, words[i].end};
    }
  }
  return std::nullopt;
}

std::vector<CausalMatch> extract_causal(const Document& doc,
                                        const ConnectiveLexicon& lex,
                                        const MatchOptions& options) {
  std::vector<CausalMatch> out;
  for (const auto& s : doc.sentences) {
    if (auto m = match_sentence(s, lex, options)) out.push_back(std::move(*m));
  }
  return out;
}

}  // namespace causex
