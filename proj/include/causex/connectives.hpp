// Copyright 2026 The causex Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "causex/corpus.hpp"

namespace causex {

enum class ConnectiveCategory { Transition, Conjunction, VerbPhrase };

std::string_view to_string(ConnectiveCategory c);

// Connective phrases by category. Phrases are stored lowercased with single
// spaces; verbs are stored as Porter stems.
class ConnectiveLexicon {
 public:
  ConnectiveLexicon() = default;

  // Lines are `category<TAB>phrase`, category one of
  // transition|conjunction|verb. '#' lines and blank lines are skipped.
  static ConnectiveLexicon parse(std::string_view content);
  static ConnectiveLexicon load(const std::filesystem::path& path);
  static const ConnectiveLexicon& builtin();

  void add(ConnectiveCategory category, std::string_view phrase);

  const std::set<std::string>& transitions() const { return transitions_; }
  const std::set<std::string>& conjunctions() const { return conjunctions_; }
  const std::set<std::string>& verb_stems() const { return verb_stems_; }

  bool empty() const {
    return transitions_.empty() && conjunctions_.empty() && verb_stems_.empty();
  }
  std::size_t size() const {
    return transitions_.size() + conjunctions_.size() + verb_stems_.size();
  }

  // Words of `candidates` that must not be treated as stopwords: single-word
  // transitions and conjunctions, and any word whose stem is a verb stem.
  std::vector<std::string> stoplist_exclusions(
      const std::vector<std::string>& candidates) const;

 private:
  std::set<std::string> transitions_;
  std::set<std::string> conjunctions_;
  std::set<std::string> verb_stems_;
};

struct CausalMatch {
  Sentence sentence;
  // The lexicon entry: a phrase, or a stem for verb phrases.
  std::string connective;
  ConnectiveCategory category = ConnectiveCategory::Transition;
  // Byte offsets [begin, end) of the matched words within sentence.text.
  std::size_t begin = 0;
  std::size_t end = 0;
};

struct MatchOptions {
  // Bare "as", "since" and "so" only match when followed by at least three
  // more tokens in the sentence.
  bool strict_ambiguous = false;
};

// Leftmost match wins; at one position the longest phrase wins and a surface
// form listed as both transition and conjunction reports conjunction.
std::optional<CausalMatch> match_sentence(const Sentence& s,
                                          const ConnectiveLexicon& lex,
                                          const MatchOptions& options = {});

std::vector<CausalMatch> extract_causal(const Document& doc,
                                        const ConnectiveLexicon& lex,
                                        const MatchOptions& options = {});

}  // namespace causex
