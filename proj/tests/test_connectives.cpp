// Copyright 2026 The causex Authors.
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cctype>

#include "causex/connectives.hpp"
#include "causex/error.hpp"
#include "causex/rng.hpp"
#include "oracles.hpp"

using namespace causex;

namespace {

Sentence sentence(std::string text) { return Sentence{"d", 0, std::move(text)}; }

std::optional<CausalMatch> match(const std::string& text, MatchOptions opt = {}) {
  return match_sentence(sentence(text), ConnectiveLexicon::builtin(), opt);
}

}  // namespace

TEST_CASE("builtin lexicon contents") {
  const auto& lex = ConnectiveLexicon::builtin();
  CHECK(lex.transitions().count("consequently") == 1);
  CHECK(lex.transitions().count("as a result") == 1);
  CHECK(lex.conjunctions().count("due to") == 1);
  CHECK(lex.conjunctions().count("because") == 1);
  CHECK(lex.verb_stems().count("caus") == 1);
  CHECK(lex.verb_stems().count("result") == 1);
}

TEST_CASE("worked report examples") {
  for (std::size_t i = 0; i < test::kCausalExamples.size(); ++i) {
    const auto& ex = test::kCausalExamples[i];
    CAPTURE(i);
    const auto doc = make_document("ex" + std::to_string(i), ex.text);
    const auto found = extract_causal(doc, ConnectiveLexicon::builtin());
    REQUIRE(found.size() == 1);
    CHECK(found[0].connective == ex.connective);
    CHECK(to_string(found[0].category) == ex.category);
    const auto& text = found[0].sentence.text;
    REQUIRE(found[0].end <= text.size());
    CHECK(found[0].begin < found[0].end);
  }
}

TEST_CASE("verb phrase matches any inflection") {
  for (const char* s : {"Poor childhood education causes illiteracy.",
                        "The leak caused the flooding.",
                        "Flooding was caused by the leak.",
                        "The leak is causing flooding."}) {
    CAPTURE(s);
    const auto m = match(s);
    REQUIRE(m);
    CHECK(m->connective == "caus");
    CHECK(m->category == ConnectiveCategory::VerbPhrase);
  }
  const auto r = match("The grounding resulted from fatigue.");
  REQUIRE(r);
  CHECK(r->connective == "result");
}

TEST_CASE("sentences without connectives") {
  CHECK_FALSE(match("John went to the market and bought some bread."));
  CHECK_FALSE(match("The vessel sailed at dawn."));
  CHECK_FALSE(match(""));
  // "because" inside a longer word is not a connective.
  CHECK_FALSE(match("Thesoever thereforeish word."));
}

TEST_CASE("longest phrase wins at a position") {
  const auto m = match("As a result the engine stopped.");
  REQUIRE(m);
  CHECK(m->connective == "as a result");
  CHECK(m->category == ConnectiveCategory::Transition);
  CHECK(m->begin == 0);
  CHECK(m->end == 11);

  const auto b = match("The crew left because of the smoke in the hold.");
  REQUIRE(b);
  CHECK(b->connective == "because of");
}

TEST_CASE("leftmost match wins") {
  const auto m = match("Because the pump failed, the hold flooded and therefore sank.");
  REQUIRE(m);
  CHECK(m->connective == "because");
  CHECK(m->begin == 0);
}

TEST_CASE("surface form in both categories reports conjunction") {
  const auto m = match("The tide was low, so the vessel grounded on the bar.");
  REQUIRE(m);
  CHECK(m->connective == "so");
  CHECK(m->category == ConnectiveCategory::Conjunction);
}

TEST_CASE("case does not matter") {
  Rng rng(3);
  for (const auto& ex : test::kCausalExamples) {
    const auto doc = make_document("x", ex.text);
    for (const auto& s : doc.sentences) {
      std::string flipped = s.text;
      for (auto& ch : flipped) {
        if (rng.below(2)) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
        else ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
      }
      const auto a = match(s.text);
      const auto b = match(flipped);
      REQUIRE(a.has_value() == b.has_value());
      if (a) {
        CHECK(a->connective == b->connective);
        CHECK(a->category == b->category);
        CHECK(a->begin == b->begin);
      }
    }
  }
}

TEST_CASE("strict handling of ambiguous short connectives") {
  MatchOptions strict;
  strict.strict_ambiguous = true;
  CHECK(match("It stopped as planned."));
  CHECK_FALSE(match("It stopped as planned.", strict));
  CHECK(match("It stopped as the fuel supply had been cut.", strict));
  CHECK_FALSE(match("Nothing has happened since.", strict));
  CHECK(match("Nothing has happened since.", MatchOptions{}));
  // Unambiguous connectives are unaffected.
  CHECK(match("It sank because.", strict));
}

TEST_CASE("extraction returns exactly the matching sentences") {
  std::string text;
  for (const auto& ex : test::kCausalExamples) text += std::string(ex.text) + " ";
  text += "John went to the market. The weather was fine.";
  const auto doc = make_document("all", text);
  const auto found = extract_causal(doc, ConnectiveLexicon::builtin());
  std::size_t expected = 0;
  for (const auto& s : doc.sentences) {
    if (match_sentence(s, ConnectiveLexicon::builtin())) ++expected;
  }
  CHECK(found.size() == expected);
  CHECK(found.size() == 6);
  for (std::size_t i = 1; i < found.size(); ++i) {
    CHECK(found[i - 1].sentence.index < found[i].sentence.index);
  }
  CHECK(extract_causal(doc, ConnectiveLexicon::builtin()).size() == found.size());
}

TEST_CASE("lexicon parsing") {
  const auto lex = ConnectiveLexicon::parse(
      "# comment\n\ntransition\tHence\nconjunction\tOwing   To\nverb\tleads\n");
  CHECK(lex.size() == 3);
  CHECK(lex.transitions().count("hence") == 1);
  CHECK(lex.conjunctions().count("owing to") == 1);
  CHECK(lex.verb_stems().count("lead") == 1);
  CHECK(ConnectiveLexicon::parse("# nothing\n").empty());

  auto expect_line = [](const std::string& content, const std::string& needle) {
    try {
      ConnectiveLexicon::parse(content);
      FAIL("expected a format error");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::Format);
      CHECK(std::string(e.what()).find(needle) != std::string::npos);
    }
  };
  expect_line("transition\tthus\nadverb\tso\n", "line 2");
  expect_line("transition thus\n", "line 1");
  expect_line("verb\tbrings about\n", "line 1");
  expect_line("transition\tthus\n\nconjunction\t  \n", "line 3");
  CHECK_THROWS_AS(ConnectiveLexicon::load("/nonexistent/lexicon.tsv"), Error);
}

TEST_CASE("duplicate surface forms keep the conjunction reading") {
  const auto lex = ConnectiveLexicon::parse("transition\tsince\nconjunction\tsince\n");
  const auto m = match_sentence(sentence("Since the storm, repairs continued."), lex);
  REQUIRE(m);
  CHECK(m->category == ConnectiveCategory::Conjunction);
}

TEST_CASE("stoplist exclusions") {
  const auto& lex = ConnectiveLexicon::builtin();
  const auto ex = lex.stoplist_exclusions({"because", "as", "so", "the", "causes",
                                           "therefore", "of", "resulting"});
  for (const char* w : {"because", "as", "so", "causes", "therefore", "resulting"}) {
    CHECK(std::find(ex.begin(), ex.end(), w) != ex.end());
  }
  CHECK(std::find(ex.begin(), ex.end(), "the") == ex.end());
  CHECK(std::find(ex.begin(), ex.end(), "of") == ex.end());
}
