#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "crex/corpus.hpp"

namespace crex {

// Synthetic corpus layout.
//
// Event words carry a latent class: container, containee, or neutral.
// CONTAINS edges follow the class rule (containers contain nearby
// containees; timexes contain nearby events).  How a word's class is
// exposed in the *unlabeled* text depends on its family:
//
//   lexical  - class-specific marker words appear next to the word on a
//              random side, so plain co-occurrence identifies the class;
//   ordered  - a single shared marker appears strictly left of containers
//              and strictly right of containees, so only direction-aware
//              context features can tell the classes apart;
//   unmarked - no marker at all; the class is only observable through the
//              labels, and those words are oversampled in labeled docs so
//              the classifier has evidence for the frequent ones.
//
// Labeled documents never contain the markers; word class reaches the
// classifier only through whatever the embeddings encode.
struct SynthSpec {
  // vocabulary
  std::size_t event_words = 240;
  std::size_t filler_words = 30;
  std::size_t timex_words = 7;

  // corpus shape
  std::size_t train_docs = 24;
  std::size_t dev_docs = 10;
  std::size_t test_docs = 10;
  std::size_t unlabeled_docs = 60;
  std::size_t entities_per_doc = 20;
  std::size_t unlabeled_sentences = 120;  // per unlabeled document

  // document geometry
  int fillers_between_entities = 2;
  double period_prob = 0.2;
  double two_token_entity_prob = 0.08;
  double timex_prob = 0.07;

  // relation rules (slot distances); radius 0 disables a rule
  int contain_radius = 1;
  int timex_radius = 2;
  // containment planted beyond candidate reach, capping attainable recall
  int long_radius_lo = 10;
  int long_radius_hi = 13;
  double long_relation_prob = 0.08;
  double label_noise = 0.0;  // probability of dropping a rule-implied edge

  // word draws
  double unmarked_boost = 0.30;  // labeled-doc draws from the unmarked family
  double zipf_exponent = 0.9;    // unlabeled-doc event word distribution

  static SynthSpec defaults() { return {}; }
  // Small fully-learnable corpus: every word frequent, no long relations.
  static SynthSpec easy();

  void validate() const;
};

struct SynthResult {
  Corpus train, dev, test;
  std::vector<std::string> unlabeled_texts;  // one document per entry
};

// Deterministic under (spec, seed).
SynthResult generate_synthetic(const SynthSpec& spec, std::uint64_t seed);

// Suffix-rule tagger used for synthetic tokens only (real corpora carry POS
// tags in their files).
std::string synth_pos_tag(const std::string& token);

// Latent word metadata, exposed for tests.
enum class WordClass { container, containee, neutral };
enum class WordFamily { lexical, ordered, unmarked };
WordClass synth_word_class(std::size_t event_word_index);
WordFamily synth_word_family(std::size_t event_word_index);
std::string synth_event_word(std::size_t index);

}  // namespace crex
