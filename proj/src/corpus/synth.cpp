#include "crex/synth.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "crex/preprocess.hpp"
#include "crex/rng.hpp"

namespace crex {
namespace {

// latent structure repeats every 40 word indices:
//   [0,16)  lexical   (5 container, 5 containee, 6 neutral)
//   [16,32) ordered   (5 container, 5 containee, 6 neutral)
//   [32,40) unmarked  (3 container, 3 containee, 2 neutral)
constexpr std::size_t kBlock = 40;

std::string base26(std::size_t i) {
  std::string s;
  s += static_cast<char>('a' + (i / 26) % 26);
  s += static_cast<char>('a' + i % 26);
  return s;
}

constexpr const char* kLexContainerMarker = "zca";
constexpr const char* kLexContaineeMarker = "zcb";
constexpr const char* kOrderMarker = "zmk";
constexpr const char* kEntitySuffix = "sx";

std::string filler_word(std::size_t i) { return "f" + base26(i); }
std::string timex_word(std::size_t i) { return "t" + base26(i); }

struct ZipfTable {
  std::vector<double> cumulative;

  ZipfTable(std::size_t n, double exponent) {
    cumulative.reserve(n);
    double total = 0;
    for (std::size_t i = 0; i < n; ++i) {
      total += 1.0 / std::pow(static_cast<double>(i + 1), exponent);
      cumulative.push_back(total);
    }
    for (auto& c : cumulative) c /= total;
  }

  std::size_t draw(Rng& rng) const {
    const double u = rng.next_double();
    auto it = std::lower_bound(cumulative.begin(), cumulative.end(), u);
    return static_cast<std::size_t>(it - cumulative.begin());
  }
};

struct SlotInfo {
  bool is_timex = false;
  std::size_t word_index = 0;  // event word index when !is_timex
};

}  // namespace

WordClass synth_word_class(std::size_t i) {
  const std::size_t b = i % kBlock;
  const std::size_t r = b % 16;  // class layout within lexical/ordered
  if (b < 32) {
    if (r < 5) return WordClass::container;
    if (r < 10) return WordClass::containee;
    return WordClass::neutral;
  }
  const std::size_t u = b - 32;
  if (u < 3) return WordClass::container;
  if (u < 6) return WordClass::containee;
  return WordClass::neutral;
}

WordFamily synth_word_family(std::size_t i) {
  const std::size_t b = i % kBlock;
  if (b < 16) return WordFamily::lexical;
  if (b < 32) return WordFamily::ordered;
  return WordFamily::unmarked;
}

std::string synth_event_word(std::size_t index) { return "w" + base26(index); }

std::string synth_pos_tag(const std::string& token) {
  if (token == "\n") return "NL";
  if (token.size() == 1 && is_punct_token_char(token[0])) return token;
  switch (token[0]) {
    case 'w': return "NN";
    case 'f': return "DT";
    case 't': return "CD";
    case 'z': return "JJ";
    default: return "NN";
  }
}

SynthSpec SynthSpec::easy() {
  SynthSpec s;
  s.event_words = 40;
  s.filler_words = 12;
  s.timex_words = 5;
  s.train_docs = 16;
  s.dev_docs = 6;
  s.test_docs = 6;
  s.unlabeled_docs = 30;
  s.entities_per_doc = 12;
  s.unlabeled_sentences = 80;
  s.two_token_entity_prob = 0.05;
  s.long_relation_prob = 0.0;
  s.zipf_exponent = 0.3;
  return s;
}

void SynthSpec::validate() const {
  if (event_words < kBlock)
    throw std::invalid_argument("synth: event_words must be at least 40");
  if (filler_words < 1 || filler_words > 676 || event_words > 676 || timex_words > 676)
    throw std::invalid_argument("synth: word counts out of range");
  if (timex_radius > 0 && timex_words == 0)
    throw std::invalid_argument("synth: timex rule requires timex words");
  const bool has_rules = contain_radius > 0 || timex_radius > 0;
  if (has_rules && entities_per_doc < 2)
    throw std::invalid_argument(
        "synth: relation rules need at least 2 entities per document");
  if (long_relation_prob > 0 && long_radius_lo <= contain_radius)
    throw std::invalid_argument("synth: long_radius_lo must exceed contain_radius");
  if (train_docs == 0) throw std::invalid_argument("synth: train_docs must be positive");
}

namespace {

class Generator {
 public:
  Generator(const SynthSpec& spec, std::uint64_t seed)
      : spec_(spec), seed_(seed), zipf_(spec.event_words, spec.zipf_exponent) {
    for (std::size_t i = 0; i < spec.event_words; ++i)
      if (synth_word_family(i) == WordFamily::unmarked) unmarked_.push_back(i);
  }

  Corpus make_split(Split split, const char* prefix, std::size_t docs,
                    std::uint64_t salt) {
    Corpus corpus;
    corpus.split = split;
    for (std::size_t d = 0; d < docs; ++d) {
      std::ostringstream id;
      id << prefix << "-" << (d < 10 ? "00" : d < 100 ? "0" : "") << d;
      corpus.documents.push_back(make_document(id.str(), mix64(seed_, salt, d)));
    }
    corpus.validate();
    return corpus;
  }

  std::vector<std::string> make_unlabeled() {
    std::vector<std::string> texts;
    texts.reserve(spec_.unlabeled_docs);
    for (std::size_t d = 0; d < spec_.unlabeled_docs; ++d)
      texts.push_back(make_unlabeled_text(mix64(seed_, 0xd5d5, d)));
    return texts;
  }

 private:
  std::size_t draw_event_word(Rng& rng) const {
    if (!unmarked_.empty() && rng.bernoulli(spec_.unmarked_boost))
      return unmarked_[rng.below(unmarked_.size())];
    return rng.below(spec_.event_words);
  }

  Document make_document(const std::string& id, std::uint64_t doc_seed) const {
    Rng rng(doc_seed);
    Document doc;
    doc.id = id;
    std::vector<SlotInfo> slots(spec_.entities_per_doc);

    auto push = [&doc](const std::string& surface) {
      doc.tokens.push_back({surface, synth_pos_tag(surface)});
    };

    for (std::size_t s = 0; s < spec_.entities_per_doc; ++s) {
      SlotInfo& slot = slots[s];
      slot.is_timex = spec_.timex_words > 0 && rng.bernoulli(spec_.timex_prob);
      Entity ent;
      ent.id = "e" + std::to_string(s);
      ent.start = doc.tokens.size();
      if (slot.is_timex) {
        ent.kind = EntityKind::timex;
        push(timex_word(rng.below(spec_.timex_words)));
      } else {
        ent.kind = EntityKind::event;
        slot.word_index = draw_event_word(rng);
        push(synth_event_word(slot.word_index));
        if (rng.bernoulli(spec_.two_token_entity_prob)) push(kEntitySuffix);
      }
      ent.end = doc.tokens.size();
      doc.entities.push_back(ent);

      if (rng.bernoulli(spec_.period_prob)) push(".");
      for (int k = 0; k < spec_.fillers_between_entities; ++k)
        push(filler_word(rng.below(spec_.filler_words)));
      if (s % 6 == 5) push("\n");
    }

    for (std::size_t a = 0; a < slots.size(); ++a) {
      for (std::size_t b = 0; b < slots.size(); ++b) {
        if (a == b) continue;
        const int d = static_cast<int>(a > b ? a - b : b - a);
        bool plant = false;
        if (!slots[a].is_timex && !slots[b].is_timex) {
          if (spec_.contain_radius > 0 &&
              synth_word_class(slots[a].word_index) == WordClass::container &&
              synth_word_class(slots[b].word_index) == WordClass::containee) {
            if (d <= spec_.contain_radius)
              plant = true;
            else if (d >= spec_.long_radius_lo && d <= spec_.long_radius_hi)
              plant = rng.bernoulli(spec_.long_relation_prob);
          }
        } else if (slots[a].is_timex && !slots[b].is_timex) {
          plant = spec_.timex_radius > 0 && d <= spec_.timex_radius;
        }
        if (plant && spec_.label_noise > 0 && rng.bernoulli(spec_.label_noise))
          plant = false;
        if (plant)
          doc.relations.push_back({doc.entities[a].id, doc.entities[b].id});
      }
    }
    return doc;
  }

  std::string make_unlabeled_text(std::uint64_t doc_seed) const {
    Rng rng(doc_seed);
    std::vector<std::string> words;
    for (std::size_t s = 0; s < spec_.unlabeled_sentences; ++s) {
      if (spec_.timex_words > 0 && rng.bernoulli(spec_.timex_prob))
        words.push_back(timex_word(rng.below(spec_.timex_words)));

      const std::size_t w = zipf_.draw(rng);
      const std::string surface = synth_event_word(w);
      switch (synth_word_family(w)) {
        case WordFamily::lexical: {
          const WordClass cls = synth_word_class(w);
          if (cls == WordClass::neutral) {
            words.push_back(surface);
          } else {
            const char* marker = cls == WordClass::container ? kLexContainerMarker
                                                             : kLexContaineeMarker;
            if (rng.bernoulli(0.5)) {
              words.push_back(marker);
              words.push_back(surface);
            } else {
              words.push_back(surface);
              words.push_back(marker);
            }
          }
          break;
        }
        case WordFamily::ordered: {
          // marker side encodes the class; bag-of-context cannot see it
          const WordClass cls = synth_word_class(w);
          if (cls == WordClass::container) {
            words.push_back(kOrderMarker);
            words.push_back(surface);
          } else if (cls == WordClass::containee) {
            words.push_back(surface);
            words.push_back(kOrderMarker);
          } else {
            words.push_back(surface);
          }
          break;
        }
        case WordFamily::unmarked:
          words.push_back(surface);
          break;
      }

      const std::size_t nfill = 1 + rng.below(2);
      for (std::size_t k = 0; k < nfill; ++k)
        words.push_back(filler_word(rng.below(spec_.filler_words)));
      if (rng.bernoulli(spec_.period_prob)) words.push_back(".");
      if (s % 10 == 9) words.push_back("\n");
    }

    std::string text;
    for (std::size_t i = 0; i < words.size(); ++i) {
      if (i) text += ' ';
      text += words[i];
    }
    return text;
  }

  const SynthSpec& spec_;
  std::uint64_t seed_;
  ZipfTable zipf_;
  std::vector<std::size_t> unmarked_;
};

}  // namespace

SynthResult generate_synthetic(const SynthSpec& spec, std::uint64_t seed) {
  spec.validate();
  Generator gen(spec, seed);
  SynthResult result;
  result.train = gen.make_split(Split::train, "train", spec.train_docs, 0xa11a);
  result.dev = gen.make_split(Split::dev, "dev", spec.dev_docs, 0xb22b);
  result.test = gen.make_split(Split::test, "test", spec.test_docs, 0xc33c);
  result.unlabeled_texts = gen.make_unlabeled();
  return result;
}

}  // namespace crex
