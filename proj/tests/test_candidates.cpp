#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "crex/candidates.hpp"
#include "crex/synth.hpp"

using namespace crex;

namespace {

Entity ev(const std::string& id, std::size_t start, std::size_t end) {
  return Entity{id, EntityKind::event, start, end};
}

Entity tx(const std::string& id, std::size_t start, std::size_t end) {
  return Entity{id, EntityKind::timex, start, end};
}

Document doc_with(std::size_t n_tokens, std::vector<Entity> entities,
                  std::vector<RelationEdge> relations = {}) {
  Document d;
  d.id = "doc";
  for (std::size_t i = 0; i < n_tokens; ++i)
    d.tokens.push_back({"w" + std::to_string(i), "NN"});
  d.entities = std::move(entities);
  d.relations = std::move(relations);
  d.validate();
  return d;
}

Vocabulary doc_vocab(const Document& d) {
  Corpus c;
  c.documents.push_back(d);
  PreprocessConfig cfg;
  cfg.min_token_frequency = 1;
  return Vocabulary::build(c, {}, cfg);
}

}  // namespace

TEST_CASE("token distance counts tokens strictly between spans") {
  CHECK(token_distance(ev("a", 2, 3), ev("b", 3, 4)) == 0);   // adjacent
  CHECK(token_distance(ev("a", 0, 1), ev("b", 5, 6)) == 4);   // tokens 1..4
  CHECK(token_distance(ev("a", 4, 6), ev("b", 5, 8)) == 0);   // overlap
  CHECK(token_distance(ev("b", 5, 6), ev("a", 0, 1)) == 4);   // symmetric
  CHECK(token_distance(ev("a", 0, 3), ev("b", 3, 4)) == 0);
}

TEST_CASE("candidate generation enumerates ordered pairs within distance") {
  // two events within reach: both orders
  {
    Document d = doc_with(10, {ev("e1", 1, 2), ev("e2", 4, 5)});
    auto cands = generate_candidates(d);
    REQUIRE(cands.size() == 2);
    CHECK(cands[0].arg1 == "e1");
    CHECK(cands[0].arg2 == "e2");
    CHECK(cands[1].arg1 == "e2");
    CHECK(cands[1].arg2 == "e1");
    CHECK(cands[0].kind == PairKind::ee);
    CHECK(cands[0].distance == 2);
  }
  // distance 31: nothing
  {
    Document d = doc_with(40, {ev("e1", 0, 1), ev("e2", 32, 33)});
    CHECK(generate_candidates(d).empty());
    CHECK(generate_candidates(d, 31).size() == 2);
  }
  // event + adjacent timex: two TE candidates
  {
    Document d = doc_with(5, {ev("e1", 1, 2), tx("t1", 2, 3)});
    auto cands = generate_candidates(d);
    REQUIRE(cands.size() == 2);
    CHECK(cands[0].kind == PairKind::te);
    CHECK(cands[1].kind == PairKind::te);
  }
  // timex pairs are not candidates
  {
    Document d = doc_with(5, {tx("t1", 0, 1), tx("t2", 2, 3)});
    CHECK(generate_candidates(d).empty());
  }
  // no entities
  CHECK(generate_candidates(doc_with(3, {})).empty());
}

TEST_CASE("candidate counts match E(E-1) + 2EX on dense fixtures") {
  for (std::size_t E = 0; E <= 4; ++E) {
    for (std::size_t X = 0; X <= 4; ++X) {
      if (E + X == 0) continue;
      std::vector<Entity> ents;
      for (std::size_t i = 0; i < E; ++i)
        ents.push_back(ev("e" + std::to_string(i), i * 2, i * 2 + 1));
      for (std::size_t i = 0; i < X; ++i)
        ents.push_back(tx("t" + std::to_string(i), (E + i) * 2, (E + i) * 2 + 1));
      Document d = doc_with((E + X) * 2, ents);
      const auto cands = generate_candidates(d);
      CHECK(cands.size() == E * (E - (E ? 1 : 0)) + 2 * E * X);

      // brute force double check
      std::size_t brute = 0;
      for (const auto& a : ents)
        for (const auto& b : ents) {
          if (a.id == b.id) continue;
          if (a.kind == EntityKind::timex && b.kind == EntityKind::timex) continue;
          if (token_distance(a, b) <= 30) ++brute;
        }
      CHECK(cands.size() == brute);
    }
  }
}

TEST_CASE("labels come from gold edges") {
  Document d = doc_with(10, {ev("e1", 1, 2), ev("e2", 4, 5)}, {{"e1", "e2"}});
  auto cands = generate_candidates(d);
  REQUIRE(cands.size() == 2);
  CHECK(cands[0].label == PairLabel::contains);  // e1 -> e2
  CHECK(cands[1].label == PairLabel::none);      // e2 -> e1
}

TEST_CASE("rc input layout, tags, and position features") {
  // single-token arguments at 3 and 5 in a 9-token document
  Document d = doc_with(9, {ev("e1", 3, 4), ev("e2", 5, 6)});
  Vocabulary vocab = doc_vocab(d);
  CandidatePair pair{"doc", "e1", "e2", PairKind::ee, PairLabel::none, 1};

  RcInput in = build_rc_input(d, pair, vocab, 10, 40);
  REQUIRE(in.length() == 13);  // 9 tokens + 4 tags
  CHECK(in.pos.size() == 13);
  CHECK(in.pf1.size() == 13);
  CHECK(in.pf2.size() == 13);

  // stripped of tags, the window is the contiguous document slice
  std::vector<std::int32_t> stripped;
  for (std::size_t i = 0; i < in.length(); ++i) {
    const auto t = in.tokens[i];
    if (t == Vocabulary::kArg1OpenIndex || t == Vocabulary::kArg1CloseIndex ||
        t == Vocabulary::kArg2OpenIndex || t == Vocabulary::kArg2CloseIndex) {
      CHECK(in.pos[i] == Vocabulary::kPosIndicatorIndex);
      continue;
    }
    stripped.push_back(t);
  }
  REQUIRE(stripped.size() == 9);
  for (std::size_t i = 0; i < 9; ++i)
    CHECK(stripped[i] == vocab.encode(d.tokens[i].surface));

  // tag order around the arguments
  CHECK(in.tokens[3] == Vocabulary::kArg1OpenIndex);
  CHECK(in.tokens[4] == vocab.encode("w3"));
  CHECK(in.tokens[5] == Vocabulary::kArg1CloseIndex);
  CHECK(in.tokens[7] == Vocabulary::kArg2OpenIndex);
  CHECK(in.tokens[8] == vocab.encode("w5"));
  CHECK(in.tokens[9] == Vocabulary::kArg2CloseIndex);

  // pf values: inside own span -> 0 (stored shifted by +40)
  CHECK(in.pf1[4] == 40);
  CHECK(in.pf2[8] == 40);
  // tags inherit the adjacent boundary's distances
  CHECK(in.pf1[3] == 40);
  CHECK(in.pf1[5] == 40);
  CHECK(in.pf2[3] == 40 - 2);  // arg1 token sits 2 left of arg2
  // first document token: 3 left of arg1, 5 left of arg2
  CHECK(in.pf1[0] == 40 - 3);
  CHECK(in.pf2[0] == 40 - 5);
  // last document token: 5 right of arg1's end token, 3 right of arg2's
  CHECK(in.pf1[12] == 40 + 5);
  CHECK(in.pf2[12] == 40 + 3);
}

TEST_CASE("rc input window truncates and clips") {
  // argument at position 50, another at 55, in a 120-token document
  std::vector<Entity> ents = {ev("e1", 50, 51), ev("e2", 55, 56)};
  Document d = doc_with(120, ents);
  Vocabulary vocab = doc_vocab(d);
  CandidatePair pair{"doc", "e1", "e2", PairKind::ee, PairLabel::none, 4};

  RcInput in = build_rc_input(d, pair, vocab, 10, 40);
  // window [40, 66) -> 26 tokens + 4 tags
  CHECK(in.length() == 30);

  // clipping: token 50 positions left of arg1 with d_clip 40 -> pf1 = -40
  CandidatePair wide{"doc", "e1", "e2", PairKind::ee, PairLabel::none, 4};
  RcInput in2 = build_rc_input(d, wide, vocab, 60, 40);
  CHECK(in2.pf1.front() == 0);  // -40 shifted by +40

  // context 2: window [48, 58) -> 10 tokens + 4 tags; length >= 5 invariant
  RcInput in3 = build_rc_input(d, pair, vocab, 2, 40);
  CHECK(in3.length() == 14);
  CHECK(in3.length() >= 5);

  // mismatched document
  Document other = doc_with(10, {ev("e1", 0, 1), ev("e2", 2, 3)});
  other.id = "other";
  CHECK_THROWS(build_rc_input(other, pair, vocab));
}

TEST_CASE("multi-token and adjacent arguments keep a well-formed tag nest") {
  Document d = doc_with(12, {ev("e1", 2, 4), ev("e2", 4, 6)});
  Vocabulary vocab = doc_vocab(d);
  CandidatePair pair{"doc", "e2", "e1", PairKind::ee, PairLabel::none, 0};
  RcInput in = build_rc_input(d, pair, vocab, 3, 40);
  // arg2 here is e1 (textually first): <a2> w2 w3 </a2> <a1> w4 w5 </a1>
  std::vector<std::int32_t> tags;
  for (auto t : in.tokens)
    if (t >= Vocabulary::kArg1OpenIndex && t <= Vocabulary::kArg2CloseIndex)
      tags.push_back(t);
  CHECK(tags == std::vector<std::int32_t>{
                    Vocabulary::kArg2OpenIndex, Vocabulary::kArg2CloseIndex,
                    Vocabulary::kArg1OpenIndex, Vocabulary::kArg1CloseIndex});
  CHECK(in.length() == 13);  // window [0, 9) gives 9 tokens, plus 4 tags
}

TEST_CASE("synthetic default spec hits the class ratio and recall ceiling") {
  SynthResult synth = generate_synthetic(SynthSpec::defaults(), 7);
  CandidateStats stats = candidate_stats(synth.train);
  MESSAGE("candidates=", stats.candidates, " positives=", stats.positives,
          " neg:pos=1:", stats.negative_per_positive(),
          " ceiling=", stats.recall_ceiling());
  CHECK(stats.negative_per_positive() > 36.0 * 0.8);
  CHECK(stats.negative_per_positive() < 36.0 * 1.2);
  CHECK(stats.recall_ceiling() >= 0.87);
  CHECK(stats.recall_ceiling() < 1.0);  // some gold stays out of reach
}
