#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "crex/corpus.hpp"
#include "crex/vocab.hpp"

namespace crex {

enum class PairKind { ee, te };
enum class PairLabel { contains, none };

struct CandidatePair {
  std::string doc_id;
  std::string arg1;  // candidate container
  std::string arg2;  // candidate containee
  PairKind kind = PairKind::ee;
  PairLabel label = PairLabel::none;
  int distance = 0;
};

// Encoded classifier input.  The four sequences are aligned and include the
// indicator tags; tag positions carry the reserved POS index and inherit the
// position-feature values of the adjacent argument boundary token.
struct RcInput {
  std::vector<std::int32_t> tokens;
  std::vector<std::int32_t> pos;
  std::vector<std::int32_t> pf1;  // clipped signed distance to arg1, shifted by +D_clip
  std::vector<std::int32_t> pf2;

  std::size_t length() const { return tokens.size(); }
};

// Tokens strictly between the two spans; 0 for adjacent or overlapping.
int token_distance(const Entity& e1, const Entity& e2);

// All ordered EVENT x EVENT and TIMEX3<->EVENT pairs within max_dist,
// labeled against the document's gold edges.  Entities are visited in
// document order (span start, span end, id).
std::vector<CandidatePair> generate_candidates(const Document& doc, int max_dist = 30);

// Window of `context` tokens around the argument pair (always covering the
// tokens between them), with <a1>...</a1> / <a2>...</a2> spliced around the
// arguments and position features clipped to +-d_clip.
RcInput build_rc_input(const Document& doc, const CandidatePair& pair,
                       const Vocabulary& vocab, int context = 10, int d_clip = 40);

// Debug dump: doc id, arg1, arg2, kind, distance, label.
void save_candidates_csv(const std::string& path,
                         const std::vector<CandidatePair>& candidates);

struct CandidateStats {
  std::size_t candidates = 0;
  std::size_t positives = 0;
  std::size_t gold_relations = 0;
  std::size_t gold_reachable = 0;  // gold edges that appear as a candidate

  double negative_per_positive() const {
    return positives ? double(candidates - positives) / double(positives) : 0.0;
  }
  double recall_ceiling() const {
    return gold_relations ? double(gold_reachable) / double(gold_relations) : 1.0;
  }
};

CandidateStats candidate_stats(const Corpus& corpus, int max_dist = 30);

}  // namespace crex
