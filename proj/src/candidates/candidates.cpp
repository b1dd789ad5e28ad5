#include "crex/candidates.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <stdexcept>

namespace crex {

int token_distance(const Entity& e1, const Entity& e2) {
  const bool overlap = e1.start < e2.end && e2.start < e1.end;
  if (overlap) return 0;
  const Entity& first = e1.start <= e2.start ? e1 : e2;
  const Entity& second = e1.start <= e2.start ? e2 : e1;
  return static_cast<int>(second.start - first.end);
}

std::vector<CandidatePair> generate_candidates(const Document& doc, int max_dist) {
  std::vector<const Entity*> order;
  order.reserve(doc.entities.size());
  for (const Entity& e : doc.entities) order.push_back(&e);
  std::sort(order.begin(), order.end(), [](const Entity* a, const Entity* b) {
    return std::tie(a->start, a->end, a->id) < std::tie(b->start, b->end, b->id);
  });

  std::set<std::pair<std::string, std::string>> gold;
  for (const RelationEdge& r : doc.relations) gold.insert({r.source, r.target});

  std::vector<CandidatePair> out;
  for (const Entity* a : order) {
    for (const Entity* b : order) {
      if (a == b) continue;
      if (a->kind == EntityKind::timex && b->kind == EntityKind::timex) continue;
      const int dist = token_distance(*a, *b);
      if (dist > max_dist) continue;
      CandidatePair c;
      c.doc_id = doc.id;
      c.arg1 = a->id;
      c.arg2 = b->id;
      c.kind = (a->kind == EntityKind::event && b->kind == EntityKind::event)
                   ? PairKind::ee
                   : PairKind::te;
      c.distance = dist;
      c.label = gold.count({a->id, b->id}) ? PairLabel::contains : PairLabel::none;
      out.push_back(std::move(c));
    }
  }
  return out;
}

namespace {

// signed token distance from position p to a span, 0 inside
int span_distance(std::size_t p, const Entity& e) {
  if (p < e.start) return static_cast<int>(p) - static_cast<int>(e.start);
  if (p >= e.end) return static_cast<int>(p) - static_cast<int>(e.end - 1);
  return 0;
}

int clip(int v, int bound) { return v < -bound ? -bound : (v > bound ? bound : v); }

}  // namespace

RcInput build_rc_input(const Document& doc, const CandidatePair& pair,
                       const Vocabulary& vocab, int context, int d_clip) {
  if (pair.doc_id != doc.id)
    throw std::invalid_argument("build_rc_input: pair belongs to document \"" +
                                pair.doc_id + "\", not \"" + doc.id + "\"");
  const Entity* a1 = doc.find_entity(pair.arg1);
  const Entity* a2 = doc.find_entity(pair.arg2);
  if (!a1 || !a2)
    throw std::invalid_argument("build_rc_input: pair arguments missing from document");

  const Entity& first = a1->start <= a2->start ? *a1 : *a2;
  const Entity& last = a1->start <= a2->start ? *a2 : *a1;
  const std::size_t win_lo =
      first.start > static_cast<std::size_t>(context) ? first.start - context : 0;
  const std::size_t win_hi =
      std::min(doc.tokens.size(), last.end + static_cast<std::size_t>(context));

  // tag insertion points at token boundaries; closers sort before openers
  struct Tag {
    std::size_t boundary;
    int priority;
    std::int32_t token_index;
    std::size_t inherit_from;  // original token position for pf values
  };
  std::vector<Tag> tags = {
      {a1->end, 0, Vocabulary::kArg1CloseIndex, a1->end - 1},
      {a2->end, 1, Vocabulary::kArg2CloseIndex, a2->end - 1},
      {a1->start, 2, Vocabulary::kArg1OpenIndex, a1->start},
      {a2->start, 3, Vocabulary::kArg2OpenIndex, a2->start},
  };
  std::sort(tags.begin(), tags.end(), [](const Tag& x, const Tag& y) {
    return std::tie(x.boundary, x.priority) < std::tie(y.boundary, y.priority);
  });

  RcInput input;
  const std::size_t reserve = win_hi - win_lo + 4;
  input.tokens.reserve(reserve);
  input.pos.reserve(reserve);
  input.pf1.reserve(reserve);
  input.pf2.reserve(reserve);

  auto emit_pf = [&](std::size_t original_pos) {
    input.pf1.push_back(clip(span_distance(original_pos, *a1), d_clip) + d_clip);
    input.pf2.push_back(clip(span_distance(original_pos, *a2), d_clip) + d_clip);
  };
  auto emit_tag = [&](const Tag& t) {
    input.tokens.push_back(t.token_index);
    input.pos.push_back(Vocabulary::kPosIndicatorIndex);
    emit_pf(t.inherit_from);
  };
  auto emit_token = [&](std::size_t p) {
    input.tokens.push_back(vocab.encode(doc.tokens[p].surface));
    input.pos.push_back(vocab.encode_pos(doc.tokens[p].pos));
    emit_pf(p);
  };

  std::size_t next_tag = 0;
  for (std::size_t p = win_lo; p < win_hi; ++p) {
    while (next_tag < tags.size() && tags[next_tag].boundary == p) emit_tag(tags[next_tag++]);
    emit_token(p);
  }
  while (next_tag < tags.size()) emit_tag(tags[next_tag++]);

  return input;
}

void save_candidates_csv(const std::string& path,
                         const std::vector<CandidatePair>& candidates) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write candidates csv: " + path);
  out << "doc_id,arg1,arg2,kind,distance,label\n";
  for (const CandidatePair& c : candidates) {
    out << c.doc_id << ',' << c.arg1 << ',' << c.arg2 << ','
        << (c.kind == PairKind::ee ? "EE" : "TE") << ',' << c.distance << ','
        << (c.label == PairLabel::contains ? "CONTAINS" : "NONE") << '\n';
  }
}

CandidateStats candidate_stats(const Corpus& corpus, int max_dist) {
  CandidateStats stats;
  for (const Document& doc : corpus.documents) {
    const auto candidates = generate_candidates(doc, max_dist);
    stats.candidates += candidates.size();
    std::set<std::pair<std::string, std::string>> reachable;
    for (const CandidatePair& c : candidates) {
      if (c.label == PairLabel::contains) {
        ++stats.positives;
        reachable.insert({c.arg1, c.arg2});
      }
    }
    stats.gold_relations += doc.relations.size();
    for (const RelationEdge& r : doc.relations)
      if (reachable.count({r.source, r.target})) ++stats.gold_reachable;
  }
  return stats;
}

}  // namespace crex
