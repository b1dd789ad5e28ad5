#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace crex {

struct Token {
  std::string surface;
  std::string pos;
};

enum class EntityKind { event, timex };

std::string to_string(EntityKind k);
EntityKind entity_kind_from_string(const std::string& s);

// Token span is half-open: [start, end).
struct Entity {
  std::string id;
  EntityKind kind = EntityKind::event;
  std::size_t start = 0;
  std::size_t end = 0;

  std::size_t length() const { return end - start; }
};

// Directed CONTAINS edge: source contains target.
struct RelationEdge {
  std::string source;
  std::string target;
};

struct Document {
  std::string id;
  std::vector<Token> tokens;  // token index = position in this vector
  std::vector<Entity> entities;
  std::vector<RelationEdge> relations;

  const Entity* find_entity(const std::string& entity_id) const;
  // Throws with the document id and offending field on any invariant break.
  void validate() const;
};

enum class Split { train, dev, test };

struct Corpus {
  Split split = Split::train;
  std::vector<Document> documents;

  std::size_t total_tokens() const;
  void validate() const;  // per-document checks plus unique document ids
};

// JSON-lines standoff format, one document per line:
//   {"id": ..., "tokens": [{"t": ..., "pos": ...}], "entities": [...],
//    "relations": [...]}
Corpus load_corpus(const std::string& path, Split split = Split::train);
void save_corpus(const Corpus& corpus, const std::string& path);

// Raw unlabeled text: one document per file, plain UTF-8.
std::string read_text_file(const std::string& path);
std::vector<std::string> read_text_dir(const std::string& dir);  // sorted by name

}  // namespace crex
