#include "crex/corpus.hpp"

#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace crex {

using json = nlohmann::ordered_json;
namespace fs = std::filesystem;

std::string to_string(EntityKind k) {
  return k == EntityKind::event ? "EVENT" : "TIMEX3";
}

EntityKind entity_kind_from_string(const std::string& s) {
  if (s == "EVENT") return EntityKind::event;
  if (s == "TIMEX3") return EntityKind::timex;
  throw std::runtime_error("unknown entity kind: " + s);
}

const Entity* Document::find_entity(const std::string& entity_id) const {
  for (const Entity& e : entities)
    if (e.id == entity_id) return &e;
  return nullptr;
}

void Document::validate() const {
  auto fail = [this](const std::string& what) {
    throw std::runtime_error("document \"" + id + "\": " + what);
  };
  if (id.empty()) fail("empty id");
  for (std::size_t i = 0; i < tokens.size(); ++i)
    if (tokens[i].surface.empty()) fail("token " + std::to_string(i) + ": empty surface");
  std::set<std::string> ids;
  for (const Entity& e : entities) {
    if (!ids.insert(e.id).second) fail("entity \"" + e.id + "\": duplicate id");
    if (e.start >= e.end)
      fail("entity \"" + e.id + "\": empty span");
    if (e.end > tokens.size())
      fail("entity \"" + e.id + "\": span end " + std::to_string(e.end) +
           " exceeds token count " + std::to_string(tokens.size()));
  }
  for (const RelationEdge& r : relations) {
    if (r.source == r.target) fail("relation with source == target: \"" + r.source + "\"");
    if (!ids.count(r.source))
      fail("relation source \"" + r.source + "\" does not resolve to an entity");
    if (!ids.count(r.target))
      fail("relation target \"" + r.target + "\" does not resolve to an entity");
  }
}

std::size_t Corpus::total_tokens() const {
  std::size_t n = 0;
  for (const auto& d : documents) n += d.tokens.size();
  return n;
}

void Corpus::validate() const {
  std::set<std::string> ids;
  for (const Document& d : documents) {
    d.validate();
    if (!ids.insert(d.id).second)
      throw std::runtime_error("corpus: duplicate document id \"" + d.id + "\"");
  }
}

namespace {

Document parse_document(const json& j, std::size_t line_no) {
  Document doc;
  std::string where = "line " + std::to_string(line_no);
  try {
    doc.id = j.at("id").get<std::string>();
    where = "document \"" + doc.id + "\"";
    for (const auto& t : j.at("tokens")) {
      Token tok;
      tok.surface = t.at("t").get<std::string>();
      tok.pos = t.at("pos").get<std::string>();
      doc.tokens.push_back(std::move(tok));
    }
    for (const auto& e : j.at("entities")) {
      Entity ent;
      ent.id = e.at("id").get<std::string>();
      ent.kind = entity_kind_from_string(e.at("kind").get<std::string>());
      const auto start = e.at("start").get<long long>();
      const auto end = e.at("end").get<long long>();
      if (start < 0 || end < 0)
        throw std::runtime_error("entity \"" + ent.id + "\": negative span field");
      ent.start = static_cast<std::size_t>(start);
      ent.end = static_cast<std::size_t>(end);
      doc.entities.push_back(std::move(ent));
    }
    for (const auto& r : j.at("relations")) {
      if (r.at("label").get<std::string>() != "CONTAINS")
        throw std::runtime_error("relation field \"label\" must be CONTAINS");
      doc.relations.push_back(
          {r.at("source").get<std::string>(), r.at("target").get<std::string>()});
    }
  } catch (const json::exception& e) {
    throw std::runtime_error("corpus load: " + where + ": " + e.what());
  } catch (const std::runtime_error& e) {
    throw std::runtime_error("corpus load: " + where + ": " + e.what());
  }
  doc.validate();
  return doc;
}

}  // namespace

Corpus load_corpus(const std::string& path, Split split) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open corpus file: " + path);
  Corpus corpus;
  corpus.split = split;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    json j;
    try {
      j = json::parse(line);
    } catch (const json::exception& e) {
      throw std::runtime_error("corpus load: " + path + " line " +
                               std::to_string(line_no) + ": " + e.what());
    }
    corpus.documents.push_back(parse_document(j, line_no));
  }
  corpus.validate();
  return corpus;
}

void save_corpus(const Corpus& corpus, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write corpus file: " + path);
  for (const Document& d : corpus.documents) {
    json j;
    j["id"] = d.id;
    j["tokens"] = json::array();
    for (const Token& t : d.tokens) j["tokens"].push_back({{"t", t.surface}, {"pos", t.pos}});
    j["entities"] = json::array();
    for (const Entity& e : d.entities)
      j["entities"].push_back({{"id", e.id},
                               {"kind", to_string(e.kind)},
                               {"start", e.start},
                               {"end", e.end}});
    j["relations"] = json::array();
    for (const RelationEdge& r : d.relations)
      j["relations"].push_back(
          {{"source", r.source}, {"target", r.target}, {"label", "CONTAINS"}});
    out << j.dump() << "\n";
  }
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open text file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::string> read_text_dir(const std::string& dir) {
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir))
    if (entry.is_regular_file() && entry.path().extension() == ".txt")
      files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  std::vector<std::string> texts;
  texts.reserve(files.size());
  for (const auto& f : files) texts.push_back(read_text_file(f.string()));
  return texts;
}

}  // namespace crex
