#include "core/graph_io.hpp"

#include <fstream>
#include <sstream>
#include <unordered_map>

#include <json.hpp>

#include "core/error.hpp"

namespace reeb {

namespace {

std::vector<std::string_view> split_words(std::string_view line) {
  std::vector<std::string_view> words;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) words.push_back(line.substr(start, i - start));
  }
  return words;
}

}  // namespace

ReebGraph parse_graph_text(std::string_view text) {
  std::vector<Vertex> vertices;
  std::vector<Edge> edges;
  std::unordered_map<std::string, VertexIndex> index;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    std::vector<std::string_view> words = split_words(line);
    if (words.empty()) continue;
    if (words[0] == "v") {
      if (words.size() != 3) throw ParseError(line_no, "expected 'v <id> <value>'");
      std::string id(words[1]);
      if (index.count(id)) throw ParseError(line_no, "duplicate vertex id '" + id + "'");
      Rational value;
      try {
        value = parse_rational(words[2]);
      } catch (const ParseError& e) {
        throw ParseError(line_no, e.what());
      }
      index.emplace(id, vertices.size());
      vertices.push_back({std::move(id), std::move(value)});
    } else if (words[0] == "e") {
      if (words.size() != 3) throw ParseError(line_no, "expected 'e <id> <id>'");
      auto a = index.find(std::string(words[1]));
      auto b = index.find(std::string(words[2]));
      if (a == index.end()) throw ParseError(line_no, "unknown vertex '" + std::string(words[1]) + "'");
      if (b == index.end()) throw ParseError(line_no, "unknown vertex '" + std::string(words[2]) + "'");
      edges.push_back({a->second, b->second});
    } else {
      throw ParseError(line_no, "unknown record '" + std::string(words[0]) + "'");
    }
    if (end == text.size()) break;
  }
  return ReebGraph(std::move(vertices), std::move(edges));
}

std::string format_graph_text(const ReebGraph& g) {
  std::ostringstream out;
  if (!g.name().empty()) out << "# " << g.name() << '\n';
  for (const Vertex& v : g.vertices()) out << "v " << v.id << ' ' << format_rational(v.value) << '\n';
  for (const Edge& e : g.edges()) out << "e " << g.vertex(e.a).id << ' ' << g.vertex(e.b).id << '\n';
  return out.str();
}

ReebGraph parse_graph_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(e.what());
  }
  try {
    std::vector<Vertex> vertices;
    std::vector<Edge> edges;
    std::unordered_map<std::string, VertexIndex> index;
    for (const auto& v : doc.at("vertices")) {
      std::string id = v.at("id").get<std::string>();
      const auto& raw = v.at("value");
      Rational value = raw.is_string() ? parse_rational(raw.get<std::string>()) : parse_rational(raw.dump());
      if (!index.emplace(id, vertices.size()).second) throw ParseError("duplicate vertex id '" + id + "'");
      vertices.push_back({std::move(id), std::move(value)});
    }
    for (const auto& e : doc.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw ParseError("edges must be [id, id] pairs");
      auto a = index.find(e[0].get<std::string>());
      auto b = index.find(e[1].get<std::string>());
      if (a == index.end() || b == index.end()) throw ParseError("edge references an unknown vertex");
      edges.push_back({a->second, b->second});
    }
    std::string name = doc.value("name", std::string{});
    return ReebGraph(std::move(vertices), std::move(edges), std::move(name));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(e.what());
  }
}

std::string format_graph_json(const ReebGraph& g) {
  nlohmann::json doc;
  doc["name"] = g.name();
  doc["vertices"] = nlohmann::json::array();
  for (const Vertex& v : g.vertices()) doc["vertices"].push_back({{"id", v.id}, {"value", format_rational(v.value)}});
  doc["edges"] = nlohmann::json::array();
  for (const Edge& e : g.edges()) doc["edges"].push_back({g.vertex(e.a).id, g.vertex(e.b).id});
  return doc.dump(2) + "\n";
}

ReebGraph parse_graph(std::string_view text) {
  std::size_t first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') return parse_graph_json(text);
  return parse_graph_text(text);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Io, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::Io, "cannot write '" + path + "'");
  out << contents;
}

ReebGraph load_graph(const std::string& path) {
  ReebGraph g = parse_graph(read_file(path));
  if (g.name().empty()) {
    std::string base = path.substr(path.find_last_of('/') + 1);
    return g.with_name(base);
  }
  return g;
}

}  // namespace reeb
