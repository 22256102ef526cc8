#include "nlcox/coxeter_graph.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <utility>

#include <json.hpp>

namespace nlcox {

namespace {

using json = nlohmann::ordered_json;

bool valid_vertex_name(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (std::isspace(static_cast<unsigned char>(c)) || c == '#') return false;
  return true;
}

std::vector<std::string> split_ws(const std::string& line) {
  std::istringstream iss(line);
  std::vector<std::string> out;
  std::string tok;
  while (iss >> tok) out.push_back(tok);
  return out;
}

long long parse_int(const std::string& tok, int line_no) {
  std::size_t pos = 0;
  long long v = 0;
  try {
    v = std::stoll(tok, &pos);
  } catch (const std::exception&) {
    throw GraphError("expected an integer edge label, got '" + tok + "'", line_no);
  }
  if (pos != tok.size())
    throw GraphError("expected an integer edge label, got '" + tok + "'", line_no);
  return v;
}

CoxeterGraph parse_text(std::istream& in) {
  std::optional<CoxeterGraph> g;
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = raw.substr(0, raw.find('#'));
    auto toks = split_ws(line);
    if (toks.empty()) continue;

    if (toks[0] == "vertices:") {
      if (g) throw GraphError("duplicate 'vertices:' line", line_no);
      std::vector<std::string> names(toks.begin() + 1, toks.end());
      if (names.empty()) throw GraphError("'vertices:' line lists no names", line_no);
      try {
        g.emplace(std::move(names));
      } catch (const GraphError& e) {
        throw GraphError(e.what(), line_no);
      }
    } else if (toks[0] == "edge") {
      if (!g) throw GraphError("'edge' line before 'vertices:' line", line_no);
      if (toks.size() != 4)
        throw GraphError("expected 'edge <u> <v> <m>'", line_no);
      auto u = g->index_of(toks[1]);
      auto v = g->index_of(toks[2]);
      if (!u) throw GraphError("unknown vertex '" + toks[1] + "'", line_no);
      if (!v) throw GraphError("unknown vertex '" + toks[2] + "'", line_no);
      const long long m = parse_int(toks[3], line_no);
      if (m < 2 || m > kMaxLabel)
        throw GraphError("edge label must be an integer in [2, 2^31-1], got " + toks[3],
                         line_no);
      try {
        g->set_label(*u, *v, static_cast<int>(m));
      } catch (const GraphError& e) {
        throw GraphError(e.what(), line_no);
      }
    } else {
      throw GraphError("unrecognized line '" + toks[0] + "...'", line_no);
    }
  }
  if (!g) throw GraphError("missing 'vertices:' line");
  return *std::move(g);
}

CoxeterGraph parse_json_graph(std::istream& in) {
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw GraphError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw GraphError("top-level JSON value must be an object");
  for (const auto& [key, value] : doc.items()) {
    (void)value;
    if (key != "vertices" && key != "edges")
      throw GraphError("unknown key '" + key + "'");
  }
  if (!doc.contains("vertices") || !doc["vertices"].is_array())
    throw GraphError("'vertices' must be an array of strings");
  std::vector<std::string> names;
  for (const auto& v : doc["vertices"]) {
    if (!v.is_string()) throw GraphError("'vertices' must be an array of strings");
    names.push_back(v.get<std::string>());
  }
  CoxeterGraph g(std::move(names));
  if (doc.contains("edges")) {
    if (!doc["edges"].is_array()) throw GraphError("'edges' must be an array");
    for (const auto& e : doc["edges"]) {
      if (!e.is_object()) throw GraphError("each edge must be an object");
      for (const auto& [key, value] : e.items()) {
        (void)value;
        if (key != "u" && key != "v" && key != "m")
          throw GraphError("unknown edge key '" + key + "'");
      }
      if (!e.contains("u") || !e.contains("v") || !e.contains("m") ||
          !e["u"].is_string() || !e["v"].is_string() || !e["m"].is_number_integer())
        throw GraphError("each edge needs string 'u', string 'v', integer 'm'");
      auto u = g.index_of(e["u"].get<std::string>());
      auto v = g.index_of(e["v"].get<std::string>());
      if (!u) throw GraphError("unknown vertex '" + e["u"].get<std::string>() + "'");
      if (!v) throw GraphError("unknown vertex '" + e["v"].get<std::string>() + "'");
      const long long m = e["m"].get<long long>();
      if (m < 2 || m > kMaxLabel)
        throw GraphError("edge label must be an integer in [2, 2^31-1], got " +
                         std::to_string(m));
      g.set_label(*u, *v, static_cast<int>(m));
    }
  }
  return g;
}

std::vector<std::vector<int>> components_by(const CoxeterGraph& g,
                                            bool odd_edges_only) {
  const int n = g.size();
  std::vector<int> part(static_cast<std::size_t>(n), -1);
  std::vector<std::vector<int>> out;
  for (int start = 0; start < n; ++start) {
    if (part[static_cast<std::size_t>(start)] >= 0) continue;
    const int id = static_cast<int>(out.size());
    std::vector<int> stack{start}, members;
    part[static_cast<std::size_t>(start)] = id;
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      members.push_back(u);
      for (int v = 0; v < n; ++v) {
        if (v == u || part[static_cast<std::size_t>(v)] >= 0) continue;
        const int m = g.label(u, v);
        if (m < 2) continue;
        if (odd_edges_only && m % 2 == 0) continue;
        part[static_cast<std::size_t>(v)] = id;
        stack.push_back(v);
      }
    }
    std::sort(members.begin(), members.end());
    out.push_back(std::move(members));
  }
  return out;
}

}  // namespace

CoxeterGraph::CoxeterGraph(std::vector<std::string> vertex_names)
    : names_(std::move(vertex_names)) {
  if (names_.empty()) throw GraphError("graph needs at least one vertex");
  for (const auto& name : names_) {
    if (!valid_vertex_name(name))
      throw GraphError("invalid vertex name '" + name + "'");
  }
  for (std::size_t i = 0; i < names_.size(); ++i)
    for (std::size_t j = i + 1; j < names_.size(); ++j)
      if (names_[i] == names_[j])
        throw GraphError("duplicate vertex '" + names_[i] + "'");
  matrix_ = Eigen::MatrixXi::Constant(size(), size(), kInfiniteLabel);
  matrix_.diagonal().setOnes();
}

std::optional<int> CoxeterGraph::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return static_cast<int>(i);
  return std::nullopt;
}

int CoxeterGraph::label(int i, int j) const {
  check_index(i);
  check_index(j);
  if (i == j) return 1;
  return matrix_(i, j);
}

void CoxeterGraph::set_label(int i, int j, int m) {
  check_index(i);
  check_index(j);
  if (i == j)
    throw GraphError("label on self-pair '" + names_[static_cast<std::size_t>(i)] + "'");
  if (m < 2) throw GraphError("edge label must be >= 2, got " + std::to_string(m));
  const int old = matrix_(i, j);
  if (old >= 2 && old != m)
    throw GraphError("conflicting labels " + std::to_string(old) + " and " +
                     std::to_string(m) + " on edge {" +
                     names_[static_cast<std::size_t>(i)] + ", " +
                     names_[static_cast<std::size_t>(j)] + "}");
  matrix_(i, j) = m;
  matrix_(j, i) = m;
}

std::vector<std::array<int, 3>> CoxeterGraph::edges() const {
  std::vector<std::array<int, 3>> out;
  for (int i = 0; i < size(); ++i)
    for (int j = i + 1; j < size(); ++j)
      if (matrix_(i, j) >= 2) out.push_back({i, j, matrix_(i, j)});
  return out;
}

void CoxeterGraph::check_index(int i) const {
  if (i < 0 || i >= size())
    throw GraphError("vertex index " + std::to_string(i) + " out of range");
}

CoxeterGraph parse_graph(std::istream& in, GraphFormat format) {
  return format == GraphFormat::Text ? parse_text(in) : parse_json_graph(in);
}

CoxeterGraph parse_graph(const std::string& text, GraphFormat format) {
  std::istringstream iss(text);
  return parse_graph(iss, format);
}

CoxeterGraph load_graph_file(const std::string& path,
                             std::optional<GraphFormat> format) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open '" + path + "'");
  GraphFormat f = format.value_or(
      path.size() >= 5 && path.substr(path.size() - 5) == ".json" ? GraphFormat::Json
                                                                  : GraphFormat::Text);
  return parse_graph(in, f);
}

std::string serialize_graph(const CoxeterGraph& g, GraphFormat format) {
  if (format == GraphFormat::Text) {
    std::ostringstream out;
    out << "vertices:";
    for (const auto& name : g.vertex_names()) out << ' ' << name;
    out << '\n';
    for (const auto& [i, j, m] : g.edges())
      out << "edge " << g.name(i) << ' ' << g.name(j) << ' ' << m << '\n';
    return out.str();
  }
  json doc;
  doc["vertices"] = g.vertex_names();
  doc["edges"] = json::array();
  for (const auto& [i, j, m] : g.edges())
    doc["edges"].push_back({{"u", g.name(i)}, {"v", g.name(j)}, {"m", m}});
  return doc.dump(2) + "\n";
}

bool is_complete(const CoxeterGraph& g) {
  for (int i = 0; i < g.size(); ++i)
    for (int j = i + 1; j < g.size(); ++j)
      if (!g.has_edge(i, j)) return false;
  return true;
}

bool is_right_angled(const CoxeterGraph& g) {
  for (int i = 0; i < g.size(); ++i)
    for (int j = i + 1; j < g.size(); ++j) {
      const int m = g.label(i, j);
      if (m >= 2 && m != 2) return false;
    }
  return true;
}

std::vector<std::vector<int>> connected_components(const CoxeterGraph& g) {
  return components_by(g, /*odd_edges_only=*/false);
}

std::vector<std::vector<int>> odd_components(const CoxeterGraph& g) {
  return components_by(g, /*odd_edges_only=*/true);
}

Word parse_word(const CoxeterGraph& g, std::string_view text) {
  std::string token;
  std::vector<std::string> tokens;
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c)) || c == ',') {
      if (!token.empty()) tokens.push_back(std::exchange(token, {}));
    } else {
      token.push_back(c);
    }
  }
  if (!token.empty()) tokens.push_back(token);

  Word w;
  for (const auto& tok : tokens) {
    if (auto idx = g.index_of(tok)) {
      w.push_back(*idx);
      continue;
    }
    // Letterwise fallback for single-character vertex names.
    Word expanded;
    bool ok = true;
    for (char c : tok) {
      auto idx = g.index_of(std::string_view(&c, 1));
      if (!idx) {
        ok = false;
        break;
      }
      expanded.push_back(*idx);
    }
    if (!ok) throw UsageError("'" + tok + "' is not a vertex name of the graph");
    w.insert(w.end(), expanded.begin(), expanded.end());
  }
  return w;
}

void check_word(const CoxeterGraph& g, const Word& w) {
  for (int letter : w)
    if (letter < 0 || letter >= g.size())
      throw GraphError("word references invalid vertex index " + std::to_string(letter));
}

std::string word_to_string(const CoxeterGraph& g, const Word& w) {
  std::string out;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (k > 0) out += ' ';
    out += g.name(w[k]);
  }
  return out;
}

}  // namespace nlcox
