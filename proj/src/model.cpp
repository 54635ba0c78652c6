#include "solk/model.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include "solk/errors.hpp"

namespace solk {

std::size_t Graph::add_vertex(std::string name) {
  vertices_.push_back(std::move(name));
  return vertices_.size() - 1;
}

std::size_t Graph::add_edge(std::string name, std::size_t source, std::size_t target) {
  edges_.push_back({std::move(name), source, target});
  return edges_.size() - 1;
}

std::optional<std::size_t> Graph::find_vertex(std::string_view name) const {
  auto it = std::find(vertices_.begin(), vertices_.end(), name);
  if (it == vertices_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - vertices_.begin());
}

std::optional<std::size_t> Graph::find_edge(std::string_view name) const {
  auto it = std::find_if(edges_.begin(), edges_.end(),
                         [&](const Edge& e) { return e.name == name; });
  if (it == edges_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - edges_.begin());
}

std::size_t Dart::start(const Graph& g) const {
  const Edge& e = g.edges().at(edge);
  return forward ? e.source : e.target;
}

std::size_t Dart::end(const Graph& g) const {
  const Edge& e = g.edges().at(edge);
  return forward ? e.target : e.source;
}

std::string Dart::label(const Graph& g) const {
  return forward ? g.edges().at(edge).name : "~" + g.edges().at(edge).name;
}

std::optional<std::size_t> EdgePath::discontinuity(const Graph& g) const {
  for (std::size_t i = 0; i + 1 < darts.size(); ++i) {
    if (darts[i].end(g) != darts[i + 1].start(g)) return i;
  }
  return std::nullopt;
}

EdgePath EdgePath::reversed() const {
  EdgePath out;
  for (auto it = darts.rbegin(); it != darts.rend(); ++it) out.darts.push_back(it->reversed());
  return out;
}

void ValidationReport::add(Severity s, std::string code, std::string message) {
  if (s == Severity::error) ok = false;
  findings.push_back({s, std::move(code), std::move(message)});
}

bool ValidationReport::has(std::string_view code) const {
  return std::any_of(findings.begin(), findings.end(),
                     [&](const Finding& f) { return f.code == code; });
}

std::size_t ValidationReport::warning_count() const {
  return static_cast<std::size_t>(std::count_if(
      findings.begin(), findings.end(), [](const Finding& f) { return f.severity == Severity::warning; }));
}

namespace {

std::vector<std::string> tokenize(const std::string& line) {
  std::string body = line.substr(0, line.find('#'));
  std::istringstream is(body);
  std::vector<std::string> out;
  std::string tok;
  while (is >> tok) out.push_back(tok);
  return out;
}

bool valid_name(const std::string& s) {
  return !s.empty() && s[0] != '~' && s != "->";
}

}  // namespace

Presentation parse_presentation(std::istream& in) {
  Presentation p;
  std::vector<std::optional<EdgePath>> maps;
  std::vector<std::size_t> map_lines;
  std::vector<std::optional<std::size_t>> vmap;
  std::vector<std::size_t> vmap_lines;
  std::vector<std::size_t> vertex_lines;
  std::vector<std::size_t> edge_lines;
  bool seen_header = false;

  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto tok = tokenize(line);
    if (tok.empty()) continue;
    if (!seen_header) {
      if (tok.size() != 2 || tok[0] != "solenoid" || tok[1] != "v1") {
        throw ParseError(lineno, "expected header 'solenoid v1'");
      }
      seen_header = true;
      continue;
    }
    const std::string& kw = tok[0];
    if (kw == "vertex") {
      if (tok.size() != 2 || !valid_name(tok[1])) throw ParseError(lineno, "malformed vertex line");
      if (p.graph.find_vertex(tok[1])) throw ParseError(lineno, "duplicate vertex '" + tok[1] + "'");
      p.graph.add_vertex(tok[1]);
      vmap.emplace_back();
      vmap_lines.push_back(0);
      vertex_lines.push_back(lineno);
    } else if (kw == "edge") {
      if (tok.size() != 4 || !valid_name(tok[1])) throw ParseError(lineno, "malformed edge line");
      if (p.graph.find_edge(tok[1])) throw ParseError(lineno, "duplicate edge '" + tok[1] + "'");
      auto s = p.graph.find_vertex(tok[2]);
      auto t = p.graph.find_vertex(tok[3]);
      if (!s) throw ParseError(lineno, "unknown vertex '" + tok[2] + "'");
      if (!t) throw ParseError(lineno, "unknown vertex '" + tok[3] + "'");
      p.graph.add_edge(tok[1], *s, *t);
      maps.emplace_back();
      map_lines.push_back(0);
      edge_lines.push_back(lineno);
    } else if (kw == "map") {
      if (tok.size() < 4 || tok[2] != "->") throw ParseError(lineno, "malformed map line");
      auto e = p.graph.find_edge(tok[1]);
      if (!e) throw ParseError(lineno, "unknown edge '" + tok[1] + "'");
      if (maps[*e]) throw ParseError(lineno, "duplicate map for edge '" + tok[1] + "'");
      EdgePath path;
      for (std::size_t i = 3; i < tok.size(); ++i) {
        bool forward = tok[i][0] != '~';
        std::string name = forward ? tok[i] : tok[i].substr(1);
        auto d = p.graph.find_edge(name);
        if (!d) throw ParseError(lineno, "unknown edge '" + name + "'");
        path.darts.push_back({*d, forward});
      }
      if (auto gap = path.discontinuity(p.graph)) {
        throw ParseError(lineno, "path discontinuity between '" + path.darts[*gap].label(p.graph) +
                                     "' and '" + path.darts[*gap + 1].label(p.graph) + "'");
      }
      maps[*e] = std::move(path);
      map_lines[*e] = lineno;
    } else if (kw == "vmap") {
      if (tok.size() != 4 || tok[2] != "->") throw ParseError(lineno, "malformed vmap line");
      auto v = p.graph.find_vertex(tok[1]);
      auto w = p.graph.find_vertex(tok[3]);
      if (!v) throw ParseError(lineno, "unknown vertex '" + tok[1] + "'");
      if (!w) throw ParseError(lineno, "unknown vertex '" + tok[3] + "'");
      if (vmap[*v]) throw ParseError(lineno, "duplicate vmap for vertex '" + tok[1] + "'");
      vmap[*v] = *w;
      vmap_lines[*v] = lineno;
    } else {
      throw ParseError(lineno, "unknown keyword '" + kw + "'");
    }
  }
  if (!seen_header) throw ParseError(lineno, "missing header 'solenoid v1'");
  if (p.graph.vertex_count() == 0) throw ParseError(lineno, "no vertices declared");
  if (p.graph.edge_count() == 0) throw ParseError(lineno, "no edges declared");

  for (std::size_t e = 0; e < maps.size(); ++e) {
    if (!maps[e]) throw ParseError(edge_lines[e], "edge '" + p.edge_name(e) + "' has no map");
    p.edge_map.push_back(std::move(*maps[e]));
  }

  // Missing vmap entries are inferred from image endpoints; conflicts are
  // left for validate() to report.
  for (std::size_t e = 0; e < p.graph.edge_count(); ++e) {
    const Edge& edge = p.graph.edges()[e];
    const EdgePath& img = p.edge_map[e];
    if (!vmap[edge.source]) vmap[edge.source] = img.first().start(p.graph);
    if (!vmap[edge.target]) vmap[edge.target] = img.last().end(p.graph);
  }
  for (std::size_t v = 0; v < vmap.size(); ++v) {
    if (!vmap[v]) {
      throw ParseError(vertex_lines[v],
                       "cannot infer vmap for isolated vertex '" + p.vertex_name(v) + "'");
    }
    p.vertex_map.push_back(*vmap[v]);
  }
  return p;
}

Presentation parse_presentation(std::string_view text) {
  std::istringstream is{std::string(text)};
  return parse_presentation(is);
}

Presentation load_presentation(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open '" + path + "'");
  return parse_presentation(in);
}

std::string serialize_presentation(const Presentation& p) {
  std::ostringstream os;
  os << "solenoid v1\n";
  for (const auto& v : p.graph.vertices()) os << "vertex " << v << '\n';
  for (const auto& e : p.graph.edges()) {
    os << "edge " << e.name << ' ' << p.vertex_name(e.source) << ' ' << p.vertex_name(e.target)
       << '\n';
  }
  for (std::size_t e = 0; e < p.edge_map.size(); ++e) {
    os << "map " << p.edge_name(e) << " ->";
    for (const auto& d : p.edge_map[e].darts) os << ' ' << d.label(p.graph);
    os << '\n';
  }
  for (std::size_t v = 0; v < p.vertex_map.size(); ++v) {
    os << "vmap " << p.vertex_name(v) << " -> " << p.vertex_name(p.vertex_map[v]) << '\n';
  }
  return os.str();
}

IntMatrix abelianization(const Presentation& p) {
  const std::size_t n = p.graph.edge_count();
  IntMatrix m(n, n);
  for (std::size_t e = 0; e < n; ++e)
    for (const auto& d : p.edge_map.at(e).darts) m(d.edge, e) += 1;
  return m;
}

bool is_primitive(const IntMatrix& m) {
  if (!m.is_square() || m.rows() == 0) return false;
  const std::size_t n = m.rows();
  // Work with the 0/1 support pattern so entries stay small.
  IntMatrix support(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (m(i, j) < 0) return false;
      support(i, j) = m(i, j) > 0 ? 1 : 0;
    }
  IntMatrix power = support;
  for (std::size_t k = 1; k <= n * n; ++k) {
    bool positive = std::all_of(power.entries().begin(), power.entries().end(),
                                [](const Int& v) { return v > 0; });
    if (positive) return true;
    power = power * support;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (power(i, j) > 0) power(i, j) = 1;
  }
  return false;
}

ValidationReport validate(const Presentation& p) {
  ValidationReport report;
  const Graph& g = p.graph;
  const std::size_t ne = g.edge_count();

  if (p.edge_map.size() != ne || p.vertex_map.size() != g.vertex_count()) {
    report.add(Severity::error, std::string(finding::kShape),
               "edge map or vertex map does not cover the graph");
    return report;
  }
  for (std::size_t v = 0; v < p.vertex_map.size(); ++v) {
    if (p.vertex_map[v] >= g.vertex_count()) {
      report.add(Severity::error, std::string(finding::kShape), "vertex map out of range");
      return report;
    }
  }
  for (std::size_t e = 0; e < ne; ++e) {
    const EdgePath& img = p.edge_map[e];
    bool in_range = std::all_of(img.darts.begin(), img.darts.end(),
                                [&](const Dart& d) { return d.edge < ne; });
    if (img.darts.empty() || !in_range) {
      report.add(Severity::error, std::string(finding::kShape),
                 "image of '" + p.edge_name(e) + "' is empty or references an unknown edge");
      return report;
    }
  }

  // (a) continuity and endpoint compatibility
  for (std::size_t e = 0; e < ne; ++e) {
    const Edge& edge = g.edges()[e];
    const EdgePath& img = p.edge_map[e];
    if (auto gap = img.discontinuity(g)) {
      report.add(Severity::error, std::string(finding::kPathDiscontinuous),
                 "image of '" + edge.name + "' breaks after dart " + std::to_string(*gap + 1));
      continue;
    }
    if (img.first().start(g) != p.vertex_map[edge.source] ||
        img.last().end(g) != p.vertex_map[edge.target]) {
      report.add(Severity::error, std::string(finding::kEndpointMismatch),
                 "image of '" + edge.name + "' runs " + p.vertex_name(img.first().start(g)) +
                     " -> " + p.vertex_name(img.last().end(g)) + " but vmap sends endpoints to " +
                     p.vertex_name(p.vertex_map[edge.source]) + " -> " +
                     p.vertex_name(p.vertex_map[edge.target]));
    }
  }

  // (b) g must not be a homeomorphism
  bool all_unit = std::all_of(p.edge_map.begin(), p.edge_map.end(),
                              [](const EdgePath& path) { return path.length() == 1; });
  if (all_unit) {
    std::vector<bool> hit(ne, false);
    for (const auto& path : p.edge_map) hit[path.first().edge] = true;
    if (std::all_of(hit.begin(), hit.end(), [](bool b) { return b; })) {
      report.add(Severity::error, std::string(finding::kHomeomorphism),
                 "every edge maps bijectively onto a single edge; g is a homeomorphism");
    }
  }

  // (c) orientation
  for (std::size_t e = 0; e < ne; ++e) {
    for (const auto& d : p.edge_map[e].darts) {
      if (!d.forward) {
        report.add(Severity::error, std::string(finding::kOrientationReversing),
                   "unsupported: orientation-reversing dart '" + d.label(g) + "' in image of '" +
                       p.edge_name(e) + "'");
        break;
      }
    }
  }

  // (d) primitivity of the abelianization
  IntMatrix m = abelianization(p);
  if (!is_primitive(m)) {
    report.add(Severity::warning, std::string(finding::kNotPrimitive),
               "abelianization " + m.to_string() + " is not primitive; mixing is not verified");
  }

  // (e) eventual expansion: |g^k(e)| is the column sum of M^k
  IntMatrix power = m;
  std::vector<bool> expands(ne, false);
  for (std::size_t k = 1; k <= ne; ++k) {
    for (std::size_t e = 0; e < ne; ++e) {
      Int len = 0;
      for (std::size_t f = 0; f < ne; ++f) len += power(f, e);
      if (len >= 2) expands[e] = true;
    }
    power = power * m;
  }
  for (std::size_t e = 0; e < ne; ++e) {
    if (!expands[e]) {
      report.add(Severity::error, std::string(finding::kNotExpanding),
                 "edge '" + p.edge_name(e) + "' never expands under g^k, k <= " +
                     std::to_string(ne));
    }
  }
  return report;
}

EdgePath apply_substitution(const Presentation& p, const EdgePath& path) {
  EdgePath out;
  for (const auto& d : path.darts) {
    const EdgePath& img = p.edge_map.at(d.edge);
    if (d.forward) {
      out.darts.insert(out.darts.end(), img.darts.begin(), img.darts.end());
    } else {
      EdgePath rev = img.reversed();
      out.darts.insert(out.darts.end(), rev.darts.begin(), rev.darts.end());
    }
  }
  return out;
}

Presentation compose_power(const Presentation& p, unsigned k) {
  if (k == 0) throw std::invalid_argument("compose_power: k must be positive");
  Presentation out = p;
  for (unsigned i = 1; i < k; ++i) {
    for (std::size_t e = 0; e < out.edge_map.size(); ++e) {
      out.edge_map[e] = apply_substitution(p, out.edge_map[e]);
    }
    for (auto& v : out.vertex_map) v = p.vertex_map[v];
  }
  return out;
}

}  // namespace solk
