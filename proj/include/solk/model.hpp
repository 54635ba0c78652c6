#pragma once

// Combinatorial presentations (Y, g) of one-dimensional solenoids: a finite
// directed graph together with a substitution sending every edge to an edge
// path and every vertex to a vertex.

#include <cstddef>
#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "solk/intlin.hpp"

namespace solk {

struct Edge {
  std::string name;
  std::size_t source = 0;
  std::size_t target = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

class Graph {
 public:
  std::size_t add_vertex(std::string name);
  std::size_t add_edge(std::string name, std::size_t source, std::size_t target);

  const std::vector<std::string>& vertices() const noexcept { return vertices_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  std::size_t vertex_count() const noexcept { return vertices_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  std::optional<std::size_t> find_vertex(std::string_view name) const;
  std::optional<std::size_t> find_edge(std::string_view name) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::string> vertices_;
  std::vector<Edge> edges_;
};

// One traversal direction of an edge. Forward runs source -> target.
struct Dart {
  std::size_t edge = 0;
  bool forward = true;

  Dart reversed() const { return {edge, !forward}; }
  std::size_t start(const Graph& g) const;
  std::size_t end(const Graph& g) const;
  std::string label(const Graph& g) const;  // "a" or "~a"

  friend bool operator==(const Dart&, const Dart&) = default;
  friend auto operator<=>(const Dart&, const Dart&) = default;
};

struct EdgePath {
  std::vector<Dart> darts;

  std::size_t length() const noexcept { return darts.size(); }
  const Dart& first() const { return darts.front(); }
  const Dart& last() const { return darts.back(); }
  // First index i with end(darts[i]) != start(darts[i + 1]), if any.
  std::optional<std::size_t> discontinuity(const Graph& g) const;
  EdgePath reversed() const;

  friend bool operator==(const EdgePath&, const EdgePath&) = default;
};

struct Presentation {
  Graph graph;
  std::vector<EdgePath> edge_map;       // indexed by edge
  std::vector<std::size_t> vertex_map;  // indexed by vertex

  const EdgePath& image(std::size_t edge) const { return edge_map.at(edge); }
  const std::string& edge_name(std::size_t e) const { return graph.edges().at(e).name; }
  const std::string& vertex_name(std::size_t v) const { return graph.vertices().at(v); }

  friend bool operator==(const Presentation&, const Presentation&) = default;
};

enum class Severity { error, warning };

struct Finding {
  Severity severity = Severity::error;
  std::string code;
  std::string message;
};

struct ValidationReport {
  bool ok = true;
  std::vector<Finding> findings;

  void add(Severity s, std::string code, std::string message);
  bool has(std::string_view code) const;
  std::size_t warning_count() const;
};

// Finding codes emitted by validate().
namespace finding {
inline constexpr std::string_view kPathDiscontinuous = "path-discontinuous";
inline constexpr std::string_view kEndpointMismatch = "endpoint-mismatch";
inline constexpr std::string_view kHomeomorphism = "homeomorphism";
inline constexpr std::string_view kOrientationReversing = "orientation-reversing";
inline constexpr std::string_view kNotPrimitive = "not-primitive";
inline constexpr std::string_view kNotExpanding = "not-expanding";
inline constexpr std::string_view kShape = "shape";
}  // namespace finding

// Throws ParseError with the offending line number.
Presentation parse_presentation(std::istream& in);
Presentation parse_presentation(std::string_view text);
Presentation load_presentation(const std::string& path);

// Inverse of parse_presentation; always writes explicit vmap lines.
std::string serialize_presentation(const Presentation& p);

ValidationReport validate(const Presentation& p);

// Entry (f, e) counts occurrences of edge f in g(e).
IntMatrix abelianization(const Presentation& p);

// Image of a path under g, darts expanded left to right.
EdgePath apply_substitution(const Presentation& p, const EdgePath& path);

// The k-fold composite substitution g^k on the same graph (k >= 1).
Presentation compose_power(const Presentation& p, unsigned k);

// Nonnegative square matrix with some strictly positive power M^k, k <= n^2.
bool is_primitive(const IntMatrix& m);

}  // namespace solk
