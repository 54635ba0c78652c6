#pragma once

// Finite model of the quotient of the unstable line by germ equivalence:
// vertex points are classified by their (incoming dart, outgoing dart) pair,
// open edge interiors are single cells.

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "solk/model.hpp"

namespace solk {

struct GermClass {
  std::size_t vertex = 0;
  Dart in;   // arrives at vertex
  Dart out;  // leaves vertex

  // Concatenated edge names ("ba"), or "b|a" when a name is longer than one
  // character.
  std::string name(const Presentation& p) const;

  friend bool operator==(const GermClass&, const GermClass&) = default;
  // Lexicographic by (vertex, in-edge, out-edge).
  friend auto operator<=>(const GermClass&, const GermClass&) = default;
};

// (image edge, 1-based junction index inside g(edge))
struct JunctionRef {
  std::size_t edge = 0;
  std::size_t index = 0;

  friend bool operator==(const JunctionRef&, const JunctionRef&) = default;
  friend auto operator<=>(const JunctionRef&, const JunctionRef&) = default;
};

enum class ClassOrder {
  lex,    // ascending (vertex, in-edge, out-edge)
  paper,  // descending; gives (ba, ab, aa) for the two-loop examples
};

struct QuotientModel {
  std::vector<GermClass> classes;
  std::vector<std::string> edge_points;               // one open cell per edge
  std::vector<std::size_t> gtilde;                    // class index -> class index
  std::vector<std::vector<JunctionRef>> interior_preimages;  // per class

  std::optional<std::size_t> index_of(const GermClass& c) const;
  // Class indices whose image under g~ is `c` (vertex-class preimages).
  std::vector<std::size_t> vertex_preimages(std::size_t c) const;
};

// Germs (d_i, d_{i+1}) at the interior junctions of every image path.
std::set<GermClass> junction_germs(const Presentation& p);

// Every germ class at every vertex (all in/out forward dart pairs).
std::set<GermClass> all_germs(const Presentation& p);

// (last dart of g(in), first dart of g(out)) at vertex_map(vertex).
GermClass gtilde_on_class(const Presentation& p, const GermClass& c);

// Forward g~-closure of junction germs and g~-periodic germs. Throws
// UnreachableVertex if a vertex ends up with no class.
QuotientModel occurring_classes(const Presentation& p, ClassOrder order = ClassOrder::lex);

std::vector<JunctionRef> interior_preimages(const Presentation& p, const GermClass& c);

struct HausdorffResult {
  bool hausdorff = true;
  std::optional<std::pair<std::size_t, std::size_t>> witness;  // class indices sharing a dart
};

HausdorffResult is_quotient_hausdorff(const Presentation& p, const QuotientModel& q);

// Preimage count under g~ of a point in each cell: vertex classes first (in
// class order), then edge interiors (in edge order).
std::vector<std::size_t> cell_preimage_counts(const Presentation& p, const QuotientModel& q);

bool is_quotient_connected(const Presentation& p, const QuotientModel& q);

struct QuotientSummary {
  std::vector<std::size_t> classes_per_vertex;
  bool hausdorff = true;
  std::optional<std::pair<std::size_t, std::size_t>> hausdorff_witness;
  bool connected = true;
  std::optional<std::size_t> degree;  // set when Hausdorff and connected
  unsigned nuclear_dimension_bound = 1;
};

// Throws DegreeNotConstant when Hausdorff and connected but cells disagree on
// their preimage count (or the common count is below 2).
QuotientSummary quotient_summary(const Presentation& p, const QuotientModel& q);

}  // namespace solk
