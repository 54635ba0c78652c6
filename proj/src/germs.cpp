#include "solk/germs.hpp"

#include <algorithm>
#include <numeric>

#include "solk/errors.hpp"

namespace solk {

std::string GermClass::name(const Presentation& p) const {
  const std::string& l = p.edge_name(in.edge);
  const std::string& r = p.edge_name(out.edge);
  std::string left = in.forward ? l : "~" + l;
  std::string right = out.forward ? r : "~" + r;
  if (left.size() == 1 && right.size() == 1) return left + right;
  return left + "|" + right;
}

std::optional<std::size_t> QuotientModel::index_of(const GermClass& c) const {
  auto it = std::find(classes.begin(), classes.end(), c);
  if (it == classes.end()) return std::nullopt;
  return static_cast<std::size_t>(it - classes.begin());
}

std::vector<std::size_t> QuotientModel::vertex_preimages(std::size_t c) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < gtilde.size(); ++i)
    if (gtilde[i] == c) out.push_back(i);
  return out;
}

std::set<GermClass> junction_germs(const Presentation& p) {
  std::set<GermClass> out;
  for (const auto& img : p.edge_map) {
    for (std::size_t i = 0; i + 1 < img.darts.size(); ++i) {
      out.insert({img.darts[i].end(p.graph), img.darts[i], img.darts[i + 1]});
    }
  }
  return out;
}

std::set<GermClass> all_germs(const Presentation& p) {
  std::set<GermClass> out;
  const auto& edges = p.graph.edges();
  for (std::size_t l = 0; l < edges.size(); ++l)
    for (std::size_t r = 0; r < edges.size(); ++r)
      if (edges[l].target == edges[r].source) {
        out.insert({edges[l].target, Dart{l, true}, Dart{r, true}});
      }
  return out;
}

GermClass gtilde_on_class(const Presentation& p, const GermClass& c) {
  auto image_of = [&](const Dart& d) {
    return d.forward ? p.image(d.edge) : p.image(d.edge).reversed();
  };
  return {p.vertex_map.at(c.vertex), image_of(c.in).last(), image_of(c.out).first()};
}

std::vector<JunctionRef> interior_preimages(const Presentation& p, const GermClass& c) {
  std::vector<JunctionRef> out;
  for (std::size_t f = 0; f < p.edge_map.size(); ++f) {
    const auto& darts = p.edge_map[f].darts;
    for (std::size_t i = 0; i + 1 < darts.size(); ++i) {
      if (darts[i] == c.in && darts[i + 1] == c.out && darts[i].end(p.graph) == c.vertex) {
        out.push_back({f, i + 1});
      }
    }
  }
  return out;
}

QuotientModel occurring_classes(const Presentation& p, ClassOrder order) {
  // g~-periodic germs over the full germ set: iterate the map long enough to
  // land on a cycle, then walk the cycle.
  std::set<GermClass> universe = all_germs(p);
  std::set<GermClass> periodic;
  for (const auto& start : universe) {
    std::vector<GermClass> orbit{start};
    while (true) {
      GermClass next = gtilde_on_class(p, orbit.back());
      auto seen = std::find(orbit.begin(), orbit.end(), next);
      if (seen != orbit.end()) {
        periodic.insert(seen, orbit.end());
        break;
      }
      orbit.push_back(next);
    }
  }

  std::set<GermClass> found = junction_germs(p);
  found.insert(periodic.begin(), periodic.end());
  std::vector<GermClass> frontier(found.begin(), found.end());
  while (!frontier.empty()) {
    GermClass c = frontier.back();
    frontier.pop_back();
    GermClass next = gtilde_on_class(p, c);
    if (found.insert(next).second) frontier.push_back(next);
  }

  QuotientModel q;
  q.classes.assign(found.begin(), found.end());
  if (order == ClassOrder::paper) std::reverse(q.classes.begin(), q.classes.end());

  std::vector<bool> covered(p.graph.vertex_count(), false);
  for (const auto& c : q.classes) covered[c.vertex] = true;
  for (std::size_t v = 0; v < covered.size(); ++v) {
    if (!covered[v]) {
      throw UnreachableVertex("vertex '" + p.vertex_name(v) + "' carries no occurring germ class");
    }
  }

  for (const auto& e : p.graph.edges()) q.edge_points.push_back(e.name);
  for (const auto& c : q.classes) {
    q.gtilde.push_back(*q.index_of(gtilde_on_class(p, c)));
    q.interior_preimages.push_back(interior_preimages(p, c));
  }
  return q;
}

HausdorffResult is_quotient_hausdorff(const Presentation& p, const QuotientModel& q) {
  (void)p;
  HausdorffResult result;
  // Scan pairs in lexicographic class order so the witness is reproducible
  // whatever order the model uses.
  std::vector<std::size_t> idx(q.classes.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(),
            [&](std::size_t a, std::size_t b) { return q.classes[a] < q.classes[b]; });
  for (std::size_t i = 0; i < idx.size(); ++i)
    for (std::size_t j = i + 1; j < idx.size(); ++j) {
      const GermClass& a = q.classes[idx[i]];
      const GermClass& b = q.classes[idx[j]];
      if (a.vertex != b.vertex) continue;
      if (a.in == b.in || a.out == b.out) {
        result.hausdorff = false;
        result.witness = std::make_pair(idx[i], idx[j]);
        return result;
      }
    }
  return result;
}

std::vector<std::size_t> cell_preimage_counts(const Presentation& p, const QuotientModel& q) {
  std::vector<std::size_t> counts;
  for (std::size_t c = 0; c < q.classes.size(); ++c) {
    counts.push_back(q.vertex_preimages(c).size() + q.interior_preimages[c].size());
  }
  // A generic point of an open edge f pulls back once per occurrence of f in
  // an image path.
  std::vector<std::size_t> edge_counts(p.graph.edge_count(), 0);
  for (const auto& img : p.edge_map)
    for (const auto& d : img.darts) ++edge_counts[d.edge];
  counts.insert(counts.end(), edge_counts.begin(), edge_counts.end());
  return counts;
}

bool is_quotient_connected(const Presentation& p, const QuotientModel& q) {
  const std::size_t nc = q.classes.size();
  const std::size_t n = nc + p.graph.edge_count();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto unite = [&](std::size_t a, std::size_t b) { parent[find(a)] = find(b); };
  for (std::size_t c = 0; c < nc; ++c) {
    unite(c, nc + q.classes[c].in.edge);
    unite(c, nc + q.classes[c].out.edge);
  }
  std::size_t root = find(0);
  for (std::size_t i = 1; i < n; ++i)
    if (find(i) != root) return false;
  return true;
}

QuotientSummary quotient_summary(const Presentation& p, const QuotientModel& q) {
  QuotientSummary s;
  s.classes_per_vertex.assign(p.graph.vertex_count(), 0);
  for (const auto& c : q.classes) ++s.classes_per_vertex[c.vertex];
  HausdorffResult h = is_quotient_hausdorff(p, q);
  s.hausdorff = h.hausdorff;
  s.hausdorff_witness = h.witness;
  s.connected = is_quotient_connected(p, q);
  if (s.hausdorff && s.connected) {
    auto counts = cell_preimage_counts(p, q);
    std::size_t n = counts.front();
    bool constant = std::all_of(counts.begin(), counts.end(), [&](std::size_t c) { return c == n; });
    if (!constant) {
      throw DegreeNotConstant("Hausdorff connected quotient with non-constant g~-preimage counts");
    }
    if (n < 2) throw DegreeNotConstant("Hausdorff connected quotient with g~ of degree " +
                                       std::to_string(n) + " < 2");
    s.degree = n;
  }
  return s;
}

}  // namespace solk
