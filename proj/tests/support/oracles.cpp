#include "support/oracles.hpp"

#include <algorithm>
#include <functional>

#include <boost/multiprecision/integer.hpp>

namespace solk::testing {

namespace {

using Word = std::vector<std::string>;

std::map<std::string, Word> images_by_name(const Presentation& p) {
  std::map<std::string, Word> out;
  for (std::size_t e = 0; e < p.edge_map.size(); ++e) {
    Word w;
    for (const auto& d : p.edge_map[e].darts) w.push_back(p.edge_name(d.edge));
    out[p.edge_name(e)] = w;
  }
  return out;
}

}  // namespace

GermOracle brute_force_germs(const Presentation& p, std::size_t max_word) {
  GermOracle o;
  auto img = images_by_name(p);
  std::map<std::string, std::string> source, target;
  for (const auto& e : p.graph.edges()) {
    source[e.name] = p.vertex_name(e.source);
    target[e.name] = p.vertex_name(e.target);
  }

  for (const auto& [name, _] : img) {
    Word w{name};
    for (int k = 0; k < 64 && w.size() <= max_word; ++k) {
      Word next;
      for (const auto& letter : w) next.insert(next.end(), img[letter].begin(), img[letter].end());
      w = std::move(next);
      for (std::size_t i = 0; i + 1 < w.size(); ++i) o.legal_pairs.insert({w[i], w[i + 1]});
    }
  }

  std::vector<NamePair> universe;
  for (const auto& [l, _] : img)
    for (const auto& [r, __] : img)
      if (target[l] == source[r]) universe.push_back({l, r});
  auto step = [&](const NamePair& c) { return NamePair{img[c.first].back(), img[c.second].front()}; };
  for (const auto& c : universe) {
    NamePair walk = c;
    for (std::size_t i = 0; i < universe.size(); ++i) {
      walk = step(walk);
      if (walk == c) {
        o.periodic_pairs.insert(c);
        break;
      }
    }
  }

  o.classes = o.legal_pairs;
  o.classes.insert(o.periodic_pairs.begin(), o.periodic_pairs.end());
  bool grew = true;
  while (grew) {
    grew = false;
    for (const auto& c : std::set<NamePair>(o.classes)) grew |= o.classes.insert(step(c)).second;
  }
  for (const auto& c : o.classes) {
    o.gtilde[c] = step(c);
    auto& refs = o.interior[c];
    for (const auto& e : p.graph.edges()) {
      const Word& w = img[e.name];
      for (std::size_t i = 0; i + 1 < w.size(); ++i)
        if (w[i] == c.first && w[i + 1] == c.second) refs.push_back({e.name, i + 1});
    }
  }
  return o;
}

IntMatrix oracle_pullback(const Presentation& p, const GermOracle& o,
                          const std::vector<NamePair>& order) {
  const std::size_t n = order.size();
  auto pos = [&](const NamePair& c) {
    return static_cast<std::size_t>(std::find(order.begin(), order.end(), c) - order.begin());
  };
  (void)p;
  IntMatrix t(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const NamePair& c = order[i];
    for (const auto& [pre, img] : o.gtilde)
      if (img == c) t(i, pos(pre)) += 1;
    for (const auto& [edge, idx] : o.interior.at(c)) {
      (void)idx;
      // Sequence entering `edge` from its source: limit set is every class
      // whose right-hand edge is `edge`.
      for (std::size_t j = 0; j < n; ++j)
        if (order[j].second == edge) t(i, j) += 1;
    }
  }
  return t;
}

IntMatrix oracle_boundary(const Presentation& p, const std::vector<NamePair>& order) {
  IntMatrix d(p.graph.edge_count(), order.size());
  for (std::size_t j = 0; j < order.size(); ++j) {
    d(*p.graph.find_edge(order[j].first), j) += 1;
    d(*p.graph.find_edge(order[j].second), j) -= 1;
  }
  return d;
}

bool brute_force_in_span(const IntMatrix& b, const std::vector<Int>& v, int bound) {
  const std::size_t r = b.cols();
  std::vector<int> coeff(r, -bound);
  while (true) {
    bool match = true;
    for (std::size_t i = 0; i < b.rows() && match; ++i) {
      Int s = 0;
      for (std::size_t j = 0; j < r; ++j) s += b(i, j) * coeff[j];
      match = s == v[i];
    }
    if (match) return true;
    std::size_t k = 0;
    while (k < r && coeff[k] == bound) coeff[k++] = -bound;
    if (k == r) return false;
    ++coeff[k];
  }
}

bool same_lattice(const IntMatrix& a, const IntMatrix& b, int bound) {
  if (a.rows() != b.rows()) return false;
  for (std::size_t j = 0; j < a.cols(); ++j)
    if (!brute_force_in_span(b, a.column(j), bound)) return false;
  for (std::size_t j = 0; j < b.cols(); ++j)
    if (!brute_force_in_span(a, b.column(j), bound)) return false;
  return true;
}

namespace {

Int minor_det(const IntMatrix& a, const std::vector<std::size_t>& rows,
              const std::vector<std::size_t>& cols) {
  // Laplace expansion; sizes here are tiny.
  const std::size_t k = rows.size();
  if (k == 0) return 1;
  if (k == 1) return a(rows[0], cols[0]);
  Int total = 0;
  for (std::size_t j = 0; j < k; ++j) {
    std::vector<std::size_t> sub_rows(rows.begin() + 1, rows.end());
    std::vector<std::size_t> sub_cols;
    for (std::size_t c = 0; c < k; ++c)
      if (c != j) sub_cols.push_back(cols[c]);
    Int term = a(rows[0], cols[j]) * minor_det(a, sub_rows, sub_cols);
    total += (j % 2 == 0) ? term : Int(-term);
  }
  return total;
}

void subsets(std::size_t n, std::size_t k, std::vector<std::vector<std::size_t>>& out) {
  std::vector<std::size_t> cur;
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    if (cur.size() == k) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i = start; i < n; ++i) {
      cur.push_back(i);
      rec(i + 1);
      cur.pop_back();
    }
  };
  rec(0);
}

}  // namespace

std::vector<Int> smith_diagonal_by_minors(const IntMatrix& a) {
  std::vector<Int> diag;
  Int prev = 1;
  for (std::size_t k = 1; k <= std::min(a.rows(), a.cols()); ++k) {
    std::vector<std::vector<std::size_t>> rs, cs;
    subsets(a.rows(), k, rs);
    subsets(a.cols(), k, cs);
    Int g = 0;
    for (const auto& r : rs)
      for (const auto& c : cs) g = boost::multiprecision::gcd(g, minor_det(a, r, c));
    if (g == 0) {
      diag.push_back(0);
      prev = 0;
      continue;
    }
    diag.push_back(prev == 0 ? Int(0) : Int(g / prev));
    prev = g;
  }
  return diag;
}

}  // namespace solk::testing
