#include "solk/sft.hpp"

#include <sstream>

#include "solk/errors.hpp"

namespace solk {

IntMatrix parse_matrix(std::string_view text) {
  std::vector<std::vector<Int>> rows;
  std::string body(text);
  std::size_t start = 0;
  while (true) {
    std::size_t semi = body.find(';', start);
    std::string row_text = body.substr(start, semi == std::string::npos ? std::string::npos
                                                                        : semi - start);
    std::vector<Int> row;
    std::istringstream rs(row_text);
    std::string cell;
    while (std::getline(rs, cell, ',')) {
      std::size_t b = cell.find_first_not_of(" \t");
      std::size_t e = cell.find_last_not_of(" \t");
      if (b == std::string::npos) throw ParseError(0, "empty matrix entry in '" + body + "'");
      std::string num = cell.substr(b, e - b + 1);
      std::size_t digits_from = (num[0] == '-' || num[0] == '+') ? 1 : 0;
      if (digits_from == num.size() ||
          num.find_first_not_of("0123456789", digits_from) != std::string::npos) {
        throw ParseError(0, "bad matrix entry '" + num + "'");
      }
      row.emplace_back(num[0] == '+' ? num.substr(1) : num);
    }
    if (row.empty()) throw ParseError(0, "empty matrix row in '" + body + "'");
    rows.push_back(std::move(row));
    if (semi == std::string::npos) break;
    start = semi + 1;
  }
  for (const auto& r : rows) {
    if (r.size() != rows.front().size()) throw ParseError(0, "ragged matrix '" + body + "'");
  }
  return IntMatrix::from_rows(rows);
}

SftPresentation make_sft(IntMatrix adjacency) {
  SftPresentation s;
  for (std::size_t i = 0; i < adjacency.rows(); ++i) s.states.push_back("s" + std::to_string(i));
  s.adjacency = std::move(adjacency);
  return s;
}

ValidationReport validate_sft(const SftPresentation& s) {
  ValidationReport report;
  const IntMatrix& a = s.adjacency;
  if (!a.is_square() || a.rows() == 0 || s.states.size() != a.rows()) {
    report.add(Severity::error, std::string(finding::kShape),
               "adjacency must be a nonempty square matrix with one row per state");
    return report;
  }
  const std::size_t n = a.rows();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (a(i, j) < 0) {
        report.add(Severity::error, std::string(finding::kNegativeEntry),
                   "negative entry at (" + std::to_string(i) + ", " + std::to_string(j) + ")");
        return report;
      }
  for (std::size_t i = 0; i < n; ++i) {
    bool row_live = false;
    bool col_live = false;
    for (std::size_t j = 0; j < n; ++j) {
      if (a(i, j) > 0) row_live = true;
      if (a(j, i) > 0) col_live = true;
    }
    if (!row_live || !col_live) {
      report.add(Severity::error, std::string(finding::kDeadState),
                 "state '" + s.states[i] + "' has no " + (row_live ? "incoming" : "outgoing") +
                     " transition");
    }
  }
  if (!report.ok) return report;

  // Irreducible iff (I + A)^(n-1) is strictly positive.
  IntMatrix step = IntMatrix::identity(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (a(i, j) > 0) step(i, j) = 1;
  IntMatrix reach = IntMatrix::identity(n);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    reach = reach * step;
    for (auto i = 0u; i < n; ++i)
      for (auto j = 0u; j < n; ++j)
        if (reach(i, j) > 0) reach(i, j) = 1;
  }
  for (const auto& v : reach.entries()) {
    if (v == 0) {
      report.add(Severity::warning, std::string(finding::kReducible),
                 "adjacency matrix is reducible (not mixing)");
      break;
    }
  }
  return report;
}

SftKTheory sft_dimension_group(const SftPresentation& s) {
  SftKTheory k;
  k.k0 = make_limit(s.adjacency.transpose());
  k.k0_class = classify(*k.k0);
  return k;
}

SftPresentation edge_shift_recoding(const SftPresentation& s) {
  struct Transition {
    std::size_t from, to;
  };
  std::vector<Transition> edges;
  SftPresentation out;
  const IntMatrix& a = s.adjacency;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      for (Int k = 0; k < a(i, j); ++k) {
        edges.push_back({i, j});
        out.states.push_back(s.states[i] + ">" + s.states[j] + "#" + k.str());
      }
  out.adjacency = IntMatrix(edges.size(), edges.size());
  for (std::size_t e = 0; e < edges.size(); ++e)
    for (std::size_t f = 0; f < edges.size(); ++f)
      if (edges[e].to == edges[f].from) out.adjacency(e, f) = 1;
  return out;
}

}  // namespace solk
