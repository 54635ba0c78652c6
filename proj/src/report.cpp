#include "solk/report.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace solk {

Json int_to_json(const Int& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() &&
      v <= std::numeric_limits<std::int64_t>::max()) {
    return Json(static_cast<std::int64_t>(v));
  }
  return Json(v.str());
}

Json matrix_to_json(const IntMatrix& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(int_to_json(m(r, c)));
    out.push_back(std::move(row));
  }
  return out;
}

namespace {

Json int_list(const std::vector<Int>& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(int_to_json(x));
  return out;
}

const char* severity_name(Severity s) { return s == Severity::error ? "error" : "warning"; }

const char* order_name(ClassOrder o) { return o == ClassOrder::paper ? "paper" : "lex"; }

std::string refs_text(const Presentation& p, const std::vector<JunctionRef>& refs) {
  if (refs.empty()) return "-";
  std::string out;
  for (const auto& r : refs) {
    if (!out.empty()) out += ' ';
    out += "(" + p.edge_name(r.edge) + "," + std::to_string(r.index) + ")";
  }
  return out;
}

std::vector<std::string> numbered(const std::string& prefix, std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(prefix + std::to_string(i + 1));
  return out;
}

}  // namespace

Json validation_json(const ValidationReport& r) {
  Json findings = Json::array();
  for (const auto& f : r.findings) {
    findings.push_back(Json{{"severity", severity_name(f.severity)}, {"code", f.code},
                            {"message", f.message}});
  }
  return Json{{"ok", r.ok}, {"findings", std::move(findings)}};
}

Json limit_json(const StationaryLimitGroup& g) {
  LimitDescriptor d = classify(g);
  return Json{{"descriptor", d.name()},
              {"group", d.pretty()},
              {"ambient_rank", g.ambient_rank()},
              {"endomorphism", matrix_to_json(g.endomorphism())},
              {"eventual_rank", g.eventual_rank()},
              {"eventual_basis", matrix_to_json(g.eventual_basis())},
              {"reduced_endomorphism", matrix_to_json(g.reduced_endomorphism())}};
}

Json classes_json(const Presentation& p, const QuotientModel& q, const QuotientSummary& s) {
  Json classes = Json::array();
  for (std::size_t c = 0; c < q.classes.size(); ++c) {
    const GermClass& g = q.classes[c];
    Json pre = Json::array();
    for (const auto& r : q.interior_preimages[c]) pre.push_back(Json::array({p.edge_name(r.edge), r.index}));
    classes.push_back(Json{{"name", g.name(p)},
                           {"vertex", p.vertex_name(g.vertex)},
                           {"in", g.in.label(p.graph)},
                           {"out", g.out.label(p.graph)},
                           {"gtilde", q.classes[q.gtilde[c]].name(p)},
                           {"interior_preimages", std::move(pre)}});
  }
  Json per_vertex = Json::object();
  for (std::size_t v = 0; v < s.classes_per_vertex.size(); ++v) {
    per_vertex[p.vertex_name(v)] = s.classes_per_vertex[v];
  }
  Json witness = nullptr;
  if (s.hausdorff_witness) {
    witness = Json::array({q.classes[s.hausdorff_witness->first].name(p),
                           q.classes[s.hausdorff_witness->second].name(p)});
  }
  Json degree = nullptr;
  if (s.degree) degree = *s.degree;
  Json diag{{"classes_per_vertex", std::move(per_vertex)},
            {"hausdorff", s.hausdorff},
            {"hausdorff_witness", std::move(witness)},
            {"connected", s.connected},
            {"degree", std::move(degree)},
            {"nuclear_dimension_bound", s.nuclear_dimension_bound}};
  return Json{{"edges", q.edge_points}, {"classes", std::move(classes)}, {"diagnostics", std::move(diag)}};
}

Json ktheory_json(const Presentation& p, const KTheoryReport& r) {
  Json base = classes_json(p, r.quotient, r.diagnostics.quotient);
  Json diag = base["diagnostics"];
  Json target = nullptr;
  if (r.diagnostics.trace_target) target = *r.diagnostics.trace_target;
  diag["trace_target"] = std::move(target);

  Json k1{{"group", r.k1.group.to_string()},
          {"free_rank", r.k1.group.free_rank},
          {"torsion", int_list(r.k1.group.torsion)},
          {"generators", matrix_to_json(r.k1.generators)}};
  Json k1_limit = limit_json(*r.k1_limit);
  k1_limit["torsion"] = int_list(r.k1_torsion_limit);
  k1_limit["group"] = r.k1_pretty();

  return Json{{"order", order_name(r.order)},
              {"edges", r.edge_names},
              {"classes", base["classes"]},
              {"delta0", matrix_to_json(r.delta0)},
              {"pullback", matrix_to_json(r.pullback)},
              {"k0_basis", matrix_to_json(r.k0_basis)},
              {"psi0", matrix_to_json(r.psi0)},
              {"k1", std::move(k1)},
              {"psi1", matrix_to_json(r.psi1)},
              {"psi1_rule", r.k1_rule},
              {"k0_limit", limit_json(*r.k0_limit)},
              {"k1_limit", std::move(k1_limit)},
              {"diagnostics", std::move(diag)}};
}

Json sft_json(const SftPresentation& s, const SftKTheory& k) {
  return Json{{"states", s.states},
              {"adjacency", matrix_to_json(s.adjacency)},
              {"k0_limit", limit_json(*k.k0)},
              {"k1", k.k1}};
}

std::string format_matrix(const IntMatrix& m, const std::vector<std::string>& row_labels,
                          const std::vector<std::string>& col_labels, int indent) {
  std::size_t label_w = 0;
  for (const auto& l : row_labels) label_w = std::max(label_w, l.size());
  std::size_t cell_w = 1;
  for (const auto& l : col_labels) cell_w = std::max(cell_w, l.size());
  for (const auto& v : m.entries()) cell_w = std::max(cell_w, v.str().size());

  auto pad_left = [](const std::string& s, std::size_t w) {
    return std::string(w > s.size() ? w - s.size() : 0, ' ') + s;
  };
  std::ostringstream os;
  const std::string lead(static_cast<std::size_t>(indent), ' ');
  if (m.cols() == 0 || m.rows() == 0) {
    os << lead << "(" << m.rows() << "x" << m.cols() << " matrix)\n";
    return os.str();
  }
  os << lead << std::string(label_w, ' ');
  for (const auto& l : col_labels) os << "  " << pad_left(l, cell_w);
  os << '\n';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    std::string label = r < row_labels.size() ? row_labels[r] : "";
    os << lead << label << std::string(label_w - label.size(), ' ');
    for (std::size_t c = 0; c < m.cols(); ++c) os << "  " << pad_left(m(r, c).str(), cell_w);
    os << '\n';
  }
  return os.str();
}

std::string validation_text(const ValidationReport& r) {
  std::ostringstream os;
  for (const auto& f : r.findings) {
    os << severity_name(f.severity) << " [" << f.code << "] " << f.message << '\n';
  }
  os << (r.ok ? "ok" : "invalid") << '\n';
  return os.str();
}

std::string limit_text(const StationaryLimitGroup& g) {
  LimitDescriptor d = classify(g);
  std::ostringstream os;
  os << "limit: " << d.pretty() << "   " << d.name() << '\n';
  os << "endomorphism T = " << g.endomorphism() << '\n';
  os << "eventual rank " << g.eventual_rank() << ", basis (columns) = " << g.eventual_basis()
     << '\n';
  os << "reduced endomorphism T' = " << g.reduced_endomorphism() << '\n';
  return os.str();
}

std::string classes_text(const Presentation& p, const QuotientModel& q, const QuotientSummary& s) {
  std::ostringstream os;
  os << "germ classes (" << q.classes.size() << "):\n";
  std::size_t w = 0;
  for (const auto& c : q.classes) w = std::max(w, c.name(p).size());
  for (std::size_t c = 0; c < q.classes.size(); ++c) {
    std::string name = q.classes[c].name(p);
    os << "  " << name << std::string(w - name.size(), ' ') << "  at "
       << p.vertex_name(q.classes[c].vertex) << "  g~ -> " << q.classes[q.gtilde[c]].name(p)
       << "  interior preimages: " << refs_text(p, q.interior_preimages[c]) << '\n';
  }
  os << "hausdorff: " << (s.hausdorff ? "yes" : "no");
  if (s.hausdorff_witness) {
    os << " (" << q.classes[s.hausdorff_witness->first].name(p) << ", "
       << q.classes[s.hausdorff_witness->second].name(p) << " share a dart)";
  }
  os << "\nconnected: " << (s.connected ? "yes" : "no") << '\n';
  os << "degree: " << (s.degree ? std::to_string(*s.degree) : std::string("-")) << '\n';
  os << "nuclear dimension <= " << s.nuclear_dimension_bound << '\n';
  return os.str();
}

std::string ktheory_text(const Presentation& p, const KTheoryReport& r) {
  std::ostringstream os;
  os << "presentation: " << p.graph.vertex_count() << " vertices, " << p.graph.edge_count()
     << " edges; class order: " << order_name(r.order) << '\n';
  os << classes_text(p, r.quotient, r.diagnostics.quotient);
  os << "delta0 = " << r.delta0 << "   (edges x classes)\n"
     << format_matrix(r.delta0, r.edge_names, r.class_names);
  os << "trace pullback (classes x classes):\n"
     << format_matrix(r.pullback, r.class_names, r.class_names);
  os << "K0(C*(G0)) = ker delta0 = " << (r.k0_basis.cols() == 0 ? std::string("0")
                                         : CokernelStructure{r.k0_basis.cols(), {}}.to_string())
     << ", basis columns:\n"
     << format_matrix(r.k0_basis, r.class_names, numbered("k", r.k0_basis.cols()));
  os << "psi*_0 = " << r.psi0 << '\n';
  os << "K1(C*(G0)) = coker delta0 = " << r.k1.group.to_string() << ", generators:\n"
     << format_matrix(r.k1.generators, r.edge_names, numbered("g", r.k1.generators.cols()));
  os << "psi*_1 = " << r.psi1 << "   rule: " << r.k1_rule << '\n';
  os << "K0(C*(Gs)) = " << r.k0_class.pretty() << "   " << r.k0_class.name() << '\n';
  os << "K1(C*(Gs)) = " << r.k1_pretty() << "   " << r.k1_class.name() << '\n';
  if (r.diagnostics.trace_target) {
    os << "trace: K0(C*(Gs)) -> " << *r.diagnostics.trace_target
       << " order-preserving surjection\n";
  }
  return os.str();
}

std::string sft_text(const SftPresentation& s, const SftKTheory& k) {
  std::ostringstream os;
  os << "adjacency:\n" << format_matrix(s.adjacency, s.states, s.states);
  os << "K0 = " << k.k0_class.pretty() << "   " << k.k0_class.name() << '\n';
  os << "K1 = 0\n";
  return os.str();
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace solk
