#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "solk/errors.hpp"
#include "solk/germs.hpp"
#include "solk/intlin.hpp"
#include "solk/ktheory.hpp"
#include "solk/limits.hpp"
#include "solk/model.hpp"
#include "solk/report.hpp"
#include "solk/sft.hpp"

namespace py = pybind11;

namespace {

solk::Int to_int(const py::handle& h) { return solk::Int(py::str(h).cast<std::string>()); }

py::int_ from_int(const solk::Int& v) {
  std::string s = v.str();
  return py::reinterpret_steal<py::int_>(PyLong_FromString(s.c_str(), nullptr, 10));
}

solk::IntMatrix to_matrix(const py::sequence& rows) {
  std::vector<std::vector<solk::Int>> converted;
  for (const auto& row : rows) {
    std::vector<solk::Int> r;
    for (const auto& x : row.cast<py::sequence>()) r.push_back(to_int(x));
    converted.push_back(std::move(r));
  }
  return solk::IntMatrix::from_rows(converted);
}

py::list from_matrix(const solk::IntMatrix& m) {
  py::list out;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    py::list row;
    for (std::size_t c = 0; c < m.cols(); ++c) row.append(from_int(m(r, c)));
    out.append(row);
  }
  return out;
}

solk::ClassOrder to_order(const std::string& s) {
  if (s == "lex") return solk::ClassOrder::lex;
  if (s == "paper") return solk::ClassOrder::paper;
  throw py::value_error("order must be 'lex' or 'paper'");
}

}  // namespace

PYBIND11_MODULE(_solk, m) {
  m.doc() = "Exact K-theory of one-dimensional solenoids and SFT dimension groups";

  // Translators run last-registered first, so the subclass goes second.
  py::register_exception<solk::Error>(m, "SolkError", PyExc_RuntimeError);
  py::register_exception<solk::ParseError>(m, "ParseError", PyExc_ValueError);

  py::class_<solk::Presentation>(m, "Presentation")
      .def_property_readonly("vertices", [](const solk::Presentation& p) { return p.graph.vertices(); })
      .def_property_readonly("edges",
                             [](const solk::Presentation& p) {
                               std::vector<std::tuple<std::string, std::string, std::string>> out;
                               for (const auto& e : p.graph.edges())
                                 out.emplace_back(e.name, p.vertex_name(e.source), p.vertex_name(e.target));
                               return out;
                             })
      .def_property_readonly("images",
                             [](const solk::Presentation& p) {
                               std::vector<std::pair<std::string, std::vector<std::string>>> out;
                               for (std::size_t e = 0; e < p.edge_map.size(); ++e) {
                                 std::vector<std::string> labels;
                                 for (const auto& d : p.edge_map[e].darts) labels.push_back(d.label(p.graph));
                                 out.emplace_back(p.edge_name(e), std::move(labels));
                               }
                               return out;
                             })
      .def("serialize", &solk::serialize_presentation)
      .def("abelianization", [](const solk::Presentation& p) { return from_matrix(solk::abelianization(p)); });

  m.def("parse_presentation", [](const std::string& text) { return solk::parse_presentation(text); },
        py::arg("text"));

  m.def("_validate_json",
        [](const solk::Presentation& p) { return solk::dump(solk::validation_json(solk::validate(p))); });

  m.def("_classes_json", [](const solk::Presentation& p, const std::string& order) {
    solk::QuotientModel q = solk::occurring_classes(p, to_order(order));
    return solk::dump(solk::classes_json(p, q, solk::quotient_summary(p, q)));
  });

  m.def("_ktheory_json", [](const solk::Presentation& p, const std::string& order) {
    return solk::dump(solk::ktheory_json(p, solk::ktheory_report(p, to_order(order))));
  });

  m.def("smith_normal_form", [](const py::sequence& a) {
    auto snf = solk::smith_normal_form(to_matrix(a));
    return py::make_tuple(from_matrix(snf.U), from_matrix(snf.D), from_matrix(snf.V));
  });
  m.def("kernel_basis", [](const py::sequence& a) { return from_matrix(solk::kernel_basis(to_matrix(a))); });
  m.def("cokernel", [](const py::sequence& a) {
    auto c = solk::cokernel(to_matrix(a));
    py::list torsion;
    for (const auto& t : c.torsion) torsion.append(from_int(t));
    return py::make_tuple(c.free_rank, torsion);
  });

  m.def("_limit_json", [](const py::sequence& a) {
    return solk::dump(solk::limit_json(*solk::make_limit(to_matrix(a))));
  });
  m.def("classify_limit", [](const py::sequence& a) {
    return solk::classify(*solk::make_limit(to_matrix(a))).name();
  });
  m.def("_sft_json", [](const py::sequence& a) {
    solk::SftPresentation s = solk::make_sft(to_matrix(a));
    solk::ValidationReport v = solk::validate_sft(s);
    if (!v.ok) throw solk::InvalidPresentation(v.findings.front().message);
    return solk::dump(solk::sft_json(s, solk::sft_dimension_group(s)));
  });
}
