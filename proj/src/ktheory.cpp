#include "solk/ktheory.hpp"

#include <sstream>

#include "solk/errors.hpp"

namespace solk {

IntMatrix boundary_matrix(const Presentation& p, const QuotientModel& q) {
  IntMatrix d(p.graph.edge_count(), q.classes.size());
  for (std::size_t c = 0; c < q.classes.size(); ++c) {
    d(q.classes[c].in.edge, c) += 1;
    d(q.classes[c].out.edge, c) -= 1;
  }
  return d;
}

std::vector<Int> edge_trace_row(const Presentation& p, const QuotientModel& q, std::size_t edge) {
  const Edge& e = p.graph.edges().at(edge);
  std::vector<Int> row(q.classes.size());
  for (std::size_t c = 0; c < q.classes.size(); ++c) {
    const GermClass& g = q.classes[c];
    if (g.vertex == e.source && g.out.edge == edge && g.out.forward) row[c] = 1;
  }
  return row;
}

std::vector<Int> edge_trace_row_from_target(const Presentation& p, const QuotientModel& q,
                                            std::size_t edge) {
  const Edge& e = p.graph.edges().at(edge);
  std::vector<Int> row(q.classes.size());
  for (std::size_t c = 0; c < q.classes.size(); ++c) {
    const GermClass& g = q.classes[c];
    if (g.vertex == e.target && g.in.edge == edge && g.in.forward) row[c] = 1;
  }
  return row;
}

IntMatrix trace_pullback_matrix(const Presentation& p, const QuotientModel& q) {
  const std::size_t n = q.classes.size();
  IntMatrix t(n, n);
  for (std::size_t c = 0; c < n; ++c) {
    for (std::size_t pre : q.vertex_preimages(c)) t(c, pre) += 1;
    for (const auto& ref : q.interior_preimages[c]) {
      auto row = edge_trace_row(p, q, ref.edge);
      for (std::size_t j = 0; j < n; ++j) t(c, j) += row[j];
    }
  }
  return t;
}

namespace {

K1Structure cokernel_structure(const IntMatrix& delta) {
  SmithDecomposition snf = smith_normal_form(delta);
  const std::size_t r = snf.rank();
  K1Structure k1;
  k1.group.free_rank = delta.rows() - r;
  for (std::size_t i = 0; i < r; ++i) {
    if (snf.D(i, i) > 1) {
      k1.group.torsion.push_back(snf.D(i, i));
      k1.generator_rows.push_back(i);
    }
  }
  for (std::size_t i = r; i < delta.rows(); ++i) k1.generator_rows.push_back(i);
  IntMatrix u_inv = unimodular_inverse(snf.U);
  std::vector<std::size_t> all_rows(delta.rows());
  for (std::size_t i = 0; i < all_rows.size(); ++i) all_rows[i] = i;
  k1.generators = u_inv.submatrix(all_rows, k1.generator_rows);
  k1.smith_u = std::move(snf.U);
  return k1;
}

}  // namespace

G0KTheory k_theory_of_g0(const Presentation& p, const QuotientModel& q) {
  IntMatrix delta = boundary_matrix(p, q);
  return {kernel_basis(delta), cokernel_structure(delta)};
}

IntMatrix psi_star_k0(const Presentation& p, const QuotientModel& q) {
  IntMatrix basis = kernel_basis(boundary_matrix(p, q));
  IntMatrix t = trace_pullback_matrix(p, q);
  try {
    return restrict_endomorphism(t, basis);
  } catch (const NotInvariant&) {
    throw NotInvariant("trace pullback does not preserve ker delta0");
  }
}

IntMatrix first_edge_map(const Presentation& p) {
  const std::size_t n = p.graph.edge_count();
  IntMatrix f(n, n);
  for (std::size_t e = 0; e < n; ++e) f(p.image(e).first().edge, e) = 1;
  return f;
}

IntMatrix psi_star_k1(const Presentation& p, const QuotientModel& q) {
  IntMatrix delta = boundary_matrix(p, q);
  IntMatrix f = first_edge_map(p);

  for (std::size_t c = 0; c < q.classes.size(); ++c) {
    IntMatrix image = f * delta.column_block(c, 1);
    if (!solve_integral(delta, image)) {
      throw NotWellDefined("first-edge rule sends the relation of class '" +
                           q.classes[c].name(p) + "' outside im delta0");
    }
  }

  K1Structure k1 = cokernel_structure(delta);
  IntMatrix u_inv = unimodular_inverse(k1.smith_u);
  IntMatrix induced = k1.smith_u * f * u_inv;
  IntMatrix psi = induced.submatrix(k1.generator_rows, k1.generator_rows);
  for (std::size_t i = 0; i < k1.group.torsion.size(); ++i) {
    const Int& order = k1.group.torsion[i];
    for (std::size_t j = 0; j < psi.cols(); ++j) {
      Int r = psi(i, j) % order;
      if (r < 0) r += order;
      psi(i, j) = r;
    }
  }
  return psi;
}

std::string KTheoryReport::k1_pretty() const {
  std::ostringstream os;
  std::string free = k1_class.pretty();
  bool any = false;
  if (!(k1_class.kind == LimitDescriptor::Kind::free_abelian && k1_class.rank == 0)) {
    os << free;
    any = true;
  }
  for (const auto& t : k1_torsion_limit) {
    if (any) os << " + ";
    os << "Z/" << t;
    any = true;
  }
  if (!any) os << '0';
  return os.str();
}

KTheoryReport ktheory_report(const Presentation& p, ClassOrder order) {
  ValidationReport v = validate(p);
  if (!v.ok) {
    for (const auto& f : v.findings) {
      if (f.severity == Severity::error) {
        throw InvalidPresentation(f.code + ": " + f.message);
      }
    }
  }

  KTheoryReport r;
  r.order = order;
  r.quotient = occurring_classes(p, order);
  const QuotientModel& q = r.quotient;
  for (const auto& c : q.classes) r.class_names.push_back(c.name(p));
  r.edge_names = q.edge_points;

  r.delta0 = boundary_matrix(p, q);
  r.pullback = trace_pullback_matrix(p, q);
  G0KTheory g0 = k_theory_of_g0(p, q);
  r.k0_basis = g0.k0_basis;
  r.k1 = g0.k1;
  r.psi0 = psi_star_k0(p, q);
  r.psi1 = psi_star_k1(p, q);

  r.k0_limit = make_limit(r.psi0);
  r.k0_class = classify(*r.k0_limit);

  const std::size_t torsion_count = r.k1.group.torsion.size();
  std::vector<std::size_t> free_idx;
  std::vector<std::size_t> torsion_idx;
  for (std::size_t i = 0; i < r.psi1.rows(); ++i) {
    (i < torsion_count ? torsion_idx : free_idx).push_back(i);
  }
  r.k1_limit = make_limit(r.psi1.submatrix(free_idx, free_idx));
  r.k1_class = classify(*r.k1_limit);
  r.k1_torsion_limit =
      torsion_limit(r.k1.group.torsion, r.psi1.submatrix(torsion_idx, torsion_idx));

  r.diagnostics.quotient = quotient_summary(p, q);
  if (r.diagnostics.quotient.degree) {
    r.diagnostics.trace_target = "Z[1/" + std::to_string(*r.diagnostics.quotient.degree) + "]";
  }
  return r;
}

}  // namespace solk
