#pragma once

// K-theory of the stable algebra of a one-dimensional solenoid, computed from
// the germ-class model: the boundary map delta0 from the edge-interior ideal,
// K0 = ker delta0, K1 = coker delta0, the connecting maps psi_* on both, and
// the stationary limits they generate.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "solk/germs.hpp"
#include "solk/intlin.hpp"
#include "solk/limits.hpp"
#include "solk/model.hpp"

namespace solk {

// Rows are edges in declaration order, columns are classes in model order.
// Class (l, r) has column e_l - e_r.
IntMatrix boundary_matrix(const Presentation& p, const QuotientModel& q);

// Trace on the open cell of edge e, written over vertex classes: the sum of
// classes at source(e) whose out-dart runs along e.
std::vector<Int> edge_trace_row(const Presentation& p, const QuotientModel& q, std::size_t edge);
// Same limit taken from the target end: classes at target(e) arriving along e.
std::vector<Int> edge_trace_row_from_target(const Presentation& p, const QuotientModel& q,
                                            std::size_t edge);

// Row c expresses tau_c after the connecting map as a sum of traces over the
// g~-preimages of c.
IntMatrix trace_pullback_matrix(const Presentation& p, const QuotientModel& q);

struct K1Structure {
  CokernelStructure group;
  // Generators of coker delta0 as edge-coordinate vectors (columns), torsion
  // generators first, then free ones.
  IntMatrix generators;
  // Change of coordinates from edge space to the Smith coordinates of the
  // cokernel, and the generator indices within them.
  IntMatrix smith_u;
  std::vector<std::size_t> generator_rows;
};

struct G0KTheory {
  IntMatrix k0_basis;  // classes x rank, column HNF
  K1Structure k1;
};

G0KTheory k_theory_of_g0(const Presentation& p, const QuotientModel& q);

// psi_* on K0 in the basis of k_theory_of_g0(). Throws NotInvariant if the
// pullback does not preserve ker delta0.
IntMatrix psi_star_k0(const Presentation& p, const QuotientModel& q);

// Edge-level first-edge rule e -> first edge of g(e) as an edges x edges
// matrix.
IntMatrix first_edge_map(const Presentation& p);

// psi_* on the cokernel generators (torsion rows reduced). Throws
// NotWellDefined if the first-edge rule does not descend to coker delta0.
IntMatrix psi_star_k1(const Presentation& p, const QuotientModel& q);

struct KTheoryDiagnostics {
  QuotientSummary quotient;
  std::optional<std::string> trace_target;  // "Z[1/n]" when Hausdorff and connected
};

struct KTheoryReport {
  ClassOrder order = ClassOrder::lex;
  QuotientModel quotient;
  std::vector<std::string> class_names;
  std::vector<std::string> edge_names;
  IntMatrix delta0;
  IntMatrix pullback;
  IntMatrix k0_basis;
  IntMatrix psi0;
  K1Structure k1;
  IntMatrix psi1;
  std::string k1_rule = "first-edge (validated)";
  LimitGroupPtr k0_limit;
  LimitGroupPtr k1_limit;          // free part of K1
  std::vector<Int> k1_torsion_limit;
  LimitDescriptor k0_class;
  LimitDescriptor k1_class;
  KTheoryDiagnostics diagnostics;

  // Human-readable form of the K1 limit including any torsion.
  std::string k1_pretty() const;
};

// Full pipeline. Throws InvalidPresentation if validate() reports errors.
KTheoryReport ktheory_report(const Presentation& p, ClassOrder order = ClassOrder::lex);

}  // namespace solk
