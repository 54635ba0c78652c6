#include "solk/limits.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include <boost/multiprecision/integer.hpp>

namespace solk {

StationaryLimitGroup::StationaryLimitGroup(IntMatrix endomorphism)
    : endomorphism_(std::move(endomorphism)) {
  if (!endomorphism_.is_square()) {
    throw std::invalid_argument("stationary limit needs a square endomorphism");
  }
  const std::size_t r = endomorphism_.rows();
  // rank(T^k) is constant for k >= r.
  IntMatrix eventual = matrix_power(endomorphism_, static_cast<unsigned>(r));
  eventual_basis_ = r == 0 ? IntMatrix(0, 0) : saturation(eventual);
  if (rank(eventual) == 0) eventual_basis_ = IntMatrix(r, 0);
  reduced_ = restrict_endomorphism(endomorphism_, eventual_basis_);
}

LimitGroupPtr make_limit(const IntMatrix& t) {
  return std::make_shared<const StationaryLimitGroup>(t);
}

namespace {

std::vector<Int> mat_vec(const IntMatrix& m, const std::vector<Int>& v) {
  return (m * IntMatrix::column_vector(v)).column(0);
}

// Pull back through T' while the vector stays in its image.
std::pair<std::size_t, std::vector<Int>> canonical(const StationaryLimitGroup& g,
                                                   std::size_t stage, std::vector<Int> v) {
  const IntMatrix& t = g.reduced_endomorphism();
  bool is_zero = std::all_of(v.begin(), v.end(), [](const Int& x) { return x == 0; });
  if (is_zero) return {0, std::move(v)};
  while (stage > 0) {
    auto pre = solve_integral(t, IntMatrix::column_vector(v));
    if (!pre) break;
    v = pre->column(0);
    --stage;
  }
  return {stage, std::move(v)};
}

void require_same_group(const LimitElement& a, const LimitElement& b) {
  if (a.group() != b.group()) throw std::invalid_argument("limit elements from different groups");
}

}  // namespace

LimitElement::LimitElement(LimitGroupPtr group, std::size_t stage, std::vector<Int> vector)
    : group_(std::move(group)) {
  if (!group_) throw std::invalid_argument("limit element without group");
  if (vector.size() != group_->eventual_rank()) {
    throw std::invalid_argument("limit element vector has wrong length");
  }
  auto [s, v] = canonical(*group_, stage, std::move(vector));
  stage_ = s;
  vector_ = std::move(v);
}

std::vector<Int> LimitElement::promoted(std::size_t m) const {
  if (m < stage_) throw std::invalid_argument("cannot promote to an earlier stage");
  std::vector<Int> v = vector_;
  for (std::size_t k = stage_; k < m; ++k) v = mat_vec(group_->reduced_endomorphism(), v);
  return v;
}

LimitElement zero(const LimitGroupPtr& g) {
  return {g, 0, std::vector<Int>(g->eventual_rank())};
}

LimitElement from_ambient(const LimitGroupPtr& g, std::size_t stage, const std::vector<Int>& v) {
  const std::size_t r = g->ambient_rank();
  if (v.size() != r) throw std::invalid_argument("ambient vector has wrong length");
  std::vector<Int> pushed = mat_vec(matrix_power(g->endomorphism(), static_cast<unsigned>(r)), v);
  auto coords = solve_integral(g->eventual_basis(), IntMatrix::column_vector(pushed));
  if (!coords) throw std::logic_error("T^r image escaped the eventual lattice");
  return {g, stage + r, coords->column(0)};
}

bool element_equal(const LimitElement& a, const LimitElement& b) {
  require_same_group(a, b);
  std::size_t m = std::max(a.stage(), b.stage());
  return a.promoted(m) == b.promoted(m);
}

LimitElement element_add(const LimitElement& a, const LimitElement& b) {
  require_same_group(a, b);
  std::size_t m = std::max(a.stage(), b.stage());
  std::vector<Int> va = a.promoted(m);
  std::vector<Int> vb = b.promoted(m);
  for (std::size_t i = 0; i < va.size(); ++i) va[i] += vb[i];
  return {a.group(), m, std::move(va)};
}

LimitElement element_negate(const LimitElement& a) {
  std::vector<Int> v = a.vector();
  for (auto& x : v) x = -x;
  return {a.group(), a.stage(), std::move(v)};
}

std::string polynomial_to_string(const std::vector<Int>& coeff) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = coeff.size(); i-- > 0;) {
    const Int& c = coeff[i];
    if (c == 0) continue;
    Int mag = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? '-' : '+');
    }
    if (mag != 1 || i == 0) os << mag;
    if (i >= 1) os << 'x';
    if (i >= 2) os << '^' << i;
    first = false;
  }
  if (first) os << '0';
  return os.str();
}

std::string LimitDescriptor::name() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::free_abelian:
      os << "FreeAbelian(" << rank << ')';
      break;
    case Kind::z_one_over:
      os << "ZOneOver(" << n << ')';
      break;
    case Kind::generic:
      os << "Generic(rank=" << rank << ", det=" << det
         << ", charpoly=" << polynomial_to_string(charpoly) << ')';
      break;
  }
  return os.str();
}

std::string LimitDescriptor::pretty() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::free_abelian:
      if (rank == 0) {
        os << '0';
      } else {
        os << 'Z';
        if (rank > 1) os << '^' << rank;
      }
      break;
    case Kind::z_one_over:
      os << "Z[1/" << n << ']';
      break;
    case Kind::generic:
      os << "lim(Z^" << rank << ", " << presentation.to_string() << ')';
      break;
  }
  return os.str();
}

LimitDescriptor classify(const StationaryLimitGroup& g) {
  LimitDescriptor d;
  d.rank = g.eventual_rank();
  d.presentation = g.reduced_endomorphism();
  d.det = determinant(d.presentation);
  d.charpoly = characteristic_polynomial(d.presentation);
  if (abs(d.det) == 1) {
    d.kind = LimitDescriptor::Kind::free_abelian;
  } else if (d.rank == 1 && abs(d.presentation(0, 0)) >= 2) {
    d.kind = LimitDescriptor::Kind::z_one_over;
    d.n = abs(d.presentation(0, 0));
  } else {
    d.kind = LimitDescriptor::Kind::generic;
  }
  return d;
}

std::pair<Int, Int> to_fraction(const LimitElement& a) {
  const IntMatrix& t = a.group()->reduced_endomorphism();
  if (t.rows() != 1 || abs(t(0, 0)) < 2) {
    throw std::domain_error("to_fraction needs a Z[1/n] group");
  }
  Int num = a.vector()[0];
  Int den = boost::multiprecision::pow(t(0, 0), static_cast<unsigned>(a.stage()));
  if (den < 0) {
    num = -num;
    den = -den;
  }
  Int g = boost::multiprecision::gcd(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  return {num, den};
}

bool is_positive(const LimitElement& a) {
  const IntMatrix& t = a.group()->reduced_endomorphism();
  if (t.rows() != 1 || t(0, 0) < 2) {
    throw std::domain_error("order structure is only defined for Z[1/n] with T' = [[n]]");
  }
  return a.vector()[0] > 0;
}

std::vector<Int> torsion_limit(const std::vector<Int>& orders, const IntMatrix& m) {
  const std::size_t t = orders.size();
  if (m.rows() != t || m.cols() != t) throw std::invalid_argument("torsion_limit: shape mismatch");
  if (t == 0) return {};
  IntMatrix d(t, t);
  for (std::size_t i = 0; i < t; ++i) d(i, i) = orders[i];

  // L_k = M^k Z^t + D Z^t shrinks until it stabilises; L_k / D Z^t is the
  // eventual image.
  auto lattice = [&](const IntMatrix& power) {
    IntMatrix both(t, 2 * t);
    for (std::size_t i = 0; i < t; ++i)
      for (std::size_t j = 0; j < t; ++j) {
        both(i, j) = power(i, j);
        both(i, t + j) = d(i, j);
      }
    return column_hnf(both);
  };
  IntMatrix power = IntMatrix::identity(t);
  IntMatrix current = lattice(power);
  while (true) {
    power = power * m;
    for (std::size_t i = 0; i < t; ++i)
      for (std::size_t j = 0; j < t; ++j) {
        // keep entries bounded; only residues mod orders[i] matter
        Int r = power(i, j) % orders[i];
        if (r < 0) r += orders[i];
        power(i, j) = r;
      }
    IntMatrix next = lattice(power);
    if (abs(determinant(next)) == abs(determinant(current))) break;
    current = next;
  }
  auto coords = solve_integral(current, d);
  if (!coords) throw std::logic_error("torsion_limit: D not contained in eventual lattice");
  return cokernel(*coords).torsion;
}

}  // namespace solk
