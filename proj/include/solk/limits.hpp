#pragma once

// Stationary inductive limits lim(Z^r, T) with exact element arithmetic.
//
// The limit is computed on the eventual lattice L = Z^r ∩ span_Q(T^r), where
// T restricts to an injective endomorphism T'. Every element of the limit is a
// pair (stage k, vector v in L-coordinates) modulo (k, v) ~ (k + 1, T'v).

#include <cstddef>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "solk/intlin.hpp"

namespace solk {

class StationaryLimitGroup {
 public:
  explicit StationaryLimitGroup(IntMatrix endomorphism);

  std::size_t ambient_rank() const noexcept { return endomorphism_.rows(); }
  const IntMatrix& endomorphism() const noexcept { return endomorphism_; }
  std::size_t eventual_rank() const noexcept { return eventual_basis_.cols(); }
  const IntMatrix& eventual_basis() const noexcept { return eventual_basis_; }
  const IntMatrix& reduced_endomorphism() const noexcept { return reduced_; }

 private:
  IntMatrix endomorphism_;
  IntMatrix eventual_basis_;
  IntMatrix reduced_;
};

using LimitGroupPtr = std::shared_ptr<const StationaryLimitGroup>;

LimitGroupPtr make_limit(const IntMatrix& t);

// Value object; always held in canonical form (minimal stage).
class LimitElement {
 public:
  LimitElement(LimitGroupPtr group, std::size_t stage, std::vector<Int> vector);

  const LimitGroupPtr& group() const noexcept { return group_; }
  std::size_t stage() const noexcept { return stage_; }
  const std::vector<Int>& vector() const noexcept { return vector_; }

  // Representative at a later stage m >= stage(): T'^(m - stage) v.
  std::vector<Int> promoted(std::size_t m) const;

 private:
  LimitGroupPtr group_;
  std::size_t stage_;
  std::vector<Int> vector_;
};

LimitElement zero(const LimitGroupPtr& g);
// Element represented by an ambient vector of Z^r at the given stage.
LimitElement from_ambient(const LimitGroupPtr& g, std::size_t stage, const std::vector<Int>& v);

bool element_equal(const LimitElement& a, const LimitElement& b);
LimitElement element_add(const LimitElement& a, const LimitElement& b);
LimitElement element_negate(const LimitElement& a);

struct LimitDescriptor {
  enum class Kind { free_abelian, z_one_over, generic };

  Kind kind = Kind::free_abelian;
  std::size_t rank = 0;         // eventual rank r'
  Int n = 0;                    // z_one_over only
  Int det = 1;                  // det T'
  std::vector<Int> charpoly;    // det(xI - T'), low degree first
  IntMatrix presentation;       // T'

  // "FreeAbelian(2)", "ZOneOver(3)", "Generic(rank=2, det=6, charpoly=x^2-5x+6)".
  // Only conjugation invariants enter the string.
  std::string name() const;
  // "Z^2", "Z[1/3]", "0", or "lim(Z^2, [[2,0],[0,3]])".
  std::string pretty() const;
};

LimitDescriptor classify(const StationaryLimitGroup& g);

// For ZOneOver groups: the element as a reduced fraction num/den with den a
// power of n. Throws std::domain_error for other kinds.
std::pair<Int, Int> to_fraction(const LimitElement& a);
// Positive cone of Z[1/n] (T' = [[n]], n >= 2). Throws std::domain_error
// otherwise.
bool is_positive(const LimitElement& a);

// Invariant factors of the direct limit of the finite group ⊕ Z/orders[i]
// under the endomorphism m (its eventual image).
std::vector<Int> torsion_limit(const std::vector<Int>& orders, const IntMatrix& m);

std::string polynomial_to_string(const std::vector<Int>& coeff);

}  // namespace solk
