#pragma once

// Exact integer linear algebra over arbitrary-precision integers: Smith and
// Hermite normal forms, kernels, cokernels and integral solves.

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace solk {

using Int = boost::multiprecision::cpp_int;

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::size_t rows, std::size_t cols, std::vector<Int> entries);

  // Row-major literal, e.g. IntMatrix::from_rows({{-1, 1, 0}, {1, -1, 0}}).
  // All rows must have equal length.
  static IntMatrix from_rows(std::initializer_list<std::initializer_list<long long>> rows);
  static IntMatrix from_rows(const std::vector<std::vector<Int>>& rows, std::size_t cols = 0);
  static IntMatrix identity(std::size_t n);
  static IntMatrix column_vector(const std::vector<Int>& v);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }
  const std::vector<Int>& entries() const noexcept { return entries_; }

  Int& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Int& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  std::vector<Int> row(std::size_t r) const;
  std::vector<Int> column(std::size_t c) const;
  IntMatrix transpose() const;
  // Columns [first, first + count).
  IntMatrix column_block(std::size_t first, std::size_t count) const;
  IntMatrix submatrix(const std::vector<std::size_t>& row_idx,
                      const std::vector<std::size_t>& col_idx) const;
  bool is_zero() const;
  bool is_square() const noexcept { return rows_ == cols_; }

  // Row and column operations used by the normal-form routines.
  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  void add_row_multiple(std::size_t target, std::size_t source, const Int& factor);
  void add_col_multiple(std::size_t target, std::size_t source, const Int& factor);
  void negate_row(std::size_t r);
  void negate_col(std::size_t c);

  friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;
  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator*(const Int& s, const IntMatrix& a);

  // "[[a,b],[c,d]]"
  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> entries_;
};

std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

// Row vector times matrix.
std::vector<Int> row_times(const std::vector<Int>& row, const IntMatrix& m);

struct SmithDecomposition {
  IntMatrix U;  // rows x rows, unimodular
  IntMatrix D;  // rows x cols, diagonal
  IntMatrix V;  // cols x cols, unimodular

  std::vector<Int> diagonal() const;
  std::size_t rank() const;
};

struct CokernelStructure {
  std::size_t free_rank = 0;
  std::vector<Int> torsion;  // each > 1, each dividing the next

  friend bool operator==(const CokernelStructure&, const CokernelStructure&) = default;
  // "Z^2 + Z/6", "0", "Z"
  std::string to_string() const;
};

// U·A·V = D with D in Smith form. Pivots are chosen by smallest absolute
// value with ties broken in (row, col) order, so the output is reproducible.
SmithDecomposition smith_normal_form(const IntMatrix& a);

// Canonical lower-echelon basis of the column lattice: zero columns dropped,
// pivots positive, entries left of each pivot reduced into [0, pivot).
IntMatrix column_hnf(const IntMatrix& b);

// Z-basis of ker A in column Hermite normal form (cols() = nullity).
IntMatrix kernel_basis(const IntMatrix& a);

CokernelStructure cokernel(const IntMatrix& a);

std::size_t rank(const IntMatrix& a);

// Fraction-free (Bareiss) determinant of a square matrix; 1 for 0x0.
Int determinant(const IntMatrix& a);

IntMatrix matrix_power(const IntMatrix& a, unsigned k);

// Integral X with B·X = Y, or nullopt. B needs full column rank for the
// solution to be unique; otherwise some solution is returned.
std::optional<IntMatrix> solve_integral(const IntMatrix& b, const IntMatrix& y);

// Inverse of a unimodular matrix; throws std::invalid_argument otherwise.
IntMatrix unimodular_inverse(const IntMatrix& u);

// S with T·B = B·S. Throws NotInvariant if T·B leaves the lattice of B.
IntMatrix restrict_endomorphism(const IntMatrix& t, const IntMatrix& b);

// Basis of Z^n ∩ (rational column span of A), in column HNF.
IntMatrix saturation(const IntMatrix& a);

// Coefficients c_0..c_n of det(xI - A), c_n = 1.
std::vector<Int> characteristic_polynomial(const IntMatrix& a);

// JSON-safe rendering helper: decimal string of any Int.
std::string to_decimal(const Int& v);

}  // namespace solk
