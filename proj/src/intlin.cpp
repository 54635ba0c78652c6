#include "solk/intlin.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "solk/errors.hpp"

namespace solk {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols, std::vector<Int> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_) {
    throw std::invalid_argument("IntMatrix: entry count does not match shape");
  }
}

IntMatrix IntMatrix::from_rows(std::initializer_list<std::initializer_list<long long>> rows) {
  std::vector<std::vector<Int>> converted;
  for (const auto& r : rows) {
    converted.emplace_back(r.begin(), r.end());
  }
  return from_rows(converted);
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<Int>>& rows, std::size_t cols) {
  if (!rows.empty()) cols = rows.front().size();
  IntMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) {
      throw std::invalid_argument("IntMatrix::from_rows: ragged rows");
    }
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::column_vector(const std::vector<Int>& v) {
  return IntMatrix(v.size(), 1, v);
}

std::vector<Int> IntMatrix::row(std::size_t r) const {
  return {entries_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
          entries_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
}

std::vector<Int> IntMatrix::column(std::size_t c) const {
  std::vector<Int> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

IntMatrix IntMatrix::column_block(std::size_t first, std::size_t count) const {
  IntMatrix out(rows_, count);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < count; ++c) out(r, c) = (*this)(r, first + c);
  return out;
}

IntMatrix IntMatrix::submatrix(const std::vector<std::size_t>& row_idx,
                               const std::vector<std::size_t>& col_idx) const {
  IntMatrix out(row_idx.size(), col_idx.size());
  for (std::size_t r = 0; r < row_idx.size(); ++r)
    for (std::size_t c = 0; c < col_idx.size(); ++c) out(r, c) = (*this)(row_idx[r], col_idx[c]);
  return out;
}

bool IntMatrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Int& v) { return v == 0; });
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
}

void IntMatrix::add_row_multiple(std::size_t target, std::size_t source, const Int& factor) {
  if (factor == 0) return;
  for (std::size_t c = 0; c < cols_; ++c) (*this)(target, c) += factor * (*this)(source, c);
}

void IntMatrix::add_col_multiple(std::size_t target, std::size_t source, const Int& factor) {
  if (factor == 0) return;
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, target) += factor * (*this)(r, source);
}

void IntMatrix::negate_row(std::size_t r) {
  for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) = -(*this)(r, c);
}

void IntMatrix::negate_col(std::size_t c) {
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = -(*this)(r, c);
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("IntMatrix: product shape mismatch");
  IntMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Int& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
    }
  return out;
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) {
    throw std::invalid_argument("IntMatrix: sum shape mismatch");
  }
  IntMatrix out = a;
  for (std::size_t i = 0; i < out.entries_.size(); ++i) out.entries_[i] += b.entries_[i];
  return out;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) {
    throw std::invalid_argument("IntMatrix: difference shape mismatch");
  }
  IntMatrix out = a;
  for (std::size_t i = 0; i < out.entries_.size(); ++i) out.entries_[i] -= b.entries_[i];
  return out;
}

IntMatrix operator*(const Int& s, const IntMatrix& a) {
  IntMatrix out = a;
  for (auto& v : out.entries_) v *= s;
  return out;
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t r = 0; r < rows_; ++r) {
    if (r) os << ',';
    os << '[';
    for (std::size_t c = 0; c < cols_; ++c) {
      if (c) os << ',';
      os << (*this)(r, c);
    }
    os << ']';
  }
  os << ']';
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const IntMatrix& m) { return os << m.to_string(); }

std::vector<Int> row_times(const std::vector<Int>& row, const IntMatrix& m) {
  if (row.size() != m.rows()) throw std::invalid_argument("row_times: shape mismatch");
  std::vector<Int> out(m.cols());
  for (std::size_t k = 0; k < m.rows(); ++k) {
    if (row[k] == 0) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) out[j] += row[k] * m(k, j);
  }
  return out;
}

std::vector<Int> SmithDecomposition::diagonal() const {
  std::vector<Int> d;
  for (std::size_t i = 0; i < std::min(D.rows(), D.cols()); ++i) d.push_back(D(i, i));
  return d;
}

std::size_t SmithDecomposition::rank() const {
  std::size_t r = 0;
  for (const auto& v : diagonal())
    if (v != 0) ++r;
  return r;
}

std::string CokernelStructure::to_string() const {
  std::ostringstream os;
  bool first = true;
  if (free_rank > 0) {
    os << 'Z';
    if (free_rank > 1) os << '^' << free_rank;
    first = false;
  }
  for (const auto& t : torsion) {
    if (!first) os << " + ";
    os << "Z/" << t;
    first = false;
  }
  if (first) os << '0';
  return os.str();
}

namespace {

// Euclidean quotient rounding toward zero; remainders keep the dividend sign,
// which is enough for the pivot-shrinking loops below.
Int quotient(const Int& a, const Int& b) { return a / b; }

// Floor division for HNF reduction into [0, pivot).
Int floor_div(const Int& a, const Int& b) {
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

SmithDecomposition smith_normal_form(const IntMatrix& a) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  IntMatrix d = a;
  IntMatrix u = IntMatrix::identity(m);
  IntMatrix v = IntMatrix::identity(n);

  for (std::size_t t = 0; t < std::min(m, n); ++t) {
    while (true) {
      // Smallest nonzero |entry| in the trailing block, first in (row, col) order.
      bool found = false;
      std::size_t pr = 0, pc = 0;
      Int best;
      for (std::size_t i = t; i < m; ++i)
        for (std::size_t j = t; j < n; ++j) {
          const Int& x = d(i, j);
          if (x == 0) continue;
          Int ax = abs(x);
          if (!found || ax < best) {
            found = true;
            best = ax;
            pr = i;
            pc = j;
          }
        }
      if (!found) {
        return {std::move(u), std::move(d), std::move(v)};
      }
      d.swap_rows(t, pr);
      u.swap_rows(t, pr);
      d.swap_cols(t, pc);
      v.swap_cols(t, pc);

      bool dirty = false;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (d(i, t) == 0) continue;
        Int q = quotient(d(i, t), d(t, t));
        d.add_row_multiple(i, t, -q);
        u.add_row_multiple(i, t, -q);
        if (d(i, t) != 0) dirty = true;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (d(t, j) == 0) continue;
        Int q = quotient(d(t, j), d(t, t));
        d.add_col_multiple(j, t, -q);
        v.add_col_multiple(j, t, -q);
        if (d(t, j) != 0) dirty = true;
      }
      if (dirty) continue;

      // Row and column are clear; enforce divisibility of the trailing block.
      bool divides = true;
      for (std::size_t i = t + 1; i < m && divides; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (d(i, j) % d(t, t) != 0) {
            d.add_row_multiple(t, i, 1);
            u.add_row_multiple(t, i, 1);
            divides = false;
            break;
          }
      if (!divides) continue;

      if (d(t, t) < 0) {
        d.negate_row(t);
        u.negate_row(t);
      }
      break;
    }
  }
  return {std::move(u), std::move(d), std::move(v)};
}

IntMatrix column_hnf(const IntMatrix& b) {
  IntMatrix h = b;
  const std::size_t n = h.rows();
  const std::size_t r = h.cols();
  std::size_t k = 0;  // next pivot column
  for (std::size_t row = 0; row < n && k < r; ++row) {
    while (true) {
      bool found = false;
      std::size_t pc = 0;
      Int best;
      for (std::size_t j = k; j < r; ++j) {
        if (h(row, j) == 0) continue;
        Int ax = abs(h(row, j));
        if (!found || ax < best) {
          found = true;
          best = ax;
          pc = j;
        }
      }
      if (!found) break;
      h.swap_cols(k, pc);
      bool dirty = false;
      for (std::size_t j = k + 1; j < r; ++j) {
        if (h(row, j) == 0) continue;
        h.add_col_multiple(j, k, -quotient(h(row, j), h(row, k)));
        if (h(row, j) != 0) dirty = true;
      }
      if (dirty) continue;
      if (h(row, k) < 0) h.negate_col(k);
      for (std::size_t j = 0; j < k; ++j) {
        h.add_col_multiple(j, k, -floor_div(h(row, j), h(row, k)));
      }
      ++k;
      break;
    }
  }
  return h.column_block(0, k);
}

IntMatrix kernel_basis(const IntMatrix& a) {
  SmithDecomposition snf = smith_normal_form(a);
  std::size_t r = snf.rank();
  return column_hnf(snf.V.column_block(r, a.cols() - r));
}

CokernelStructure cokernel(const IntMatrix& a) {
  SmithDecomposition snf = smith_normal_form(a);
  CokernelStructure out;
  out.free_rank = a.rows() - snf.rank();
  for (const auto& v : snf.diagonal())
    if (v > 1) out.torsion.push_back(v);
  return out;
}

std::size_t rank(const IntMatrix& a) { return smith_normal_form(a).rank(); }

Int determinant(const IntMatrix& a) {
  if (!a.is_square()) throw std::invalid_argument("determinant: matrix not square");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  IntMatrix m = a;
  Int sign = 1;
  Int prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t swap = k + 1;
      while (swap < n && m(swap, k) == 0) ++swap;
      if (swap == n) return 0;
      m.swap_rows(k, swap);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
      }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

IntMatrix matrix_power(const IntMatrix& a, unsigned k) {
  if (!a.is_square()) throw std::invalid_argument("matrix_power: matrix not square");
  IntMatrix result = IntMatrix::identity(a.rows());
  IntMatrix base = a;
  while (k) {
    if (k & 1U) result = result * base;
    k >>= 1U;
    if (k) base = base * base;
  }
  return result;
}

std::optional<IntMatrix> solve_integral(const IntMatrix& b, const IntMatrix& y) {
  if (b.rows() != y.rows()) throw std::invalid_argument("solve_integral: shape mismatch");
  SmithDecomposition snf = smith_normal_form(b);
  IntMatrix uy = snf.U * y;
  const std::size_t r = snf.rank();
  IntMatrix z(b.cols(), y.cols());
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < y.cols(); ++j) {
      if (i < r) {
        const Int& di = snf.D(i, i);
        if (uy(i, j) % di != 0) return std::nullopt;
        z(i, j) = uy(i, j) / di;
      } else if (uy(i, j) != 0) {
        return std::nullopt;
      }
    }
  return snf.V * z;
}

IntMatrix unimodular_inverse(const IntMatrix& u) {
  if (!u.is_square()) throw std::invalid_argument("unimodular_inverse: matrix not square");
  auto inv = solve_integral(u, IntMatrix::identity(u.rows()));
  if (!inv || rank(u) != u.rows()) {
    throw std::invalid_argument("unimodular_inverse: matrix is not unimodular");
  }
  return *inv;
}

IntMatrix restrict_endomorphism(const IntMatrix& t, const IntMatrix& b) {
  if (!t.is_square() || t.cols() != b.rows()) {
    throw std::invalid_argument("restrict_endomorphism: shape mismatch");
  }
  auto s = solve_integral(b, t * b);
  if (!s) throw NotInvariant("endomorphism does not preserve the column lattice");
  return *s;
}

IntMatrix saturation(const IntMatrix& a) {
  // ker(A^T) spans the annihilator of the column space; its own kernel is the
  // saturated lattice.
  IntMatrix annihilator = kernel_basis(a.transpose());
  if (annihilator.cols() == 0) return IntMatrix::identity(a.rows());
  return kernel_basis(annihilator.transpose());
}

std::vector<Int> characteristic_polynomial(const IntMatrix& a) {
  if (!a.is_square()) throw std::invalid_argument("characteristic_polynomial: not square");
  // Faddeev-LeVerrier; every division is exact over Z.
  const std::size_t n = a.rows();
  std::vector<Int> coeff(n + 1);
  coeff[n] = 1;
  IntMatrix m = IntMatrix::identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    IntMatrix am = a * m;
    Int trace = 0;
    for (std::size_t i = 0; i < n; ++i) trace += am(i, i);
    coeff[n - k] = -trace / Int(k);
    m = am;
    for (std::size_t i = 0; i < n; ++i) m(i, i) += coeff[n - k];
  }
  return coeff;
}

std::string to_decimal(const Int& v) { return v.str(); }

}  // namespace solk
