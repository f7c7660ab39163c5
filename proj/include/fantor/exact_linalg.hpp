#pragma once

// Exact integer linear algebra: dense big-integer matrices, Smith and Hermite
// normal forms, lattice kernels and subquotients, homology of a pair of maps,
// and the invariant-factor arithmetic of finitely generated abelian groups.

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "fantor/error.hpp"

namespace fantor {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using IntVector = std::vector<Integer>;

inline Integer abs_value(const Integer& x) { return x < 0 ? Integer(-x) : x; }

inline Integer gcd(Integer a, Integer b) {
  a = abs_value(a);
  b = abs_value(b);
  while (b != 0) {
    Integer r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

inline Integer vector_gcd(const IntVector& v) {
  Integer g = 0;
  for (const auto& x : v) g = gcd(g, x);
  return g;
}

/// Divides out the content of a nonzero vector. The zero vector is returned
/// unchanged.
inline IntVector primitive(IntVector v) {
  Integer g = vector_gcd(v);
  if (g > 1)
    for (auto& x : v) x /= g;
  return v;
}

/// Dense row-major matrix of arbitrary-precision integers. Zero rows or
/// columns are legal and stand for maps to or from the zero group.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
      if (r.size() != cols_)
        throw Error(Errc::DimensionMismatch, "ragged matrix literal");
      for (long x : r) data_.emplace_back(x);
    }
  }

  static IntMatrix identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  static IntMatrix from_rows(const std::vector<IntVector>& rows, std::size_t cols) {
    IntMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols)
        throw Error(Errc::DimensionMismatch, "row length differs from column count");
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  static IntMatrix from_columns(const std::vector<IntVector>& cols, std::size_t rows) {
    return from_rows(cols, rows).transpose();
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return data_.empty(); }

  Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  IntVector row(std::size_t i) const {
    return IntVector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                     data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
  }
  IntVector column(std::size_t j) const {
    IntVector c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
  }

  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Integer& x) { return x == 0; });
  }

  IntMatrix transpose() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  /// Columns [first, last) as a new matrix.
  IntMatrix column_range(std::size_t first, std::size_t last) const {
    IntMatrix m(rows_, last - first);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = first; j < last; ++j) m(i, j - first) = (*this)(i, j);
    return m;
  }
  IntMatrix row_range(std::size_t first, std::size_t last) const {
    IntMatrix m(last - first, cols_);
    for (std::size_t i = first; i < last; ++i)
      for (std::size_t j = 0; j < cols_; ++j) m(i - first, j) = (*this)(i, j);
    return m;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
  }
  /// row[dst] += factor * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const Integer& factor) {
    if (factor == 0) return;
    for (std::size_t j = 0; j < cols_; ++j) {
      const Integer& s = (*this)(src, j);
      if (s != 0) (*this)(dst, j) += factor * s;
    }
  }
  /// col[dst] += factor * col[src]
  void add_col_multiple(std::size_t dst, std::size_t src, const Integer& factor) {
    if (factor == 0) return;
    for (std::size_t i = 0; i < rows_; ++i) {
      const Integer& s = (*this)(i, src);
      if (s != 0) (*this)(i, dst) += factor * s;
    }
  }
  void negate_row(std::size_t i) {
    for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = -(*this)(i, j);
  }

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols_ != b.rows_)
      throw Error(Errc::DimensionMismatch,
                  "product of " + std::to_string(a.rows_) + "x" + std::to_string(a.cols_) +
                      " by " + std::to_string(b.rows_) + "x" + std::to_string(b.cols_));
    IntMatrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Integer& x = a(i, k);
        if (x == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          const Integer& y = b(k, j);
          if (y != 0) c(i, j) += x * y;
        }
      }
    return c;
  }

  friend IntVector operator*(const IntMatrix& a, const IntVector& v) {
    if (a.cols_ != v.size()) throw Error(Errc::DimensionMismatch, "matrix-vector product");
    IntVector out(a.rows_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t j = 0; j < a.cols_; ++j)
        if (a(i, j) != 0 && v[j] != 0) out[i] += a(i, j) * v[j];
    return out;
  }

  friend IntMatrix operator-(const IntMatrix& a) {
    IntMatrix m = a;
    for (auto& x : m.data_) x = -x;
    return m;
  }

  friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  /// [a | b]
  static IntMatrix hconcat(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows_ != b.rows_) throw Error(Errc::DimensionMismatch, "hconcat row counts differ");
    IntMatrix m(a.rows_, a.cols_ + b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t j = 0; j < a.cols_; ++j) m(i, j) = a(i, j);
      for (std::size_t j = 0; j < b.cols_; ++j) m(i, a.cols_ + j) = b(i, j);
    }
    return m;
  }
  /// [a ; b]
  static IntMatrix vconcat(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols_ != b.cols_) throw Error(Errc::DimensionMismatch, "vconcat column counts differ");
    IntMatrix m(a.rows_ + b.rows_, a.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t j = 0; j < a.cols_; ++j) m(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows_; ++i)
      for (std::size_t j = 0; j < b.cols_; ++j) m(a.rows_ + i, j) = b(i, j);
    return m;
  }
  /// Block-diagonal sum.
  static IntMatrix direct_sum(const IntMatrix& a, const IntMatrix& b) {
    IntMatrix m(a.rows_ + b.rows_, a.cols_ + b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t j = 0; j < a.cols_; ++j) m(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows_; ++i)
      for (std::size_t j = 0; j < b.cols_; ++j) m(a.rows_ + i, a.cols_ + j) = b(i, j);
    return m;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

/// D = U·A·V with U, V unimodular and D diagonal with d1 | d2 | ... , zeros
/// last. The inverses of U and V are carried along since lattice kernels and
/// coordinate solves need them.
struct SmithForm {
  IntMatrix d;
  IntMatrix u;
  IntMatrix v;
  IntMatrix u_inverse;
  IntMatrix v_inverse;

  std::size_t rank() const {
    std::size_t r = 0;
    const std::size_t k = std::min(d.rows(), d.cols());
    while (r < k && d(r, r) != 0) ++r;
    return r;
  }
  IntVector diagonal() const {
    IntVector out;
    for (std::size_t i = 0; i < std::min(d.rows(), d.cols()); ++i) out.push_back(d(i, i));
    return out;
  }
};

namespace detail {

// Truncated quotient; the remainder has |r| < |b| which is all the
// Euclidean reduction steps below need.
inline Integer tdiv(const Integer& a, const Integer& b) { return a / b; }

struct SmithWork {
  IntMatrix a, u, u_inv, v, v_inv;

  void row_swap(std::size_t i, std::size_t j) {
    a.swap_rows(i, j);
    u.swap_rows(i, j);
    u_inv.swap_cols(i, j);
  }
  void col_swap(std::size_t i, std::size_t j) {
    a.swap_cols(i, j);
    v.swap_cols(i, j);
    v_inv.swap_rows(i, j);
  }
  // row[dst] += f * row[src]
  void row_add(std::size_t dst, std::size_t src, const Integer& f) {
    a.add_row_multiple(dst, src, f);
    u.add_row_multiple(dst, src, f);
    u_inv.add_col_multiple(src, dst, -f);
  }
  // col[dst] += f * col[src]
  void col_add(std::size_t dst, std::size_t src, const Integer& f) {
    a.add_col_multiple(dst, src, f);
    v.add_col_multiple(dst, src, f);
    v_inv.add_row_multiple(src, dst, -f);
  }
  void row_negate(std::size_t i) {
    a.negate_row(i);
    u.negate_row(i);
    for (std::size_t r = 0; r < u_inv.rows(); ++r) u_inv(r, i) = -u_inv(r, i);
  }
};

}  // namespace detail

/// Smith normal form with minimal-absolute-value pivoting.
inline SmithForm smith_normal_form(const IntMatrix& input) {
  const std::size_t m = input.rows();
  const std::size_t n = input.cols();
  detail::SmithWork w{input, IntMatrix::identity(m), IntMatrix::identity(m),
                      IntMatrix::identity(n), IntMatrix::identity(n)};
  IntMatrix& a = w.a;

  for (std::size_t t = 0; t < std::min(m, n); ++t) {
    // pivot: smallest nonzero |entry| in the trailing block
    std::optional<std::pair<std::size_t, std::size_t>> best;
    for (std::size_t i = t; i < m; ++i)
      for (std::size_t j = t; j < n; ++j)
        if (a(i, j) != 0 && (!best || abs_value(a(i, j)) < abs_value(a(best->first, best->second))))
          best = {i, j};
    if (!best) break;
    w.row_swap(t, best->first);
    w.col_swap(t, best->second);

    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (a(i, t) == 0) continue;
        w.row_add(i, t, -detail::tdiv(a(i, t), a(t, t)));
        if (a(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (a(t, j) == 0) continue;
        w.col_add(j, t, -detail::tdiv(a(t, j), a(t, t)));
        if (a(t, j) != 0) clean = false;
      }
      if (!clean) {
        // move the smallest remainder in row/column t onto the pivot
        std::size_t bi = t, bj = t;
        Integer bv = abs_value(a(t, t));
        for (std::size_t i = t + 1; i < m; ++i)
          if (a(i, t) != 0 && abs_value(a(i, t)) < bv) bv = abs_value(a(i, t)), bi = i, bj = t;
        for (std::size_t j = t + 1; j < n; ++j)
          if (a(t, j) != 0 && abs_value(a(t, j)) < bv) bv = abs_value(a(t, j)), bi = t, bj = j;
        w.row_swap(t, bi);
        w.col_swap(t, bj);
        continue;
      }
      // divisibility of the trailing block by the pivot
      std::optional<std::size_t> bad_row;
      for (std::size_t i = t + 1; i < m && !bad_row; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (a(i, j) % a(t, t) != 0) {
            bad_row = i;
            break;
          }
      if (!bad_row) break;
      w.row_add(t, *bad_row, Integer(1));
    }
    if (a(t, t) < 0) w.row_negate(t);
  }
  return SmithForm{std::move(w.a), std::move(w.u), std::move(w.v), std::move(w.u_inv),
                   std::move(w.v_inv)};
}

/// Row-style Hermite normal form H = U·A: H is in echelon form with positive
/// pivots, entries above each pivot reduced into [0, pivot), zero rows last.
struct HermiteForm {
  IntMatrix h;
  IntMatrix u;
  std::vector<std::size_t> pivot_columns;
};

inline HermiteForm hermite_normal_form(const IntMatrix& input) {
  const std::size_t m = input.rows();
  const std::size_t n = input.cols();
  detail::SmithWork w{input, IntMatrix::identity(m), IntMatrix::identity(m), IntMatrix(0, 0),
                      IntMatrix(0, 0)};
  IntMatrix& a = w.a;
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < m; ++c) {
    for (;;) {
      std::optional<std::size_t> best;
      for (std::size_t i = r; i < m; ++i)
        if (a(i, c) != 0 && (!best || abs_value(a(i, c)) < abs_value(a(*best, c)))) best = i;
      if (!best) break;
      w.row_swap(r, *best);
      bool clean = true;
      for (std::size_t i = r + 1; i < m; ++i) {
        if (a(i, c) == 0) continue;
        w.row_add(i, r, -detail::tdiv(a(i, c), a(r, c)));
        if (a(i, c) != 0) clean = false;
      }
      if (clean) break;
    }
    if (a(r, c) == 0) continue;
    if (a(r, c) < 0) w.row_negate(r);
    for (std::size_t i = 0; i < r; ++i) {
      Integer q = a(i, c) / a(r, c);
      if (a(i, c) - q * a(r, c) < 0) q -= 1;
      w.row_add(i, r, -q);
    }
    pivots.push_back(c);
    ++r;
  }
  return HermiteForm{std::move(w.a), std::move(w.u), std::move(pivots)};
}

/// Rank over the rationals (fraction-free elimination).
inline std::size_t rank(IntMatrix a) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  std::size_t r = 0;
  Integer prev = 1;
  for (std::size_t c = 0; c < n && r < m; ++c) {
    std::size_t p = r;
    while (p < m && a(p, c) == 0) ++p;
    if (p == m) continue;
    a.swap_rows(r, p);
    for (std::size_t i = r + 1; i < m; ++i) {
      for (std::size_t j = c + 1; j < n; ++j)
        a(i, j) = (a(r, c) * a(i, j) - a(i, c) * a(r, j)) / prev;
      a(i, c) = 0;
    }
    prev = a(r, c);
    ++r;
  }
  return r;
}

inline std::size_t rank_of_vectors(const std::vector<IntVector>& vs, std::size_t dim) {
  if (vs.empty()) return 0;
  return rank(IntMatrix::from_rows(vs, dim));
}

/// Determinant of a square matrix (Bareiss).
inline Integer determinant(IntMatrix a) {
  if (a.rows() != a.cols()) throw Error(Errc::DimensionMismatch, "determinant of non-square matrix");
  const std::size_t n = a.rows();
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a(p, k) == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      a.swap_rows(p, k);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) a(i, j) = (a(k, k) * a(i, j) - a(i, k) * a(k, j)) / prev;
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return n == 0 ? Integer(1) : Integer(sign * prev);
}

/// Columns form a basis of the integer kernel {x | A x = 0}.
inline IntMatrix kernel_basis(const IntMatrix& a) {
  SmithForm s = smith_normal_form(a);
  return s.v.column_range(s.rank(), a.cols());
}

/// Columns form a basis of the lattice spanned by the columns of m.
inline IntMatrix column_lattice_basis(const IntMatrix& m) {
  SmithForm s = smith_normal_form(m);
  const std::size_t r = s.rank();
  IntMatrix basis(m.rows(), r);
  for (std::size_t j = 0; j < r; ++j)
    for (std::size_t i = 0; i < m.rows(); ++i) basis(i, j) = s.u_inverse(i, j) * s.d(j, j);
  return basis;
}

/// Solves basis·X = targets for integer X; basis must have independent
/// columns and every target column must lie in their integer span.
inline IntMatrix lattice_coordinates(const IntMatrix& basis, const IntMatrix& targets) {
  if (basis.rows() != targets.rows())
    throw Error(Errc::DimensionMismatch, "lattice_coordinates row counts differ");
  SmithForm s = smith_normal_form(basis);
  const std::size_t r = s.rank();
  if (r != basis.cols()) throw Error(Errc::DimensionMismatch, "lattice basis columns are dependent");
  IntMatrix uy = s.u * targets;
  IntMatrix w(r, targets.cols());
  for (std::size_t j = 0; j < targets.cols(); ++j) {
    for (std::size_t i = 0; i < uy.rows(); ++i) {
      if (i < r) {
        if (uy(i, j) % s.d(i, i) != 0)
          throw Error(Errc::DimensionMismatch, "target not in the lattice");
        w(i, j) = uy(i, j) / s.d(i, i);
      } else if (uy(i, j) != 0) {
        throw Error(Errc::DimensionMismatch, "target not in the span");
      }
    }
  }
  return s.v * w;
}

/// A finitely generated abelian group Z^r ⊕ Z/d1 ⊕ ... ⊕ Z/dk in invariant
/// factor form: every d_i ≥ 2 and d1 | d2 | ... | dk.
struct AbelianGroupInv {
  std::size_t free_rank = 0;
  std::vector<Integer> torsion;

  static AbelianGroupInv zero() { return {}; }
  static AbelianGroupInv free(std::size_t r) { return {r, {}}; }
  static AbelianGroupInv cyclic(const Integer& order) { return from_cyclic_orders({order}); }

  /// Normalizes an arbitrary list of cyclic factors, where an order of 0
  /// means Z and an order of 1 is trivial.
  static AbelianGroupInv from_cyclic_orders(const std::vector<Integer>& orders) {
    AbelianGroupInv g;
    std::vector<Integer> finite;
    for (const auto& o : orders) {
      Integer a = abs_value(o);
      if (a == 0)
        ++g.free_rank;
      else if (a > 1)
        finite.push_back(a);
    }
    if (finite.empty()) return g;
    IntMatrix diag(finite.size(), finite.size());
    for (std::size_t i = 0; i < finite.size(); ++i) diag(i, i) = finite[i];
    for (const auto& d : smith_normal_form(diag).diagonal())
      if (d > 1) g.torsion.push_back(d);
    return g;
  }

  /// Cokernel of a presentation matrix Z^cols → Z^rows.
  static AbelianGroupInv cokernel(const IntMatrix& relations) {
    SmithForm s = smith_normal_form(relations);
    AbelianGroupInv g;
    const std::size_t r = s.rank();
    g.free_rank = relations.rows() - r;
    for (std::size_t i = 0; i < r; ++i)
      if (s.d(i, i) > 1) g.torsion.push_back(s.d(i, i));
    return g;
  }

  bool is_zero() const { return free_rank == 0 && torsion.empty(); }
  bool is_free() const { return torsion.empty(); }
  /// Number of generators in the canonical presentation.
  std::size_t generator_count() const { return free_rank + torsion.size(); }

  /// Order of each canonical generator, 0 for the free ones.
  std::vector<Integer> generator_orders() const {
    std::vector<Integer> o(free_rank, Integer(0));
    o.insert(o.end(), torsion.begin(), torsion.end());
    return o;
  }

  /// Relation matrix (generators × generators) of the canonical presentation.
  IntMatrix relation_matrix() const {
    const std::size_t g = generator_count();
    IntMatrix r(g, g);
    for (std::size_t i = 0; i < torsion.size(); ++i) r(free_rank + i, free_rank + i) = torsion[i];
    return r;
  }

  friend AbelianGroupInv operator+(const AbelianGroupInv& a, const AbelianGroupInv& b) {
    std::vector<Integer> orders = a.generator_orders();
    auto ob = b.generator_orders();
    orders.insert(orders.end(), ob.begin(), ob.end());
    return from_cyclic_orders(orders);
  }
  AbelianGroupInv& operator+=(const AbelianGroupInv& other) { return *this = *this + other; }

  /// k-fold direct power.
  AbelianGroupInv power(std::size_t k) const {
    AbelianGroupInv out;
    for (std::size_t i = 0; i < k; ++i) out += *this;
    return out;
  }

  friend bool operator==(const AbelianGroupInv&, const AbelianGroupInv&) = default;

  /// "0", or terms joined by " + " with the free part first, e.g.
  /// "Z^2 + Z/2 + Z/6".
  std::string to_string() const {
    if (is_zero()) return "0";
    std::string s;
    if (free_rank == 1) s = "Z";
    else if (free_rank > 1) s = "Z^" + std::to_string(free_rank);
    for (const auto& t : torsion) {
      if (!s.empty()) s += " + ";
      s += "Z/" + t.str();
    }
    return s;
  }

  /// Inverse of to_string; also accepts repeated or non-canonical terms such
  /// as "Z/2 + Z/3" and renormalizes them.
  static AbelianGroupInv parse(std::string_view text) {
    auto fail = [&](const std::string& why) {
      return Error(Errc::ParseError, "group \"" + std::string(text) + "\": " + why);
    };
    std::string compact;
    for (char c : text)
      if (!std::isspace(static_cast<unsigned char>(c))) compact += c;
    if (compact.empty()) throw fail("empty");
    if (compact == "0") return {};
    std::vector<Integer> orders;
    std::stringstream ss(compact);
    std::string term;
    auto parse_uint = [&](const std::string& digits) {
      if (digits.empty() || !std::all_of(digits.begin(), digits.end(),
                                         [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
        throw fail("bad number '" + digits + "'");
      return Integer(digits);
    };
    while (std::getline(ss, term, '+')) {
      if (term == "0") continue;
      if (term == "Z") {
        orders.emplace_back(0);
      } else if (term.rfind("Z^", 0) == 0) {
        Integer k = parse_uint(term.substr(2));
        for (Integer i = 0; i < k; ++i) orders.emplace_back(0);
      } else if (term.rfind("Z/", 0) == 0) {
        Integer d = parse_uint(term.substr(2));
        if (d == 0) throw fail("Z/0 is not a finite cyclic group");
        orders.push_back(d);
      } else {
        throw fail("unrecognized term '" + term + "'");
      }
    }
    return from_cyclic_orders(orders);
  }
};

/// (G ⊗ H, Tor₁(G, H)) over Z.
inline std::pair<AbelianGroupInv, AbelianGroupInv> tensor_and_tor1(const AbelianGroupInv& g,
                                                                    const AbelianGroupInv& h) {
  std::vector<Integer> tensor;
  std::vector<Integer> tor;
  for (std::size_t i = 0; i < g.free_rank * h.free_rank; ++i) tensor.emplace_back(0);
  for (std::size_t i = 0; i < g.free_rank; ++i)
    tensor.insert(tensor.end(), h.torsion.begin(), h.torsion.end());
  for (std::size_t i = 0; i < h.free_rank; ++i)
    tensor.insert(tensor.end(), g.torsion.begin(), g.torsion.end());
  for (const auto& a : g.torsion)
    for (const auto& b : h.torsion) {
      Integer c = gcd(a, b);
      tensor.push_back(c);
      tor.push_back(c);
    }
  return {AbelianGroupInv::from_cyclic_orders(tensor), AbelianGroupInv::from_cyclic_orders(tor)};
}

/// Invariants of L / I, where the columns of `lattice` are a basis of L and
/// the columns of `sub` generate a sublattice I ⊆ L.
inline AbelianGroupInv subquotient(const IntMatrix& lattice, const IntMatrix& sub) {
  if (lattice.cols() == 0) return {};
  return AbelianGroupInv::cokernel(lattice_coordinates(lattice, sub));
}

/// ker(d_out) / im(d_in) for free chain groups.
inline AbelianGroupInv homology_at(const IntMatrix& d_out, const IntMatrix& d_in) {
  if (d_out.cols() != d_in.rows())
    throw Error(Errc::DimensionMismatch,
                "d_out has " + std::to_string(d_out.cols()) + " columns, d_in has " +
                    std::to_string(d_in.rows()) + " rows");
  if (!(d_out * d_in).is_zero()) throw Error(Errc::CompositionNonzero, "d_out * d_in != 0");
  SmithForm s = smith_normal_form(d_out);
  const std::size_t r = s.rank();
  const std::size_t n = d_out.cols();
  // im(d_in) in kernel coordinates: rows r.. of V^{-1} d_in.
  IntMatrix coords = (s.v_inverse * d_in).row_range(r, n);
  return AbelianGroupInv::cokernel(coords);
}

/// Preimage {x | A x ∈ span(R)} of the column lattice of R, as a basis.
inline IntMatrix preimage_lattice(const IntMatrix& a, const IntMatrix& r) {
  IntMatrix joint = IntMatrix::hconcat(a, -r);
  IntMatrix k = kernel_basis(joint);
  IntMatrix proj = k.row_range(0, a.cols());
  return column_lattice_basis(proj);
}

}  // namespace fantor
