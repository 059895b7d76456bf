#pragma once

// Dense exact linear algebra over Q(xi_r).
//
// Forward elimination is fraction-free (Bareiss): every update divides by the
// previous pivot, which keeps integer inputs integral. Solving and nullspaces
// finish with a normalising back substitution and are re-verified by
// substitution before being returned.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hspecht/errors.hpp"
#include "hspecht/polynomial.hpp"
#include "hspecht/scalar.hpp"

namespace hspecht {

using ScalarVector = std::vector<Scalar>;

class ScalarMatrix {
 public:
  ScalarMatrix() : ScalarMatrix(0, 0, 1) {}
  ScalarMatrix(std::size_t rows, std::size_t cols, int r)
      : rows_(rows), cols_(cols), r_(r), data_(rows * cols, Scalar(r)) {}

  static ScalarMatrix identity(std::size_t n, int r) {
    ScalarMatrix m(n, n, r);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar::one(r);
    return m;
  }

  /// Builds from rational rows (all of equal length).
  static ScalarMatrix from_rows(int r, const std::vector<std::vector<Rational>>& rows) {
    std::size_t c = rows.empty() ? 0 : rows[0].size();
    ScalarMatrix m(rows.size(), c, r);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != c) throw InvalidArgument("ragged matrix rows");
      for (std::size_t j = 0; j < c; ++j) m(i, j) = Scalar(r, rows[i][j]);
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  int field_order() const { return r_; }

  Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  friend ScalarMatrix operator*(const ScalarMatrix& a, const ScalarMatrix& b) {
    if (a.cols_ != b.rows_) throw Mismatch("matrix product dimension mismatch");
    ScalarMatrix out(a.rows_, b.cols_, a.r_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Scalar& aik = a(i, k);
        if (aik.is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
      }
    return out;
  }

  ScalarVector operator*(const ScalarVector& v) const {
    if (v.size() != cols_) throw Mismatch("matrix-vector dimension mismatch");
    ScalarVector out(rows_, Scalar(r_));
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out[i] += (*this)(i, j) * v[j];
    return out;
  }

  ScalarMatrix transpose() const {
    ScalarMatrix t(cols_, rows_, r_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  Scalar trace() const {
    Scalar t(r_);
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
    return t;
  }

  friend bool operator==(const ScalarMatrix& a, const ScalarMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  std::string to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < rows_; ++i) {
      s += i ? ",[" : "[";
      for (std::size_t j = 0; j < cols_; ++j) {
        if (j) s += ",";
        s += (*this)(i, j).to_string();
      }
      s += "]";
    }
    return s + "]";
  }

 private:
  std::size_t rows_, cols_;
  int r_;
  std::vector<Scalar> data_;
};

struct Echelon {
  ScalarMatrix reduced;             // reduced row echelon form
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

namespace detail {

// Bareiss elimination in place; returns pivot columns.
inline std::vector<std::size_t> bareiss_forward(ScalarMatrix& m) {
  std::vector<std::size_t> pivots;
  const int r = m.field_order();
  Scalar prev = Scalar::one(r);
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t p = row;
    while (p < m.rows() && m(p, col).is_zero()) ++p;
    if (p == m.rows()) continue;
    if (p != row)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(row, j));
    const Scalar pivot = m(row, col);
    Scalar prev_inv = prev.inverse();
    for (std::size_t i = row + 1; i < m.rows(); ++i) {
      const Scalar lead = m(i, col);
      for (std::size_t j = col + 1; j < m.cols(); ++j) {
        Scalar v = pivot * m(i, j);
        if (!lead.is_zero()) v -= lead * m(row, j);
        m(i, j) = v * prev_inv;
      }
      m(i, col) = Scalar(r);
    }
    prev = pivot;
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace detail

inline std::size_t rank(ScalarMatrix m) { return detail::bareiss_forward(m).size(); }

inline Echelon row_reduce(ScalarMatrix m) {
  auto pivots = detail::bareiss_forward(m);
  const int r = m.field_order();
  for (std::size_t k = pivots.size(); k-- > 0;) {
    std::size_t pc = pivots[k];
    Scalar inv = m(k, pc).inverse();
    for (std::size_t j = pc; j < m.cols(); ++j) m(k, j) *= inv;
    for (std::size_t i = 0; i < k; ++i) {
      Scalar f = m(i, pc);
      if (f.is_zero()) continue;
      for (std::size_t j = pc; j < m.cols(); ++j) m(i, j) -= f * m(k, j);
    }
  }
  for (std::size_t i = pivots.size(); i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = Scalar(r);
  return {std::move(m), std::move(pivots)};
}

/// Solves m*v = rhs exactly; throws Inconsistent when no solution exists.
/// Free variables are set to zero.
inline ScalarVector solve(const ScalarMatrix& m, const ScalarVector& rhs) {
  if (rhs.size() != m.rows()) throw Mismatch("right-hand side has wrong length");
  const int r = m.field_order();
  ScalarMatrix aug(m.rows(), m.cols() + 1, r);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = rhs[i];
  }
  Echelon e = row_reduce(std::move(aug));
  if (!e.pivots.empty() && e.pivots.back() == m.cols()) throw Inconsistent("linear system has no solution");
  ScalarVector v(m.cols(), Scalar(r));
  for (std::size_t k = 0; k < e.pivots.size(); ++k) v[e.pivots[k]] = e.reduced(k, m.cols());
  if (m * v != rhs) throw AlgebraError("solve: substitution check failed");
  return v;
}

/// Basis of {v : m*v = 0}, each vector verified to annihilate m.
inline std::vector<ScalarVector> nullspace(const ScalarMatrix& m) {
  const int r = m.field_order();
  Echelon e = row_reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<ScalarVector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    ScalarVector v(m.cols(), Scalar(r));
    v[free] = Scalar::one(r);
    for (std::size_t k = 0; k < e.pivots.size(); ++k) v[e.pivots[k]] = -e.reduced(k, free);
    for (const auto& x : m * v)
      if (!x.is_zero()) throw AlgebraError("nullspace: verification failed");
    basis.push_back(std::move(v));
  }
  return basis;
}

// ---------------------------------------------------------------------------
// Polynomial families as coefficient matrices.

/// Coefficient matrix with one row per polynomial and one column per monomial
/// appearing in any of them (columns in grevlex-descending order).
class CoefficientTable {
 public:
  explicit CoefficientTable(const std::vector<MultiPoly>& polys) {
    if (polys.empty()) return;
    nvars_ = polys[0].nvars();
    r_ = polys[0].field_order();
    for (const auto& p : polys)
      for (const auto& [m, c] : p.terms()) columns_.emplace(m, 0);
    std::size_t k = 0;
    for (auto& [m, idx] : columns_) idx = k++;
  }

  void add_monomials(const MultiPoly& p) {
    for (const auto& [m, c] : p.terms()) columns_.emplace(m, 0);
    std::size_t k = 0;
    for (auto& [m, idx] : columns_) idx = k++;
  }

  std::size_t width() const { return columns_.size(); }

  /// Rows are polynomials. Throws if a polynomial uses an unknown monomial.
  ScalarMatrix rows_of(const std::vector<MultiPoly>& polys) const {
    ScalarMatrix m(polys.size(), columns_.size(), r_);
    for (std::size_t i = 0; i < polys.size(); ++i) fill_row(m, i, polys[i]);
    return m;
  }

  ScalarVector vector_of(const MultiPoly& p) const {
    ScalarVector v(columns_.size(), Scalar(r_));
    for (const auto& [mono, c] : p.terms()) v[index(mono)] = c;
    return v;
  }

 private:
  std::size_t index(const Monomial& mono) const {
    auto it = columns_.find(mono);
    if (it == columns_.end()) throw InvalidArgument("monomial outside coefficient table");
    return it->second;
  }
  void fill_row(ScalarMatrix& m, std::size_t row, const MultiPoly& p) const {
    for (const auto& [mono, c] : p.terms()) m(row, index(mono)) = c;
  }

  std::size_t nvars_ = 0;
  int r_ = 1;
  std::map<Monomial, std::size_t, GrevlexDescending> columns_;
};

/// Dimension of the linear span of a family of polynomials.
inline std::size_t span_rank(const std::vector<MultiPoly>& polys) {
  if (polys.empty()) return 0;
  CoefficientTable table(polys);
  if (table.width() == 0) return 0;
  return rank(table.rows_of(polys));
}

/// Coefficients c with target = sum c_k basis[k], or nullopt when target is
/// outside the span.
inline std::optional<ScalarVector> express_in_span(const std::vector<MultiPoly>& basis,
                                                   const MultiPoly& target) {
  if (basis.empty()) {
    if (target.is_zero()) return ScalarVector{};
    return std::nullopt;
  }
  CoefficientTable table(basis);
  table.add_monomials(target);
  ScalarMatrix cols = table.rows_of(basis).transpose();
  try {
    return solve(cols, table.vector_of(target));
  } catch (const Inconsistent&) {
    return std::nullopt;
  }
}

inline bool in_span(const std::vector<MultiPoly>& basis, const MultiPoly& target) {
  if (target.is_zero()) return true;
  std::vector<MultiPoly> all = basis;
  all.push_back(target);
  return span_rank(all) == span_rank(basis);
}

}  // namespace hspecht
