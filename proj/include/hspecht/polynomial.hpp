#pragma once

// Sparse multivariate polynomials over Q(xi_r) in x1..xn.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "hspecht/errors.hpp"
#include "hspecht/scalar.hpp"

namespace hspecht {

/// Exponent vector x^beta.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  explicit Monomial(std::vector<int> exps) : exps_(std::move(exps)) {
    for (int e : exps_)
      if (e < 0) throw InvalidArgument("negative exponent in monomial");
  }

  std::size_t nvars() const { return exps_.size(); }
  int operator[](std::size_t i) const { return exps_[i]; }
  int& operator[](std::size_t i) { return exps_[i]; }
  const std::vector<int>& exponents() const { return exps_; }

  int degree() const { return std::accumulate(exps_.begin(), exps_.end(), 0); }

  Monomial operator*(const Monomial& o) const {
    Monomial m(*this);
    for (std::size_t i = 0; i < exps_.size(); ++i) m.exps_[i] += o.exps_[i];
    return m;
  }

  bool divides(const Monomial& o) const {
    for (std::size_t i = 0; i < exps_.size(); ++i)
      if (exps_[i] > o.exps_[i]) return false;
    return true;
  }

  /// o / *this, assuming divides(o).
  Monomial quotient_of(const Monomial& o) const {
    Monomial m(o);
    for (std::size_t i = 0; i < exps_.size(); ++i) m.exps_[i] -= exps_[i];
    return m;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.exps_ == b.exps_;
  }
  friend bool operator!=(const Monomial& a, const Monomial& b) {
    return !(a == b);
  }

  /// `x1^2*x3`, or `1` for the unit monomial.
  std::string to_string() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < exps_.size(); ++i) {
      if (exps_[i] == 0) continue;
      if (!first) os << "*";
      first = false;
      os << "x" << (i + 1);
      if (exps_[i] != 1) os << "^" << exps_[i];
    }
    return first ? std::string("1") : os.str();
  }

 private:
  std::vector<int> exps_;
};

/// Graded reverse-lexicographic comparison: a > b.
inline bool grevlex_greater(const Monomial& a, const Monomial& b) {
  int da = a.degree(), db = b.degree();
  if (da != db) return da > db;
  for (std::size_t i = a.nvars(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

/// Orders a term map from the largest monomial down.
struct GrevlexDescending {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return grevlex_greater(a, b);
  }
};

/// All monomials of total degree d in n variables, in grevlex-descending order.
inline std::vector<Monomial> monomials_of_degree(std::size_t n, int d) {
  std::vector<Monomial> out;
  if (n == 0) {
    if (d == 0) out.emplace_back(0);
    return out;
  }
  std::vector<int> e(n, 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
    if (i + 1 == n) {
      e[i] = left;
      out.emplace_back(e);
      return;
    }
    for (int k = left; k >= 0; --k) {
      e[i] = k;
      rec(i + 1, left - k);
    }
  };
  rec(0, d);
  std::sort(out.begin(), out.end(), grevlex_greater);
  return out;
}

class MultiPoly {
 public:
  using TermMap = std::map<Monomial, Scalar, GrevlexDescending>;

  MultiPoly() : MultiPoly(0, 1) {}
  /// Zero polynomial in `nvars` variables over Q(xi_r).
  MultiPoly(std::size_t nvars, int r) : nvars_(nvars), r_(r) {}

  static MultiPoly constant(std::size_t nvars, const Scalar& c) {
    MultiPoly p(nvars, c.order());
    p.add_term(Monomial(nvars), c);
    return p;
  }
  static MultiPoly constant(std::size_t nvars, int r, const Rational& c) {
    return constant(nvars, Scalar(r, c));
  }
  static MultiPoly one(std::size_t nvars, int r) {
    return constant(nvars, Scalar::one(r));
  }
  /// x_i, 1-based.
  static MultiPoly variable(std::size_t nvars, int r, std::size_t i) {
    if (i < 1 || i > nvars) throw InvalidArgument("variable index out of range");
    Monomial m(nvars);
    m[i - 1] = 1;
    return monomial(m, Scalar::one(r));
  }
  static MultiPoly monomial(const Monomial& m, const Scalar& c) {
    MultiPoly p(m.nvars(), c.order());
    p.add_term(m, c);
    return p;
  }

  std::size_t nvars() const { return nvars_; }
  int field_order() const { return r_; }
  const TermMap& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  /// Adds c*m in place, dropping the term if it cancels.
  void add_term(const Monomial& m, const Scalar& c) {
    if (m.nvars() != nvars_) throw Mismatch("monomial has wrong variable count");
    if (c.order() != r_) throw Mismatch("coefficient from a different field");
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      terms_.emplace(m, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  Scalar coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Scalar(r_) : it->second;
  }

  /// Largest monomial under grevlex; requires a nonzero polynomial.
  const std::pair<const Monomial, Scalar>& leading_term() const {
    if (terms_.empty()) throw InvalidArgument("zero polynomial has no leading term");
    return *terms_.begin();
  }

  /// Maximum total degree; -1 for the zero polynomial.
  int degree() const { return terms_.empty() ? -1 : terms_.begin()->first.degree(); }

  bool is_homogeneous() const {
    if (terms_.empty()) return true;
    int d = degree();
    for (const auto& [m, c] : terms_)
      if (m.degree() != d) return false;
    return true;
  }

  /// Degree-d component.
  MultiPoly homogeneous_part(int d) const {
    MultiPoly p(nvars_, r_);
    for (const auto& [m, c] : terms_)
      if (m.degree() == d) p.terms_.emplace(m, c);
    return p;
  }

  MultiPoly& operator+=(const MultiPoly& o) {
    check_same(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  MultiPoly& operator-=(const MultiPoly& o) {
    check_same(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  MultiPoly& operator*=(const Scalar& s) {
    if (s.order() != r_) throw Mismatch("scalar from a different field");
    if (s.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto& [m, c] : terms_) c *= s;
    return *this;
  }
  MultiPoly& operator*=(const Rational& q) { return *this *= Scalar(r_, q); }

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(MultiPoly a, const Scalar& s) { return a *= s; }
  friend MultiPoly operator*(const Scalar& s, MultiPoly a) { return a *= s; }
  friend MultiPoly operator*(MultiPoly a, const Rational& q) { return a *= q; }
  friend MultiPoly operator*(const Rational& q, MultiPoly a) { return a *= q; }
  MultiPoly operator-() const {
    MultiPoly p(*this);
    for (auto& [m, c] : p.terms_) c = -c;
    return p;
  }

  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    a.check_same(b);
    MultiPoly out(a.nvars_, a.r_);
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
    return out;
  }
  MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }

  MultiPoly pow(int k) const {
    if (k < 0) throw InvalidArgument("negative polynomial power");
    MultiPoly out = one(nvars_, r_);
    MultiPoly base = *this;
    while (k > 0) {
      if (k & 1) out *= base;
      k >>= 1;
      if (k > 0) base *= base;
    }
    return out;
  }

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.nvars_ == b.nvars_ && a.r_ == b.r_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const MultiPoly& a, const MultiPoly& b) {
    return !(a == b);
  }

  /// Formal partial derivative in x_i (1-based).
  MultiPoly derivative(std::size_t i) const {
    if (i < 1 || i > nvars_) throw InvalidArgument("derivative index out of range");
    MultiPoly out(nvars_, r_);
    for (const auto& [m, c] : terms_) {
      int e = m[i - 1];
      if (e == 0) continue;
      Monomial d(m);
      d[i - 1] = e - 1;
      out.add_term(d, c * Rational(e));
    }
    return out;
  }

  /// Directional derivative sum_i dir_i * d/dx_i.
  MultiPoly directional_derivative(const std::vector<Rational>& dir) const {
    if (dir.size() != nvars_) throw Mismatch("direction has wrong dimension");
    MultiPoly out(nvars_, r_);
    for (std::size_t i = 0; i < nvars_; ++i)
      if (dir[i] != 0) out += derivative(i + 1) * dir[i];
    return out;
  }

  MultiPoly laplacian() const {
    MultiPoly out(nvars_, r_);
    for (std::size_t i = 1; i <= nvars_; ++i) out += derivative(i).derivative(i);
    return out;
  }

  /// Substitutes x_i -> images[i-1] (all in the same ring).
  MultiPoly substitute(const std::vector<MultiPoly>& images) const {
    if (images.size() != nvars_) throw Mismatch("substitution has wrong arity");
    std::size_t target_vars = images.empty() ? nvars_ : images[0].nvars();
    MultiPoly out(target_vars, r_);
    // Cache powers per variable.
    std::vector<std::vector<MultiPoly>> powers(nvars_);
    for (const auto& [m, c] : terms_) {
      MultiPoly term = constant(target_vars, c);
      for (std::size_t i = 0; i < nvars_; ++i) {
        int e = m[i];
        if (e == 0) continue;
        auto& cache = powers[i];
        if (cache.empty()) cache.push_back(one(target_vars, r_));
        while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * images[i]);
        term *= cache[static_cast<std::size_t>(e)];
      }
      out += term;
    }
    return out;
  }

  /// Canonical text form: terms in grevlex-descending order, e.g.
  /// `3/2*x1^2*x2 + ξ^1*x3`; the zero polynomial prints as `0`.
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
      bool unit = m.degree() == 0;
      bool negative = false;
      std::string coeff;
      if (c.is_rational()) {
        const Rational& q = c.rational_part();
        negative = q < 0;
        Rational mag = abs(q);
        if (mag != 1 || unit) coeff = mag.get_str();
      } else if (!c.is_compound()) {
        // Single xi-power term: pull the sign out.
        std::size_t k = 0;
        while (c.coords()[k] == 0) ++k;
        negative = c.coords()[k] < 0;
        coeff = (negative ? -c : c).to_string();
      } else {
        coeff = "(" + c.to_string() + ")";
      }
      if (first) {
        if (negative) os << "-";
      } else {
        os << (negative ? " - " : " + ");
      }
      first = false;
      if (unit) {
        os << coeff;
      } else {
        if (!coeff.empty()) os << coeff << "*";
        os << m.to_string();
      }
    }
    return os.str();
  }

 private:
  void check_same(const MultiPoly& o) const {
    if (o.nvars_ != nvars_) throw Mismatch("polynomials have different variable counts");
    if (o.r_ != r_) throw Mismatch("polynomials over different fields");
  }

  std::size_t nvars_;
  int r_;
  TermMap terms_;
};

/// Exact quotient h with p = q*h; throws NotDivisible otherwise.
inline MultiPoly exact_divide(const MultiPoly& p, const MultiPoly& q) {
  if (q.is_zero()) throw DivisionByZero("polynomial division by zero");
  if (p.nvars() != q.nvars() || p.field_order() != q.field_order())
    throw Mismatch("division operands from different rings");
  const auto& [lm, lc] = q.leading_term();
  Scalar lc_inv = lc.inverse();
  MultiPoly rem = p;
  MultiPoly quot(p.nvars(), p.field_order());
  while (!rem.is_zero()) {
    const auto& [rm, rc] = rem.leading_term();
    if (!lm.divides(rm)) throw NotDivisible("'" + p.to_string() + "' is not divisible by '" + q.to_string() + "'");
    MultiPoly t = MultiPoly::monomial(lm.quotient_of(rm), rc * lc_inv);
    quot += t;
    rem -= t * q;
  }
  return quot;
}

/// True when q divides p exactly.
inline bool divides(const MultiPoly& q, const MultiPoly& p) {
  try {
    (void)exact_divide(p, q);
    return true;
  } catch (const NotDivisible&) {
    return false;
  }
}

/// Same polynomial over Q(xi_r); every coefficient must be rational. Used to
/// move between r = 1 and r = 2, which are both Q.
inline MultiPoly change_field(const MultiPoly& p, int r) {
  if (p.field_order() == r) return p;
  MultiPoly out(p.nvars(), r);
  for (const auto& [m, c] : p.terms()) {
    if (!c.is_rational()) throw Mismatch("coefficient " + c.to_string() + " is not rational");
    out.add_term(m, Scalar(r, c.rational_part()));
  }
  return out;
}

/// Elementary symmetric polynomial e_j of the given polynomials.
inline MultiPoly elementary_symmetric(const std::vector<MultiPoly>& vals, int j) {
  if (vals.empty()) throw InvalidArgument("no arguments");
  std::size_t n = vals[0].nvars();
  int r = vals[0].field_order();
  // Coefficients of prod (1 + v_i t), truncated at degree j.
  std::vector<MultiPoly> coef(static_cast<std::size_t>(j) + 1, MultiPoly(n, r));
  coef[0] = MultiPoly::one(n, r);
  for (const auto& v : vals) {
    for (std::size_t k = static_cast<std::size_t>(j); k >= 1; --k) coef[k] += coef[k - 1] * v;
  }
  return coef[static_cast<std::size_t>(j)];
}

}  // namespace hspecht
