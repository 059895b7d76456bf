#pragma once

// Exact arithmetic in the cyclotomic field Q(xi_r) = Q[t]/Phi_r(t).
//
// An element is stored by its phi(r) rational coordinates in the power basis
// 1, xi, ..., xi^{phi(r)-1}. For r in {1, 2} this is just a rational number.

#include <gmpxx.h>

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <string>
#include <vector>

#include "hspecht/errors.hpp"

namespace hspecht {

using Rational = mpq_class;

namespace detail {

// Dense univariate polynomials over Q, lowest degree first, no trailing zeros.
using UPoly = std::vector<Rational>;

inline void trim(UPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline UPoly upoly_mul(const UPoly& a, const UPoly& b) {
  if (a.empty() || b.empty()) return {};
  UPoly out(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  trim(out);
  return out;
}

inline UPoly upoly_sub(UPoly a, const UPoly& b) {
  if (a.size() < b.size()) a.resize(b.size(), Rational(0));
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

// Quotient and remainder of a by nonzero b.
inline std::pair<UPoly, UPoly> upoly_divmod(UPoly a, const UPoly& b) {
  trim(a);
  if (b.empty()) throw DivisionByZero("univariate division by zero");
  if (a.size() < b.size()) return {UPoly{}, a};
  UPoly q(a.size() - b.size() + 1, Rational(0));
  const Rational& lead = b.back();
  while (!a.empty() && a.size() >= b.size()) {
    std::size_t shift = a.size() - b.size();
    Rational c = a.back() / lead;
    q[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
    trim(a);
  }
  trim(q);
  return {q, a};
}

inline int euler_phi(int r) {
  int result = r;
  int m = r;
  for (int p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      while (m % p == 0) m /= p;
      result -= result / p;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

// Phi_r by dividing t^r - 1 by Phi_d for every proper divisor d of r.
inline UPoly compute_cyclotomic(int r) {
  UPoly p(static_cast<std::size_t>(r) + 1, Rational(0));
  p[0] = -1;
  p[static_cast<std::size_t>(r)] = 1;
  for (int d = 1; d < r; ++d) {
    if (r % d != 0) continue;
    auto [q, rem] = upoly_divmod(p, compute_cyclotomic(d));
    p = std::move(q);
  }
  return p;
}

inline const UPoly& cyclotomic(int r) {
  static std::mutex mu;
  static std::map<int, std::shared_ptr<const UPoly>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(r);
  if (it == cache.end()) {
    it = cache.emplace(r, std::make_shared<const UPoly>(compute_cyclotomic(r)))
             .first;
  }
  return *it->second;
}

inline std::string rational_text(const Rational& q) {
  return q.get_str();
}

}  // namespace detail

/// Cyclotomic polynomial Phi_r with integer coefficients, lowest degree first.
inline std::vector<Rational> cyclotomic_polynomial(int r) {
  if (r < 1) throw InvalidArgument("root of unity order must be positive");
  return detail::cyclotomic(r);
}

class Scalar {
 public:
  /// Zero of Q(xi_1) = Q.
  Scalar() : Scalar(1) {}

  explicit Scalar(int r) : r_(r) {
    if (r < 1) throw InvalidArgument("root of unity order must be positive");
    coords_.assign(static_cast<std::size_t>(detail::euler_phi(r)), Rational(0));
  }

  Scalar(int r, const Rational& value) : Scalar(r) {
    coords_[0] = value;
    coords_[0].canonicalize();
  }

  Scalar(int r, long value) : Scalar(r, Rational(value)) {}

  /// Element with the given power-basis coordinates (padded/reduced).
  static Scalar from_coords(int r, const std::vector<Rational>& coords) {
    Scalar s(r);
    detail::UPoly p(coords.begin(), coords.end());
    s.assign_reduced(std::move(p));
    return s;
  }

  /// xi^k for any integer k.
  static Scalar xi_power(int r, long k) {
    long e = ((k % r) + r) % r;
    detail::UPoly p(static_cast<std::size_t>(e) + 1, Rational(0));
    p[static_cast<std::size_t>(e)] = 1;
    Scalar s(r);
    s.assign_reduced(std::move(p));
    return s;
  }

  static Scalar zero(int r) { return Scalar(r); }
  static Scalar one(int r) { return Scalar(r, 1L); }

  int order() const { return r_; }
  std::size_t dimension() const { return coords_.size(); }
  const std::vector<Rational>& coords() const { return coords_; }

  bool is_zero() const {
    for (const auto& c : coords_)
      if (c != 0) return false;
    return true;
  }
  bool is_one() const { return is_rational() && coords_[0] == 1; }

  /// True when only the constant coordinate can be nonzero.
  bool is_rational() const {
    for (std::size_t i = 1; i < coords_.size(); ++i)
      if (coords_[i] != 0) return false;
    return true;
  }
  const Rational& rational_part() const { return coords_[0]; }

  Scalar& operator+=(const Scalar& o) {
    check_same(o);
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
    return *this;
  }
  Scalar& operator-=(const Scalar& o) {
    check_same(o);
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= o.coords_[i];
    return *this;
  }
  Scalar& operator*=(const Scalar& o) {
    check_same(o);
    if (coords_.size() == 1) {
      coords_[0] *= o.coords_[0];
      return *this;
    }
    detail::UPoly a(coords_.begin(), coords_.end());
    detail::UPoly b(o.coords_.begin(), o.coords_.end());
    detail::trim(a);
    detail::trim(b);
    assign_reduced(detail::upoly_mul(a, b));
    return *this;
  }
  Scalar& operator/=(const Scalar& o) { return *this *= o.inverse(); }

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  Scalar operator-() const {
    Scalar s(*this);
    for (auto& c : s.coords_) c = -c;
    return s;
  }

  Scalar& operator*=(const Rational& q) {
    for (auto& c : coords_) c *= q;
    return *this;
  }
  friend Scalar operator*(Scalar a, const Rational& q) { return a *= q; }
  friend Scalar operator*(const Rational& q, Scalar a) { return a *= q; }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.r_ == b.r_ && a.coords_ == b.coords_;
  }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  /// Multiplicative inverse via the extended Euclidean algorithm mod Phi_r.
  Scalar inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero scalar");
    if (coords_.size() == 1) return Scalar(r_, Rational(1) / coords_[0]);
    detail::UPoly a(coords_.begin(), coords_.end());
    detail::trim(a);
    detail::UPoly b = detail::cyclotomic(r_);
    // Invariant: s0*x == a, s1*x == b (mod Phi_r).
    detail::UPoly s0{Rational(1)}, s1{};
    while (!b.empty()) {
      auto [q, rem] = detail::upoly_divmod(a, b);
      detail::UPoly s2 = detail::upoly_sub(s0, detail::upoly_mul(q, s1));
      a = std::move(b);
      b = std::move(rem);
      s0 = std::move(s1);
      s1 = std::move(s2);
    }
    // a is a nonzero constant since Phi_r is irreducible.
    Rational c = Rational(1) / a[0];
    for (auto& x : s0) x *= c;
    Scalar out(r_);
    out.assign_reduced(std::move(s0));
    return out;
  }

  /// Image under the field automorphism xi -> xi^{r-1} (complex conjugation).
  Scalar conjugate() const {
    if (coords_.size() == 1) return *this;
    Scalar out(r_);
    for (std::size_t i = 0; i < coords_.size(); ++i) {
      if (coords_[i] == 0) continue;
      out += xi_power(r_, static_cast<long>(i) * (r_ - 1)) * coords_[i];
    }
    return out;
  }

  /// Canonical text: `a/b` for rationals, otherwise `c0 + c1*ξ^1 + ...`.
  std::string to_string() const {
    if (is_rational()) return detail::rational_text(coords_[0]);
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coords_.size(); ++i) {
      const Rational& c = coords_[i];
      if (c == 0) continue;
      Rational mag = abs(c);
      if (first) {
        if (c < 0) os << "-";
      } else {
        os << (c < 0 ? " - " : " + ");
      }
      first = false;
      if (i == 0) {
        os << detail::rational_text(mag);
      } else {
        if (mag != 1) os << detail::rational_text(mag) << "*";
        os << "ξ^" << i;
      }
    }
    return os.str();
  }

  /// True when the text form needs parentheses as a product factor.
  bool is_compound() const {
    int nonzero = 0;
    for (const auto& c : coords_)
      if (c != 0) ++nonzero;
    return nonzero > 1;
  }

 private:
  void check_same(const Scalar& o) const {
    if (o.r_ != r_) {
      throw Mismatch("scalars from different cyclotomic fields: r=" +
                     std::to_string(r_) + " vs r=" + std::to_string(o.r_));
    }
  }

  void assign_reduced(detail::UPoly p) {
    detail::trim(p);
    const detail::UPoly& phi = detail::cyclotomic(r_);
    const std::size_t deg = phi.size() - 1;
    // phi is monic: eliminate from the top.
    while (p.size() > deg) {
      std::size_t shift = p.size() - 1 - deg;
      Rational c = p.back();
      for (std::size_t i = 0; i <= deg; ++i) p[shift + i] -= c * phi[i];
      detail::trim(p);
    }
    coords_.assign(deg, Rational(0));
    for (std::size_t i = 0; i < p.size(); ++i) {
      coords_[i] = p[i];
      coords_[i].canonicalize();
    }
  }

  int r_;
  std::vector<Rational> coords_;
};

/// Parses `p`, `p/q`, or `-p/q` into an exact rational.
inline Rational parse_rational(const std::string& text) {
  Rational q;
  if (text.empty() || q.set_str(text, 10) != 0 || q.get_den() == 0) {
    throw InvalidArgument("not a rational number: '" + text + "'");
  }
  q.canonicalize();
  return q;
}

}  // namespace hspecht
