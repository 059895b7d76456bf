#pragma once

// Polynomials over a power of a fixed discriminant, and general fractions.

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "hspecht/errors.hpp"
#include "hspecht/polynomial.hpp"

namespace hspecht {

/// numerator / delta^k in the localization O_X[delta^{-1}].
class LocalizedElement {
 public:
  using DeltaPtr = std::shared_ptr<const MultiPoly>;

  LocalizedElement(MultiPoly numerator, int delta_power, DeltaPtr delta)
      : num_(std::move(numerator)), k_(delta_power), delta_(std::move(delta)) {
    if (!delta_ || delta_->is_zero()) throw InvalidArgument("localization at zero");
    if (k_ < 0) throw InvalidArgument("negative discriminant power");
    if (num_.nvars() != delta_->nvars() || num_.field_order() != delta_->field_order())
      throw Mismatch("numerator and discriminant live in different rings");
  }

  /// Embeds a polynomial (k = 0).
  static LocalizedElement from_poly(MultiPoly p, DeltaPtr delta) {
    return LocalizedElement(std::move(p), 0, std::move(delta));
  }

  const MultiPoly& numerator() const { return num_; }
  int delta_power() const { return k_; }
  const DeltaPtr& delta() const { return delta_; }
  bool is_zero() const { return num_.is_zero(); }

  /// Degree as a rational function (may be negative); requires nonzero.
  int degree() const { return num_.degree() - k_ * delta_->degree(); }

  /// Divides delta out of the numerator while possible.
  LocalizedElement& canonicalize() {
    if (num_.is_zero()) {
      k_ = 0;
      return *this;
    }
    while (k_ > 0) {
      try {
        num_ = exact_divide(num_, *delta_);
        --k_;
      } catch (const NotDivisible&) {
        break;
      }
    }
    return *this;
  }
  LocalizedElement canonical() const {
    LocalizedElement e(*this);
    e.canonicalize();
    return e;
  }

  bool is_canonical() const { return k_ == 0 || !divides(*delta_, num_); }

  /// Numerator over delta^k for k >= delta_power().
  MultiPoly numerator_over(int k) const {
    if (k < k_) throw InvalidArgument("cannot lower the discriminant power");
    return num_ * delta_->pow(k - k_);
  }

  /// The polynomial this element equals, if it is one.
  MultiPoly as_polynomial() const {
    LocalizedElement c = canonical();
    if (c.k_ != 0) throw NotDivisible("localized element is not a polynomial");
    return c.num_;
  }

  friend LocalizedElement operator+(const LocalizedElement& a, const LocalizedElement& b) {
    a.check_same(b);
    int k = std::max(a.k_, b.k_);
    LocalizedElement out(a.numerator_over(k) + b.numerator_over(k), k, a.delta_);
    return out.canonicalize();
  }
  friend LocalizedElement operator-(const LocalizedElement& a, const LocalizedElement& b) {
    a.check_same(b);
    int k = std::max(a.k_, b.k_);
    LocalizedElement out(a.numerator_over(k) - b.numerator_over(k), k, a.delta_);
    return out.canonicalize();
  }
  friend LocalizedElement operator*(const LocalizedElement& a, const LocalizedElement& b) {
    a.check_same(b);
    LocalizedElement out(a.num_ * b.num_, a.k_ + b.k_, a.delta_);
    return out.canonicalize();
  }
  friend LocalizedElement operator*(const LocalizedElement& a, const MultiPoly& p) {
    LocalizedElement out(a.num_ * p, a.k_, a.delta_);
    return out.canonicalize();
  }
  friend LocalizedElement operator*(LocalizedElement a, const Scalar& s) {
    a.num_ *= s;
    if (a.num_.is_zero()) a.k_ = 0;
    return a;
  }

  /// Equality of the represented fractions.
  friend bool operator==(const LocalizedElement& a, const LocalizedElement& b) {
    if (*a.delta_ != *b.delta_) return false;
    int k = std::max(a.k_, b.k_);
    return a.numerator_over(k) == b.numerator_over(k);
  }
  friend bool operator!=(const LocalizedElement& a, const LocalizedElement& b) { return !(a == b); }

  std::string to_string() const {
    if (k_ == 0) return num_.to_string();
    return "(" + num_.to_string() + ")/Δ^" + std::to_string(k_);
  }

 private:
  void check_same(const LocalizedElement& o) const {
    if (delta_ != o.delta_ && *delta_ != *o.delta_)
      throw Mismatch("localized elements over different discriminants");
  }

  MultiPoly num_;
  int k_;
  DeltaPtr delta_;
};

/// num / den with den != 0. No gcd normalisation; equality is by
/// cross-multiplication.
class RationalFunction {
 public:
  RationalFunction(MultiPoly num, MultiPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw DivisionByZero("rational function with zero denominator");
    if (num_.nvars() != den_.nvars() || num_.field_order() != den_.field_order())
      throw Mismatch("numerator and denominator live in different rings");
    if (num_.is_zero()) den_ = MultiPoly::one(den_.nvars(), den_.field_order());
  }
  explicit RationalFunction(MultiPoly p)
      : RationalFunction(p, MultiPoly::one(p.nvars(), p.field_order())) {}

  const MultiPoly& num() const { return num_; }
  const MultiPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    if (a.den_ == b.den_) return RationalFunction(a.num_ + b.num_, a.den_);
    return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
    return a + (-b);
  }
  RationalFunction operator-() const { return RationalFunction(-num_, den_); }
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend RationalFunction operator*(const RationalFunction& a, const Rational& q) {
    return RationalFunction(a.num_ * q, a.den_);
  }
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    if (b.is_zero()) throw DivisionByZero("division by zero rational function");
    return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
  }

  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ * b.den_ == b.num_ * a.den_;
  }
  friend bool operator!=(const RationalFunction& a, const RationalFunction& b) { return !(a == b); }

  /// Quotient rule.
  RationalFunction derivative(std::size_t i) const {
    return RationalFunction(num_.derivative(i) * den_ - num_ * den_.derivative(i), den_ * den_);
  }

  RationalFunction laplacian() const {
    RationalFunction out(MultiPoly(num_.nvars(), num_.field_order()));
    for (std::size_t i = 1; i <= num_.nvars(); ++i) out = out + derivative(i).derivative(i);
    return out;
  }

  /// Cancels each candidate factor from numerator and denominator as often as
  /// it divides both.
  RationalFunction& cancel(const std::vector<MultiPoly>& factors) {
    for (const auto& f : factors) {
      while (!num_.is_zero() && divides(f, den_) && divides(f, num_)) {
        num_ = exact_divide(num_, f);
        den_ = exact_divide(den_, f);
      }
    }
    if (num_.is_zero()) den_ = MultiPoly::one(den_.nvars(), den_.field_order());
    return *this;
  }

  /// The polynomial this fraction equals, if it is one.
  MultiPoly as_polynomial() const { return exact_divide(num_, den_); }

  std::string to_string() const {
    if (den_.degree() == 0 && den_.leading_term().second.is_one()) return num_.to_string();
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
  }

 private:
  MultiPoly num_;
  MultiPoly den_;
};

}  // namespace hspecht
