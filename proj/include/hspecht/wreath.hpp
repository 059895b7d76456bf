#pragma once

// The wreath product G(r,n) = (Z/rZ)^n ⋊ S_n and its group algebra over
// Q(xi_r).
//
// An element (xi^{i_1}, ..., xi^{i_n}; sigma) multiplies as
//   (i; sigma)(j; pi) = (i_k + j_{sigma^{-1}(k)}; sigma pi)
// and acts on polynomials by substituting x_k -> xi^{i_{sigma(k)}} x_{sigma(k)},
// which makes the action a left action for this product.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "hspecht/errors.hpp"
#include "hspecht/permutation.hpp"
#include "hspecht/polynomial.hpp"
#include "hspecht/tableau.hpp"

namespace hspecht {

/// Default ceiling on |G(r,n)| for brute-force operations.
inline constexpr std::size_t kDefaultGroupLimit = 4000;

class GroupElement {
 public:
  GroupElement() = default;
  GroupElement(int r, std::vector<int> exponents, Permutation perm)
      : r_(r), exps_(std::move(exponents)), perm_(std::move(perm)) {
    if (r_ < 1) throw InvalidArgument("r must be positive");
    if (exps_.size() != perm_.size()) throw Mismatch("exponent vector and permutation sizes differ");
    for (int& e : exps_) e = ((e % r_) + r_) % r_;
  }

  static GroupElement identity(int r, std::size_t n) {
    return GroupElement(r, std::vector<int>(n, 0), Permutation(n));
  }
  static GroupElement from_permutation(int r, const Permutation& p) {
    return GroupElement(r, std::vector<int>(p.size(), 0), p);
  }
  /// Multiplies x_i by xi (1-based i).
  static GroupElement scaling(int r, std::size_t n, std::size_t i) {
    std::vector<int> e(n, 0);
    e.at(i - 1) = 1;
    return GroupElement(r, e, Permutation(n));
  }

  int r() const { return r_; }
  std::size_t n() const { return exps_.size(); }
  const std::vector<int>& exponents() const { return exps_; }
  const Permutation& permutation() const { return perm_; }
  bool is_identity() const {
    return perm_.is_identity() && std::all_of(exps_.begin(), exps_.end(), [](int e) { return e == 0; });
  }

  friend GroupElement operator*(const GroupElement& a, const GroupElement& b) {
    a.check_same(b);
    Permutation sinv = a.perm_.inverse();
    std::vector<int> e(a.n());
    for (std::size_t k = 0; k < a.n(); ++k) e[k] = a.exps_[k] + b.exps_[sinv.at(k)];
    return GroupElement(a.r_, std::move(e), a.perm_ * b.perm_);
  }

  GroupElement inverse() const {
    // (i; s)^{-1} = (j; s^{-1}) with j_m = -i_{s(m)}.
    std::vector<int> e(n());
    for (std::size_t m = 0; m < n(); ++m) e[m] = -exps_[perm_.at(m)];
    return GroupElement(r_, std::move(e), perm_.inverse());
  }

  /// `(e1,...,en; cycles)`, e.g. `(0,1; (1 2))`.
  std::string to_string() const {
    std::ostringstream os;
    os << "(";
    for (std::size_t k = 0; k < exps_.size(); ++k) os << (k ? "," : "") << exps_[k];
    os << "; " << perm_.to_cycle_string() << ")";
    return os.str();
  }

  friend bool operator==(const GroupElement& a, const GroupElement& b) {
    return a.r_ == b.r_ && a.exps_ == b.exps_ && a.perm_ == b.perm_;
  }
  friend bool operator!=(const GroupElement& a, const GroupElement& b) { return !(a == b); }
  friend bool operator<(const GroupElement& a, const GroupElement& b) {
    if (a.perm_ != b.perm_) return a.perm_ < b.perm_;
    return a.exps_ < b.exps_;
  }

 private:
  void check_same(const GroupElement& o) const {
    if (r_ != o.r_ || n() != o.n()) throw Mismatch("group elements of different G(r,n)");
  }

  int r_ = 1;
  std::vector<int> exps_;
  Permutation perm_;
};

/// Parses `(0,1; (1 2))` for given r.
inline GroupElement parse_group_element(int r, const std::string& text) {
  std::string s = detail::strip_spaces(text);
  if (s.size() < 2 || s.front() != '(' || s.back() != ')') throw InvalidArgument("malformed group element");
  s = s.substr(1, s.size() - 2);
  auto semi = s.find(';');
  if (semi == std::string::npos) throw InvalidArgument("group element needs ';'");
  std::vector<int> exps = detail::parse_int_list(s.substr(0, semi));
  Permutation p(exps.size());
  std::string cycles = s.substr(semi + 1);
  // With spaces stripped, cycles like (12) are ambiguous for n >= 10; n here is small.
  std::size_t pos = 0;
  while (pos < cycles.size()) {
    if (cycles[pos] != '(') throw InvalidArgument("malformed cycle notation");
    auto end = cycles.find(')', pos);
    if (end == std::string::npos) throw InvalidArgument("unterminated cycle");
    std::string body = cycles.substr(pos + 1, end - pos - 1);
    std::vector<int> cyc;
    if (body.find(',') != std::string::npos) {
      cyc = detail::parse_int_list(body);
    } else {
      for (char c : body) cyc.push_back(c - '0');
    }
    if (!cyc.empty()) p = p * Permutation::cycle(exps.size(), cyc);
    pos = end + 1;
  }
  return GroupElement(r, exps, p);
}

inline std::size_t group_order(int r, std::size_t n) {
  std::size_t o = 1;
  for (std::size_t k = 1; k <= n; ++k) o *= static_cast<std::size_t>(r) * k;
  return o;
}

/// All elements of G(r,n); throws GroupTooLarge above `limit`.
inline std::vector<GroupElement> enumerate_group(int r, std::size_t n, std::size_t limit = kDefaultGroupLimit) {
  if (group_order(r, n) > limit)
    throw GroupTooLarge("G(" + std::to_string(r) + "," + std::to_string(n) + ") has more than " +
                        std::to_string(limit) + " elements");
  std::vector<int> all(n);
  for (std::size_t k = 0; k < n; ++k) all[k] = static_cast<int>(k) + 1;
  std::vector<GroupElement> out;
  for (const auto& p : permutations_of(n, all)) {
    std::vector<int> e(n, 0);
    std::function<void(std::size_t)> rec = [&](std::size_t k) {
      if (k == n) {
        out.emplace_back(r, e, p);
        return;
      }
      for (int v = 0; v < r; ++v) {
        e[k] = v;
        rec(k + 1);
      }
    };
    rec(0);
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Scaling of x_1 and the adjacent transpositions (k k+1).
inline std::vector<GroupElement> group_generators(int r, std::size_t n) {
  std::vector<GroupElement> gens;
  if (n == 0) return gens;
  if (r > 1) gens.push_back(GroupElement::scaling(r, n, 1));
  for (std::size_t k = 1; k < n; ++k)
    gens.push_back(GroupElement::from_permutation(r, Permutation::transposition(n, k, k + 1)));
  return gens;
}

/// g.f = f(xi^{i_{sigma(1)}} x_{sigma(1)}, ..., xi^{i_{sigma(n)}} x_{sigma(n)}).
inline MultiPoly act_on_poly(const GroupElement& g, const MultiPoly& f) {
  if (g.n() != f.nvars()) throw Mismatch("group element and polynomial have different n");
  if (g.r() != f.field_order() && !(g.r() <= 2 && f.field_order() <= 2))
    throw Mismatch("group element and polynomial use different r");
  const int fr = f.field_order();
  MultiPoly out(f.nvars(), fr);
  const auto& perm = g.permutation();
  const auto& e = g.exponents();
  for (const auto& [m, c] : f.terms()) {
    Monomial img(f.nvars());
    long twist = 0;
    for (std::size_t k = 0; k < f.nvars(); ++k) {
      std::size_t target = perm.at(k);
      img[target] = m[k];
      twist += static_cast<long>(m[k]) * e[target];
    }
    Scalar coeff = c;
    if (twist % g.r() != 0) {
      // For r = 2 over Q, xi = -1.
      coeff *= (g.r() == 2 && fr != 2) ? Scalar(fr, Rational(twist % 2 ? -1 : 1))
                                        : Scalar::xi_power(fr, twist);
    }
    out.add_term(img, coeff);
  }
  return out;
}

/// Finite Q(xi_r)-combination of elements of G(r,n).
class GroupAlgebraElement {
 public:
  GroupAlgebraElement(int r, std::size_t n) : r_(r), n_(n) {}
  static GroupAlgebraElement basis(const GroupElement& g, const Scalar& c) {
    GroupAlgebraElement a(g.r(), g.n());
    a.add_term(g, c);
    return a;
  }
  static GroupAlgebraElement one(int r, std::size_t n) {
    return basis(GroupElement::identity(r, n), Scalar::one(r));
  }

  int r() const { return r_; }
  std::size_t n() const { return n_; }
  const std::map<GroupElement, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Scalar coefficient(const GroupElement& g) const {
    auto it = terms_.find(g);
    return it == terms_.end() ? Scalar(r_) : it->second;
  }

  void add_term(const GroupElement& g, const Scalar& c) {
    if (g.r() != r_ || g.n() != n_) throw Mismatch("group element from another group");
    if (c.is_zero()) return;
    auto it = terms_.find(g);
    if (it == terms_.end()) {
      terms_.emplace(g, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  GroupAlgebraElement& operator+=(const GroupAlgebraElement& o) {
    for (const auto& [g, c] : o.terms_) add_term(g, c);
    return *this;
  }
  GroupAlgebraElement& operator-=(const GroupAlgebraElement& o) {
    for (const auto& [g, c] : o.terms_) add_term(g, -c);
    return *this;
  }
  friend GroupAlgebraElement operator+(GroupAlgebraElement a, const GroupAlgebraElement& b) { return a += b; }
  friend GroupAlgebraElement operator-(GroupAlgebraElement a, const GroupAlgebraElement& b) { return a -= b; }
  friend GroupAlgebraElement operator*(GroupAlgebraElement a, const Scalar& s) {
    if (s.is_zero()) a.terms_.clear();
    for (auto& [g, c] : a.terms_) c *= s;
    return a;
  }
  friend GroupAlgebraElement operator*(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
    GroupAlgebraElement out(a.r_, a.n_);
    for (const auto& [g, c] : a.terms_)
      for (const auto& [h, d] : b.terms_) out.add_term(g * h, c * d);
    return out;
  }

  friend bool operator==(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
    return a.r_ == b.r_ && a.n_ == b.n_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const GroupAlgebraElement& a, const GroupAlgebraElement& b) { return !(a == b); }

  /// Linear extension of act_on_poly.
  MultiPoly apply(const MultiPoly& f) const {
    MultiPoly out(f.nvars(), f.field_order());
    for (const auto& [g, c] : terms_) {
      MultiPoly img = act_on_poly(g, f);
      img *= (c.order() == f.field_order()) ? c : Scalar(f.field_order(), c.rational_part());
      out += img;
    }
    return out;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [g, c] : terms_) {
      if (!first) s += " + ";
      first = false;
      s += (c.is_compound() ? "(" + c.to_string() + ")" : c.to_string()) + "*" + g.to_string();
    }
    return s;
  }

 private:
  int r_;
  std::size_t n_;
  std::map<GroupElement, Scalar> terms_;
};

inline MultiPoly algebra_apply(const GroupAlgebraElement& a, const MultiPoly& f) { return a.apply(f); }

/// (1/hook_product) * sum_{sigma in R, tau in C} sgn(tau) tau sigma, with
/// permutations embedded in G(r,n) with zero exponent vector.
inline GroupAlgebraElement young_symmetrizer(const ComponentFilling& comp, int r, std::size_t n) {
  Partition shape;
  for (const auto& row : comp) shape.push_back(static_cast<int>(row.size()));
  Stabilizers st = stabilizers(comp, n);
  GroupAlgebraElement out(r, n);
  Scalar unit = Scalar(r, Rational(1, static_cast<unsigned long>(hook_product(shape))));
  for (const auto& sigma : st.rows)
    for (const auto& tau : st.columns) {
      out.add_term(GroupElement::from_permutation(r, tau * sigma), tau.sign() > 0 ? unit : -unit);
    }
  return out;
}

/// True iff some g has g a g^{-1} = b, by brute force over G(r,n).
inline bool conjugacy_test(const GroupElement& a, const GroupElement& b,
                           std::size_t limit = kDefaultGroupLimit) {
  if (a.r() != b.r() || a.n() != b.n()) throw Mismatch("elements of different groups");
  if (a == b) return true;
  for (const auto& g : enumerate_group(a.r(), a.n(), limit))
    if (g * a * g.inverse() == b) return true;
  return false;
}

/// e_j(x_1^r, ..., x_n^r) for j = 1..n.
inline std::vector<MultiPoly> fundamental_invariants(int r, std::size_t n) {
  std::vector<MultiPoly> powers;
  for (std::size_t i = 1; i <= n; ++i) powers.push_back(MultiPoly::variable(n, r, i).pow(r));
  std::vector<MultiPoly> gens;
  for (std::size_t j = 1; j <= n; ++j) gens.push_back(elementary_symmetric(powers, static_cast<int>(j)));
  return gens;
}

/// True when every generator of G(r,n) fixes f.
inline bool is_invariant(const MultiPoly& f, int r) {
  for (const auto& g : group_generators(r, f.nvars()))
    if (act_on_poly(g, f) != f) return false;
  return true;
}

}  // namespace hspecht
