#pragma once

// Dunkl operators D_y = d_y - sum_{a>0} c_a (a,y)/a (1 - s_a), the operators
// L_j = m(sum_i D_{e_i}^{2j}) on invariants, the Hamiltonian
// H = Laplacian - sum_{a>0} c_a(c_a+1)(a,a)/a^2, and a normal-form algebra of
// differential operators with coefficients in Q[x][1/a] extended by the group.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hspecht/errors.hpp"
#include "hspecht/fractions.hpp"
#include "hspecht/parallel.hpp"
#include "hspecht/polynomial.hpp"
#include "hspecht/roots.hpp"
#include "hspecht/wreath.hpp"

namespace hspecht {

inline std::vector<Rational> unit_vector(std::size_t n, std::size_t i) {
  std::vector<Rational> e(n, Rational(0));
  e.at(i - 1) = 1;
  return e;
}

/// D_y f with one representative root per reflection.
inline MultiPoly dunkl_apply(const std::vector<Rational>& y, const MultiPoly& f, const std::vector<RootVector>& reps,
                             const CouplingMap& c) {
  MultiPoly out = f.directional_derivative(y);
  for (const auto& a : reps) {
    Rational w = c(a) * inner(a, y);
    if (w == 0) continue;
    MultiPoly diff = f - reflect_poly(a, f);
    if (diff.is_zero()) continue;
    out -= exact_divide(diff, linear_form(a)) * w;
  }
  return out;
}

inline MultiPoly dunkl_apply(const std::vector<Rational>& y, const MultiPoly& f, const RootSystem& rs,
                             const CouplingMap& c) {
  return dunkl_apply(y, f, positive_roots(rs), c);
}

/// L_j f = sum_i D_{e_i}^{2j} f. With `restricted` set, non-invariant f is
/// rejected, since only there does this agree with m(sum_i D_{e_i}^{2j}).
inline MultiPoly olshanetsky_apply(int j, const MultiPoly& f, const RootSystem& rs, const CouplingMap& c,
                                   bool restricted = true) {
  if (j < 1 || static_cast<std::size_t>(j) > rs.n) throw InvalidArgument("L_j needs 1 <= j <= n");
  if (restricted && !is_invariant(f, 2)) throw InvalidArgument("L_j applies to W-invariant polynomials only");
  auto reps = positive_roots(rs);
  MultiPoly out(rs.n, 1);
  for (std::size_t i = 1; i <= rs.n; ++i) {
    MultiPoly g = f;
    for (int k = 0; k < 2 * j && !g.is_zero(); ++k) g = dunkl_apply(unit_vector(rs.n, i), g, reps, c);
    out += g;
  }
  return out;
}

inline std::vector<MultiPoly> root_forms(const RootSystem& rs) {
  std::vector<MultiPoly> forms;
  for (const auto& a : positive_roots(rs)) forms.push_back(linear_form(a));
  return forms;
}

/// H f for a rational function f.
inline RationalFunction hamiltonian_apply(const RationalFunction& f, const RootSystem& rs, const CouplingMap& c) {
  auto forms = root_forms(rs);
  RationalFunction out(MultiPoly(rs.n, 1));
  for (std::size_t i = 1; i <= rs.n; ++i) {
    RationalFunction d = f.derivative(i);
    d.cancel(forms);
    RationalFunction dd = d.derivative(i);
    dd.cancel(forms);
    out = out + dd;
    out.cancel(forms);
  }
  auto pos = positive_roots(rs);
  for (std::size_t k = 0; k < pos.size(); ++k) {
    Rational ca = c(pos[k]);
    Rational w = ca * (ca + 1) * inner(pos[k], pos[k]);
    if (w == 0) continue;
    out = out - f * RationalFunction(MultiPoly::constant(rs.n, 1, w), forms[k] * forms[k]);
    out.cancel(forms);
  }
  return out;
}

/// Laplacian(f) - sum_{a>0} (2 c_a / a) d_a f.
inline RationalFunction restriction_rhs(const MultiPoly& f, const RootSystem& rs, const CouplingMap& c) {
  RationalFunction out(f.laplacian());
  auto forms = root_forms(rs);
  for (const auto& a : positive_roots(rs)) {
    Rational w = 2 * c(a);
    if (w == 0) continue;
    out = out - RationalFunction(f.directional_derivative(a) * w, linear_form(a));
    out.cancel(forms);
  }
  return out;
}

using PolyOperator = std::function<MultiPoly(const MultiPoly&)>;

struct CommutatorReport {
  bool passed = true;
  std::size_t tested = 0;
  int max_degree = -1;
  std::optional<std::string> counterexample;
};

/// (AB - BA) f == 0 for every f in the test set.
inline CommutatorReport commutator_check(const PolyOperator& A, const PolyOperator& B,
                                         const std::vector<MultiPoly>& tests) {
  std::vector<char> ok(tests.size(), 1);
  parallel_for(tests.size(), [&](std::size_t k) { ok[k] = A(B(tests[k])) == B(A(tests[k])); });
  CommutatorReport rep;
  rep.tested = tests.size();
  for (std::size_t k = 0; k < tests.size(); ++k) {
    rep.max_degree = std::max(rep.max_degree, tests[k].degree());
    if (!ok[k] && rep.passed) {
      rep.passed = false;
      rep.counterexample = tests[k].to_string();
    }
  }
  return rep;
}

/// All monomials of degree <= d in n variables.
inline std::vector<MultiPoly> monomials_up_to(std::size_t n, int d) {
  std::vector<MultiPoly> out;
  for (int k = 0; k <= d; ++k)
    for (const auto& m : monomials_of_degree(n, k)) out.push_back(MultiPoly::monomial(m, Scalar::one(1)));
  return out;
}

/// Products y_1^a1 ... y_n^an with y_j = sum_i x_i^{2j}, of degree <= d: a
/// spanning set of the B_n-invariants of degree <= d.
inline std::vector<MultiPoly> invariant_samples(std::size_t n, int d) {
  std::vector<MultiPoly> ys;
  for (std::size_t j = 1; j <= n; ++j) {
    MultiPoly y(n, 1);
    for (std::size_t i = 1; i <= n; ++i) y += MultiPoly::variable(n, 1, i).pow(static_cast<int>(2 * j));
    ys.push_back(y);
  }
  std::vector<int> weights;
  for (std::size_t j = 1; j <= n; ++j) weights.push_back(static_cast<int>(2 * j));
  std::vector<MultiPoly> out;
  for (int deg = 0; deg <= d; ++deg) {
    std::vector<int> a(n, 0);
    std::function<void(std::size_t, int)> rec = [&](std::size_t j, int left) {
      if (j == n) {
        if (left != 0) return;
        MultiPoly p = MultiPoly::one(n, 1);
        for (std::size_t k = 0; k < n; ++k)
          if (a[k] > 0) p *= ys[k].pow(a[k]);
        out.push_back(std::move(p));
        return;
      }
      for (int e = 0; e * weights[j] <= left; ++e) {
        a[j] = e;
        rec(j + 1, left - e * weights[j]);
      }
      a[j] = 0;
    };
    rec(0, deg);
  }
  return out;
}

struct GaugeReport {
  bool passed = true;
  std::size_t tested = 0;
  std::optional<Rational> constant;  // K with delta H delta^{-1} = L_1 + K on the samples
  std::string witness;
};

/// With delta = prod_{a>0} a^{c_a} (integer c_a >= 0), checks that
/// delta H(delta^{-1} p) - L_1 p = K p for one constant K on every sample.
inline GaugeReport gauge_check(const RootSystem& rs, const CouplingMap& c, const std::vector<MultiPoly>& samples) {
  auto pos = positive_roots(rs);
  MultiPoly delta = MultiPoly::one(rs.n, 1);
  for (const auto& a : pos) {
    Rational ca = c(a);
    if (ca < 0 || ca.get_den() != 1) throw InvalidArgument("gauge check needs nonnegative integer couplings");
    delta *= linear_form(a).pow(static_cast<int>(ca.get_num().get_si()));
  }
  GaugeReport rep;
  std::vector<std::optional<Rational>> found(samples.size());
  std::vector<std::string> problems(samples.size());
  parallel_for(samples.size(), [&](std::size_t k) {
    const MultiPoly& p = samples[k];
    if (p.is_zero()) return;
    RationalFunction lhs = hamiltonian_apply(RationalFunction(p, delta), rs, c) * RationalFunction(delta);
    lhs.cancel(root_forms(rs));
    RationalFunction diff = lhs - RationalFunction(olshanetsky_apply(1, p, rs, c));
    if (diff.is_zero()) {
      found[k] = Rational(0);
      return;
    }
    MultiPoly pd = p * diff.den();
    if (!divides(pd, diff.num())) {
      problems[k] = "not a multiple of p: " + diff.to_string();
      return;
    }
    MultiPoly q = exact_divide(diff.num(), pd);
    if (q.degree() != 0 || !q.leading_term().second.is_rational()) {
      problems[k] = "non-constant ratio " + q.to_string();
      return;
    }
    found[k] = q.leading_term().second.rational_part();
  });
  for (std::size_t k = 0; k < samples.size(); ++k) {
    if (samples[k].is_zero()) continue;
    ++rep.tested;
    if (!problems[k].empty()) {
      if (rep.passed) rep.witness = samples[k].to_string() + ": " + problems[k];
      rep.passed = false;
      continue;
    }
    if (!rep.constant) {
      rep.constant = found[k];
    } else if (*rep.constant != *found[k]) {
      if (rep.passed)
        rep.witness = samples[k].to_string() + ": constant " + found[k]->get_str() + " vs " + rep.constant->get_str();
      rep.passed = false;
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Operators with group part.

/// Positive roots and their linear forms, shared by all coefficients.
struct RootContext {
  std::size_t n = 0;
  std::vector<RootVector> positive;
  std::vector<MultiPoly> forms;

  explicit RootContext(const RootSystem& rs) : n(rs.n), positive(positive_roots(rs)), forms(root_forms(rs)) {}
};
using RootContextPtr = std::shared_ptr<const RootContext>;

inline RootContextPtr make_root_context(const RootSystem& rs) { return std::make_shared<const RootContext>(rs); }

/// num / prod_a a^{den[a]} over the positive roots; kept reduced.
class RootFraction {
 public:
  RootFraction(RootContextPtr ctx, MultiPoly num, std::vector<int> den)
      : ctx_(std::move(ctx)), num_(std::move(num)), den_(std::move(den)) {
    if (den_.size() != ctx_->forms.size()) throw Mismatch("denominator exponents do not match the roots");
    reduce();
  }
  static RootFraction polynomial(const RootContextPtr& ctx, MultiPoly p) {
    return RootFraction(ctx, std::move(p), std::vector<int>(ctx->forms.size(), 0));
  }
  static RootFraction constant(const RootContextPtr& ctx, const Rational& q) {
    return polynomial(ctx, MultiPoly::constant(ctx->n, 1, q));
  }
  /// q / a for the k-th positive root.
  static RootFraction over_root(const RootContextPtr& ctx, const Rational& q, std::size_t k) {
    std::vector<int> den(ctx->forms.size(), 0);
    den.at(k) = 1;
    return RootFraction(ctx, MultiPoly::constant(ctx->n, 1, q), den);
  }

  const RootContextPtr& ctx() const { return ctx_; }
  const MultiPoly& num() const { return num_; }
  const std::vector<int>& den() const { return den_; }
  bool is_polynomial() const {
    return std::all_of(den_.begin(), den_.end(), [](int e) { return e == 0; });
  }
  bool is_zero() const { return num_.is_zero(); }

  RootFraction operator-() const { return RootFraction(ctx_, -num_, den_); }
  friend RootFraction operator+(const RootFraction& a, const RootFraction& b) {
    std::vector<int> den(a.den_.size());
    MultiPoly na = a.num_, nb = b.num_;
    for (std::size_t k = 0; k < den.size(); ++k) {
      den[k] = std::max(a.den_[k], b.den_[k]);
      if (a.den_[k] < den[k]) na *= a.ctx_->forms[k].pow(den[k] - a.den_[k]);
      if (b.den_[k] < den[k]) nb *= a.ctx_->forms[k].pow(den[k] - b.den_[k]);
    }
    return RootFraction(a.ctx_, na + nb, den);
  }
  friend RootFraction operator-(const RootFraction& a, const RootFraction& b) { return a + (-b); }
  friend RootFraction operator*(const RootFraction& a, const RootFraction& b) {
    std::vector<int> den(a.den_.size());
    for (std::size_t k = 0; k < den.size(); ++k) den[k] = a.den_[k] + b.den_[k];
    return RootFraction(a.ctx_, a.num_ * b.num_, den);
  }
  friend RootFraction operator*(const RootFraction& a, const Scalar& s) {
    return RootFraction(a.ctx_, a.num_ * s, a.den_);
  }
  friend bool operator==(const RootFraction& a, const RootFraction& b) { return (a - b).is_zero(); }
  friend bool operator!=(const RootFraction& a, const RootFraction& b) { return !(a == b); }

  /// d/dx_i (1-based).
  RootFraction derivative(std::size_t i) const {
    RootFraction out = RootFraction(ctx_, num_.derivative(i), den_);
    for (std::size_t k = 0; k < den_.size(); ++k) {
      if (den_[k] == 0) continue;
      const Rational& ai = ctx_->positive[k][i - 1];
      if (ai == 0) continue;
      std::vector<int> den = den_;
      ++den[k];
      out = out + RootFraction(ctx_, num_ * (ai * -den_[k]), den);
    }
    return out;
  }

  /// g . (num/den) = (g.num)/(g.den); g permutes the root forms up to sign.
  RootFraction act(const GroupElement& g) const {
    MultiPoly num = act_on_poly(g, num_);
    std::vector<int> den(den_.size(), 0);
    for (std::size_t k = 0; k < den_.size(); ++k) {
      if (den_[k] == 0) continue;
      MultiPoly img = act_on_poly(g, ctx_->forms[k]);
      bool placed = false;
      for (std::size_t l = 0; l < den.size() && !placed; ++l) {
        if (ctx_->forms[l] == img) {
          den[l] += den_[k];
          placed = true;
        } else if (ctx_->forms[l] == -img) {
          den[l] += den_[k];
          if (den_[k] % 2) num = -num;
          placed = true;
        }
      }
      if (!placed) throw InvalidArgument(g.to_string() + " does not permute the root hyperplanes");
    }
    return RootFraction(ctx_, num, den);
  }

  RationalFunction to_rational_function() const {
    MultiPoly d = MultiPoly::one(ctx_->n, 1);
    for (std::size_t k = 0; k < den_.size(); ++k)
      if (den_[k] > 0) d *= ctx_->forms[k].pow(den_[k]);
    return RationalFunction(num_, d);
  }

  std::string to_string() const { return to_rational_function().to_string(); }

 private:
  void reduce() {
    if (num_.is_zero()) {
      std::fill(den_.begin(), den_.end(), 0);
      return;
    }
    for (std::size_t k = 0; k < den_.size(); ++k) {
      while (den_[k] > 0) {
        try {
          num_ = exact_divide(num_, ctx_->forms[k]);
        } catch (const NotDivisible&) {
          break;
        }
        --den_[k];
      }
    }
  }

  RootContextPtr ctx_;
  MultiPoly num_;
  std::vector<int> den_;
};

/// sum_beta q_beta d^beta, coefficients on the left.
class DiffOp {
 public:
  using TermMap = std::map<Monomial, RootFraction, GrevlexDescending>;

  explicit DiffOp(RootContextPtr ctx) : ctx_(std::move(ctx)) {}
  static DiffOp identity(const RootContextPtr& ctx) {
    return multiplication(RootFraction::constant(ctx, Rational(1)));
  }
  static DiffOp multiplication(const RootFraction& q) {
    DiffOp d(q.ctx());
    d.add_term(Monomial(q.ctx()->n), q);
    return d;
  }
  /// sum_i y_i d/dx_i.
  static DiffOp directional(const RootContextPtr& ctx, const std::vector<Rational>& y) {
    DiffOp d(ctx);
    for (std::size_t i = 0; i < ctx->n; ++i) {
      if (y[i] == 0) continue;
      Monomial m(ctx->n);
      m[i] = 1;
      d.add_term(m, RootFraction::constant(ctx, y[i]));
    }
    return d;
  }

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int order() const {
    int o = -1;
    for (const auto& [b, q] : terms_) o = std::max(o, b.degree());
    return o;
  }

  void add_term(const Monomial& beta, const RootFraction& q) {
    if (q.is_zero()) return;
    auto it = terms_.find(beta);
    if (it == terms_.end()) {
      terms_.emplace(beta, q);
    } else {
      it->second = it->second + q;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  friend DiffOp operator+(DiffOp a, const DiffOp& b) {
    for (const auto& [beta, q] : b.terms_) a.add_term(beta, q);
    return a;
  }
  friend DiffOp operator-(DiffOp a, const DiffOp& b) {
    for (const auto& [beta, q] : b.terms_) a.add_term(beta, -q);
    return a;
  }
  /// Left multiplication by a coefficient.
  friend DiffOp operator*(const RootFraction& q, const DiffOp& d) {
    DiffOp out(d.ctx_);
    for (const auto& [beta, p] : d.terms_) out.add_term(beta, q * p);
    return out;
  }

  /// Composition a∘b, by the Leibniz rule
  ///   d^beta (p d^gamma) = sum_{delta <= beta} binom(beta, delta) (d^delta p) d^{beta - delta + gamma}.
  friend DiffOp operator*(const DiffOp& a, const DiffOp& b) {
    DiffOp out(a.ctx_);
    const std::size_t n = a.ctx_->n;
    for (const auto& [beta, q] : a.terms_) {
      for (const auto& [gamma, p] : b.terms_) {
        std::vector<int> delta(n, 0);
        // Iterate over all delta <= beta.
        for (;;) {
          RootFraction dp = p;
          Rational mult = 1;
          for (std::size_t i = 0; i < n; ++i) {
            for (int k = 0; k < delta[i]; ++k) dp = dp.derivative(i + 1);
            mult *= binomial_coefficient(beta[i], delta[i]);
          }
          if (!dp.is_zero()) {
            Monomial m(n);
            for (std::size_t i = 0; i < n; ++i) m[i] = beta[i] - delta[i] + gamma[i];
            out.add_term(m, q * dp * Scalar(1, mult));
          }
          std::size_t i = 0;
          while (i < n && delta[i] == beta[i]) delta[i++] = 0;
          if (i == n) break;
          ++delta[i];
        }
      }
    }
    return out;
  }

  /// g D g^{-1}. With g^{-1}.x_k = m_k x_{t(k)}, g d_i g^{-1} = m_k d_k for the
  /// k with t(k) = i.
  DiffOp conjugate(const GroupElement& g) const {
    const std::size_t n = ctx_->n;
    GroupElement ginv = g.inverse();
    std::vector<std::size_t> target(n);
    std::vector<Scalar> coef(n, Scalar::one(1));
    for (std::size_t k = 0; k < n; ++k) {
      MultiPoly img = act_on_poly(ginv, MultiPoly::variable(n, 1, k + 1));
      const auto& [m, c] = img.leading_term();
      std::size_t t = 0;
      while (m[t] == 0) ++t;
      target[t] = k;
      coef[t] = c;
    }
    DiffOp out(ctx_);
    for (const auto& [beta, q] : terms_) {
      Monomial m(n);
      Scalar s = Scalar::one(1);
      for (std::size_t i = 0; i < n; ++i) {
        m[target[i]] += beta[i];
        for (int e = 0; e < beta[i]; ++e) s *= coef[i];
      }
      out.add_term(m, q.act(g) * s);
    }
    return out;
  }

  /// D f as an element of Q[x][1/a].
  RootFraction apply(const MultiPoly& f) const {
    RootFraction out = RootFraction::polynomial(ctx_, MultiPoly(ctx_->n, 1));
    for (const auto& [beta, q] : terms_) {
      MultiPoly d = f;
      for (std::size_t i = 0; i < ctx_->n && !d.is_zero(); ++i)
        for (int e = 0; e < beta[i]; ++e) d = d.derivative(i + 1);
      if (!d.is_zero()) out = out + q * RootFraction::polynomial(ctx_, d);
    }
    return out;
  }

  friend bool operator==(const DiffOp& a, const DiffOp& b) { return (a - b).is_zero(); }
  friend bool operator!=(const DiffOp& a, const DiffOp& b) { return !(a == b); }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [beta, q] : terms_) {
      if (!s.empty()) s += " + ";
      s += "(" + q.to_string() + ")";
      if (beta.degree() > 0) {
        std::string d = beta.to_string();
        for (std::size_t pos = 0; (pos = d.find('x', pos)) != std::string::npos;) d.replace(pos, 1, "d");
        s += "*" + d;
      }
    }
    return s;
  }

  const RootContextPtr& ctx() const { return ctx_; }

 private:
  static Rational binomial_coefficient(int n, int k) {
    Rational b = 1;
    for (int i = 1; i <= k; ++i) b = b * (n - k + i) / i;
    return b;
  }

  RootContextPtr ctx_;
  TermMap terms_;
};

/// sum_g B_g g with B_g in DiffOp (group elements on the right).
class SemidirectOperator {
 public:
  explicit SemidirectOperator(RootContextPtr ctx) : ctx_(std::move(ctx)) {}
  static SemidirectOperator group_element(const RootContextPtr& ctx, const GroupElement& g) {
    SemidirectOperator s(ctx);
    s.add_term(g, DiffOp::identity(ctx));
    return s;
  }
  static SemidirectOperator from_diffop(const DiffOp& d) {
    SemidirectOperator s(d.ctx());
    s.add_term(GroupElement::identity(2, d.ctx()->n), d);
    return s;
  }

  const std::map<GroupElement, DiffOp>& terms() const { return terms_; }

  void add_term(const GroupElement& g, const DiffOp& d) {
    if (d.is_zero()) return;
    auto it = terms_.find(g);
    if (it == terms_.end()) {
      terms_.emplace(g, d);
    } else {
      it->second = it->second + d;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  friend SemidirectOperator operator+(SemidirectOperator a, const SemidirectOperator& b) {
    for (const auto& [g, d] : b.terms_) a.add_term(g, d);
    return a;
  }
  friend SemidirectOperator operator-(SemidirectOperator a, const SemidirectOperator& b) {
    for (const auto& [g, d] : b.terms_) a.add_term(g, DiffOp(d.ctx()) - d);
    return a;
  }
  /// (A_g g)(B_h h) = A_g (g B_h g^{-1}) gh.
  friend SemidirectOperator operator*(const SemidirectOperator& a, const SemidirectOperator& b) {
    SemidirectOperator out(a.ctx_);
    for (const auto& [g, A] : a.terms_)
      for (const auto& [h, B] : b.terms_) out.add_term(g * h, A * B.conjugate(g));
    return out;
  }

  friend bool operator==(const SemidirectOperator& a, const SemidirectOperator& b) {
    return (a - b).terms_.empty();
  }

  /// sum_g B_g (g.f).
  RootFraction apply(const MultiPoly& f) const {
    RootFraction out = RootFraction::polynomial(ctx_, MultiPoly(ctx_->n, 1));
    for (const auto& [g, d] : terms_) out = out + d.apply(act_on_poly(g, f));
    return out;
  }

 private:
  RootContextPtr ctx_;
  std::map<GroupElement, DiffOp> terms_;
};

/// m(sum_g B_g g) = sum_g B_g.
inline DiffOp lower_m(const SemidirectOperator& B, const RootContextPtr& ctx) {
  DiffOp out(ctx);
  for (const auto& [g, d] : B.terms()) out = out + d;
  return out;
}

/// D_y = (d_y - sum_a c_a (a,y)/a) . 1 + sum_a c_a (a,y)/a . s_a.
inline SemidirectOperator dunkl_operator(const RootContextPtr& ctx, const std::vector<Rational>& y,
                                         const CouplingMap& c) {
  SemidirectOperator D(ctx);
  DiffOp base = DiffOp::directional(ctx, y);
  for (std::size_t k = 0; k < ctx->positive.size(); ++k) {
    Rational w = c(ctx->positive[k]) * inner(ctx->positive[k], y);
    if (w == 0) continue;
    RootFraction q = RootFraction::over_root(ctx, w, k);
    base = base - DiffOp::multiplication(q);
    D.add_term(reflection_element(ctx->positive[k]), DiffOp::multiplication(q));
  }
  D.add_term(GroupElement::identity(2, ctx->n), base);
  return D;
}

}  // namespace hspecht
