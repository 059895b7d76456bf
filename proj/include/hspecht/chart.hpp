#pragma once

// The chart y_j = sum_i x_i^{2j} on C^n / W(B_n), its Jacobian
// J(i,j) = dy_j/dx_i = 2j x_i^{2j-1}, the discriminant Delta = det J and the
// derivations d/dy_j acting on polynomials localized at Delta.

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hspecht/errors.hpp"
#include "hspecht/fractions.hpp"
#include "hspecht/permutation.hpp"
#include "hspecht/polynomial.hpp"

namespace hspecht {

using PolyMatrix = std::vector<std::vector<MultiPoly>>;

namespace detail {

inline MultiPoly determinant(const PolyMatrix& m, std::size_t nvars) {
  const std::size_t n = m.size();
  std::vector<int> all(n);
  for (std::size_t k = 0; k < n; ++k) all[k] = static_cast<int>(k) + 1;
  MultiPoly det(nvars, 1);
  if (n == 0) return MultiPoly::one(nvars, 1);
  for (const auto& p : permutations_of(n, all)) {
    MultiPoly term = MultiPoly::one(nvars, 1);
    for (std::size_t i = 0; i < n && !term.is_zero(); ++i) term *= m[i][p.at(i)];
    if (p.sign() > 0) det += term; else det -= term;
  }
  return det;
}

inline PolyMatrix minor_of(const PolyMatrix& m, std::size_t row, std::size_t col) {
  PolyMatrix out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (i == row) continue;
    std::vector<MultiPoly> r;
    for (std::size_t j = 0; j < m.size(); ++j)
      if (j != col) r.push_back(m[i][j]);
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace detail

struct InvariantChart {
  std::size_t n = 0;
  std::vector<MultiPoly> y;             // y_j, j = 1..n
  PolyMatrix jacobian;                  // jacobian[i][j] = dy_{j+1}/dx_{i+1}
  PolyMatrix adjugate;                  // adj(J), so J^{-1} = adj(J) / Delta
  std::shared_ptr<const MultiPoly> delta;

  LocalizedElement embed(const MultiPoly& p) const { return LocalizedElement::from_poly(p, delta); }
};

/// 2^n n! x_1...x_n prod_{i<j} (x_j^2 - x_i^2).
inline MultiPoly discriminant_closed_form(std::size_t n) {
  Rational c = 1;
  for (std::size_t k = 1; k <= n; ++k) c *= Rational(2 * static_cast<long>(k));
  MultiPoly d = MultiPoly::constant(n, 1, c);
  for (std::size_t i = 1; i <= n; ++i) d *= MultiPoly::variable(n, 1, i);
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = i + 1; j <= n; ++j)
      d *= MultiPoly::variable(n, 1, j).pow(2) - MultiPoly::variable(n, 1, i).pow(2);
  return d;
}

/// Builds the chart and checks det J against the closed form.
inline InvariantChart build_chart(std::size_t n) {
  if (n == 0) throw InvalidArgument("chart needs n >= 1");
  InvariantChart ch;
  ch.n = n;
  for (std::size_t j = 1; j <= n; ++j) {
    MultiPoly y(n, 1);
    for (std::size_t i = 1; i <= n; ++i) y += MultiPoly::variable(n, 1, i).pow(static_cast<int>(2 * j));
    ch.y.push_back(std::move(y));
  }
  ch.jacobian.assign(n, std::vector<MultiPoly>(n, MultiPoly(n, 1)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) ch.jacobian[i][j] = ch.y[j].derivative(i + 1);
  MultiPoly det = detail::determinant(ch.jacobian, n);
  if (det != discriminant_closed_form(n))
    throw ValidationFailure("det J = " + det.to_string() + " differs from the closed form");
  ch.delta = std::make_shared<const MultiPoly>(det);
  // adj(J)(j,i) = (-1)^{i+j} det(minor(J, i, j)).
  ch.adjugate.assign(n, std::vector<MultiPoly>(n, MultiPoly(n, 1)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      MultiPoly m = detail::determinant(detail::minor_of(ch.jacobian, i, j), n);
      ch.adjugate[j][i] = (i + j) % 2 ? -m : m;
    }
  return ch;
}

/// d/dy_j (1-based) of N / Delta^k:
///   sum_i adj(j,i) (Delta d_i N - k N d_i Delta) / Delta^{k+2}.
inline LocalizedElement dy_apply(std::size_t j, const LocalizedElement& f, const InvariantChart& ch) {
  if (j < 1 || j > ch.n) throw InvalidArgument("dy index out of range");
  if (f.delta() != ch.delta && *f.delta() != *ch.delta) throw Mismatch("element not localized at this chart's Delta");
  const MultiPoly& N = f.numerator();
  const MultiPoly& D = *ch.delta;
  const int k = f.delta_power();
  MultiPoly num(ch.n, 1);
  for (std::size_t i = 0; i < ch.n; ++i) {
    const MultiPoly& a = ch.adjugate[j - 1][i];
    if (a.is_zero()) continue;
    MultiPoly di = D * N.derivative(i + 1);
    if (k != 0) di -= N * D.derivative(i + 1) * Rational(k);
    num += a * di;
  }
  LocalizedElement out(num, k + 2, ch.delta);
  out.canonicalize();
  return out;
}

/// Multiplication by y_j.
inline LocalizedElement y_multiply(std::size_t j, const LocalizedElement& f, const InvariantChart& ch) {
  if (j < 1 || j > ch.n) throw InvalidArgument("y index out of range");
  return f * ch.y[j - 1];
}

struct ChartReport {
  bool passed = true;
  std::vector<std::string> failures;
};

/// dy_j y_k = delta_jk, and d/dy_j d/dy_k = d/dy_k d/dy_j on the samples.
inline ChartReport dy_on_generators_check(const InvariantChart& ch, const std::vector<MultiPoly>& samples) {
  ChartReport rep;
  auto fail = [&](const std::string& w) {
    rep.passed = false;
    rep.failures.push_back(w);
  };
  for (std::size_t j = 1; j <= ch.n; ++j)
    for (std::size_t k = 1; k <= ch.n; ++k) {
      LocalizedElement d = dy_apply(j, ch.embed(ch.y[k - 1]), ch);
      MultiPoly expected = j == k ? MultiPoly::one(ch.n, 1) : MultiPoly(ch.n, 1);
      if (!(d == ch.embed(expected)))
        fail("d y" + std::to_string(k) + "/d y" + std::to_string(j) + " = " + d.to_string());
    }
  for (const auto& p : samples) {
    auto f = ch.embed(p);
    for (std::size_t j = 1; j <= ch.n; ++j)
      for (std::size_t k = j + 1; k <= ch.n; ++k)
        if (!(dy_apply(j, dy_apply(k, f, ch), ch) == dy_apply(k, dy_apply(j, f, ch), ch)))
          fail("mixed partials differ on " + p.to_string());
  }
  return rep;
}

}  // namespace hspecht
