#pragma once

// Higher Specht polynomials for G(r,n).
//
//   F_T^S = prod_v ( e_{T^v}( prod_{cells c} x_{T^v(c)}^{r i(S)^v(c)} ) * prod_{k in T^v} x_k^{v-1} )
//
// with e_{T^v} the normalised Young symmetrizer of the v-th component and
// components numbered from 1. Exponent v-1 on the component factor makes the
// whole family a basis of C[x] over the invariants; exponent v does not.

#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "hspecht/errors.hpp"
#include "hspecht/linalg.hpp"
#include "hspecht/polynomial.hpp"
#include "hspecht/tableau.hpp"
#include "hspecht/wreath.hpp"

namespace hspecht {

struct SpechtPolynomial {
  MultiPoly value;
  RTableau S;
  RTableau T;
  RDiagram shape;

  int degree() const { return value.degree(); }
};

/// sum over cells of r*i(S)(cell) + (component - 1).
inline int specht_degree(const RTableau& S, int r) {
  IndexedShape idx = index_map(S);
  int d = 0;
  for (std::size_t v = 0; v < idx.indices.size(); ++v)
    for (const auto& row : idx.indices[v])
      for (int i : row) d += r * i + static_cast<int>(v);
  return d;
}

/// F_T^S; throws on shape mismatch or non-standard S.
inline SpechtPolynomial higher_specht(const RTableau& S, const RTableau& T, int r) {
  if (!S.is_standard()) throw InvalidArgument("S must be a standard tableau");
  if (!T.is_valid()) throw InvalidArgument("T must be a tableau");
  if (S.shape() != T.shape()) throw Mismatch("S and T have different shapes");
  if (S.r() != r) throw Mismatch("tableau has " + std::to_string(S.r()) + " components but r = " + std::to_string(r));
  const std::size_t n = static_cast<std::size_t>(S.size());
  IndexedShape idx = index_map(S);
  MultiPoly result = MultiPoly::one(n, r);
  for (std::size_t v = 0; v < T.entries.size(); ++v) {
    const auto& comp = T.entries[v];
    if (comp.empty()) continue;
    Monomial mono(n);
    Monomial factor(n);
    for (std::size_t i = 0; i < comp.size(); ++i)
      for (std::size_t j = 0; j < comp[i].size(); ++j) {
        auto label = static_cast<std::size_t>(comp[i][j] - 1);
        mono[label] += r * idx.indices[v][i][j];
        factor[label] += static_cast<int>(v);
      }
    MultiPoly sym = young_symmetrizer(comp, r, n).apply(MultiPoly::monomial(mono, Scalar::one(r)));
    result *= sym * MultiPoly::monomial(factor, Scalar::one(r));
  }
  return {result, S, T, S.shape()};
}

/// {F_T^S : T in STab(shape)}, checked linearly independent.
inline std::vector<SpechtPolynomial> specht_module_basis(const RDiagram& shape, const RTableau& S, int r) {
  if (S.shape() != shape) throw Mismatch("S does not have the requested shape");
  std::vector<SpechtPolynomial> family;
  std::vector<MultiPoly> values;
  for (const auto& T : enumerate_standard_tableaux(shape)) {
    family.push_back(higher_specht(S, T, r));
    values.push_back(family.back().value);
  }
  if (span_rank(values) != values.size())
    throw DependenceDetected("higher Specht polynomials for S = " + S.to_string() + " are dependent");
  return family;
}

inline std::vector<MultiPoly> values_of(const std::vector<SpechtPolynomial>& family) {
  std::vector<MultiPoly> v;
  v.reserve(family.size());
  for (const auto& f : family) v.push_back(f.value);
  return v;
}

/// Matrix of g on the basis: column j holds the coefficients of g.F_j.
/// Throws NotStable if some image leaves the span.
inline ScalarMatrix action_matrix(const GroupElement& g, const std::vector<MultiPoly>& basis) {
  const int r = basis.empty() ? g.r() : basis[0].field_order();
  ScalarMatrix m(basis.size(), basis.size(), r);
  for (std::size_t j = 0; j < basis.size(); ++j) {
    MultiPoly img = act_on_poly(g, basis[j]);
    auto coeffs = express_in_span(basis, img);
    if (!coeffs) throw NotStable(g.to_string() + " maps " + basis[j].to_string() + " outside the span");
    for (std::size_t i = 0; i < basis.size(); ++i) m(i, j) = (*coeffs)[i];
  }
  return m;
}

struct IrreducibleReport {
  std::size_t dimension = 0;
  std::vector<std::pair<GroupElement, ScalarMatrix>> generator_matrices;
};

/// Checks that span{F_T^S} is stable under every generator of G(r,n).
inline IrreducibleReport irreducible_check(const RDiagram& shape, const RTableau& S, int r) {
  auto basis = values_of(specht_module_basis(shape, S, r));
  IrreducibleReport rep;
  rep.dimension = basis.size();
  for (const auto& g : group_generators(r, static_cast<std::size_t>(shape.size())))
    rep.generator_matrices.emplace_back(g, action_matrix(g, basis));
  return rep;
}

/// Integer polynomial coefficients, lowest degree first.
using DegreeSeries = std::vector<long long>;

inline DegreeSeries series_product(const DegreeSeries& a, const DegreeSeries& b) {
  DegreeSeries out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

inline std::string series_to_string(const DegreeSeries& s) {
  std::string out;
  for (std::size_t d = 0; d < s.size(); ++d) {
    if (s[d] == 0) continue;
    if (!out.empty()) out += " + ";
    if (d == 0 || s[d] != 1) out += std::to_string(s[d]);
    if (d > 0) out += (s[d] != 1 ? "*" : std::string()) + "t" + (d > 1 ? "^" + std::to_string(d) : std::string());
  }
  return out.empty() ? "0" : out;
}

struct HilbertReport {
  DegreeSeries specht_degrees;   // multiplicity of each degree among all F_T^S
  DegreeSeries expected;         // prod_j (1 + t + ... + t^{rj - 1})
  long long sum_of_squares = 0;  // sum over shapes of (f^λ)^2
  long long group_order = 0;
  bool passed = false;
};

/// Degrees of all F_T^S (all shapes, S and T standard) against the
/// coinvariant Hilbert series.
inline HilbertReport coinvariant_hilbert_check(int r, int n) {
  HilbertReport rep;
  rep.group_order = static_cast<long long>(group_order(r, static_cast<std::size_t>(n)));
  rep.expected = {1};
  for (int j = 1; j <= n; ++j) rep.expected = series_product(rep.expected, DegreeSeries(static_cast<std::size_t>(r * j), 1));
  for (const auto& shape : enumerate_rdiagrams(r, n)) {
    auto tabs = enumerate_standard_tableaux(shape);
    rep.sum_of_squares += static_cast<long long>(tabs.size() * tabs.size());
    for (const auto& S : tabs)
      for (const auto& T : tabs) {
        auto F = higher_specht(S, T, r);
        if (F.value.is_zero() || !F.value.is_homogeneous())
          throw AlgebraError("higher Specht polynomial is zero or inhomogeneous");
        auto d = static_cast<std::size_t>(F.degree());
        if (rep.specht_degrees.size() <= d) rep.specht_degrees.resize(d + 1, 0);
        ++rep.specht_degrees[d];
      }
  }
  rep.passed = rep.specht_degrees == rep.expected && rep.sum_of_squares == rep.group_order;
  return rep;
}

/// Exponent vectors a with sum_j a_j * weights[j] == d.
inline std::vector<std::vector<int>> weighted_compositions(const std::vector<int>& weights, int d) {
  std::vector<std::vector<int>> out;
  std::vector<int> a(weights.size(), 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t j, int left) {
    if (j == weights.size()) {
      if (left == 0) out.push_back(a);
      return;
    }
    for (int k = 0; k * weights[j] <= left; ++k) {
      a[j] = k;
      rec(j + 1, left - k * weights[j]);
    }
    a[j] = 0;
  };
  rec(0, d);
  return out;
}

inline long long binomial(long long n, long long k) {
  if (k < 0 || k > n) return 0;
  long long b = 1;
  for (long long i = 1; i <= k; ++i) b = b * (n - k + i) / i;
  return b;
}

struct DegreeRank {
  int degree = 0;
  std::size_t products = 0;  // number of invariant-monomial * F_T^S products
  std::size_t rank = 0;
  std::size_t dimension = 0;  // binom(n+d-1, n-1)
  bool passed() const { return products == dimension && rank == dimension; }
};

struct ModuleBasisReport {
  std::vector<DegreeRank> degrees;
  bool passed = true;
};

/// For each d <= max_degree: the products (monomial in the fundamental
/// invariants) * F_T^S of degree d are exactly dim C[x]_d many and span it.
/// With `throw_on_failure` a failing degree raises RankDeficient.
inline ModuleBasisReport module_basis_rank_check(int r, int n, int max_degree, bool throw_on_failure = false) {
  const auto un = static_cast<std::size_t>(n);
  std::vector<SpechtPolynomial> all;
  for (const auto& shape : enumerate_rdiagrams(r, n)) {
    auto tabs = enumerate_standard_tableaux(shape);
    for (const auto& S : tabs)
      for (const auto& T : tabs) all.push_back(higher_specht(S, T, r));
  }
  auto invariants = fundamental_invariants(r, un);
  std::vector<int> weights;
  for (int j = 1; j <= n; ++j) weights.push_back(r * j);

  ModuleBasisReport rep;
  for (int d = 0; d <= max_degree; ++d) {
    std::vector<MultiPoly> products;
    for (const auto& F : all) {
      int rest = d - F.degree();
      if (rest < 0) continue;
      for (const auto& a : weighted_compositions(weights, rest)) {
        MultiPoly p = F.value;
        for (std::size_t j = 0; j < a.size(); ++j)
          if (a[j] > 0) p *= invariants[j].pow(a[j]);
        products.push_back(std::move(p));
      }
    }
    DegreeRank dr;
    dr.degree = d;
    dr.products = products.size();
    dr.rank = span_rank(products);
    dr.dimension = static_cast<std::size_t>(binomial(n + d - 1, n - 1));
    rep.passed = rep.passed && dr.passed();
    if (!dr.passed() && throw_on_failure)
      throw RankDeficient(d, "degree " + std::to_string(d) + ": rank " + std::to_string(dr.rank) + " of " +
                                 std::to_string(dr.products) + " products, expected " + std::to_string(dr.dimension));
    rep.degrees.push_back(dr);
  }
  return rep;
}

}  // namespace hspecht
