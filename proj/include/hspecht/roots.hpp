#pragma once

// Root systems with exact rational coordinates, type B_n in particular, and
// reflection couplings constant on conjugacy classes.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "hspecht/errors.hpp"
#include "hspecht/linalg.hpp"
#include "hspecht/polynomial.hpp"
#include "hspecht/wreath.hpp"

namespace hspecht {

using RootVector = std::vector<Rational>;

struct RootSystem {
  std::size_t n = 0;
  std::vector<RootVector> roots;
  char type = '?';  // 'B' for make_B, '?' for anything else
};

inline Rational inner(const RootVector& a, const RootVector& b) {
  if (a.size() != b.size()) throw Mismatch("vectors of different length");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline std::string root_to_string(const RootVector& a) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < a.size(); ++i) os << (i ? "," : "") << a[i].get_str();
  os << ")";
  return os.str();
}

/// ±e_i and ±e_i ± e_j (i < j).
inline RootSystem make_B(std::size_t n) {
  if (n == 0) throw InvalidArgument("B_n needs n >= 1");
  RootSystem rs{n, {}, 'B'};
  auto unit = [n](std::size_t i, int s) {
    RootVector v(n, Rational(0));
    v[i] = s;
    return v;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (int s : {1, -1}) rs.roots.push_back(unit(i, s));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (int a : {1, -1})
        for (int b : {1, -1}) {
          RootVector v(n, Rational(0));
          v[i] = a;
          v[j] = b;
          rs.roots.push_back(v);
        }
  return rs;
}

/// s_a(b) = b - 2(a,b)/(a,a) a.
inline RootVector reflect(const RootVector& a, const RootVector& b) {
  Rational k = 2 * inner(a, b) / inner(a, a);
  RootVector out = b;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] -= k * a[i];
  return out;
}

inline bool is_positive(const RootVector& a) {
  for (const auto& v : a)
    if (v != 0) return v > 0;
  return false;
}

/// Roots whose first nonzero coordinate is positive, in list order.
inline std::vector<RootVector> positive_roots(const RootSystem& rs) {
  std::vector<RootVector> out;
  for (const auto& a : rs.roots)
    if (is_positive(a)) out.push_back(a);
  return out;
}

/// sum_i a_i x_i.
inline MultiPoly linear_form(const RootVector& a) {
  MultiPoly p(a.size(), 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0) p += MultiPoly::variable(a.size(), 1, i + 1) * a[i];
  return p;
}

/// Matrix of s_a in the standard basis.
inline std::vector<RootVector> reflection_matrix(const RootVector& a) {
  const std::size_t n = a.size();
  Rational norm = inner(a, a);
  std::vector<RootVector> m(n, RootVector(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i][j] = (i == j ? Rational(1) : Rational(0)) - 2 * a[i] * a[j] / norm;
  return m;
}

/// (s_a f)(x) = f(s_a x).
inline MultiPoly reflect_poly(const RootVector& a, const MultiPoly& f) {
  auto m = reflection_matrix(a);
  std::vector<MultiPoly> images;
  for (std::size_t k = 0; k < a.size(); ++k) {
    MultiPoly img(a.size(), f.field_order());
    for (std::size_t l = 0; l < a.size(); ++l)
      if (m[k][l] != 0) img += MultiPoly::variable(a.size(), f.field_order(), l + 1) * m[k][l];
    images.push_back(img);
  }
  return f.substitute(images);
}

/// s_a as an element of G(2,n); throws when s_a is not a signed permutation.
inline GroupElement reflection_element(const RootVector& a) {
  const std::size_t n = a.size();
  auto m = reflection_matrix(a);
  std::vector<int> image(n, 0), exps(n, 0);
  for (std::size_t k = 0; k < n; ++k) {
    int found = -1;
    for (std::size_t l = 0; l < n; ++l) {
      if (m[k][l] == 0) continue;
      if (found >= 0 || (m[k][l] != 1 && m[k][l] != -1))
        throw InvalidArgument("reflection in " + root_to_string(a) + " is not a signed permutation");
      found = static_cast<int>(l);
    }
    if (found < 0) throw InvalidArgument("singular reflection matrix");
    image[k] = found + 1;
    exps[static_cast<std::size_t>(found)] = m[k][static_cast<std::size_t>(found)] < 0 ? 1 : 0;
  }
  return GroupElement(2, exps, Permutation::from_one_line(image));
}

struct AxiomCheck {
  int axiom = 0;
  std::string description;
  bool passed = true;
  std::string witness;
};

struct RootSystemReport {
  std::vector<AxiomCheck> checks;
  std::size_t size = 0;
  std::optional<std::size_t> expected_size;  // 2n + 2n(n-1) for type B
  std::size_t group_order = 0;               // order of the group the reflections generate
  bool passed = true;

  std::vector<int> failed_axioms() const {
    std::vector<int> out;
    for (const auto& c : checks)
      if (!c.passed) out.push_back(c.axiom);
    return out;
  }
};

/// Exhaustive check of the five root-system axioms:
///   1. R spans the space;  2. R ∩ Qa = {a, -a};  3. s_a(R) = R;
///   4. 2(a,b)/(b,b) is an integer;  5. the reflections generate a finite
///   group (for type B: of order 2^n n!).
inline RootSystemReport validate_root_system(const RootSystem& rs, std::size_t group_limit = 50000) {
  RootSystemReport rep;
  rep.size = rs.roots.size();
  std::set<RootVector> in_r(rs.roots.begin(), rs.roots.end());
  auto fail = [](AxiomCheck& c, const std::string& w) {
    if (c.passed) c.witness = w;
    c.passed = false;
  };

  AxiomCheck spans{1, "R spans the space", true, {}};
  {
    ScalarMatrix m(rs.roots.size(), rs.n, 1);
    for (std::size_t i = 0; i < rs.roots.size(); ++i)
      for (std::size_t j = 0; j < rs.n; ++j) m(i, j) = Scalar(1, rs.roots[i][j]);
    std::size_t rk = rs.roots.empty() ? 0 : rank(m);
    if (rk != rs.n) fail(spans, "rank " + std::to_string(rk) + " < " + std::to_string(rs.n));
  }

  AxiomCheck lines{2, "only ±a on the line through a", true, {}};
  AxiomCheck closed{3, "s_a(R) = R", true, {}};
  AxiomCheck integral{4, "2(a,b)/(b,b) integral", true, {}};
  for (const auto& a : rs.roots) {
    if (inner(a, a) == 0) {
      fail(lines, "zero vector in R");
      continue;
    }
    RootVector neg = a;
    for (auto& v : neg) v = -v;
    if (!in_r.count(neg)) fail(lines, "-" + root_to_string(a) + " missing");
    for (const auto& b : rs.roots) {
      // b is a multiple of a iff (a,b)^2 = (a,a)(b,b).
      Rational ab = inner(a, b);
      if (ab * ab == inner(a, a) * inner(b, b) && b != a && b != neg)
        fail(lines, root_to_string(b) + " is a multiple of " + root_to_string(a));
      if (!in_r.count(reflect(a, b)))
        fail(closed, "s" + root_to_string(a) + " maps " + root_to_string(b) + " outside R");
      if (inner(b, b) != 0) {
        Rational q = 2 * ab / inner(b, b);
        if (q.get_den() != 1) fail(integral, root_to_string(a) + ", " + root_to_string(b));
      }
    }
  }

  AxiomCheck generates{5, "reflections generate a finite group", true, {}};
  if (!closed.passed || !spans.passed) {
    // Without s_a(R) = R there is no finite permutation action to close up.
    fail(generates, "not checked: reflections do not act on a spanning R");
  } else {
    // R spans, so the group acts faithfully on R: close up as permutations.
    std::vector<RootVector> list(in_r.begin(), in_r.end());
    auto index_of = [&](const RootVector& v) {
      return static_cast<int>(std::lower_bound(list.begin(), list.end(), v) - list.begin());
    };
    std::vector<std::vector<int>> gens;
    for (const auto& a : list) {
      if (inner(a, a) == 0) continue;
      std::vector<int> p(list.size());
      for (std::size_t k = 0; k < list.size(); ++k) p[k] = index_of(reflect(a, list[k]));
      gens.push_back(std::move(p));
    }
    std::vector<int> id(list.size());
    for (std::size_t k = 0; k < id.size(); ++k) id[k] = static_cast<int>(k);
    std::set<std::vector<int>> seen{id};
    std::vector<std::vector<int>> frontier{id};
    while (!frontier.empty() && seen.size() <= group_limit) {
      std::vector<std::vector<int>> next;
      for (const auto& g : frontier)
        for (const auto& s : gens) {
          std::vector<int> p(g.size());
          for (std::size_t k = 0; k < g.size(); ++k) p[k] = s[static_cast<std::size_t>(g[k])];
          if (seen.insert(p).second) next.push_back(std::move(p));
        }
      frontier = std::move(next);
    }
    rep.group_order = seen.size();
    if (seen.size() > group_limit) fail(generates, "more than " + std::to_string(group_limit) + " elements");
    else if (rs.type == 'B' && rep.group_order != group_order(2, rs.n))
      fail(generates, "order " + std::to_string(rep.group_order) + " != 2^n n!");
  }

  rep.checks = {spans, lines, closed, integral, generates};
  if (rs.type == 'B') {
    rep.expected_size = 2 * rs.n + 2 * rs.n * (rs.n - 1);
    if (rep.size != *rep.expected_size) rep.passed = false;
  }
  for (const auto& c : rep.checks) rep.passed = rep.passed && c.passed;
  return rep;
}

/// Coupling for B_n: c_short on the sign flips (roots of squared length 1),
/// c_long on the transposition-type reflections (squared length 2).
struct CouplingMap {
  Rational c_short = 0;
  Rational c_long = 0;

  Rational operator()(const RootVector& a) const {
    Rational norm = inner(a, a);
    if (norm == 1) return c_short;
    if (norm == 2) return c_long;
    throw InvalidArgument("no coupling for root " + root_to_string(a));
  }
};

/// Positive roots grouped by conjugacy class of their reflections.
inline std::vector<std::vector<RootVector>> reflection_classes(const RootSystem& rs,
                                                               std::size_t limit = kDefaultGroupLimit) {
  std::vector<std::vector<RootVector>> classes;
  for (const auto& a : positive_roots(rs)) {
    auto g = reflection_element(a);
    bool placed = false;
    for (auto& cls : classes)
      if (conjugacy_test(reflection_element(cls.front()), g, limit)) {
        cls.push_back(a);
        placed = true;
        break;
      }
    if (!placed) classes.push_back({a});
  }
  return classes;
}

/// Throws ValidationFailure unless c takes equal values on conjugate
/// reflections (brute force over G(2,n)).
inline void validate_coupling(const RootSystem& rs, const CouplingMap& c,
                              std::size_t limit = kDefaultGroupLimit) {
  auto pos = positive_roots(rs);
  for (std::size_t i = 0; i < pos.size(); ++i)
    for (std::size_t j = i + 1; j < pos.size(); ++j)
      if (c(pos[i]) != c(pos[j]) &&
          conjugacy_test(reflection_element(pos[i]), reflection_element(pos[j]), limit))
        throw ValidationFailure("coupling differs on conjugate reflections " + root_to_string(pos[i]) + " and " +
                                root_to_string(pos[j]));
}

}  // namespace hspecht
