#pragma once

// Representation matrices on higher Specht bases, characters, central and
// primitive idempotents of Q(xi_r)[G(r,n)], and graded checks of the
// decomposition of polynomials (localized at Delta) into their images.
//
// Matrices use the column convention g.F_j = sum_i rho(g)_{ij} F_i, so that
// rho(gh) = rho(g) rho(h) for the left action.

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "hspecht/chart.hpp"
#include "hspecht/errors.hpp"
#include "hspecht/fractions.hpp"
#include "hspecht/linalg.hpp"
#include "hspecht/parallel.hpp"
#include "hspecht/specht.hpp"
#include "hspecht/tableau.hpp"
#include "hspecht/wreath.hpp"

namespace hspecht {

struct RepMatrixSet {
  RDiagram shape;
  RTableau S;
  std::vector<RTableau> tableaux;  // T_1, ..., T_f in enumeration order
  std::vector<MultiPoly> basis;    // F_{T_i}^S
  std::map<GroupElement, ScalarMatrix> matrices;

  std::size_t dimension() const { return basis.size(); }
  const ScalarMatrix& operator()(const GroupElement& g) const {
    auto it = matrices.find(g);
    if (it == matrices.end()) throw InvalidArgument("no matrix for " + g.to_string());
    return it->second;
  }
  Scalar character(const GroupElement& g) const { return (*this)(g).trace(); }
};

/// Generator matrices by exact expansion, extended to the whole group by
/// rho(s g) = rho(s) rho(g).
inline RepMatrixSet rep_matrices(const RDiagram& shape, const RTableau& S, int r,
                                 std::size_t limit = kDefaultGroupLimit) {
  const auto n = static_cast<std::size_t>(shape.size());
  if (group_order(r, n) > limit) throw GroupTooLarge("group too large to materialize all matrices");
  RepMatrixSet rep;
  rep.shape = shape;
  rep.S = S;
  rep.tableaux = enumerate_standard_tableaux(shape);
  rep.basis = values_of(specht_module_basis(shape, S, r));
  const int field = rep.basis.empty() ? r : rep.basis[0].field_order();
  std::vector<std::pair<GroupElement, ScalarMatrix>> gens;
  for (const auto& g : group_generators(r, n)) {
    try {
      gens.emplace_back(g, action_matrix(g, rep.basis));
    } catch (const NotStable& e) {
      throw ExpansionFailed(e.what());
    }
  }
  auto id = GroupElement::identity(r, n);
  rep.matrices.emplace(id, ScalarMatrix::identity(rep.basis.size(), field));
  std::vector<GroupElement> frontier{id};
  while (!frontier.empty()) {
    std::vector<GroupElement> next;
    for (const auto& g : frontier)
      for (const auto& [s, m] : gens) {
        GroupElement sg = s * g;
        if (rep.matrices.count(sg)) continue;
        rep.matrices.emplace(sg, m * rep.matrices.at(g));
        next.push_back(sg);
      }
    frontier = std::move(next);
  }
  if (rep.matrices.size() != group_order(r, n)) throw ExpansionFailed("generators did not reach every element");
  return rep;
}

/// (f/|G|) sum_g w(g) g for a weight function w.
template <typename Weight>
GroupAlgebraElement group_average(const RepMatrixSet& rep, int r, Weight&& w) {
  const auto n = static_cast<std::size_t>(rep.shape.size());
  const int field = rep.basis.empty() ? r : rep.basis[0].field_order();
  GroupAlgebraElement out(r, n);
  Scalar scale(field, Rational(static_cast<long>(rep.dimension())) / Rational(static_cast<long>(group_order(r, n))));
  for (const auto& [g, m] : rep.matrices) {
    Scalar c = w(rep(g.inverse()));
    if (!c.is_zero()) out.add_term(g, c * scale);
  }
  return out;
}

/// r_lambda = (f/|G|) sum_g chi(g^{-1}) g.
inline GroupAlgebraElement central_idempotent(const RepMatrixSet& rep, int r) {
  return group_average(rep, r, [](const ScalarMatrix& m) { return m.trace(); });
}

/// u_{ab} = (f/|G|) sum_g rho(g^{-1})_{ba} g (0-based a, b). It maps F_b to
/// F_a and kills the other basis vectors.
inline GroupAlgebraElement matrix_unit(const RepMatrixSet& rep, int r, std::size_t a, std::size_t b) {
  return group_average(rep, r, [a, b](const ScalarMatrix& m) { return m(b, a); });
}

/// e_i = u_{ii} for each standard tableau T_i.
inline std::vector<GroupAlgebraElement> primitive_idempotents(const RepMatrixSet& rep, int r) {
  std::vector<GroupAlgebraElement> out;
  for (std::size_t i = 0; i < rep.dimension(); ++i) out.push_back(matrix_unit(rep, r, i, i));
  return out;
}

struct ShapeBlock {
  RepMatrixSet rep;
  GroupAlgebraElement central;
  std::vector<GroupAlgebraElement> primitive;
};

/// All shapes of G(r,n), each with S fixed to its first standard tableau.
struct Decomposition {
  int r = 1;
  std::size_t n = 0;
  std::vector<GroupElement> group;
  std::vector<ShapeBlock> blocks;

  /// Every primitive idempotent with its (block, index).
  std::vector<std::pair<std::size_t, std::size_t>> labels() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t b = 0; b < blocks.size(); ++b)
      for (std::size_t i = 0; i < blocks[b].primitive.size(); ++i) out.emplace_back(b, i);
    return out;
  }
};

inline Decomposition build_decomposition(int r, std::size_t n, std::size_t limit = kDefaultGroupLimit) {
  Decomposition d;
  d.r = r;
  d.n = n;
  d.group = enumerate_group(r, n, limit);
  for (const auto& shape : enumerate_rdiagrams(r, static_cast<int>(n))) {
    auto tabs = enumerate_standard_tableaux(shape);
    auto rep = rep_matrices(shape, tabs.front(), r, limit);
    auto central = central_idempotent(rep, r);
    auto prim = primitive_idempotents(rep, r);
    d.blocks.push_back({std::move(rep), std::move(central), std::move(prim)});
  }
  return d;
}

struct Check {
  std::string name;
  bool passed = true;
  std::string witness;
};

inline void record(std::vector<Check>& checks, const std::string& name, bool ok, const std::string& witness = {}) {
  for (auto& c : checks)
    if (c.name == name) {
      if (c.passed && !ok) c.witness = witness;
      c.passed = c.passed && ok;
      return;
    }
  checks.push_back({name, ok, ok ? std::string() : witness});
}

/// Idempotency, orthogonality, completeness and centrality of the r_lambda;
/// idempotency, orthogonality and sum of the e_i.
inline std::vector<Check> validate_idempotents(const Decomposition& d) {
  std::vector<Check> checks;
  auto one = GroupAlgebraElement::one(d.r, d.n);
  GroupAlgebraElement total(d.r, d.n);
  auto gens = group_generators(d.r, d.n);
  for (std::size_t a = 0; a < d.blocks.size(); ++a) {
    const auto& A = d.blocks[a];
    const std::string sa = A.rep.shape.to_string();
    record(checks, "central idempotent", A.central * A.central == A.central, sa);
    for (std::size_t b = a + 1; b < d.blocks.size(); ++b)
      record(checks, "central orthogonal", (A.central * d.blocks[b].central).is_zero(),
             sa + " " + d.blocks[b].rep.shape.to_string());
    for (const auto& g : gens) {
      auto G = GroupAlgebraElement::basis(g, Scalar::one(d.r));
      record(checks, "central commutes with generators", G * A.central == A.central * G, sa + " " + g.to_string());
    }
    total += A.central;
    GroupAlgebraElement sum(d.r, d.n);
    for (std::size_t i = 0; i < A.primitive.size(); ++i) {
      const auto& e = A.primitive[i];
      record(checks, "primitive idempotent", e * e == e, sa + " i=" + std::to_string(i + 1));
      for (std::size_t j = 0; j < A.primitive.size(); ++j)
        if (j != i)
          record(checks, "primitive orthogonal", (e * A.primitive[j]).is_zero(),
                 sa + " " + std::to_string(i + 1) + "," + std::to_string(j + 1));
      sum += e;
    }
    record(checks, "primitive sum is central", sum == A.central, sa);
  }
  record(checks, "central sum is one", total == one, total.to_string());
  return checks;
}

/// e_i F_{T_j} = delta_ij F_{T_i} within each block and e_i kills the basis
/// of every other block.
inline std::vector<Check> idempotent_on_specht(const Decomposition& d) {
  std::vector<Check> checks;
  for (std::size_t a = 0; a < d.blocks.size(); ++a) {
    const auto& A = d.blocks[a];
    for (std::size_t i = 0; i < A.primitive.size(); ++i)
      for (std::size_t b = 0; b < d.blocks.size(); ++b)
        for (std::size_t j = 0; j < d.blocks[b].rep.basis.size(); ++j) {
          const auto& F = d.blocks[b].rep.basis[j];
          MultiPoly img = A.primitive[i].apply(F);
          bool ok = (a == b && i == j) ? img == F : img.is_zero();
          record(checks, a == b ? "e_i F_j = delta_ij F_i" : "e_i kills other shapes", ok,
                 A.rep.shape.to_string() + " e" + std::to_string(i + 1) + " on " + d.blocks[b].rep.shape.to_string() +
                     " F" + std::to_string(j + 1) + " -> " + img.to_string());
        }
  }
  return checks;
}

/// (1/|G|) sum_g chi_a(g) conj(chi_b(g)) = delta_ab.
inline std::vector<Check> character_orthogonality(const Decomposition& d) {
  std::vector<Check> checks;
  const int field = d.r;
  for (std::size_t a = 0; a < d.blocks.size(); ++a)
    for (std::size_t b = 0; b < d.blocks.size(); ++b) {
      Scalar s(field);
      for (const auto& g : d.group) {
        Scalar ca = d.blocks[a].rep.character(g), cb = d.blocks[b].rep.character(g);
        s += ca * cb.conjugate();
      }
      s *= Scalar(field, Rational(1) / Rational(static_cast<long>(d.group.size())));
      bool ok = a == b ? s.is_one() : s.is_zero();
      record(checks, "character orthogonality", ok,
             d.blocks[a].rep.shape.to_string() + " " + d.blocks[b].rep.shape.to_string() + " -> " + s.to_string());
    }
  return checks;
}

/// Span of {e m : m a monomial of degree d}, as a list of polynomials.
inline std::vector<MultiPoly> graded_image(const GroupAlgebraElement& e, std::size_t n, int field, int degree) {
  std::vector<MultiPoly> out;
  for (const auto& m : monomials_of_degree(n, degree)) {
    MultiPoly img = e.apply(MultiPoly::monomial(m, Scalar::one(field)));
    if (!img.is_zero()) out.push_back(std::move(img));
  }
  return out;
}

struct GradedDegree {
  int degree = 0;
  std::vector<std::size_t> ranks;  // one per primitive idempotent, in Decomposition::labels() order
  std::size_t sum = 0;
  std::size_t joint_rank = 0;
  std::size_t dimension = 0;
  bool passed() const { return sum == dimension && joint_rank == sum; }
};

struct GradedReport {
  std::vector<GradedDegree> degrees;
  bool passed = true;
};

/// For d <= max_degree: sum_i rank(e_i on degree d) = dim and the images are
/// independent (joint rank equals the sum of ranks).
inline GradedReport graded_direct_sum_check(const Decomposition& d, int max_degree) {
  GradedReport rep;
  const int field = d.r;
  std::vector<GradedDegree> out(static_cast<std::size_t>(max_degree + 1));
  parallel_for(out.size(), [&](std::size_t k) {
    GradedDegree gd;
    gd.degree = static_cast<int>(k);
    gd.dimension = monomials_of_degree(d.n, gd.degree).size();
    std::vector<MultiPoly> all;
    for (auto [b, i] : d.labels()) {
      auto img = graded_image(d.blocks[b].primitive[i], d.n, field, gd.degree);
      std::size_t rk = span_rank(img);
      gd.ranks.push_back(rk);
      gd.sum += rk;
      all.insert(all.end(), img.begin(), img.end());
    }
    gd.joint_rank = span_rank(all);
    out[k] = std::move(gd);
  });
  for (auto& gd : out) {
    rep.passed = rep.passed && gd.passed();
    rep.degrees.push_back(std::move(gd));
  }
  return rep;
}

struct IsomorphismReport {
  bool passed = true;
  std::vector<std::size_t> ranks_i, ranks_j, ranks_mapped;
  std::string witness;
};

/// Within one block: u_{ji} maps the degree-d part of e_i's image onto that
/// of e_j, with equal ranks, for d <= max_degree.
inline IsomorphismReport isomorphism_class_check(const Decomposition& d, std::size_t block, std::size_t i,
                                                 std::size_t j, int max_degree) {
  const auto& B = d.blocks.at(block);
  auto u = matrix_unit(B.rep, d.r, j, i);
  IsomorphismReport rep;
  for (int deg = 0; deg <= max_degree; ++deg) {
    auto Ii = graded_image(B.primitive.at(i), d.n, d.r, deg);
    auto Ij = graded_image(B.primitive.at(j), d.n, d.r, deg);
    std::vector<MultiPoly> mapped;
    for (const auto& p : Ii) mapped.push_back(u.apply(p));
    std::size_t ri = span_rank(Ii), rj = span_rank(Ij), rm = span_rank(mapped);
    rep.ranks_i.push_back(ri);
    rep.ranks_j.push_back(rj);
    rep.ranks_mapped.push_back(rm);
    bool inside = true;
    for (const auto& p : mapped)
      if (!p.is_zero() && !in_span(Ij, p)) inside = false;
    if (ri != rj || rm != ri || !inside) {
      if (rep.passed)
        rep.witness = "degree " + std::to_string(deg) + ": ranks " + std::to_string(ri) + ", " + std::to_string(rj) +
                      ", mapped " + std::to_string(rm) + (inside ? "" : ", image leaves e_j");
      rep.passed = false;
    }
  }
  return rep;
}

/// e_b g e_a = 0 for all g when a and b lie in different blocks: there is no
/// nonzero G-map between their images.
inline bool cross_shape_annihilates(const Decomposition& d, std::size_t block_a, std::size_t a, std::size_t block_b,
                                    std::size_t b) {
  const auto& ea = d.blocks.at(block_a).primitive.at(a);
  const auto& eb = d.blocks.at(block_b).primitive.at(b);
  for (const auto& g : d.group)
    if (!(eb * GroupAlgebraElement::basis(g, Scalar::one(d.r)) * ea).is_zero()) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Localized elements (type B only: r = 2 acting on polynomials over Q).

/// g.(N / Delta^k) = (g.N) / (g.Delta)^k with g.Delta = ±Delta.
inline LocalizedElement act_on_localized(const GroupElement& g, const LocalizedElement& f) {
  MultiPoly gd = act_on_poly(g, *f.delta());
  MultiPoly num = act_on_poly(g, f.numerator());
  if (gd == *f.delta()) return LocalizedElement(num, f.delta_power(), f.delta());
  if (gd == -*f.delta()) return LocalizedElement(f.delta_power() % 2 ? -num : num, f.delta_power(), f.delta());
  throw InvalidArgument(g.to_string() + " does not preserve Delta up to sign");
}

inline LocalizedElement algebra_apply_localized(const GroupAlgebraElement& a, const LocalizedElement& f) {
  LocalizedElement out(MultiPoly(f.numerator().nvars(), f.numerator().field_order()), 0, f.delta());
  for (const auto& [g, c] : a.terms()) {
    if (!c.is_rational()) throw Mismatch("localized action needs rational coefficients");
    out = out + act_on_localized(g, f) * Scalar(f.numerator().field_order(), c.rational_part());
  }
  return out.canonical();
}

enum class Membership { True, False, Inconclusive };

inline std::string to_string(Membership m) {
  switch (m) {
    case Membership::True: return "true";
    case Membership::False: return "false";
    default: return "inconclusive";
  }
}

struct OrbitBounds {
  int depth = 4;
  int delta_order = 2;
  int degree = 6;
};

struct MembershipResult {
  Membership outcome = Membership::Inconclusive;
  int delta_power = -1;        // k with Delta^{2k} target in the span, when true
  std::size_t generators = 0;  // size of the generating family
  std::string reason;
};

/// Words of length <= depth in {y_j ., d/dy_j} applied to F; elements whose
/// canonical Delta-power exceeds the bound are dropped.
inline std::vector<LocalizedElement> orbit_family(const MultiPoly& F, const InvariantChart& ch, const OrbitBounds& b) {
  std::vector<LocalizedElement> family;
  std::set<std::pair<int, std::string>> seen;
  auto keep = [&](LocalizedElement e) {
    e.canonicalize();
    if (e.is_zero() || e.delta_power() > b.delta_order) return false;
    if (!seen.insert({e.delta_power(), e.numerator().to_string()}).second) return false;
    family.push_back(std::move(e));
    return true;
  };
  keep(ch.embed(change_field(F, 1)));
  std::vector<LocalizedElement> frontier = family;
  for (int depth = 1; depth <= b.depth && !frontier.empty(); ++depth) {
    std::vector<LocalizedElement> next;
    for (const auto& e : frontier)
      for (std::size_t j = 1; j <= ch.n; ++j) {
        if (keep(y_multiply(j, e, ch))) next.push_back(family.back());
        if (keep(dy_apply(j, e, ch))) next.push_back(family.back());
      }
    frontier = std::move(next);
  }
  return family;
}

/// Decides whether target lies in the D_Y-orbit span of F, for the idempotent
/// e with e F = F. False when e target != target (the orbit lies in e's
/// image); true when Delta^{2k} target is a Q-combination of the orbit family
/// for some k <= delta_order; inconclusive otherwise.
inline MembershipResult dY_orbit_membership(const MultiPoly& F, const GroupAlgebraElement& e, const MultiPoly& target,
                                            const InvariantChart& ch, const OrbitBounds& b = {}) {
  MembershipResult res;
  MultiPoly t = change_field(target, 1);
  if (change_field(e.apply(change_field(t, e.r())), 1) != t) {
    res.outcome = Membership::False;
    res.reason = "target is not fixed by the idempotent";
    return res;
  }
  if (t.is_zero()) {
    res.outcome = Membership::True;
    res.delta_power = 0;
    res.reason = "zero target";
    return res;
  }
  if (!t.is_homogeneous()) throw InvalidArgument("target must be homogeneous");
  if (t.degree() > b.degree) {
    res.reason = "target degree above the bound";
    return res;
  }
  auto family = orbit_family(F, ch, b);
  res.generators = family.size();
  const int ddeg = ch.delta->degree();
  for (int k = 0; k <= b.delta_order; ++k) {
    const int want = t.degree() + 2 * k * ddeg;
    std::vector<const LocalizedElement*> cands;
    int K = 0;
    for (const auto& f : family)
      if (f.numerator().is_homogeneous() && f.degree() == want) {
        cands.push_back(&f);
        K = std::max(K, f.delta_power());
      }
    if (cands.empty()) continue;
    std::vector<MultiPoly> cols;
    for (const auto* f : cands) cols.push_back(f->numerator_over(K));
    MultiPoly goal = t * ch.delta->pow(2 * k + K);
    if (in_span(cols, goal)) {
      res.outcome = Membership::True;
      res.delta_power = k;
      return res;
    }
  }
  res.reason = "not found within depth " + std::to_string(b.depth) + " and Delta-order " +
               std::to_string(b.delta_order);
  return res;
}

}  // namespace hspecht
