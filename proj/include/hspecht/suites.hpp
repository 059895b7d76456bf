#pragma once

// Named verification suites with per-check records, used by the command-line
// tool and the acceptance run.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "hspecht/chart.hpp"
#include "hspecht/decomposition.hpp"
#include "hspecht/dunkl.hpp"
#include "hspecht/errors.hpp"
#include "hspecht/roots.hpp"
#include "hspecht/specht.hpp"

namespace hspecht {

enum class Status { Pass, Fail, Inconclusive };

inline std::string to_string(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    default: return "inconclusive";
  }
}

struct SuiteConfig {
  std::string suite;
  int r = 2;
  std::size_t n = 2;
  std::optional<int> degree;  // suite default when unset
  Rational c_short{1, 2};
  Rational c_long{1, 3};
  std::uint64_t seed = 1;
};

struct CheckRecord {
  std::string name;
  Status status = Status::Pass;
  std::string witness;  // empty when there is nothing to report
  double millis = 0;
};

struct SuiteReport {
  std::string suite;
  SuiteConfig config;
  int degree = 0;  // bound actually used
  std::vector<CheckRecord> checks;
  double total_millis = 0;

  bool failed() const {
    for (const auto& c : checks)
      if (c.status == Status::Fail) return true;
    return false;
  }
  std::size_t count(Status s) const {
    std::size_t k = 0;
    for (const auto& c : checks) k += c.status == s;
    return k;
  }
};

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{
      "root-axioms",       "specht-basis", "coinvariant-hilbert", "dunkl-commute",   "olshanetsky-L",
      "chart-derivations", "idempotents",  "graded-decomposition", "orbit-membership"};
  return names;
}

namespace detail {

class SuiteRun {
 public:
  explicit SuiteRun(SuiteReport& rep) : rep_(rep) {}

  /// Times body() and appends its record; exceptions become failures.
  void check(const std::string& name, const std::function<CheckRecord()>& body) {
    auto start = std::chrono::steady_clock::now();
    CheckRecord rec;
    try {
      rec = body();
    } catch (const std::exception& e) {
      rec.status = Status::Fail;
      rec.witness = std::string("exception: ") + e.what();
    }
    rec.name = name;
    rec.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    rep_.checks.push_back(std::move(rec));
  }

 private:
  SuiteReport& rep_;
};

inline CheckRecord verdict(bool ok, const std::string& witness = {}) {
  return {"", ok ? Status::Pass : Status::Fail, witness, 0};
}

inline void require(bool ok, const std::string& what) {
  if (!ok) throw InvalidArgument(what);
}

inline Rational random_coupling_value(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-7, 7), den(1, 6);
  return Rational(num(rng)) / Rational(den(rng));
}

inline std::string coupling_text(const CouplingMap& c) {
  return "c_short=" + c.c_short.get_str() + " c_long=" + c.c_long.get_str();
}

inline void root_axioms(const SuiteConfig& cfg, SuiteRun& run) {
  auto rs = make_B(cfg.n);
  auto rep = validate_root_system(rs);
  for (const auto& a : rep.checks)
    run.check("axiom " + std::to_string(a.axiom) + ": " + a.description, [&] { return verdict(a.passed, a.witness); });
  run.check("root count", [&] {
    return verdict(rep.size == *rep.expected_size, "|R| = " + std::to_string(rep.size));
  });
  run.check("reflection group order", [&] {
    return verdict(rep.group_order == group_order(2, cfg.n), "order " + std::to_string(rep.group_order));
  });
  run.check("coupling constant on classes", [&] {
    validate_coupling(rs, CouplingMap{cfg.c_short, cfg.c_long});
    return verdict(true, std::to_string(reflection_classes(rs).size()) + " classes");
  });
}

inline void specht_basis(const SuiteConfig& cfg, int degree, SuiteRun& run) {
  ModuleBasisReport rep;
  run.check("module basis ranks computed", [&] {
    rep = module_basis_rank_check(cfg.r, static_cast<int>(cfg.n), degree);
    return verdict(true);
  });
  for (const auto& d : rep.degrees)
    run.check("degree " + std::to_string(d.degree) + " rank", [&] {
      return verdict(d.passed(), "rank " + std::to_string(d.rank) + ", products " + std::to_string(d.products) +
                                     ", dimension " + std::to_string(d.dimension));
    });
}

inline void coinvariant_hilbert(const SuiteConfig& cfg, SuiteRun& run) {
  HilbertReport rep;
  run.check("degree multiset of F_T^S", [&] {
    rep = coinvariant_hilbert_check(cfg.r, static_cast<int>(cfg.n));
    return verdict(rep.specht_degrees == rep.expected,
                   series_to_string(rep.specht_degrees) + " vs " + series_to_string(rep.expected));
  });
  run.check("sum of (f^lambda)^2 equals |G|", [&] {
    return verdict(rep.sum_of_squares == rep.group_order,
                   std::to_string(rep.sum_of_squares) + " vs " + std::to_string(rep.group_order));
  });
}

inline std::vector<CouplingMap> couplings_for(const SuiteConfig& cfg, int random_pairs) {
  std::vector<CouplingMap> out{{cfg.c_short, cfg.c_long}};
  std::mt19937_64 rng(cfg.seed);
  for (int k = 0; k < random_pairs; ++k) {
    Rational a = random_coupling_value(rng);
    Rational b = random_coupling_value(rng);
    out.push_back({a, b});
  }
  return out;
}

inline void dunkl_commute(const SuiteConfig& cfg, int degree, SuiteRun& run) {
  auto rs = make_B(cfg.n);
  auto tests = monomials_up_to(cfg.n, degree);
  for (const auto& c : couplings_for(cfg, 3))
    for (std::size_t i = 1; i <= cfg.n; ++i)
      for (std::size_t j = i + 1; j <= cfg.n; ++j)
        run.check("[D" + std::to_string(i) + ", D" + std::to_string(j) + "] " + coupling_text(c), [&] {
          PolyOperator A = [&](const MultiPoly& f) { return dunkl_apply(unit_vector(cfg.n, i), f, rs, c); };
          PolyOperator B = [&](const MultiPoly& f) { return dunkl_apply(unit_vector(cfg.n, j), f, rs, c); };
          auto rep = commutator_check(A, B, tests);
          return verdict(rep.passed, rep.passed ? std::to_string(rep.tested) + " monomials" : *rep.counterexample);
        });
}

inline void olshanetsky(const SuiteConfig& cfg, int degree, SuiteRun& run) {
  auto rs = make_B(cfg.n);
  CouplingMap c{cfg.c_short, cfg.c_long};
  auto samples = invariant_samples(cfg.n, degree);
  const int top = static_cast<int>(std::min<std::size_t>(cfg.n, 2));
  for (int j = 1; j <= top; ++j)
    run.check("L" + std::to_string(j) + " invariant and homogeneous of degree -" + std::to_string(2 * j), [&] {
      for (const auto& p : samples) {
        MultiPoly img = olshanetsky_apply(j, p, rs, c);
        if (!is_invariant(img, 2)) return verdict(false, p.to_string() + " -> " + img.to_string());
        if (!img.is_zero() && (!img.is_homogeneous() || img.degree() != p.degree() - 2 * j))
          return verdict(false, p.to_string() + " -> " + img.to_string());
      }
      return verdict(true, std::to_string(samples.size()) + " samples");
    });
  if (top >= 2)
    run.check("[L1, L2] = 0 on invariants", [&] {
      PolyOperator L1 = [&](const MultiPoly& f) { return olshanetsky_apply(1, f, rs, c); };
      PolyOperator L2 = [&](const MultiPoly& f) { return olshanetsky_apply(2, f, rs, c); };
      auto rep = commutator_check(L1, L2, samples);
      return verdict(rep.passed, rep.passed ? std::to_string(rep.tested) + " samples" : *rep.counterexample);
    });
  run.check("restriction identity m(sum D_i^2) = Laplacian - sum 2c/a d_a", [&] {
    for (const auto& p : samples)
      if (RationalFunction(olshanetsky_apply(1, p, rs, c)) != restriction_rhs(p, rs, c))
        return verdict(false, p.to_string());
    return verdict(true, std::to_string(samples.size()) + " samples");
  });
  if (cfg.n <= 2) {
    auto gauge_samples = invariant_samples(cfg.n, std::min(degree, 6));
    for (int cs = 0; cs <= 1; ++cs)
      for (int cl = 0; cl <= 1; ++cl) {
        CouplingMap ci{Rational(cs), Rational(cl)};
        run.check("gauge to Hamiltonian " + coupling_text(ci), [&] {
          auto rep = gauge_check(rs, ci, gauge_samples);
          if (!rep.passed) return verdict(false, rep.witness);
          return verdict(true, "K = " + (rep.constant ? rep.constant->get_str() : std::string("0")));
        });
      }
  }
}

inline void chart_derivations(const SuiteConfig& cfg, int degree, SuiteRun& run) {
  std::optional<InvariantChart> ch;
  run.check("Delta = det J matches 2^n n! x1...xn prod (xj^2 - xi^2)", [&] {
    ch = build_chart(cfg.n);
    return verdict(true, ch->delta->to_string());
  });
  if (!ch) return;
  auto samples = monomials_up_to(cfg.n, degree);
  run.check("d y_k / d y_j = delta_jk and mixed partials commute", [&] {
    auto rep = dy_on_generators_check(*ch, samples);
    return verdict(rep.passed, rep.passed ? std::to_string(samples.size()) + " samples" : rep.failures.front());
  });
  run.check("chain rule sum_j (dy_j/dx_i) d/dy_j = d/dx_i", [&] {
    for (const auto& f : samples)
      for (std::size_t i = 0; i < cfg.n; ++i) {
        LocalizedElement sum(MultiPoly(cfg.n, 1), 0, ch->delta);
        for (std::size_t j = 0; j < cfg.n; ++j) sum = sum + dy_apply(j + 1, ch->embed(f), *ch) * ch->jacobian[i][j];
        if (sum.canonical() != ch->embed(f.derivative(i + 1)))
          return verdict(false, f.to_string() + " i=" + std::to_string(i + 1));
      }
    return verdict(true, std::to_string(samples.size()) + " samples");
  });
}

inline void add_checks(SuiteRun& run, const std::string& prefix, const std::vector<Check>& checks) {
  for (const auto& c : checks) run.check(prefix + c.name, [&] { return verdict(c.passed, c.witness); });
}

inline void idempotents(const SuiteConfig& cfg, SuiteRun& run) {
  std::optional<Decomposition> d;
  run.check("representation matrices and idempotents built", [&] {
    d = build_decomposition(cfg.r, cfg.n);
    std::string dims;
    for (const auto& b : d->blocks) dims += (dims.empty() ? "" : ", ") + b.rep.shape.to_string() + ":" + std::to_string(b.rep.dimension());
    return verdict(true, dims);
  });
  if (!d) return;
  add_checks(run, "", validate_idempotents(*d));
  add_checks(run, "", idempotent_on_specht(*d));
  add_checks(run, "", character_orthogonality(*d));
}

inline void graded(const SuiteConfig& cfg, int degree, SuiteRun& run) {
  std::optional<Decomposition> d;
  run.check("idempotents built", [&] {
    d = build_decomposition(cfg.r, cfg.n);
    return verdict(true);
  });
  if (!d) return;
  GradedReport rep;
  run.check("graded ranks computed", [&] {
    rep = graded_direct_sum_check(*d, degree);
    return verdict(true);
  });
  for (const auto& gd : rep.degrees) {
    std::string ranks;
    for (auto k : gd.ranks) ranks += (ranks.empty() ? "" : ",") + std::to_string(k);
    run.check("degree " + std::to_string(gd.degree) + " direct sum", [&] {
      return verdict(gd.passed(), "ranks (" + ranks + ") sum " + std::to_string(gd.sum) + ", joint " +
                                      std::to_string(gd.joint_rank) + ", dimension " + std::to_string(gd.dimension));
    });
  }
  const int iso_degree = std::min(degree, 4);
  for (std::size_t b = 0; b < d->blocks.size(); ++b)
    for (std::size_t j = 1; j < d->blocks[b].primitive.size(); ++j)
      run.check("isomorphic copies " + d->blocks[b].rep.shape.to_string() + " e1 -> e" + std::to_string(j + 1), [&] {
        auto rep2 = isomorphism_class_check(*d, b, 0, j, iso_degree);
        return verdict(rep2.passed, rep2.witness);
      });
}

inline void orbit_membership(const SuiteConfig& cfg, int degree, SuiteRun& run) {
  std::optional<Decomposition> d;
  std::optional<InvariantChart> ch;
  run.check("idempotents and chart built", [&] {
    d = build_decomposition(2, cfg.n);
    ch = build_chart(cfg.n);
    return verdict(true);
  });
  if (!d) return;
  OrbitBounds bounds;
  for (auto [b, i] : d->labels()) {
    const auto& blk = d->blocks[b];
    for (int deg = 0; deg <= degree; ++deg)
      run.check(blk.rep.shape.to_string() + " e" + std::to_string(i + 1) + " degree " + std::to_string(deg), [&] {
        std::size_t found = 0, zero = 0;
        for (const auto& m : monomials_of_degree(cfg.n, deg)) {
          MultiPoly t = blk.primitive[i].apply(MultiPoly::monomial(m, Scalar::one(2)));
          if (t.is_zero()) {
            ++zero;
            continue;
          }
          auto res = dY_orbit_membership(blk.rep.basis[i], blk.primitive[i], t, *ch, bounds);
          if (res.outcome == Membership::False) return verdict(false, "target " + t.to_string() + ": " + res.reason);
          if (res.outcome == Membership::Inconclusive)
            return CheckRecord{"", Status::Inconclusive, "target " + t.to_string() + ": " + res.reason, 0};
          ++found;
        }
        return verdict(true, std::to_string(found) + " certified, " + std::to_string(zero) + " zero; S = " +
                                 blk.rep.S.to_string());
      });
  }
}

}  // namespace detail

/// Default degree bound for each suite.
inline int default_degree(const std::string& suite) {
  if (suite == "specht-basis" || suite == "graded-decomposition") return 6;
  if (suite == "dunkl-commute") return 5;
  if (suite == "olshanetsky-L") return 8;
  if (suite == "chart-derivations" || suite == "orbit-membership") return 4;
  return 0;
}

/// Throws InvalidArgument on an unknown suite or parameters out of bounds.
inline void validate_config(const SuiteConfig& cfg) {
  using detail::require;
  const auto& names = suite_names();
  require(std::find(names.begin(), names.end(), cfg.suite) != names.end(), "unknown suite '" + cfg.suite + "'");
  require(cfg.n >= 1, "n must be at least 1");
  require(cfg.r >= 1 && cfg.r <= 6, "r must lie in 1..6");
  const int degree = cfg.degree.value_or(default_degree(cfg.suite));
  require(degree >= 0 && degree <= 12, "degree must lie in 0..12");
  const std::string& s = cfg.suite;
  if (s == "root-axioms" || s == "dunkl-commute" || s == "olshanetsky-L")
    require(cfg.n <= 4, "n must be at most 4 for " + s);
  if (s == "chart-derivations") require(cfg.n <= 4, "n must be at most 4 for the chart");
  if (s == "specht-basis" || s == "coinvariant-hilbert" || s == "idempotents" || s == "graded-decomposition")
    require(group_order(cfg.r, cfg.n) <= kDefaultGroupLimit && cfg.n <= 4, "group G(r,n) too large for " + s);
  if (s == "orbit-membership") {
    require(cfg.r == 2, "orbit membership uses the type B chart (r = 2)");
    require(cfg.n <= 2, "orbit membership supports n <= 2");
  }
}

inline SuiteReport run_suite(const SuiteConfig& cfg) {
  validate_config(cfg);
  SuiteReport rep;
  rep.suite = cfg.suite;
  rep.config = cfg;
  rep.degree = cfg.degree.value_or(default_degree(cfg.suite));
  detail::SuiteRun run(rep);
  auto start = std::chrono::steady_clock::now();
  const std::string& s = cfg.suite;
  if (s == "root-axioms") detail::root_axioms(cfg, run);
  else if (s == "specht-basis") detail::specht_basis(cfg, rep.degree, run);
  else if (s == "coinvariant-hilbert") detail::coinvariant_hilbert(cfg, run);
  else if (s == "dunkl-commute") detail::dunkl_commute(cfg, rep.degree, run);
  else if (s == "olshanetsky-L") detail::olshanetsky(cfg, rep.degree, run);
  else if (s == "chart-derivations") detail::chart_derivations(cfg, rep.degree, run);
  else if (s == "idempotents") detail::idempotents(cfg, run);
  else if (s == "graded-decomposition") detail::graded(cfg, rep.degree, run);
  else detail::orbit_membership(cfg, rep.degree, run);
  rep.total_millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

}  // namespace hspecht
