// Acceptance run: one PASS/FAIL line per criterion, each under its time limit.
// Exit status is the number of failed criteria.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "hspecht/chart.hpp"
#include "hspecht/decomposition.hpp"
#include "hspecht/dunkl.hpp"
#include "hspecht/specht.hpp"
#include "hspecht/suites.hpp"

using namespace hspecht;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

struct Criterion {
  int id;
  std::string title;
  double limit_seconds;
  std::function<Outcome()> body;
};

Outcome from_suite(const SuiteReport& rep, bool allow_inconclusive) {
  Outcome out;
  for (const auto& c : rep.checks) {
    bool bad = c.status == Status::Fail || (!allow_inconclusive && c.status == Status::Inconclusive);
    if (bad && out.ok) out.detail = c.name + ": " + c.witness;
    out.ok = out.ok && !bad;
  }
  if (out.ok)
    out.detail = std::to_string(rep.count(Status::Pass)) + " checks pass, " +
                 std::to_string(rep.count(Status::Inconclusive)) + " inconclusive";
  return out;
}

SuiteConfig config(const std::string& suite, int r, std::size_t n, int degree) {
  SuiteConfig c;
  c.suite = suite;
  c.r = r;
  c.n = n;
  c.degree = degree;
  return c;
}

Outcome all_of(const std::vector<Outcome>& parts) {
  Outcome out;
  for (const auto& p : parts) {
    if (!p.ok && out.ok) out.detail = p.detail;
    out.ok = out.ok && p.ok;
  }
  if (out.ok && !parts.empty()) out.detail = parts.back().detail;
  return out;
}

Outcome regular_representation() {
  for (auto [r, n] : std::vector<std::pair<int, int>>{{1, 3}, {2, 2}, {2, 3}, {3, 2}}) {
    long long sum = 0;
    for (const auto& shape : enumerate_rdiagrams(r, n)) {
      auto f = static_cast<long long>(enumerate_standard_tableaux(shape).size());
      if (f != hook_formula_count(shape)) return {false, "hook formula disagrees at " + shape.to_string()};
      sum += f * f;
    }
    long long order = static_cast<long long>(group_order(r, static_cast<std::size_t>(n)));
    if (sum != order)
      return {false, "(r,n)=(" + std::to_string(r) + "," + std::to_string(n) + "): " + std::to_string(sum)};
  }
  return {true, "sums 6, 8, 48, 18"};
}

Outcome free_module_basis() {
  for (auto [r, n] : std::vector<std::pair<int, int>>{{1, 2}, {1, 3}, {2, 2}}) {
    auto rep = module_basis_rank_check(r, n, 6);
    for (const auto& d : rep.degrees)
      if (!d.passed())
        return {false, "(r,n)=(" + std::to_string(r) + "," + std::to_string(n) + ") degree " +
                           std::to_string(d.degree) + ": rank " + std::to_string(d.rank) + " of " +
                           std::to_string(d.dimension)};
  }
  return {true, "full rank in every degree <= 6"};
}

Outcome coinvariant_degrees() {
  DegreeSeries seen;
  long long total = 0;
  for (const auto& shape : enumerate_rdiagrams(2, 2)) {
    auto tabs = enumerate_standard_tableaux(shape);
    for (const auto& S : tabs)
      for (const auto& T : tabs) {
        auto d = static_cast<std::size_t>(higher_specht(S, T, 2).degree());
        if (seen.size() <= d) seen.resize(d + 1, 0);
        ++seen[d];
        ++total;
      }
  }
  DegreeSeries expected{1, 2, 2, 2, 1};
  return {seen == expected && total == 8, series_to_string(seen) + ", total " + std::to_string(total)};
}

Outcome dunkl_commutativity() {
  std::vector<Outcome> parts;
  for (std::size_t n : {2u, 3u}) {
    auto cfg = config("dunkl-commute", 2, n, 5);
    cfg.seed = 20 + n;
    parts.push_back(from_suite(run_suite(cfg), false));
  }
  return all_of(parts);
}

Outcome olshanetsky_operators() { return from_suite(run_suite(config("olshanetsky-L", 2, 2, 8)), false); }

Outcome restriction_and_gauge() {
  std::mt19937_64 rng(6);
  std::uniform_int_distribution<int> num(-9, 9), den(1, 7);
  std::string constants;
  for (std::size_t n = 1; n <= 2; ++n) {
    auto rs = make_B(n);
    auto ctx = make_root_context(rs);
    for (int trial = 0; trial < 3; ++trial) {
      CouplingMap c{Rational(num(rng)) / den(rng), Rational(num(rng)) / den(rng)};
      SemidirectOperator sum(ctx);
      for (std::size_t i = 1; i <= n; ++i) {
        auto D = dunkl_operator(ctx, unit_vector(n, i), c);
        sum = sum + D * D;
      }
      DiffOp lowered = lower_m(sum, ctx);
      for (const auto& p : invariant_samples(n, 8)) {
        auto rhs = restriction_rhs(p, rs, c);
        if (lowered.apply(p).to_rational_function() != rhs)
          return {false, "m(sum D^2) differs on " + p.to_string() + " at " + c.c_short.get_str() + ", " + c.c_long.get_str()};
        if (RationalFunction(olshanetsky_apply(1, p, rs, c)) != rhs)
          return {false, "sum D^2 differs on " + p.to_string()};
      }
    }
    for (int cs = 0; cs <= 1; ++cs)
      for (int cl = 0; cl <= 1; ++cl) {
        auto rep = gauge_check(rs, {Rational(cs), Rational(cl)}, invariant_samples(n, 8));
        if (!rep.passed) return {false, "gauge n=" + std::to_string(n) + ": " + rep.witness};
        constants += (constants.empty() ? "" : " ") + (rep.constant ? rep.constant->get_str() : std::string("0"));
      }
  }
  return {true, "gauge constants K = " + constants};
}

Outcome chart_correctness() {
  std::vector<Outcome> parts;
  for (std::size_t n = 1; n <= 3; ++n) {
    if (*build_chart(n).delta != discriminant_closed_form(n)) return {false, "Delta differs at n=" + std::to_string(n)};
    parts.push_back(from_suite(run_suite(config("chart-derivations", 2, n, n == 3 ? 3 : 4)), false));
  }
  return all_of(parts);
}

Outcome idempotent_suite() {
  return all_of({from_suite(run_suite(config("idempotents", 2, 1, 0)), false),
                 from_suite(run_suite(config("idempotents", 2, 2, 0)), false)});
}

Outcome graded_decomposition() {
  auto d = build_decomposition(2, 2);
  auto rep = graded_direct_sum_check(d, 6);
  for (const auto& gd : rep.degrees)
    if (gd.sum != static_cast<std::size_t>(gd.degree + 1) || gd.joint_rank != gd.sum)
      return {false, "degree " + std::to_string(gd.degree) + ": sum " + std::to_string(gd.sum) + ", joint " +
                         std::to_string(gd.joint_rank)};
  return {true, "ranks sum to d+1 with independent images for d <= 6"};
}

Outcome generator_membership() {
  // n = 1: no inconclusive outcome allowed; n = 2: inconclusive tolerated, false never.
  auto one = from_suite(run_suite(config("orbit-membership", 2, 1, 4)), false);
  auto two = from_suite(run_suite(config("orbit-membership", 2, 2, 4)), true);
  return all_of({one, two});
}

}  // namespace

int main() {
  std::vector<Criterion> criteria{
      {1, "regular representation dimension", 5, regular_representation},
      {2, "higher Specht free-module basis", 120, free_module_basis},
      {3, "coinvariant Hilbert series", 5, coinvariant_degrees},
      {4, "Dunkl commutativity", 120, dunkl_commutativity},
      {5, "Olshanetsky-Perelomov operators", 300, olshanetsky_operators},
      {6, "restriction identity and gauge", 120, restriction_and_gauge},
      {7, "chart correctness", 60, chart_correctness},
      {8, "idempotent suite", 120, idempotent_suite},
      {9, "graded decomposition", 300, graded_decomposition},
      {10, "generator membership", 600, generator_membership},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.body();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool in_time = secs < c.limit_seconds;
    bool ok = out.ok && in_time;
    failures += !ok;
    std::cout << (ok ? "PASS" : "FAIL") << " " << c.id << " " << c.title << " (" << secs << " s, limit "
              << c.limit_seconds << " s): " << (in_time ? out.detail : "time limit exceeded; " + out.detail)
              << std::endl;
  }
  return failures;
}
