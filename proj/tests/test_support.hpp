#pragma once

// Shared helpers for the unit and acceptance suites.

#include <ostream>
#include <random>
#include <string>

#include "hspecht/polynomial.hpp"
#include "hspecht/text.hpp"

namespace hspecht {

// Readable gtest failure output for every library type with to_string().
template <typename T>
  requires requires(const T& t) { { t.to_string() } -> std::convertible_to<std::string>; }
void PrintTo(const T& value, std::ostream* os) {
  *os << value.to_string();
}

}  // namespace hspecht

namespace hspecht::testing {

inline MultiPoly poly(std::size_t n, const std::string& text, int r = 1) { return parse_poly(text, n, r); }

/// Random polynomial with up to `terms` terms of degree <= max_degree and small
/// rational coefficients.
inline MultiPoly random_poly(std::mt19937_64& rng, std::size_t n, int r, int max_degree, int terms) {
  std::uniform_int_distribution<int> deg(0, max_degree), coef(-5, 5), den(1, 3);
  MultiPoly p(n, r);
  for (int t = 0; t < terms; ++t) {
    std::vector<int> e(n, 0);
    int d = deg(rng);
    std::uniform_int_distribution<std::size_t> var(0, n - 1);
    for (int k = 0; k < d; ++k) ++e[var(rng)];
    Rational c(coef(rng), den(rng));
    c.canonicalize();
    p.add_term(Monomial(e), Scalar(r, c));
  }
  return p;
}

/// Random homogeneous polynomial of the given degree.
inline MultiPoly random_homogeneous(std::mt19937_64& rng, std::size_t n, int r, int degree, int terms) {
  std::uniform_int_distribution<int> coef(-5, 5);
  std::uniform_int_distribution<std::size_t> var(0, n - 1);
  MultiPoly p(n, r);
  for (int t = 0; t < terms; ++t) {
    std::vector<int> e(n, 0);
    for (int k = 0; k < degree; ++k) ++e[var(rng)];
    p.add_term(Monomial(e), Scalar(r, Rational(coef(rng))));
  }
  return p;
}

/// Random rational p/q with small numerator and denominator.
inline Rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-7, 7), den(1, 6);
  Rational q(num(rng), den(rng));
  q.canonicalize();
  return q;
}

}  // namespace hspecht::testing
