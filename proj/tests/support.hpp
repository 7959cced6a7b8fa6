#pragma once

#include "polystab/polystab.hpp"

#include <fstream>
#include <random>
#include <string>

namespace polystab::test {

inline std::string data_path(const std::string& name) { return std::string(POLYSTAB_DATA_DIR) + "/" + name; }

inline MatrixPolytope three_vertex_polytope() {
  std::ifstream in(data_path("three_vertex_polytope.json"));
  return polytope_from_json(json::parse(in));
}

// Reference forms for the three-vertex example: a0, Delta_2, and an
// all-negative member of the depth-3 WDS set of a0 (up to a positive factor).
inline const char* kThreeVertexA0 =
    "9/10*x1^3 + 9/10*x2^3 - 23/5*x1*x2*x3 - 13/10*x1^2*x3 + 7/10*x1^2*x2"
    " - 3/10*x2*x3^2 - 3/10*x3^2*x1 + 7/10*x1*x2^2 - 13/10*x2^2*x3 + 19/10*x3^3";
inline const char* kThreeVertexDelta2 =
    "63/25*x1^3 + 99/25*x1^2*x3 + 243/50*x3^2*x1 + 144/25*x1*x2^2 + 153/25*x1*x2*x3"
    " + 144/25*x1^2*x2 + 243/50*x2*x3^2 + 63/25*x2^3 + 99/25*x2^2*x3 + 171/50*x3^3";
inline const char* kThreeVertexDepth3 =
    "-6516*x1*x2*x3 - 1296*x1^3 - 891*x2^3 - 3888*x1^2*x3 - 3888*x1^2*x2 - 1568*x2*x3^2"
    " - 2828*x3^2*x1 - 3483*x1*x2^2 - 2223*x2^2*x3 - 236*x3^3";

inline Rational random_rational(std::mt19937_64& rng, long num_range = 20, long den_max = 9) {
  std::uniform_int_distribution<long> num(-num_range, num_range), den(1, den_max);
  return make_rational(num(rng), den(rng));
}

inline RationalMatrix random_matrix(std::mt19937_64& rng, std::size_t n, long num_range = 20, long den_max = 9) {
  RationalMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = random_rational(rng, num_range, den_max);
  return a;
}

inline MatrixPolytope random_polytope(std::mt19937_64& rng, std::size_t n, std::size_t m) {
  std::vector<RationalMatrix> v;
  for (std::size_t k = 0; k < m; ++k) v.push_back(random_matrix(rng, n, 9, 5));
  return MatrixPolytope(std::move(v));
}

inline void monomials_of_degree(std::size_t m, unsigned d, std::vector<unsigned>& e, std::size_t i,
                                std::vector<Monomial>& out) {
  if (i + 1 == m) {
    e[i] = d;
    out.emplace_back(e);
    return;
  }
  for (unsigned a = 0; a <= d; ++a) {
    e[i] = a;
    monomials_of_degree(m, d - a, e, i + 1, out);
  }
}

inline std::vector<Monomial> monomials_of_degree(std::size_t m, unsigned d) {
  std::vector<Monomial> out;
  std::vector<unsigned> e(m, 0);
  monomials_of_degree(m, d, e, 0, out);
  return out;
}

/// Random form with about `terms` nonzero coefficients drawn from all monomials of degree d.
inline Form random_form(std::mt19937_64& rng, std::size_t m, unsigned d, std::size_t terms, long range = 9) {
  const auto all = monomials_of_degree(m, d);
  Form f(m, static_cast<int>(d));
  std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
  for (std::size_t t = 0; t < terms; ++t) {
    Rational c = random_rational(rng, range, 6);
    if (c != 0) f = f + Form::from_terms(m, static_cast<int>(d), {{all[pick(rng)], c}});
  }
  return f;
}

}  // namespace polystab::test
