#pragma once

// Hurwitz matrices, their leading principal minors, and the exact
// Routh-Hurwitz test for a single rational matrix.

#include "polystab/charpoly.hpp"
#include "polystab/form.hpp"
#include "polystab/matrix.hpp"
#include "polystab/rational.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace polystab {

/// Entry (i,j) (1-based) is a_{n-(2j-i)} when 0 <= 2j-i <= n and zero
/// otherwise; a nonzero entry is a form of degree 2j-i.
struct HurwitzMatrix {
  std::size_t n = 0;
  FormMatrix entries;
};

namespace detail {

/// Index of the coefficient at 1-based position (i,j), or -1 for a structural zero.
inline long hurwitz_index(std::size_t n, std::size_t i, std::size_t j) {
  long k = 2 * static_cast<long>(j) - static_cast<long>(i);
  if (k < 0 || k > static_cast<long>(n)) return -1;
  return static_cast<long>(n) - k;
}

}  // namespace detail

inline HurwitzMatrix hurwitz_matrix(const CharPolyCoeffs& c) {
  if (c.n == 0) throw std::invalid_argument("hurwitz_matrix: polynomial degree must be >= 1");
  const std::size_t m = c.coeffs.front().num_vars();
  HurwitzMatrix h{c.n, FormMatrix(c.n, c.n, Form(m, 0))};
  for (std::size_t i = 1; i <= c.n; ++i)
    for (std::size_t j = 1; j <= c.n; ++j) {
      long idx = detail::hurwitz_index(c.n, i, j);
      const int deg = 2 * static_cast<int>(j) - static_cast<int>(i);
      if (idx < 0) {
        h.entries(i - 1, j - 1) = Form(m, std::max(deg, 0));
      } else {
        h.entries(i - 1, j - 1) = c.coefficient(static_cast<std::size_t>(idx));
      }
    }
  return h;
}

/// Numeric Hurwitz matrix of c_0 + c_1 s + ... + c_n s^n.
inline RationalMatrix hurwitz_matrix(const std::vector<Rational>& c) {
  if (c.size() < 2) throw std::invalid_argument("hurwitz_matrix: polynomial degree must be >= 1");
  const std::size_t n = c.size() - 1;
  RationalMatrix h(n, n, Rational(0));
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 1; j <= n; ++j) {
      long idx = detail::hurwitz_index(n, i, j);
      if (idx >= 0) h(i - 1, j - 1) = c[static_cast<std::size_t>(idx)];
    }
  return h;
}

namespace detail {

/// det of rows 0..|S|-1 and the columns in S, for every column subset S of
/// {0..n-1}, by Laplace expansion along the last row of each block.
inline std::vector<Form> subset_determinants(const FormMatrix& a, std::size_t num_vars) {
  const std::size_t n = a.rows();
  if (n > 24) throw std::invalid_argument("poly_det: matrix order too large for subset expansion");
  std::vector<Form> table(std::size_t{1} << n, Form(num_vars, 0));
  table[0] = Form::constant(num_vars, Rational(1));
  for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << n); ++mask) {
    const std::size_t row = static_cast<std::size_t>(__builtin_popcount(mask)) - 1;
    Form acc(num_vars, 0);
    std::size_t position = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (!(mask & (std::uint32_t{1} << j))) continue;
      const Form& entry = a(row, j);
      const Form& sub = table[mask & ~(std::uint32_t{1} << j)];
      if (!entry.is_zero() && !sub.is_zero()) {
        Form term = form_mul(entry, sub);
        acc = ((row + position) % 2 == 0) ? form_add(acc, term) : form_sub(acc, term);
      }
      ++position;
    }
    table[mask] = std::move(acc);
  }
  return table;
}

}  // namespace detail

/// Determinant over the polynomial ring; no division is performed.
inline Form poly_det(const FormMatrix& a) {
  if (!a.is_square()) throw DimensionError("poly_det: matrix is not square");
  if (a.rows() == 0) throw DimensionError("poly_det: empty matrix");
  const std::size_t m = a(0, 0).num_vars();
  auto table = detail::subset_determinants(a, m);
  return table.back();
}

/// Delta_1 ... Delta_n of a Hurwitz matrix; nonzero Delta_k has degree k(k+1)/2.
struct MinorSequence {
  std::vector<Form> minors;

  /// Delta_k for 0 <= k <= n, with Delta_0 = 1.
  Form minor(std::size_t k) const {
    if (k == 0) return Form::constant(minors.front().num_vars(), Rational(1));
    return minors.at(k - 1);
  }
};

inline MinorSequence successive_minors(const HurwitzMatrix& h) {
  const std::size_t m = h.entries(0, 0).num_vars();
  auto table = detail::subset_determinants(h.entries, m);
  MinorSequence out;
  for (std::size_t k = 1; k <= h.n; ++k) {
    Form d = table[(std::size_t{1} << k) - 1];
    const int expected = static_cast<int>(k * (k + 1) / 2);
    if (d.is_zero()) {
      d.set_zero_degree(expected);
    } else if (d.degree() != expected) {
      throw std::logic_error("Hurwitz minor " + std::to_string(k) + " has degree " +
                             std::to_string(d.degree()) + ", expected " + std::to_string(expected));
    }
    out.minors.push_back(std::move(d));
  }
  return out;
}

/// Exact determinant by Gaussian elimination with pivot search.
inline Rational determinant(RationalMatrix a) {
  if (!a.is_square()) throw DimensionError("determinant: matrix is not square");
  const std::size_t n = a.rows();
  Rational det = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a(p, k) == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));
      det = -det;
    }
    det *= a(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a(i, k) == 0) continue;
      Rational f = a(i, k) / a(k, k);
      for (std::size_t j = k; j < n; ++j) a(i, j) -= f * a(k, j);
    }
  }
  return det;
}

/// Exact Routh-Hurwitz data for one matrix. Minors are produced in order and
/// stop at the first one that is not strictly positive.
struct RouthHurwitzReport {
  std::vector<Rational> char_poly;   // c_0 ... c_n, c_n = 1
  std::vector<Rational> minors;      // Delta_1 ... Delta_k, k <= n
  std::optional<std::size_t> failing_minor;  // 1-based
  bool stable() const { return !failing_minor.has_value(); }
};

inline RouthHurwitzReport routh_hurwitz(const RationalMatrix& a) {
  RouthHurwitzReport report;
  report.char_poly = char_poly(a);
  RationalMatrix h = hurwitz_matrix(report.char_poly);
  const std::size_t n = h.rows();
  // Elimination without row exchanges: pivot k equals Delta_k / Delta_{k-1}.
  Rational running = 1;
  for (std::size_t k = 0; k < n; ++k) {
    const Rational pivot = h(k, k);
    running *= pivot;
    report.minors.push_back(running);
    if (running <= 0) {
      report.failing_minor = k + 1;
      return report;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      if (h(i, k) == 0) continue;
      Rational f = h(i, k) / pivot;
      for (std::size_t j = k; j < n; ++j) h(i, j) -= f * h(k, j);
    }
  }
  return report;
}

/// True iff every Hurwitz minor of det(sI - A) is strictly positive.
inline bool routh_hurwitz_stable(const RationalMatrix& a) { return routh_hurwitz(a).stable(); }

/// Checks Delta_{n-1} = (-1)^{n(n-1)/2} prod_{i<j} (s_i + s_j) for a
/// triangular matrix, whose eigenvalues s_i are its diagonal.
inline bool orlando_check(const RationalMatrix& a) {
  if (!a.is_square()) throw DimensionError("orlando_check: matrix is not square");
  const std::size_t n = a.rows();
  bool upper = true, lower = true;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i > j && a(i, j) != 0) upper = false;
      if (i < j && a(i, j) != 0) lower = false;
    }
  if (!upper && !lower) throw std::invalid_argument("orlando_check: matrix is not triangular");

  Rational rhs = 1;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) rhs *= a(i, i) + a(j, j);
  if ((n * (n - 1) / 2) % 2 == 1) rhs = -rhs;

  Rational lhs = 1;
  if (n >= 2) {
    RationalMatrix h = hurwitz_matrix(char_poly(a));
    RationalMatrix lead(n - 1, n - 1);
    for (std::size_t i = 0; i + 1 < n; ++i)
      for (std::size_t j = 0; j + 1 < n; ++j) lead(i, j) = h(i, j);
    lhs = determinant(std::move(lead));
  }
  return lhs == rhs;
}

}  // namespace polystab
