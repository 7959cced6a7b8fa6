#pragma once

// Symbolic characteristic polynomial of A(q) = sum_k q_k A_k.

#include "polystab/form.hpp"
#include "polystab/matrix.hpp"
#include "polystab/rational.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace polystab {

using RationalMatrix = Matrix<Rational>;
using FormMatrix = Matrix<Form>;

/// Convex hull of m square vertex matrices of order n.
class MatrixPolytope {
 public:
  explicit MatrixPolytope(std::vector<RationalMatrix> vertices) : vertices_(std::move(vertices)) {
    if (vertices_.empty()) throw std::invalid_argument("polytope needs at least one vertex");
    n_ = vertices_.front().rows();
    if (n_ == 0) throw std::invalid_argument("vertex matrices must have order >= 1");
    for (std::size_t k = 0; k < vertices_.size(); ++k)
      if (vertices_[k].rows() != n_ || vertices_[k].cols() != n_)
        throw std::invalid_argument("vertex " + std::to_string(k + 1) + " is " +
                                    std::to_string(vertices_[k].rows()) + "x" +
                                    std::to_string(vertices_[k].cols()) + ", expected " +
                                    std::to_string(n_) + "x" + std::to_string(n_));
  }

  std::size_t order() const { return n_; }
  std::size_t vertex_count() const { return vertices_.size(); }
  const RationalMatrix& vertex(std::size_t k) const { return vertices_.at(k); }
  const std::vector<RationalMatrix>& vertices() const { return vertices_; }

  /// A(q) for an explicit parameter point.
  RationalMatrix at(const std::vector<Rational>& q) const {
    if (q.size() != vertices_.size())
      throw DimensionError("polytope point has " + std::to_string(q.size()) + " coordinates, expected " +
                           std::to_string(vertices_.size()));
    RationalMatrix out(n_, n_, Rational(0));
    for (std::size_t k = 0; k < vertices_.size(); ++k) {
      if (q[k] == 0) continue;
      for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) out(i, j) += q[k] * vertices_[k](i, j);
    }
    return out;
  }

 private:
  std::size_t n_ = 0;
  std::vector<RationalMatrix> vertices_;
};

/// Coefficients a_0 ... a_{n-1} of det(sI - A(q)); a_n = 1 is implicit.
/// coeffs[i] is a_i, a form of degree n - i in the m vertex weights.
struct CharPolyCoeffs {
  std::size_t n = 0;
  std::vector<Form> coeffs;

  /// a_i for 0 <= i <= n, with a_n the constant form 1.
  Form coefficient(std::size_t i) const {
    if (i == n) return Form::constant(coeffs.front().num_vars(), Rational(1));
    return coeffs.at(i);
  }
};

/// Entry (i,j) is the linear form sum_k (A_k)_{ij} q_k.
inline FormMatrix symbolic_linear_combination(const MatrixPolytope& p) {
  const std::size_t n = p.order();
  const std::size_t m = p.vertex_count();
  FormMatrix out(n, n, Form(m, 1));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Form& entry = out(i, j);
      for (std::size_t k = 0; k < m; ++k)
        entry.add_term(Monomial::power(m, k, 1), p.vertex(k)(i, j));
    }
  return out;
}

namespace detail {

inline void require_degree(const Form& f, int expected, const char* what) {
  if (!f.is_zero() && f.degree() != expected)
    throw std::logic_error(std::string(what) + ": expected degree " + std::to_string(expected) +
                           ", got " + std::to_string(f.degree()));
}

}  // namespace detail

/// Faddeev-LeVerrier over the ring of forms:
///   M_1 = I, c_{n-1} = -tr(A);  M_k = A M_{k-1} + c_{n-k+1} I,  c_{n-k} = -tr(A M_k) / k.
inline CharPolyCoeffs char_poly_symbolic(const MatrixPolytope& p) {
  const std::size_t n = p.order();
  const std::size_t m = p.vertex_count();
  const FormMatrix a = symbolic_linear_combination(p);

  CharPolyCoeffs out;
  out.n = n;
  out.coeffs.assign(n, Form(m, 0));

  FormMatrix mk(n, n, Form(m, 0));
  for (std::size_t i = 0; i < n; ++i) mk(i, i) = Form::constant(m, Rational(1));
  Form prev_coeff = Form::constant(m, Rational(1));  // c_n

  for (std::size_t k = 1; k <= n; ++k) {
    const int deg = static_cast<int>(k);
    if (k > 1) {
      FormMatrix next(n, n, Form(m, deg - 1));
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
          Form acc(m, deg - 1);
          for (std::size_t l = 0; l < n; ++l) acc = form_add(acc, form_mul(a(i, l), mk(l, j)));
          if (i == j) acc = form_add(acc, prev_coeff);
          detail::require_degree(acc, deg - 1, "Faddeev-LeVerrier iterate");
          next(i, j) = std::move(acc);
        }
      mk = std::move(next);
    }
    Form trace(m, deg);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t l = 0; l < n; ++l) trace = form_add(trace, form_mul(a(i, l), mk(l, i)));
    Form c = scale(trace, Rational(-1) / Rational(static_cast<long>(k)));
    if (c.is_zero()) c.set_zero_degree(deg);
    detail::require_degree(c, deg, "characteristic polynomial coefficient");
    out.coeffs[n - k] = c;
    prev_coeff = std::move(c);
  }
  return out;
}

/// Characteristic polynomial of a single rational matrix: returns
/// c_0 ... c_n with c_n = 1.
inline std::vector<Rational> char_poly(const RationalMatrix& a) {
  if (!a.is_square()) throw DimensionError("char_poly: matrix is not square");
  const std::size_t n = a.rows();
  std::vector<Rational> c(n + 1, Rational(0));
  c[n] = 1;
  RationalMatrix mk = RationalMatrix::identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    if (k > 1) {
      mk = a * mk;
      for (std::size_t i = 0; i < n; ++i) mk(i, i) += c[n - k + 1];
    }
    Rational trace = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t l = 0; l < n; ++l) trace += a(i, l) * mk(l, i);
    c[n - k] = -trace / Rational(static_cast<long>(k));
  }
  return c;
}

}  // namespace polystab
