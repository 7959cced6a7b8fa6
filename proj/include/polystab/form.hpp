#pragma once

// Sparse homogeneous polynomials (forms) over Rational or Integer.
//
// Terms are kept in a std::map ordered graded-lexicographically with the
// largest monomial first (x1^d, x1^(d-1) x2, ...), so iteration and printing
// are deterministic. Zero coefficients are never stored. A zero form keeps the
// degree it was declared with; when it is combined with a nonzero form the
// nonzero operand's degree wins.

#include "polystab/matrix.hpp"
#include "polystab/rational.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <type_traits>
#include <utility>
#include <vector>

namespace polystab {

class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<unsigned> exponents)
      : exps_(std::move(exponents)),
        degree_(std::accumulate(exps_.begin(), exps_.end(), 0u)) {}

  static Monomial one(std::size_t num_vars) { return Monomial(std::vector<unsigned>(num_vars, 0)); }

  /// x_i^d with a zero-based variable index.
  static Monomial power(std::size_t num_vars, std::size_t i, unsigned d) {
    std::vector<unsigned> e(num_vars, 0);
    e.at(i) = d;
    return Monomial(std::move(e));
  }

  std::size_t num_vars() const { return exps_.size(); }
  unsigned degree() const { return degree_; }
  unsigned operator[](std::size_t i) const { return exps_[i]; }
  const std::vector<unsigned>& exponents() const { return exps_; }

  Monomial operator*(const Monomial& other) const {
    std::vector<unsigned> e(exps_);
    for (std::size_t i = 0; i < e.size(); ++i) e[i] += other.exps_[i];
    return Monomial(std::move(e));
  }

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }

 private:
  std::vector<unsigned> exps_;
  unsigned degree_ = 0;
};

/// Graded order, larger total degree first, then lexicographically larger first.
struct GradedLexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const {
    if (a.degree() != b.degree()) return a.degree() > b.degree();
    return b.exponents() < a.exponents();
  }
};

template <class C>
class BasicForm {
 public:
  using Coefficient = C;
  using TermMap = std::map<Monomial, C, GradedLexGreater>;

  BasicForm() = default;

  /// The zero form in `num_vars` variables with the given declared degree.
  BasicForm(std::size_t num_vars, int degree) : num_vars_(num_vars), degree_(degree) {
    if (num_vars == 0) throw DimensionError("a form needs at least one variable");
  }

  static BasicForm constant(std::size_t num_vars, const C& c) {
    BasicForm f(num_vars, 0);
    f.add_term(Monomial::one(num_vars), c);
    return f;
  }

  /// The linear form x_i (zero-based index).
  static BasicForm variable(std::size_t num_vars, std::size_t i) {
    BasicForm f(num_vars, 1);
    f.add_term(Monomial::power(num_vars, i, 1), C(1));
    return f;
  }

  static BasicForm from_terms(std::size_t num_vars, int degree,
                              const std::vector<std::pair<Monomial, C>>& terms) {
    BasicForm f(num_vars, degree);
    for (const auto& [mono, c] : terms) f.add_term(mono, c);
    return f;
  }

  std::size_t num_vars() const { return num_vars_; }
  int degree() const { return degree_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  C coefficient(const Monomial& mono) const {
    auto it = terms_.find(mono);
    return it == terms_.end() ? C(0) : it->second;
  }

  /// Accumulates c * mono. Rejects monomials of the wrong shape or degree.
  void add_term(const Monomial& mono, const C& c) {
    if (mono.num_vars() != num_vars_)
      throw DimensionError("monomial has " + std::to_string(mono.num_vars()) +
                           " variables, form has " + std::to_string(num_vars_));
    if (c == 0) return;
    if (static_cast<int>(mono.degree()) != degree_) {
      if (!terms_.empty())
        throw DimensionError("monomial of degree " + std::to_string(mono.degree()) +
                             " added to a form of degree " + std::to_string(degree_));
      degree_ = static_cast<int>(mono.degree());
    }
    auto [it, inserted] = terms_.try_emplace(mono, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  /// Overwrites the declared degree of a zero form.
  void set_zero_degree(int degree) {
    if (!terms_.empty()) throw std::logic_error("set_zero_degree on a nonzero form");
    degree_ = degree;
  }

  BasicForm operator-() const {
    BasicForm out(*this);
    for (auto& [mono, c] : out.terms_) c = -c;
    return out;
  }

  friend bool operator==(const BasicForm& a, const BasicForm& b) {
    return a.num_vars_ == b.num_vars_ && a.terms_ == b.terms_ &&
           (a.degree_ == b.degree_ || a.terms_.empty());
  }

 private:
  std::size_t num_vars_ = 1;
  int degree_ = 0;
  TermMap terms_;
};

using Form = BasicForm<Rational>;
using IntegerForm = BasicForm<Integer>;

namespace detail {

template <class C>
void require_same_vars(const BasicForm<C>& f, const BasicForm<C>& g, const char* op) {
  if (f.num_vars() != g.num_vars())
    throw DimensionError(std::string(op) + ": forms in " + std::to_string(f.num_vars()) + " and " +
                         std::to_string(g.num_vars()) + " variables");
}

}  // namespace detail

template <class C>
BasicForm<C> form_add(const BasicForm<C>& f, const BasicForm<C>& g) {
  detail::require_same_vars(f, g, "form_add");
  if (!f.is_zero() && !g.is_zero() && f.degree() != g.degree())
    throw DimensionError("form_add: degrees " + std::to_string(f.degree()) + " and " +
                         std::to_string(g.degree()));
  if (f.is_zero()) {
    BasicForm<C> out(g);
    if (g.is_zero()) out.set_zero_degree(f.degree());
    return out;
  }
  BasicForm<C> out(f);
  for (const auto& [mono, c] : g.terms()) out.add_term(mono, c);
  if (out.is_zero()) out.set_zero_degree(f.degree());
  return out;
}

template <class C>
BasicForm<C> form_sub(const BasicForm<C>& f, const BasicForm<C>& g) {
  return form_add(f, -g);
}

template <class C>
BasicForm<C> form_mul(const BasicForm<C>& f, const BasicForm<C>& g) {
  detail::require_same_vars(f, g, "form_mul");
  BasicForm<C> out(f.num_vars(), f.degree() + g.degree());
  for (const auto& [ma, ca] : f.terms())
    for (const auto& [mb, cb] : g.terms()) out.add_term(ma * mb, ca * cb);
  return out;
}

template <class C>
BasicForm<C> scale(const BasicForm<C>& f, const std::type_identity_t<C>& c) {
  BasicForm<C> out(f.num_vars(), f.degree());
  if (c == 0) return out;
  for (const auto& [mono, coef] : f.terms()) out.add_term(mono, coef * c);
  return out;
}

template <class C>
BasicForm<C> operator+(const BasicForm<C>& f, const BasicForm<C>& g) { return form_add(f, g); }
template <class C>
BasicForm<C> operator-(const BasicForm<C>& f, const BasicForm<C>& g) { return form_sub(f, g); }
template <class C>
BasicForm<C> operator*(const BasicForm<C>& f, const BasicForm<C>& g) { return form_mul(f, g); }

/// Exact value of f at the point q.
template <class C>
Rational evaluate(const BasicForm<C>& f, const std::vector<Rational>& q) {
  if (q.size() != f.num_vars())
    throw DimensionError("evaluate: point has " + std::to_string(q.size()) +
                         " coordinates, form has " + std::to_string(f.num_vars()) + " variables");
  const unsigned d = f.degree() > 0 ? static_cast<unsigned>(f.degree()) : 0u;
  std::vector<std::vector<Rational>> powers(q.size());
  for (std::size_t i = 0; i < q.size(); ++i) {
    powers[i].resize(d + 1);
    powers[i][0] = 1;
    for (unsigned e = 1; e <= d; ++e) powers[i][e] = powers[i][e - 1] * q[i];
  }
  Rational value = 0;
  for (const auto& [mono, c] : f.terms()) {
    Rational t(c);
    for (std::size_t i = 0; i < q.size(); ++i)
      if (mono[i] != 0) t *= powers[i][mono[i]];
    value += t;
  }
  return value;
}

/// f(B y): x_i is replaced by sum_j B(i,j) y_j, expanded and collected.
/// Powers of each substituted linear form are computed once and reused.
template <class C>
BasicForm<C> linear_substitute(const BasicForm<C>& f, const Matrix<C>& B) {
  const std::size_t m = f.num_vars();
  if (B.rows() != m || B.cols() != m)
    throw DimensionError("linear_substitute: matrix is " + std::to_string(B.rows()) + "x" +
                         std::to_string(B.cols()) + ", form has " + std::to_string(m) + " variables");
  BasicForm<C> out(m, f.degree());
  if (f.is_zero()) return out;

  std::vector<unsigned> max_exp(m, 0);
  for (const auto& [mono, c] : f.terms())
    for (std::size_t i = 0; i < m; ++i) max_exp[i] = std::max(max_exp[i], mono[i]);

  std::vector<std::vector<BasicForm<C>>> powers(m);
  for (std::size_t i = 0; i < m; ++i) {
    BasicForm<C> row(m, 1);
    for (std::size_t j = 0; j < m; ++j)
      if (B(i, j) != 0) row.add_term(Monomial::power(m, j, 1), B(i, j));
    powers[i].push_back(BasicForm<C>::constant(m, C(1)));
    for (unsigned e = 1; e <= max_exp[i]; ++e) powers[i].push_back(form_mul(powers[i].back(), row));
  }

  for (const auto& [mono, c] : f.terms()) {
    BasicForm<C> term = BasicForm<C>::constant(m, c);
    for (std::size_t i = 0; i < m; ++i)
      if (mono[i] != 0) term = form_mul(term, powers[i][mono[i]]);
    for (const auto& [tm, tc] : term.terms()) out.add_term(tm, tc);
  }
  if (out.is_zero()) out.set_zero_degree(f.degree());
  return out;
}

/// A form with integer coefficients together with its coefficient bound M and
/// the positive factor it was scaled by (base = scale * original).
struct IntegralForm {
  IntegerForm base;
  Integer coeff_bound;
  Integer scale;
};

inline IntegralForm integerize(const Form& f) {
  if (f.is_zero()) throw std::domain_error("integerize: zero form");
  Integer den = 1;
  for (const auto& [mono, c] : f.terms()) den = lcm(den, c.get_den());
  IntegralForm out{IntegerForm(f.num_vars(), f.degree()), 0, den};
  for (const auto& [mono, c] : f.terms()) {
    Integer v = c.get_num() * (den / c.get_den());
    if (abs(v) > out.coeff_bound) out.coeff_bound = abs(v);
    out.base.add_term(mono, v);
  }
  return out;
}

inline Form to_rational_form(const IntegerForm& f) {
  Form out(f.num_vars(), f.degree());
  for (const auto& [mono, c] : f.terms()) out.add_term(mono, Rational(c));
  return out;
}

/// Positive gcd of all coefficients (0 for the zero form).
inline Integer content(const IntegerForm& f) {
  Integer g = 0;
  for (const auto& [mono, c] : f.terms()) g = gcd(g, c);
  return g;
}

// ---------------------------------------------------------------------------
// Text form: "c*x1^a1*x2^a2 + c*... - c*...", coefficients as "p" or "p/q".

inline std::string monomial_to_string(const Monomial& mono) {
  std::string out;
  for (std::size_t i = 0; i < mono.num_vars(); ++i) {
    if (mono[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += 'x' + std::to_string(i + 1);
    if (mono[i] > 1) out += '^' + std::to_string(mono[i]);
  }
  return out;
}

template <class C>
std::string to_string(const BasicForm<C>& f) {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [mono, c] : f.terms()) {
    const bool negative = c < 0;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    C mag = negative ? C(-c) : c;
    out += mag.get_str();
    std::string m = monomial_to_string(mono);
    if (!m.empty()) out += '*' + m;
    first = false;
  }
  return out;
}

namespace detail {

class FormParser {
 public:
  explicit FormParser(std::string_view text) : text_(text) {}

  struct Term {
    Rational coeff;
    std::map<std::size_t, unsigned> powers;  // zero-based variable -> exponent
  };

  std::vector<Term> parse() {
    std::vector<Term> terms;
    skip_ws();
    if (at_end()) fail("empty polynomial");
    bool negative = false;
    if (peek() == '+' || peek() == '-') {
      negative = get() == '-';
      skip_ws();
    }
    terms.push_back(term(negative));
    skip_ws();
    while (!at_end()) {
      char op = get();
      if (op != '+' && op != '-') fail(std::string("expected '+' or '-', found '") + op + "'");
      skip_ws();
      terms.push_back(term(op == '-'));
      skip_ws();
    }
    return terms;
  }

 private:
  Term term(bool negative) {
    Term t{Rational(1), {}};
    bool have_factor = false;
    for (;;) {
      skip_ws();
      if (at_end()) break;
      char c = peek();
      if (c == 'x' || c == 'X') {
        variable(t);
      } else if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
        if (have_factor && !last_was_star_) fail("coefficient must precede variables");
        t.coeff *= number();
      } else {
        break;
      }
      have_factor = true;
      last_was_star_ = false;
      skip_ws();
      if (!at_end() && peek() == '*') {
        get();
        last_was_star_ = true;
        continue;
      }
      if (!at_end() && (peek() == 'x' || peek() == 'X')) continue;
      break;
    }
    if (!have_factor) fail("expected a term");
    if (last_was_star_) fail("dangling '*'");
    if (negative) t.coeff = -t.coeff;
    return t;
  }

  void variable(Term& t) {
    get();
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) get();
    if (start == pos_) fail("variable must be written x1, x2, ...");
    unsigned long index = std::stoul(std::string(text_.substr(start, pos_ - start)));
    if (index == 0) fail("variables are numbered from x1");
    unsigned exponent = 1;
    skip_ws();
    if (!at_end() && peek() == '^') {
      get();
      skip_ws();
      std::size_t e0 = pos_;
      while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) get();
      if (e0 == pos_) fail("expected an exponent after '^'");
      exponent = static_cast<unsigned>(std::stoul(std::string(text_.substr(e0, pos_ - e0))));
    }
    t.powers[index - 1] += exponent;
  }

  Rational number() {
    std::size_t start = pos_;
    while (!at_end()) {
      char c = peek();
      if (std::isdigit(static_cast<unsigned char>(c)) || c == '.' || c == '/') {
        get();
      } else if ((c == 'e' || c == 'E') && pos_ + 1 < text_.size() &&
                 (std::isdigit(static_cast<unsigned char>(text_[pos_ + 1])) || text_[pos_ + 1] == '-' ||
                  text_[pos_ + 1] == '+')) {
        get();
        if (peek() == '-' || peek() == '+') get();
      } else {
        break;
      }
    }
    try {
      return parse_rational(text_.substr(start, pos_ - start));
    } catch (const ParseError& e) {
      fail(e.what());
    }
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("polynomial parse error at offset " + std::to_string(pos_) + ": " + what);
  }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  char get() { return text_[pos_++]; }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  bool last_was_star_ = false;
};

}  // namespace detail

/// Parses the text form. The variable count is the larger of the highest
/// index used and `num_vars`. Non-homogeneous input is rejected with the
/// degrees found.
inline Form parse_form(std::string_view text, std::size_t num_vars = 0) {
  auto terms = detail::FormParser(text).parse();
  std::size_t m = std::max<std::size_t>(num_vars, 1);
  std::set<unsigned> degrees;
  for (const auto& t : terms) {
    unsigned deg = 0;
    for (const auto& [var, e] : t.powers) {
      m = std::max(m, var + 1);
      deg += e;
    }
    degrees.insert(deg);
  }
  if (num_vars != 0 && m > num_vars)
    throw ParseError("polynomial uses x" + std::to_string(m) + " but only " + std::to_string(num_vars) +
                     " variables were declared");
  if (degrees.size() > 1) {
    std::string list;
    for (unsigned d : degrees) list += (list.empty() ? "" : ", ") + std::to_string(d);
    throw ParseError("polynomial is not homogeneous: found terms of degrees " + list);
  }
  Form f(m, static_cast<int>(*degrees.begin()));
  for (const auto& t : terms) {
    std::vector<unsigned> e(m, 0);
    for (const auto& [var, p] : t.powers) e[var] = p;
    f.add_term(Monomial(std::move(e)), t.coeff);
  }
  return f;
}

}  // namespace polystab
