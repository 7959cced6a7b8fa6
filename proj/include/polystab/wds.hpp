#pragma once

// Weighted difference substitution (WDS) positivity search on the simplex
// S_m = { x >= 0, sum x = 1 }.
//
// A WDS matrix is A_theta = P_theta T_m where T_m has 1/j in rows 1..j of
// column j and P_theta is the permutation matrix with p_ij = 1 iff j = k_i.
// Every A_theta is column stochastic, so products of them map S_m into S_m
// and their columns are simplex points. A node at depth k holds, up to a
// recorded positive factor, f(A_theta1 ... A_thetak y). A node whose form has
// all monomials with positive coefficients is positive on S_m and is pruned;
// a node whose x_i^d coefficient is <= 0 exposes the point
// (A_theta1 ... A_thetak) e_i where f <= 0.

#include "polystab/form.hpp"
#include "polystab/matrix.hpp"
#include "polystab/rational.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <thread>
#include <unordered_map>
#include <vector>

namespace polystab {

/// theta = (k_1 ... k_m) stored zero-based: images[i] = k_{i+1} - 1.
struct Permutation {
  std::vector<unsigned> images;

  std::size_t size() const { return images.size(); }
  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;
};

using Word = std::vector<Permutation>;

inline bool is_permutation(const Permutation& theta) {
  std::vector<bool> seen(theta.size(), false);
  for (unsigned k : theta.images) {
    if (k >= theta.size() || seen[k]) return false;
    seen[k] = true;
  }
  return !theta.images.empty();
}

inline Permutation identity_permutation(std::size_t m) {
  Permutation p;
  for (unsigned i = 0; i < m; ++i) p.images.push_back(i);
  return p;
}

/// All m! permutations in lexicographic order, identity first.
inline std::vector<Permutation> all_permutations(std::size_t m) {
  std::vector<Permutation> out;
  Permutation p = identity_permutation(m);
  do {
    out.push_back(p);
  } while (std::next_permutation(p.images.begin(), p.images.end()));
  return out;
}

struct WdsMatrix {
  Permutation permutation;
  Matrix<Rational> matrix;
};

inline WdsMatrix wds_matrix(const Permutation& theta, std::size_t m) {
  if (theta.size() != m || !is_permutation(theta))
    throw std::invalid_argument("wds_matrix: not a permutation of {1.." + std::to_string(m) + "}");
  Matrix<Rational> a(m, m, Rational(0));
  // Row i of P_theta T_m is row k_i of T_m.
  for (std::size_t i = 0; i < m; ++i) {
    const std::size_t r = theta.images[i];
    for (std::size_t j = r; j < m; ++j) a(i, j) = Rational(1) / Rational(static_cast<long>(j + 1));
  }
  return {theta, std::move(a)};
}

/// Column `vertex` (zero-based) of A_theta1 ... A_thetak.
inline std::vector<Rational> witness_point(const Word& word, std::size_t vertex, std::size_t m) {
  if (vertex >= m) throw std::invalid_argument("witness_point: vertex index out of range");
  std::vector<Rational> v(m, Rational(0));
  v[vertex] = 1;
  for (auto it = word.rbegin(); it != word.rend(); ++it) v = wds_matrix(*it, m).matrix * v;
  return v;
}

inline bool on_simplex(const std::vector<Rational>& q) {
  Rational sum = 0;
  for (const auto& x : q) {
    if (x < 0) return false;
    sum += x;
  }
  return !q.empty() && sum == 1;
}

// ---------------------------------------------------------------------------
// Goodness

enum class Goodness { Good, NonpositiveVertex, Indeterminate };

struct GoodnessResult {
  Goodness kind;
  std::size_t vertex = 0;  // zero-based; meaningful for NonpositiveVertex
};

inline Integer monomial_count(std::size_t m, unsigned d) {
  return binomial(d + m - 1, m - 1);
}

template <class C>
GoodnessResult goodness_test(const BasicForm<C>& f) {
  const std::size_t m = f.num_vars();
  if (f.is_zero()) return {Goodness::NonpositiveVertex, 0};
  const unsigned d = static_cast<unsigned>(f.degree());
  for (std::size_t i = 0; i < m; ++i)
    if (f.coefficient(Monomial::power(m, i, d)) <= 0) return {Goodness::NonpositiveVertex, i};
  if (Integer(static_cast<unsigned long>(f.size())) != monomial_count(m, d)) return {Goodness::Indeterminate};
  for (const auto& [mono, c] : f.terms())
    if (c <= 0) return {Goodness::Indeterminate};
  return {Goodness::Good};
}

// ---------------------------------------------------------------------------
// Substitution

namespace detail {

inline Integer lcm_upto(std::size_t m) {
  Integer l = 1;
  for (std::size_t j = 2; j <= m; ++j) l = lcm(l, Integer(static_cast<unsigned long>(j)));
  return l;
}

/// g(x_1, ..., x_r + x_{r+1}, ...) for zero-based r.
inline IntegerForm shift_variable(const IntegerForm& g, std::size_t r) {
  IntegerForm out(g.num_vars(), g.degree());
  for (const auto& [mono, c] : g.terms()) {
    const unsigned a = mono[r];
    std::vector<unsigned> e = mono.exponents();
    for (unsigned t = 0; t <= a; ++t) {
      e[r] = a - t;
      e[r + 1] = mono[r + 1] + t;
      out.add_term(Monomial(e), c * binomial(a, t));
    }
  }
  return out;
}

}  // namespace detail

/// L^d g(A_theta y) with L = lcm(1..m), computed with integer arithmetic only.
///
/// A_theta = P_theta U D with U the all-ones upper triangular matrix and
/// D = diag(1/j). The permutation renames variables, U is applied as the
/// successive shifts x_r -> x_r + x_{r+1} for r = 1..m-1, and L D scales y_j
/// by L/j.
inline IntegerForm wds_substitute(const IntegerForm& g, const Permutation& theta) {
  const std::size_t m = g.num_vars();
  if (theta.size() != m || !is_permutation(theta))
    throw std::invalid_argument("wds_substitute: permutation does not match form");
  IntegerForm renamed(m, g.degree());
  for (const auto& [mono, c] : g.terms()) {
    std::vector<unsigned> e(m, 0);
    for (std::size_t i = 0; i < m; ++i) e[theta.images[i]] = mono[i];
    renamed.add_term(Monomial(std::move(e)), c);
  }
  IntegerForm cur = std::move(renamed);
  for (std::size_t r = 0; r + 1 < m; ++r) cur = detail::shift_variable(cur, r);

  const Integer l = detail::lcm_upto(m);
  const unsigned d = g.degree() > 0 ? static_cast<unsigned>(g.degree()) : 0u;
  std::vector<std::vector<Integer>> weight(m, std::vector<Integer>(d + 1));
  for (std::size_t j = 0; j < m; ++j) {
    const Integer w = l / Integer(static_cast<unsigned long>(j + 1));
    weight[j][0] = 1;
    for (unsigned e = 1; e <= d; ++e) weight[j][e] = weight[j][e - 1] * w;
  }
  IntegerForm out(m, g.degree());
  for (const auto& [mono, c] : cur.terms()) {
    Integer v = c;
    for (std::size_t j = 0; j < m; ++j) v *= weight[j][mono[j]];
    out.add_term(mono, v);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Nodes

/// form = scale * f(A_theta1 ... A_thetak y), where f is the root form,
/// with form content-normalized (coefficient gcd 1).
struct WdsNode {
  IntegerForm form;
  Word word;
  std::size_t depth = 0;
  Rational scale = 1;
};

inline WdsNode normalize_node(IntegerForm form, Word word, Rational scale) {
  Integer g = content(form);
  if (g > 1) {
    IntegerForm reduced(form.num_vars(), form.degree());
    for (const auto& [mono, c] : form.terms()) reduced.add_term(mono, c / g);
    form = std::move(reduced);
    scale /= Rational(g);
  }
  const std::size_t depth = word.size();
  return {std::move(form), std::move(word), depth, std::move(scale)};
}

inline WdsNode root_node(const Form& f) {
  if (f.is_zero()) return {IntegerForm(f.num_vars(), f.degree()), {}, 0, Rational(1)};
  IntegralForm in = integerize(f);
  return normalize_node(std::move(in.base), {}, Rational(in.scale));
}

inline WdsNode child_node(const WdsNode& node, const Permutation& theta) {
  const std::size_t m = node.form.num_vars();
  const unsigned d = node.form.degree() > 0 ? static_cast<unsigned>(node.form.degree()) : 0u;
  Word word = node.word;
  word.push_back(theta);
  Rational scale = node.scale * Rational(pow_int(detail::lcm_upto(m), d));
  return normalize_node(wds_substitute(node.form, theta), std::move(word), std::move(scale));
}

/// All m! children in lexicographic permutation order.
inline std::vector<WdsNode> expand_node(const WdsNode& node) {
  std::vector<WdsNode> out;
  for (const auto& theta : all_permutations(node.form.num_vars())) out.push_back(child_node(node, theta));
  return out;
}

// ---------------------------------------------------------------------------
// Depth bound

namespace detail {

inline unsigned long checked_ulong(const Integer& z, const char* what) {
  if (!z.fits_ulong_p()) throw std::overflow_error(std::string("cp_bound: exponent of ") + what + " too large");
  return z.get_ui();
}

}  // namespace detail

/// Largest number of bits of the bound's logarithm argument that cp_bound
/// will materialize.
inline constexpr double kMaxBoundArgumentBits = 1u << 26;

/// floor( ln(2^{d^m} M^{d^m+1} m^{d^{m+1}+d} d^{(m+1)d+m d^m} (d+1)^{(m-1)(m+2)})
///        / (ln m - ln(m-1)) ) + 2, computed exactly: the floor is the largest
/// k with m^k <= N (m-1)^k.
inline Integer cp_bound(const Integer& M, unsigned long m, unsigned long d) {
  if (m < 2) throw std::invalid_argument("cp_bound: m must be >= 2 (S_1 is a single point)");
  if (d < 1) throw std::invalid_argument("cp_bound: d must be >= 1");
  if (M < 1) throw std::invalid_argument("cp_bound: M must be >= 1");

  const Integer dm = pow_int(Integer(d), m);
  const Integer dm1 = dm * Integer(d);
  const double est_bits = dm.get_d() + (dm.get_d() + 1) * std::log2(M.get_d()) +
                          (dm1.get_d() + d) * std::log2(double(m)) +
                          (double((m + 1) * d) + double(m) * dm.get_d()) * std::log2(double(d)) +
                          double((m - 1) * (m + 2)) * std::log2(double(d + 1));
  if (!(est_bits < kMaxBoundArgumentBits))
    throw std::overflow_error("cp_bound: bound argument has about " + std::to_string(est_bits) +
                              " bits, too large to evaluate exactly");

  Integer n = pow_int(2, detail::checked_ulong(dm, "2"));
  n *= pow_int(M, detail::checked_ulong(dm + 1, "M"));
  n *= pow_int(Integer(m), detail::checked_ulong(dm1 + d, "m"));
  n *= pow_int(Integer(d), detail::checked_ulong(Integer((m + 1) * d) + Integer(m) * dm, "d"));
  n *= pow_int(Integer(d + 1), (m - 1) * (m + 2));

  auto fits = [&](unsigned long k) {
    return pow_int(Integer(m), k) <= n * pow_int(Integer(m - 1), k);
  };
  const double ratio = est_bits * std::log(2.0) / (std::log(double(m)) - std::log(double(m - 1)));
  unsigned long k = ratio > 2 ? static_cast<unsigned long>(ratio) - 1 : 0;
  while (k > 0 && !fits(k)) --k;
  while (fits(k + 1)) ++k;
  return Integer(k) + 2;
}

/// cp_bound, or nothing when it is too large to evaluate.
inline std::optional<Integer> try_cp_bound(const Integer& M, unsigned long m, unsigned long d) {
  try {
    return cp_bound(M, m, d);
  } catch (const std::overflow_error&) {
    return std::nullopt;
  }
}

// ---------------------------------------------------------------------------
// Search

enum class PositivityStatus { Positive, NotPositive, NotPositiveByBound, Unresolved };

inline const char* to_string(PositivityStatus s) {
  switch (s) {
    case PositivityStatus::Positive: return "POSITIVE";
    case PositivityStatus::NotPositive: return "NOT_POSITIVE";
    case PositivityStatus::NotPositiveByBound: return "NOT_POSITIVE_BY_BOUND";
    case PositivityStatus::Unresolved: return "UNRESOLVED";
  }
  return "?";
}

struct PositivityWitness {
  Word word;
  std::size_t vertex = 0;  // zero-based
  std::vector<Rational> point;
  Rational value;
};

struct CertificateLeaf {
  Word word;
  std::string digest;  // hex_digest of the normalized leaf form's text
};

/// A node identical to an earlier node of the same depth; its subtree is the
/// target's subtree.
struct CertificateAlias {
  Word word;
  Word target;
};

struct PositivityCertificate {
  std::vector<CertificateLeaf> leaves;
  std::vector<CertificateAlias> aliases;
};

struct PositivityOptions {
  static constexpr std::size_t kDefaultDepthCap = 20;

  std::optional<std::size_t> max_depth;  // defaults to kDefaultDepthCap
  bool full_bound = false;               // search to the theoretical bound
  std::size_t jobs = 1;
  bool deterministic = true;
  std::size_t node_limit = 2'000'000;    // total generated nodes; 0 = unlimited
  const std::atomic<bool>* cancel = nullptr;
};

struct PositivityVerdict {
  PositivityStatus status = PositivityStatus::Unresolved;
  std::optional<PositivityWitness> witness;
  PositivityCertificate certificate;      // filled for Positive
  std::size_t depth_reached = 0;
  std::size_t nodes_expanded = 0;
  std::size_t nodes_generated = 0;
  std::size_t depth_limit = 0;
  std::optional<Integer> theoretical_bound;  // C_p, when defined and computable
  Integer coeff_bound = 0;
  std::string note;
  double seconds = 0;
};

namespace detail {

struct ExpandedChild {
  WdsNode node;
  GoodnessResult goodness;
  std::string text;
};

inline PositivityWitness make_witness(const Form& f, const WdsNode& node, std::size_t vertex) {
  const std::size_t m = f.num_vars();
  PositivityWitness w;
  w.word = node.word;
  w.vertex = vertex;
  w.point = witness_point(node.word, vertex, m);
  w.value = evaluate(f, w.point);
  const unsigned d = node.form.degree() > 0 ? static_cast<unsigned>(node.form.degree()) : 0u;
  const Rational expected = Rational(node.form.coefficient(Monomial::power(m, vertex, d))) / node.scale;
  if (!on_simplex(w.point) || w.value > 0 || (!node.form.is_zero() && w.value != expected))
    throw std::logic_error("WDS witness failed exact re-verification");
  return w;
}

inline void expand_level(const std::vector<WdsNode>& frontier, std::vector<std::vector<ExpandedChild>>& out,
                         const PositivityOptions& opts, std::atomic<bool>& found) {
  out.assign(frontier.size(), {});
  const auto perms = all_permutations(frontier.empty() ? 1 : frontier.front().form.num_vars());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (;;) {
      if (!opts.deterministic && found.load(std::memory_order_relaxed)) return;
      if (opts.cancel && opts.cancel->load(std::memory_order_relaxed)) return;
      const std::size_t i = next.fetch_add(1);
      if (i >= frontier.size()) return;
      auto& slot = out[i];
      slot.reserve(perms.size());
      for (const auto& theta : perms) {
        WdsNode child = child_node(frontier[i], theta);
        GoodnessResult g = goodness_test(child.form);
        if (g.kind == Goodness::NonpositiveVertex) found.store(true, std::memory_order_relaxed);
        std::string text = to_string(child.form);
        slot.push_back({std::move(child), g, std::move(text)});
      }
    }
  };
  const std::size_t workers = std::max<std::size_t>(1, std::min(opts.jobs, frontier.size()));
  if (workers == 1) {
    work();
    return;
  }
  std::vector<std::thread> pool;
  for (std::size_t t = 0; t < workers; ++t) pool.emplace_back(work);
  for (auto& th : pool) th.join();
}

}  // namespace detail

/// Decides strict positivity of f on S_m.
///
/// Breadth-first over depths, children in lexicographic permutation order.
/// Good nodes are pruned; the first node (in that order) with a nonpositive
/// vertex coefficient yields a witness. Identical forms within one depth are
/// expanded once. Search stops at min(C_p, cap), or at C_p with full_bound.
inline PositivityVerdict check_positivity(const Form& f, const PositivityOptions& opts = {}) {
  const auto t0 = std::chrono::steady_clock::now();
  auto finish = [&](PositivityVerdict v) {
    v.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return v;
  };

  const std::size_t m = f.num_vars();
  PositivityVerdict v;
  WdsNode root = root_node(f);
  v.nodes_generated = 1;

  if (f.is_zero()) {
    v.status = PositivityStatus::NotPositive;
    v.witness = PositivityWitness{{}, 0, witness_point({}, 0, m), Rational(0)};
    v.note = "zero form";
    return finish(v);
  }
  v.coeff_bound = integerize(f).coeff_bound;

  const std::size_t cap = opts.max_depth.value_or(PositivityOptions::kDefaultDepthCap);
  bool limit_is_bound = false;
  if (m >= 2 && f.degree() >= 1) {
    v.theoretical_bound = try_cp_bound(v.coeff_bound, m, static_cast<unsigned long>(f.degree()));
    if (v.theoretical_bound && v.theoretical_bound->fits_ulong_p() &&
        (opts.full_bound || *v.theoretical_bound <= Integer(static_cast<unsigned long>(cap)))) {
      v.depth_limit = v.theoretical_bound->get_ui();
      limit_is_bound = true;
    } else {
      v.depth_limit = opts.full_bound ? std::numeric_limits<std::size_t>::max() : cap;
    }
  }

  GoodnessResult rg = goodness_test(root.form);
  if (rg.kind == Goodness::Good) {
    v.status = PositivityStatus::Positive;
    v.certificate.leaves.push_back({{}, hex_digest(to_string(root.form))});
    return finish(v);
  }
  if (rg.kind == Goodness::NonpositiveVertex) {
    v.status = PositivityStatus::NotPositive;
    v.witness = detail::make_witness(f, root, rg.vertex);
    return finish(v);
  }
  // m == 1 and degree-0 forms are always decided at the root.

  const std::size_t branching = all_permutations(m).size();
  std::vector<WdsNode> frontier{std::move(root)};
  std::size_t depth = 0;
  while (!frontier.empty()) {
    if (depth >= v.depth_limit) {
      v.status = limit_is_bound ? PositivityStatus::NotPositiveByBound : PositivityStatus::Unresolved;
      v.note = limit_is_bound ? "undecided nodes remain at the theoretical bound"
                              : "depth cap reached below the theoretical bound";
      v.depth_reached = depth;
      return finish(v);
    }
    std::atomic<bool> found{false};
    std::vector<std::vector<detail::ExpandedChild>> children;
    detail::expand_level(frontier, children, opts, found);
    if (opts.cancel && opts.cancel->load()) {
      v.status = PositivityStatus::Unresolved;
      v.note = "cancelled";
      v.depth_reached = depth;
      return finish(v);
    }
    ++depth;

    std::vector<WdsNode> next;
    std::unordered_map<std::string, std::size_t> seen;  // text -> index in next
    for (std::size_t i = 0; i < children.size(); ++i) {
      if (children[i].empty()) continue;  // skipped after an early stop
      ++v.nodes_expanded;
      for (auto& c : children[i]) {
        ++v.nodes_generated;
        switch (c.goodness.kind) {
          case Goodness::NonpositiveVertex:
            v.status = PositivityStatus::NotPositive;
            v.witness = detail::make_witness(f, c.node, c.goodness.vertex);
            v.depth_reached = depth;
            return finish(v);
          case Goodness::Good:
            v.certificate.leaves.push_back({c.node.word, hex_digest(c.text)});
            break;
          case Goodness::Indeterminate: {
            auto [it, inserted] = seen.try_emplace(c.text, next.size());
            if (inserted) {
              next.push_back(std::move(c.node));
            } else {
              v.certificate.aliases.push_back({c.node.word, next[it->second].word});
            }
            break;
          }
        }
      }
    }
    v.depth_reached = depth;
    frontier = std::move(next);
    if (opts.node_limit != 0 && !frontier.empty() &&
        v.nodes_generated + frontier.size() * branching > opts.node_limit) {
      v.status = PositivityStatus::Unresolved;
      v.note = "node limit reached";
      return finish(v);
    }
  }
  v.status = PositivityStatus::Positive;
  return finish(v);
}

// ---------------------------------------------------------------------------
// Certificate checking

struct CheckResult {
  bool ok = true;
  std::string message;
  explicit operator bool() const { return ok; }
  static CheckResult fail(std::string why) { return {false, std::move(why)}; }
};

namespace detail {

class CertificateWalker {
 public:
  CertificateWalker(const PositivityCertificate& cert, std::size_t m) : m_(m) {
    for (const auto& l : cert.leaves) {
      leaves_[l.word] = l.digest;
      max_depth_ = std::max(max_depth_, l.word.size());
    }
    for (const auto& a : cert.aliases) {
      aliases_[a.word] = a.target;
      targets_.insert(a.target);
      max_depth_ = std::max(max_depth_, a.word.size());
    }
  }

  CheckResult run(const WdsNode& root) {
    CheckResult r = visit(root);
    if (!r) return r;
    for (const auto& [word, target] : aliases_) {
      auto a = alias_text_.find(word);
      auto t = target_text_.find(target);
      if (a == alias_text_.end()) return CheckResult::fail("alias node is not part of the search tree");
      if (t == target_text_.end()) return CheckResult::fail("alias target is not part of the search tree");
      if (a->second != t->second) return CheckResult::fail("alias form differs from its target");
      if (target.size() != word.size()) return CheckResult::fail("alias target at a different depth");
    }
    return {};
  }

 private:
  CheckResult visit(const WdsNode& node) {
    if (targets_.count(node.word)) target_text_[node.word] = to_string(node.form);
    if (auto it = leaves_.find(node.word); it != leaves_.end()) {
      if (goodness_test(node.form).kind != Goodness::Good)
        return CheckResult::fail("recorded leaf is not good");
      if (hex_digest(to_string(node.form)) != it->second)
        return CheckResult::fail("recorded leaf digest does not match");
      return {};
    }
    if (aliases_.count(node.word)) {
      alias_text_[node.word] = to_string(node.form);
      return {};
    }
    if (node.word.size() >= max_depth_) return CheckResult::fail("search tree is not covered by the certificate");
    for (const auto& theta : all_permutations(m_)) {
      CheckResult r = visit(child_node(node, theta));
      if (!r) return r;
    }
    return {};
  }

  std::size_t m_;
  std::size_t max_depth_ = 0;
  std::map<Word, std::string> leaves_;
  std::map<Word, Word> aliases_;
  std::set<Word> targets_;
  std::map<Word, std::string> alias_text_;
  std::map<Word, std::string> target_text_;
};

}  // namespace detail

/// Re-checks the evidence in a verdict against the form it was produced for.
/// Positive: every recorded leaf is recomputed from f along its word and must
/// be good, and the leaves plus aliases must cover the whole search tree.
/// NotPositive: the witness must be the stated simplex point and f there must
/// equal the stated value, which must be <= 0.
inline CheckResult verify_positivity(const Form& f, const PositivityVerdict& v) {
  const std::size_t m = f.num_vars();
  switch (v.status) {
    case PositivityStatus::Positive: {
      if (f.is_zero()) return CheckResult::fail("zero form cannot be positive");
      return detail::CertificateWalker(v.certificate, m).run(root_node(f));
    }
    case PositivityStatus::NotPositive: {
      if (!v.witness) return CheckResult::fail("missing witness");
      const auto& w = v.witness.value();
      if (w.point.size() != m) return CheckResult::fail("witness has wrong dimension");
      if (!on_simplex(w.point)) return CheckResult::fail("witness is not on the simplex");
      for (const auto& theta : w.word)
        if (theta.size() != m || !is_permutation(theta)) return CheckResult::fail("witness word is malformed");
      if (w.vertex >= m) return CheckResult::fail("witness vertex out of range");
      if (witness_point(w.word, w.vertex, m) != w.point)
        return CheckResult::fail("witness point does not match its word");
      Rational value = evaluate(f, w.point);
      if (value != w.value) return CheckResult::fail("witness value does not match");
      if (value > 0) return CheckResult::fail("form is positive at the witness");
      return {};
    }
    case PositivityStatus::NotPositiveByBound:
    case PositivityStatus::Unresolved:
      return {};
  }
  return CheckResult::fail("unknown status");
}

}  // namespace polystab
