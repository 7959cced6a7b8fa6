#pragma once

// Random polytope generation, a brute-force grid oracle, and the benchmark
// runner.
//
// Random numbers come from std::mt19937_64, whose output sequence is fixed by
// the C++ standard. Distributions are derived from its raw 64-bit output here
// rather than through <random> distributions, whose results vary between
// standard library implementations.

#include "polystab/charpoly.hpp"
#include "polystab/hurwitz.hpp"
#include "polystab/pipeline.hpp"
#include "polystab/wds.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <complex>
#include <limits>
#include <cstdint>
#include <mutex>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace polystab {

struct GeneratorConfig {
  std::size_t n = 2;
  std::size_t m = 2;
  std::uint64_t seed = 0;
  Rational shift_target = make_rational(-1, 10000);
  unsigned sig_digits = 4;
};

class NonConvergence : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Maximal real part of the eigenvalues of A, from Aberth-Ehrlich iteration on
/// the exact characteristic polynomial evaluated in double precision. This is
/// an estimate only.
inline double estimate_max_real_part(const RationalMatrix& a, int max_iterations = 2000) {
  using cplx = std::complex<double>;
  const std::vector<Rational> c = char_poly(a);
  const std::size_t n = c.size() - 1;
  std::vector<double> coef(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) coef[i] = c[i].get_d();
  if (n == 1) return -coef[0];

  auto eval = [&](cplx z, cplx& deriv) {
    cplx p = coef[n], dp = 0;
    for (std::size_t i = n; i-- > 0;) {
      dp = dp * z + p;
      p = p * z + coef[i];
    }
    deriv = dp;
    return p;
  };

  double radius = 0;
  for (std::size_t i = 0; i < n; ++i) radius = std::max(radius, std::abs(coef[i]));
  radius = std::min(1 + radius, 1e6);
  std::vector<cplx> z(n);
  for (std::size_t k = 0; k < n; ++k)
    z[k] = std::polar(radius, 0.4 + 2.0 * M_PI * static_cast<double>(k) / static_cast<double>(n));

  bool converged = false;
  for (int it = 0; it < max_iterations && !converged; ++it) {
    converged = true;
    for (std::size_t k = 0; k < n; ++k) {
      cplx dp;
      cplx p = eval(z[k], dp);
      if (p == cplx(0)) continue;
      cplx s = 0;
      for (std::size_t j = 0; j < n; ++j)
        if (j != k) s += 1.0 / (z[k] - z[j]);
      cplx denom = dp - p * s;
      if (denom == cplx(0)) denom = cplx(1e-300);
      cplx step = p / denom;
      z[k] -= step;
      if (std::abs(step) > 1e-15 * (1 + std::abs(z[k]))) converged = false;
    }
  }
  if (!converged) throw NonConvergence("estimate_max_real_part: Aberth iteration did not converge");
  double best = -std::numeric_limits<double>::infinity();
  for (const auto& r : z) best = std::max(best, r.real());
  return best;
}

namespace detail {

inline Integer round_half_away(const Rational& r) {
  Integer num = abs(r.get_num());
  Integer q = (2 * num + r.get_den()) / (2 * r.get_den());
  return r < 0 ? Integer(-q) : q;
}

/// A uniform draw from [-1, 1] on a grid of 2^53 points, rounded to
/// `digits` decimal places.
inline Rational draw_entry(std::mt19937_64& rng, unsigned digits) {
  const std::uint64_t k = rng() >> 11;
  const Integer span = (Integer(1) << 53) - 1;
  const Rational u = make_rational(2 * Integer(static_cast<unsigned long>(k)) - span, span);
  const Integer scale = pow_int(10, digits);
  return make_rational(round_half_away(u * Rational(scale)), scale);
}

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace detail

/// Uniform entries from [-1,1] rounded to sig_digits decimals, then shifted
/// by a multiple of the identity so the largest eigenvalue real part is close
/// to shift_target. Each vertex is re-verified to be exactly Hurwitz stable.
inline MatrixPolytope generate_polytope(const GeneratorConfig& cfg) {
  if (cfg.n < 1 || cfg.m < 1) throw std::invalid_argument("generator: n and m must be >= 1");
  if (cfg.sig_digits < 1) throw std::invalid_argument("generator: sig_digits must be >= 1");
  if (cfg.shift_target >= 0) throw std::invalid_argument("generator: shift target must be negative");
  std::mt19937_64 rng(cfg.seed);
  const Integer shift_den = 100'000'000;
  std::vector<RationalMatrix> vertices;
  while (vertices.size() < cfg.m) {
    RationalMatrix a(cfg.n, cfg.n);
    for (std::size_t i = 0; i < cfg.n; ++i)
      for (std::size_t j = 0; j < cfg.n; ++j) a(i, j) = detail::draw_entry(rng, cfg.sig_digits);
    double mu;
    try {
      mu = estimate_max_real_part(a);
    } catch (const NonConvergence&) {
      continue;
    }
    // Rounded up, so the shifted real part lands at or just below the target.
    const double wanted = mu - cfg.shift_target.get_d();
    Integer base = Integer(static_cast<long>(std::ceil(wanted * shift_den.get_d())));
    bool accepted = false;
    for (int attempt = 0; attempt < 8 && !accepted; ++attempt) {
      const Integer allowance = attempt == 0 ? Integer(0) : pow_int(10, static_cast<unsigned long>(attempt - 1));
      const Rational shift = make_rational(base + allowance, shift_den);
      RationalMatrix shifted = a;
      for (std::size_t i = 0; i < cfg.n; ++i) shifted(i, i) -= shift;
      if (routh_hurwitz_stable(shifted)) {
        vertices.push_back(std::move(shifted));
        accepted = true;
      }
    }
  }
  return MatrixPolytope(std::move(vertices));
}

/// A random rational point of S_m (coordinates k_i / sum k, k_i in 0..1000).
inline std::vector<Rational> random_simplex_point(std::mt19937_64& rng, std::size_t m) {
  std::vector<Integer> w(m);
  Integer total = 0;
  for (auto& x : w) {
    x = static_cast<unsigned long>(rng() % 1001);
    total += x;
  }
  if (total == 0) {
    w[rng() % m] = 1;
    total = 1;
  }
  std::vector<Rational> q;
  for (const auto& x : w) q.push_back(make_rational(x, total));
  return q;
}

struct OracleViolation {
  std::vector<Rational> point;
  Rational value;
};

struct OracleReport {
  bool conclusive = false;
  std::optional<OracleViolation> violation;
};

/// Evaluates f at every point alpha / N of S_m. A value <= 0 is a conclusive
/// refutation of positivity; no violation proves nothing.
inline OracleReport grid_oracle(const Form& f, std::size_t resolution) {
  if (resolution < 1) throw std::invalid_argument("grid_oracle: resolution must be >= 1");
  const std::size_t m = f.num_vars();
  const Rational step = make_rational(1, static_cast<unsigned long>(resolution));
  std::vector<std::size_t> alpha(m, 0);
  OracleReport report;
  // Enumerate compositions of `resolution` into m parts.
  auto visit = [&](auto&& self, std::size_t i, std::size_t remaining) -> bool {
    if (i + 1 == m) {
      alpha[i] = remaining;
      std::vector<Rational> q;
      for (auto a : alpha) q.push_back(Rational(static_cast<unsigned long>(a)) * step);
      Rational value = evaluate(f, q);
      if (value <= 0) {
        report.conclusive = true;
        report.violation = OracleViolation{std::move(q), std::move(value)};
        return true;
      }
      return false;
    }
    for (std::size_t a = remaining + 1; a-- > 0;) {
      alpha[i] = a;
      if (self(self, i + 1, remaining - a)) return true;
    }
    return false;
  };
  visit(visit, 0, resolution);
  return report;
}

inline std::size_t default_grid_resolution(std::size_t m) { return m <= 3 ? 32 : 16; }

/// Sampling check of a ROBUSTLY_STABLE verdict: A(q) must be Hurwitz stable at
/// `samples` random simplex points and both forms must survive the grid oracle.
inline bool stable_verdict_consistent(const MatrixPolytope& p, std::uint64_t seed, std::size_t samples = 50) {
  std::mt19937_64 rng(seed);
  for (std::size_t s = 0; s < samples; ++s)
    if (!routh_hurwitz_stable(p.at(random_simplex_point(rng, p.vertex_count())))) return false;
  const StabilityForms forms = stability_forms(p);
  const std::size_t res = default_grid_resolution(p.vertex_count());
  if (grid_oracle(forms.a0, res).violation) return false;
  if (forms.delta && grid_oracle(*forms.delta, res).violation) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Benchmark

struct BenchmarkConfig {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;  // (n, m)
  std::size_t count = 10;
  std::uint64_t seed = 0;
  std::size_t jobs = 1;
  PositivityOptions positivity;
};

struct BenchmarkRow {
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t stable = 0;
  std::size_t unstable = 0;
  std::size_t unresolved = 0;
  double total_seconds = 0;
  double max_seconds = 0;
  std::size_t nodes = 0;
  std::size_t verification_failures = 0;
  std::size_t consistency_failures = 0;
};

inline std::uint64_t instance_seed(std::uint64_t seed, std::size_t n, std::size_t m, std::size_t index) {
  return detail::splitmix64(seed ^ detail::splitmix64((n << 40) ^ (m << 20) ^ index));
}

inline std::vector<BenchmarkRow> run_benchmark(const BenchmarkConfig& cfg) {
  struct Instance {
    std::size_t row, n, m, index;
  };
  struct Outcome {
    StabilityStatus status = StabilityStatus::Unresolved;
    double seconds = 0;
    std::size_t nodes = 0;
    bool verified = true;
    bool consistent = true;
  };
  std::vector<Instance> instances;
  for (std::size_t r = 0; r < cfg.pairs.size(); ++r)
    for (std::size_t i = 0; i < cfg.count; ++i) instances.push_back({r, cfg.pairs[r].first, cfg.pairs[r].second, i});

  std::vector<Outcome> outcomes(instances.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= instances.size()) return;
      const Instance& inst = instances[i];
      GeneratorConfig g;
      g.n = inst.n;
      g.m = inst.m;
      g.seed = instance_seed(cfg.seed, inst.n, inst.m, inst.index);
      const MatrixPolytope p = generate_polytope(g);
      CheckOptions co;
      co.positivity = cfg.positivity;
      co.positivity.jobs = 1;
      const StabilityVerdict v = check_polytope(p, co);
      Outcome& out = outcomes[i];
      out.status = v.status;
      out.seconds = v.timings.total;
      if (v.a0) out.nodes += v.a0->nodes_generated;
      if (v.delta) out.nodes += v.delta->nodes_generated;
      out.verified = static_cast<bool>(verify_certificate(p, v));
      if (v.status == StabilityStatus::RobustlyStable) out.consistent = stable_verdict_consistent(p, g.seed);
    }
  };
  const std::size_t workers = std::max<std::size_t>(1, std::min(cfg.jobs, instances.size()));
  std::vector<std::thread> pool;
  for (std::size_t t = 0; t < workers; ++t) pool.emplace_back(work);
  for (auto& th : pool) th.join();

  std::vector<BenchmarkRow> rows(cfg.pairs.size());
  for (std::size_t r = 0; r < cfg.pairs.size(); ++r) {
    rows[r].n = cfg.pairs[r].first;
    rows[r].m = cfg.pairs[r].second;
  }
  for (std::size_t i = 0; i < instances.size(); ++i) {
    BenchmarkRow& row = rows[instances[i].row];
    const Outcome& o = outcomes[i];
    switch (o.status) {
      case StabilityStatus::RobustlyStable: ++row.stable; break;
      case StabilityStatus::NotStable: ++row.unstable; break;
      case StabilityStatus::Unresolved: ++row.unresolved; break;
    }
    row.total_seconds += o.seconds;
    row.max_seconds = std::max(row.max_seconds, o.seconds);
    row.nodes += o.nodes;
    if (!o.verified) ++row.verification_failures;
    if (!o.consistent) ++row.consistency_failures;
  }
  return rows;
}

}  // namespace polystab
