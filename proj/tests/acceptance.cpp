// Acceptance checks: one PASS/FAIL line per criterion.

#include "support.hpp"

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>

using namespace polystab;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

struct CliRun {
  int code = -1;
  std::string out;
};

CliRun cli(const std::string& args) {
  CliRun r;
  FILE* pipe = popen((std::string(POLYSTAB_CLI) + " " + args + " 2>/dev/null").c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

// b is a positive rational multiple of a.
bool proportional(const Form& a, const Form& b) {
  if (a.is_zero() || b.is_zero() || a.size() != b.size()) return false;
  const Rational k = b.terms().begin()->second / a.coefficient(b.terms().begin()->first);
  return k > 0 && scale(a, k) == b;
}

Outcome criterion1() {
  StabilityForms forms = stability_forms(test::three_vertex_polytope());
  Outcome o;
  if (forms.a0 != parse_form(test::kThreeVertexA0)) o = {false, "a0 differs from the reference form"};
  else if (!forms.delta || *forms.delta != parse_form(test::kThreeVertexDelta2)) o = {false, "Delta_2 differs"};
  else o.detail = "a0 and Delta_2 equal the reference forms coefficient by coefficient";
  return o;
}

Outcome criterion2() {
  const std::string path = test::data_path("three_vertex_polytope.json");
  CliRun r = cli("check " + path + " --deterministic");
  if (r.code != 1) return {false, "check exit code " + std::to_string(r.code) + ", expected 1"};
  if (json::parse(r.out)["status"] != "NOT_STABLE") return {false, "check did not report NOT_STABLE"};

  const Form a0 = parse_form(test::kThreeVertexA0), d2 = parse_form(test::kThreeVertexDelta2);
  PositivityVerdict va = check_positivity(a0);
  if (va.status != PositivityStatus::NotPositive || va.depth_reached > 3)
    return {false, "a0: " + std::string(to_string(va.status)) + " at depth " + std::to_string(va.depth_reached)};
  if (!verify_positivity(a0, va)) return {false, "a0 witness does not verify"};
  PositivityVerdict vd = check_positivity(d2);
  if (vd.status != PositivityStatus::Positive || vd.depth_reached != 0)
    return {false, "Delta_2: " + std::string(to_string(vd.status)) + " at depth " + std::to_string(vd.depth_reached)};

  const Form target = parse_form(test::kThreeVertexDepth3);
  const WdsNode root = root_node(a0);
  std::size_t hits = 0;
  std::string first;
  for (const auto& t1 : expand_node(root))
    for (const auto& t2 : expand_node(t1))
      for (const auto& t3 : expand_node(t2))
        if (proportional(target, to_rational_form(t3.form)) && hits++ == 0)
          first = word_to_json(t3.word).dump();
  if (hits == 0) return {false, "no depth-3 node is proportional to the reference all-negative form"};
  std::ostringstream d;
  d << "NOT_STABLE; a0 NOT_POSITIVE at depth " << va.depth_reached << ", Delta_2 POSITIVE at depth 0; "
    << hits << " depth-3 node(s) match the all-negative form, first " << first;
  return {true, d.str()};
}

Outcome criterion3() {
  MatrixPolytope p = test::three_vertex_polytope();
  for (std::size_t k = 0; k < p.vertex_count(); ++k)
    if (!routh_hurwitz_stable(p.vertex(k))) return {false, "vertex " + std::to_string(k + 1) + " is not stable"};
  StabilityVerdict v = check_polytope(p);
  if (v.status != StabilityStatus::NotStable) return {false, "polytope verdict " + std::string(to_string(v.status))};
  if (!verify_certificate(p, v)) return {false, "verdict evidence does not verify"};
  return {true, "all 3 vertices stable, polytope NOT_STABLE at q* = " +
                    detail::rationals_to_json(v.witness->point).dump()};
}

Outcome criterion4() {
  std::mt19937_64 rng(4);
  std::size_t checked = 0;
  for (std::size_t n = 2; n <= 5; ++n)
    for (int trial = 0; trial < 20; ++trial) {
      RationalMatrix a = test::random_matrix(rng, n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < i; ++j) a(i, j) = 0;
      // Left side through the symbolic chain on a one-vertex polytope (q = 1).
      const MinorSequence d = successive_minors(hurwitz_matrix(char_poly_symbolic(MatrixPolytope({a}))));
      const Rational lhs = evaluate(d.minor(n - 1), {Rational(1)});
      Rational rhs = (n * (n - 1) / 2) % 2 ? -1 : 1;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) rhs *= a(i, i) + a(j, j);
      if (lhs != rhs || !orlando_check(a))
        return {false, "identity fails for n = " + std::to_string(n) + ", trial " + std::to_string(trial)};
      ++checked;
    }
  return {true, std::to_string(checked) + " triangular matrices, n = 2..5"};
}

Outcome criterion5() {
  std::mt19937_64 rng(5);
  std::size_t nonzero = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + trial % 5, m = 1 + (trial / 5) % 4;
    const CharPolyCoeffs c = char_poly_symbolic(test::random_polytope(rng, n, m));
    for (std::size_t i = 0; i <= n; ++i) {
      const Form f = c.coefficient(n - i);
      if (!f.is_zero() && f.degree() != static_cast<int>(i)) return {false, "a_{n-i} has the wrong degree"};
    }
    const HurwitzMatrix h = hurwitz_matrix(c);
    for (std::size_t i = 1; i <= n; ++i)
      for (std::size_t j = 1; j <= n; ++j) {
        const Form& b = h.entries(i - 1, j - 1);
        if (!b.is_zero() && b.degree() != static_cast<int>(2 * j) - static_cast<int>(i))
          return {false, "Hurwitz entry has the wrong degree"};
      }
    const MinorSequence d = successive_minors(h);
    for (std::size_t k = 1; k <= n; ++k) {
      if (d.minor(k).is_zero()) continue;
      ++nonzero;
      if (d.minor(k).degree() != static_cast<int>(k * (k + 1) / 2)) return {false, "Delta_k has the wrong degree"};
    }
  }
  return {true, "100 polytopes, " + std::to_string(nonzero) + " nonzero minors checked"};
}

Outcome criterion6() {
  std::size_t stable = 0, unstable = 0, unresolved = 0, idx = 0;
  for (std::size_t n : {2, 3})
    for (std::size_t m : {2, 3})
      for (std::size_t i = 0; i < 13 && idx < 50; ++i, ++idx) {
        GeneratorConfig g;
        g.n = n;
        g.m = m;
        g.seed = instance_seed(6, n, m, i);
        const MatrixPolytope p = generate_polytope(g);
        const StabilityVerdict v = check_polytope(p);
        const std::string tag = "instance (" + std::to_string(n) + "," + std::to_string(m) + ")#" + std::to_string(i);
        if (v.status == StabilityStatus::NotStable) {
          ++unstable;
          if (v.unstable_vertex) continue;
          if (!v.witness) return {false, tag + ": NOT_STABLE without a point witness"};
          const auto& q = v.witness->point;
          const StabilityForms f = stability_forms(p);
          const bool nonpositive = evaluate(f.a0, q) <= 0 || (f.delta && evaluate(*f.delta, q) <= 0);
          if (!on_simplex(q) || !nonpositive) return {false, tag + ": witness forms are not nonpositive"};
          if (routh_hurwitz_stable(p.at(q))) return {false, tag + ": A(q*) is Hurwitz stable"};
        } else if (v.status == StabilityStatus::RobustlyStable) {
          ++stable;
          if (!stable_verdict_consistent(p, g.seed, 50)) return {false, tag + ": stable verdict contradicted"};
        } else {
          ++unresolved;
        }
      }
  std::ostringstream d;
  d << idx << " polytopes: " << stable << " stable, " << unstable << " not stable, " << unresolved << " unresolved";
  return {true, d.str()};
}

Integer bracket_bound(const Integer& M, unsigned long m, unsigned long d) {
  Integer dm = 1;
  for (unsigned long i = 0; i < m; ++i) dm *= d;
  auto power = [](const Integer& b, Integer e) -> Integer {
    Integer r = 1;
    for (; e > 0; --e) r *= b;
    return r;
  };
  const Integer n = power(2, dm) * power(M, dm + 1) * power(Integer(m), dm * d + d) *
                    power(Integer(d), Integer((m + 1) * d) + Integer(m) * dm) *
                    power(Integer(d + 1), Integer((m - 1) * (m + 2)));
  auto ok = [&](unsigned long k) { return power(Integer(m), k) <= n * power(Integer(m - 1), k); };
  unsigned long lo = 0, hi = 1;
  while (ok(hi)) lo = hi, hi *= 2;
  while (hi - lo > 1) {
    const unsigned long mid = lo + (hi - lo) / 2;
    (ok(mid) ? lo : hi) = mid;
  }
  return Integer(lo) + 2;
}

Outcome criterion7() {
  CliRun r = cli("bound 1 2 1");
  if (r.code != 0 || r.out != "9\n") return {false, "bound 1 2 1 printed \"" + r.out + "\""};
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 10; ++trial) {
    const Integer M = 1 + static_cast<long>(rng() % 500);
    const unsigned long m = 2 + rng() % 3, d = 1 + rng() % 3;
    if (cp_bound(M, m, d) != bracket_bound(M, m, d))
      return {false, "mismatch at (" + to_string(M) + "," + std::to_string(m) + "," + std::to_string(d) + ")"};
  }
  return {true, "C_p(1,2,1) = 9; 10 random triples agree with the bracketing oracle"};
}

Outcome criterion8() {
  BenchmarkConfig cfg;
  cfg.pairs = {{2, 2}, {2, 3}, {3, 2}, {3, 3}};
  cfg.count = 10;
  cfg.seed = 8;
  cfg.jobs = std::max(1u, std::thread::hardware_concurrency());
  const auto t0 = std::chrono::steady_clock::now();
  const auto rows = run_benchmark(cfg);
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::size_t total = 0, failures = 0, inconsistent = 0;
  for (const auto& row : rows) {
    total += row.stable + row.unstable + row.unresolved;
    failures += row.verification_failures;
    inconsistent += row.consistency_failures;
  }
  std::ostringstream d;
  d << total << " instances in " << seconds << " s, " << failures << " verification failures, " << inconsistent
    << " consistency failures";
  return {total == 40 && failures == 0 && inconsistent == 0 && seconds < 300, d.str()};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"symbolic a0 and Delta_2 of the three-vertex example", criterion1},
      {"verdict on the three-vertex example", criterion2},
      {"stable vertices, unstable polytope", criterion3},
      {"Orlando's formula on triangular matrices", criterion4},
      {"degree laws", criterion5},
      {"witness soundness and stable-verdict consistency", criterion6},
      {"depth bound", criterion7},
      {"benchmark budget and certificate verification", criterion8},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("criterion %zu: %s - %s (%s) [%.3f s]\n", i + 1, o.pass ? "PASS" : "FAIL", criteria[i].first,
                o.detail.c_str(), s);
    std::fflush(stdout);
    failed += !o.pass;
  }
  return failed ? 1 : 0;
}
