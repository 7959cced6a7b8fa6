#pragma once

// Robust Hurwitz stability of a matrix polytope.
//
// When some member of the polytope is Hurwitz stable, every member is stable
// iff a_0(q) > 0 and Delta_{n-1}(q) > 0 on the whole simplex. The vertices are
// checked exactly first (a vertex is a member), then both forms go through the
// WDS positivity search.

#include "polystab/charpoly.hpp"
#include "polystab/hurwitz.hpp"
#include "polystab/wds.hpp"

#include <atomic>
#include <chrono>
#include <future>
#include <optional>
#include <string>
#include <vector>

namespace polystab {

enum class StabilityStatus { RobustlyStable, NotStable, Unresolved };

inline const char* to_string(StabilityStatus s) {
  switch (s) {
    case StabilityStatus::RobustlyStable: return "ROBUSTLY_STABLE";
    case StabilityStatus::NotStable: return "NOT_STABLE";
    case StabilityStatus::Unresolved: return "UNRESOLVED";
  }
  return "?";
}

/// Which of the two simplex forms a piece of evidence refers to.
enum class StabilityForm { A0, Delta };

inline const char* to_string(StabilityForm f) { return f == StabilityForm::A0 ? "a0" : "delta"; }

struct VertexCheck {
  std::size_t vertex = 0;  // zero-based
  RouthHurwitzReport report;
};

struct PointWitness {
  StabilityForm form = StabilityForm::A0;
  std::vector<Rational> point;
  Rational form_value;
  RouthHurwitzReport routh_hurwitz;  // of A(point); never stable
};

struct PhaseTimings {
  double vertices = 0;
  double symbolic = 0;
  double a0 = 0;
  double delta = 0;
  double total = 0;
};

struct StabilityVerdict {
  StabilityStatus status = StabilityStatus::Unresolved;
  std::size_t n = 0;
  std::size_t m = 0;
  std::vector<VertexCheck> vertices;
  std::optional<std::size_t> unstable_vertex;  // zero-based
  std::optional<PositivityVerdict> a0;
  std::optional<PositivityVerdict> delta;      // absent for n = 1 (Delta_0 = 1)
  std::optional<PointWitness> witness;
  PhaseTimings timings;
};

struct CheckOptions {
  PositivityOptions positivity;
};

/// a_0 and Delta_{n-1} (nullopt when n = 1).
struct StabilityForms {
  Form a0;
  std::optional<Form> delta;
};

inline StabilityForms stability_forms(const MatrixPolytope& p) {
  CharPolyCoeffs c = char_poly_symbolic(p);
  StabilityForms out{c.coefficient(0), std::nullopt};
  if (p.order() >= 2) out.delta = successive_minors(hurwitz_matrix(c)).minor(p.order() - 1);
  return out;
}

namespace detail {

inline double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

inline PointWitness point_witness(const MatrixPolytope& p, StabilityForm which, const PositivityWitness& w) {
  PointWitness out{which, w.point, w.value, routh_hurwitz(p.at(w.point))};
  if (out.routh_hurwitz.stable())
    throw std::logic_error("A(q*) is Hurwitz stable although a simplex form is nonpositive at q*");
  return out;
}

}  // namespace detail

inline StabilityVerdict check_polytope(const MatrixPolytope& p, const CheckOptions& opts = {}) {
  using clock = std::chrono::steady_clock;
  const auto t_start = clock::now();
  StabilityVerdict v;
  v.n = p.order();
  v.m = p.vertex_count();

  auto t0 = clock::now();
  for (std::size_t k = 0; k < p.vertex_count(); ++k) {
    v.vertices.push_back({k, routh_hurwitz(p.vertex(k))});
    if (!v.vertices.back().report.stable() && !v.unstable_vertex) v.unstable_vertex = k;
  }
  v.timings.vertices = detail::seconds_since(t0);
  if (v.unstable_vertex) {
    v.status = StabilityStatus::NotStable;
    v.timings.total = detail::seconds_since(t_start);
    return v;
  }

  t0 = clock::now();
  const StabilityForms forms = stability_forms(p);
  v.timings.symbolic = detail::seconds_since(t0);

  const bool concurrent = forms.delta && opts.positivity.jobs > 1 && !opts.positivity.deterministic;
  if (concurrent) {
    std::atomic<bool> cancel{false};
    PositivityOptions po = opts.positivity;
    po.cancel = &cancel;
    po.jobs = std::max<std::size_t>(1, opts.positivity.jobs / 2);
    auto run = [&](const Form& f) {
      PositivityVerdict r = check_positivity(f, po);
      if (r.status == PositivityStatus::NotPositive) cancel.store(true);
      return r;
    };
    auto fa = std::async(std::launch::async, run, std::cref(forms.a0));
    auto fd = std::async(std::launch::async, run, std::cref(*forms.delta));
    v.a0 = fa.get();
    v.delta = fd.get();
    // A search cancelled by the other one's refutation carries no information.
    if (v.a0->status == PositivityStatus::Unresolved && v.a0->note == "cancelled" &&
        v.delta->status == PositivityStatus::NotPositive)
      v.a0.reset();
    if (v.delta->status == PositivityStatus::Unresolved && v.delta->note == "cancelled" &&
        v.a0 && v.a0->status == PositivityStatus::NotPositive)
      v.delta.reset();
  } else {
    v.a0 = check_positivity(forms.a0, opts.positivity);
    if (forms.delta && v.a0->status != PositivityStatus::NotPositive)
      v.delta = check_positivity(*forms.delta, opts.positivity);
  }
  if (v.a0) v.timings.a0 = v.a0->seconds;
  if (v.delta) v.timings.delta = v.delta->seconds;

  auto has = [](const std::optional<PositivityVerdict>& r, PositivityStatus s) { return r && r->status == s; };
  if (has(v.a0, PositivityStatus::NotPositive)) {
    v.status = StabilityStatus::NotStable;
    v.witness = detail::point_witness(p, StabilityForm::A0, *v.a0->witness);
  } else if (has(v.delta, PositivityStatus::NotPositive)) {
    v.status = StabilityStatus::NotStable;
    v.witness = detail::point_witness(p, StabilityForm::Delta, *v.delta->witness);
  } else if (has(v.a0, PositivityStatus::NotPositiveByBound) || has(v.delta, PositivityStatus::NotPositiveByBound)) {
    v.status = StabilityStatus::NotStable;
  } else if (has(v.a0, PositivityStatus::Positive) && (!forms.delta || has(v.delta, PositivityStatus::Positive))) {
    v.status = StabilityStatus::RobustlyStable;
  } else {
    v.status = StabilityStatus::Unresolved;
  }
  v.timings.total = detail::seconds_since(t_start);
  return v;
}

/// Independently re-checks every piece of evidence in a verdict for p.
inline CheckResult verify_certificate(const MatrixPolytope& p, const StabilityVerdict& v) {
  if (v.n != p.order() || v.m != p.vertex_count()) return CheckResult::fail("verdict dimensions do not match");

  for (const auto& vc : v.vertices) {
    if (vc.vertex >= p.vertex_count()) return CheckResult::fail("vertex index out of range");
    RouthHurwitzReport r = routh_hurwitz(p.vertex(vc.vertex));
    if (r.stable() != vc.report.stable() || r.failing_minor != vc.report.failing_minor ||
        r.minors != vc.report.minors)
      return CheckResult::fail("vertex " + std::to_string(vc.vertex + 1) + " Routh-Hurwitz data does not match");
  }

  if (v.unstable_vertex) {
    if (v.status != StabilityStatus::NotStable) return CheckResult::fail("unstable vertex with a stable verdict");
    if (*v.unstable_vertex >= p.vertex_count()) return CheckResult::fail("unstable vertex index out of range");
    if (routh_hurwitz_stable(p.vertex(*v.unstable_vertex)))
      return CheckResult::fail("claimed unstable vertex is Hurwitz stable");
    return {};
  }

  // Past the vertex phase every vertex must have been checked and be stable.
  if (v.vertices.size() != p.vertex_count()) return CheckResult::fail("vertex checks are incomplete");
  for (const auto& vc : v.vertices)
    if (!vc.report.stable()) return CheckResult::fail("unstable vertex not reported");

  const StabilityForms forms = stability_forms(p);
  if (forms.delta.has_value() == false && v.delta) return CheckResult::fail("n = 1 has no Delta_{n-1} check");

  auto check_form = [&](const std::optional<PositivityVerdict>& r, const Form& f, const char* name) -> CheckResult {
    if (!r) return {};
    CheckResult c = verify_positivity(f, *r);
    if (!c) return CheckResult::fail(std::string(name) + ": " + c.message);
    return {};
  };
  if (CheckResult c = check_form(v.a0, forms.a0, "a0"); !c) return c;
  if (forms.delta)
    if (CheckResult c = check_form(v.delta, *forms.delta, "delta"); !c) return c;

  switch (v.status) {
    case StabilityStatus::RobustlyStable:
      if (!v.a0 || v.a0->status != PositivityStatus::Positive) return CheckResult::fail("a0 not certified positive");
      if (forms.delta && (!v.delta || v.delta->status != PositivityStatus::Positive))
        return CheckResult::fail("delta not certified positive");
      return {};
    case StabilityStatus::NotStable: {
      if (v.witness) {
        const PointWitness& w = *v.witness;
        if (w.point.size() != p.vertex_count() || !on_simplex(w.point))
          return CheckResult::fail("witness point is not on the simplex");
        const Form* f = w.form == StabilityForm::A0 ? &forms.a0 : (forms.delta ? &*forms.delta : nullptr);
        if (!f) return CheckResult::fail("witness refers to a missing form");
        const Rational value = evaluate(*f, w.point);
        if (value != w.form_value) return CheckResult::fail("witness form value does not match");
        if (value > 0) return CheckResult::fail("form is positive at the witness");
        RouthHurwitzReport r = routh_hurwitz(p.at(w.point));
        if (r.stable()) return CheckResult::fail("A(q*) is Hurwitz stable");
        if (r.minors != w.routh_hurwitz.minors || r.failing_minor != w.routh_hurwitz.failing_minor)
          return CheckResult::fail("A(q*) Routh-Hurwitz data does not match");
        return {};
      }
      // Refuted only by the depth bound: reproduce the search to that bound.
      for (auto [r, f] : {std::pair{&v.a0, &forms.a0}, std::pair{&v.delta, forms.delta ? &*forms.delta : nullptr}}) {
        if (!f || !*r || (*r)->status != PositivityStatus::NotPositiveByBound) continue;
        PositivityOptions po;
        po.full_bound = true;
        po.node_limit = 0;
        if (check_positivity(*f, po).status != PositivityStatus::NotPositiveByBound)
          return CheckResult::fail("bound refutation does not reproduce");
        return {};
      }
      return CheckResult::fail("NOT_STABLE verdict without evidence");
    }
    case StabilityStatus::Unresolved:
      return {};
  }
  return CheckResult::fail("unknown status");
}

}  // namespace polystab
