#pragma once

// JSON documents: polytopes in, verdicts out. Every rational is written as a
// "p/q" (or "p") string; polytope entries may also be decimal strings such as
// "0.1", which are read exactly.

#include "polystab/charpoly.hpp"
#include "polystab/pipeline.hpp"
#include "polystab/wds.hpp"

#include <nlohmann/json.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace polystab {

using json = nlohmann::json;

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr int kDocumentVersion = 1;
inline constexpr const char* kPolytopeFormat = "polystab-polytope";
inline constexpr const char* kVerdictFormat = "polystab-verdict";
inline constexpr const char* kPositivityFormat = "polystab-positivity";

/// Malformed user input; the message names the offending field.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

namespace detail {

inline json rationals_to_json(const std::vector<Rational>& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

inline Rational rational_from_json(const json& j, const std::string& where) {
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const ParseError& e) {
      throw InputError(where + ": " + e.what());
    }
  }
  if (j.is_number_integer()) return Rational(Integer(j.dump()));
  throw InputError(where + ": expected a rational string such as \"-3/10\" or \"0.1\"");
}

inline std::vector<Rational> rationals_from_json(const json& j, const std::string& where) {
  if (!j.is_array()) throw InputError(where + ": expected an array");
  std::vector<Rational> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(rational_from_json(j[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

inline const json& field(const json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) throw InputError(where + ": missing field \"" + key + "\"");
  return j.at(key);
}

inline std::size_t size_from_json(const json& j, const std::string& where) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0))
    throw InputError(where + ": expected a nonnegative integer");
  return j.get<std::size_t>();
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Polytope documents

inline json polytope_to_json(const MatrixPolytope& p) {
  json vertices = json::array();
  for (const auto& a : p.vertices()) {
    json rows = json::array();
    for (std::size_t i = 0; i < a.rows(); ++i) {
      json row = json::array();
      for (std::size_t j = 0; j < a.cols(); ++j) row.push_back(to_string(a(i, j)));
      rows.push_back(std::move(row));
    }
    vertices.push_back(std::move(rows));
  }
  return json{{"format", kPolytopeFormat},
              {"version", kDocumentVersion},
              {"n", p.order()},
              {"m", p.vertex_count()},
              {"vertices", std::move(vertices)}};
}

inline MatrixPolytope polytope_from_json(const json& doc) {
  if (!doc.is_object()) throw InputError("polytope document: expected a JSON object");
  if (doc.contains("format") && doc["format"] != kPolytopeFormat)
    throw InputError("format: expected \"" + std::string(kPolytopeFormat) + "\"");
  if (doc.contains("version") && doc["version"] != kDocumentVersion)
    throw InputError("version: unsupported version " + doc["version"].dump());
  const json& vs = detail::field(doc, "vertices", "polytope document");
  if (!vs.is_array() || vs.empty()) throw InputError("vertices: expected a nonempty array of matrices");

  std::optional<std::size_t> n;
  if (doc.contains("n")) n = detail::size_from_json(doc["n"], "n");
  if (doc.contains("m")) {
    std::size_t m = detail::size_from_json(doc["m"], "m");
    if (m != vs.size())
      throw InputError("m: declared " + std::to_string(m) + " vertices, found " + std::to_string(vs.size()));
  }
  std::vector<RationalMatrix> vertices;
  for (std::size_t k = 0; k < vs.size(); ++k) {
    const std::string vname = "vertex " + std::to_string(k + 1);
    const json& rows = vs[k];
    if (!rows.is_array() || rows.empty()) throw InputError(vname + ": expected a nonempty array of rows");
    if (!n) n = rows.size();
    if (rows.size() != *n)
      throw InputError(vname + ": expected " + std::to_string(*n) + " rows, found " + std::to_string(rows.size()));
    RationalMatrix a(*n, *n);
    for (std::size_t i = 0; i < *n; ++i) {
      const std::string rname = vname + ", row " + std::to_string(i + 1);
      if (!rows[i].is_array()) throw InputError(rname + ": expected an array of entries");
      if (rows[i].size() != *n)
        throw InputError(rname + ": expected " + std::to_string(*n) + " entries, found " +
                         std::to_string(rows[i].size()));
      for (std::size_t j = 0; j < *n; ++j)
        a(i, j) = detail::rational_from_json(rows[i][j], rname + ", column " + std::to_string(j + 1));
    }
    vertices.push_back(std::move(a));
  }
  return MatrixPolytope(std::move(vertices));
}

/// Digest of the canonical form of a polytope (independent of how its entries were spelled).
inline std::string polytope_digest(const MatrixPolytope& p) { return hex_digest(polytope_to_json(p).dump()); }

// ---------------------------------------------------------------------------
// Words and positivity verdicts

inline json word_to_json(const Word& w) {
  json out = json::array();
  for (const auto& theta : w) {
    json perm = json::array();
    for (unsigned k : theta.images) perm.push_back(k + 1);
    out.push_back(std::move(perm));
  }
  return out;
}

inline Word word_from_json(const json& j, const std::string& where) {
  if (!j.is_array()) throw InputError(where + ": expected an array of permutations");
  Word out;
  for (const auto& perm : j) {
    if (!perm.is_array()) throw InputError(where + ": expected a permutation array");
    Permutation theta;
    for (const auto& k : perm) {
      std::size_t v = detail::size_from_json(k, where);
      if (v == 0) throw InputError(where + ": permutation entries are 1-based");
      theta.images.push_back(static_cast<unsigned>(v - 1));
    }
    if (!is_permutation(theta)) throw InputError(where + ": not a permutation");
    out.push_back(std::move(theta));
  }
  return out;
}

inline PositivityStatus positivity_status_from_string(const std::string& s) {
  for (auto st : {PositivityStatus::Positive, PositivityStatus::NotPositive, PositivityStatus::NotPositiveByBound,
                  PositivityStatus::Unresolved})
    if (s == to_string(st)) return st;
  throw InputError("status: unknown positivity status \"" + s + "\"");
}

inline json positivity_to_json(const PositivityVerdict& v, bool include_timing = true) {
  json out{{"status", to_string(v.status)},
           {"depth_reached", v.depth_reached},
           {"depth_limit", v.depth_limit},
           {"nodes_expanded", v.nodes_expanded},
           {"nodes_generated", v.nodes_generated},
           {"coeff_bound", to_string(v.coeff_bound)},
           {"theoretical_bound", v.theoretical_bound ? json(to_string(*v.theoretical_bound)) : json(nullptr)},
           {"note", v.note}};
  if (v.witness) {
    out["witness"] = json{{"word", word_to_json(v.witness->word)},
                          {"vertex", v.witness->vertex + 1},
                          {"point", detail::rationals_to_json(v.witness->point)},
                          {"value", to_string(v.witness->value)}};
  } else {
    out["witness"] = nullptr;
  }
  json leaves = json::array();
  for (const auto& l : v.certificate.leaves) leaves.push_back(json{{"word", word_to_json(l.word)}, {"digest", l.digest}});
  json aliases = json::array();
  for (const auto& a : v.certificate.aliases)
    aliases.push_back(json{{"word", word_to_json(a.word)}, {"target", word_to_json(a.target)}});
  out["certificate"] = json{{"leaves", std::move(leaves)}, {"aliases", std::move(aliases)}};
  if (include_timing) out["seconds"] = v.seconds;
  return out;
}

inline PositivityVerdict positivity_from_json(const json& j) {
  const std::string where = "positivity";
  PositivityVerdict v;
  v.status = positivity_status_from_string(detail::field(j, "status", where).get<std::string>());
  v.depth_reached = detail::size_from_json(detail::field(j, "depth_reached", where), "depth_reached");
  v.depth_limit = detail::size_from_json(detail::field(j, "depth_limit", where), "depth_limit");
  v.nodes_expanded = detail::size_from_json(detail::field(j, "nodes_expanded", where), "nodes_expanded");
  v.nodes_generated = detail::size_from_json(detail::field(j, "nodes_generated", where), "nodes_generated");
  v.coeff_bound = detail::rational_from_json(detail::field(j, "coeff_bound", where), "coeff_bound").get_num();
  if (j.contains("theoretical_bound") && !j["theoretical_bound"].is_null())
    v.theoretical_bound = detail::rational_from_json(j["theoretical_bound"], "theoretical_bound").get_num();
  if (j.contains("note")) v.note = j["note"].get<std::string>();
  if (j.contains("witness") && !j["witness"].is_null()) {
    const json& w = j["witness"];
    PositivityWitness pw;
    pw.word = word_from_json(detail::field(w, "word", "witness"), "witness.word");
    std::size_t vertex = detail::size_from_json(detail::field(w, "vertex", "witness"), "witness.vertex");
    if (vertex == 0) throw InputError("witness.vertex: vertices are 1-based");
    pw.vertex = vertex - 1;
    pw.point = detail::rationals_from_json(detail::field(w, "point", "witness"), "witness.point");
    pw.value = detail::rational_from_json(detail::field(w, "value", "witness"), "witness.value");
    v.witness = std::move(pw);
  }
  if (j.contains("certificate")) {
    const json& c = j["certificate"];
    for (const auto& l : detail::field(c, "leaves", "certificate"))
      v.certificate.leaves.push_back({word_from_json(detail::field(l, "word", "leaf"), "leaf.word"),
                                      detail::field(l, "digest", "leaf").get<std::string>()});
    for (const auto& a : detail::field(c, "aliases", "certificate"))
      v.certificate.aliases.push_back({word_from_json(detail::field(a, "word", "alias"), "alias.word"),
                                       word_from_json(detail::field(a, "target", "alias"), "alias.target")});
  }
  if (j.contains("seconds")) v.seconds = j["seconds"].get<double>();
  return v;
}

// ---------------------------------------------------------------------------
// Stability verdicts

inline json routh_hurwitz_to_json(const RouthHurwitzReport& r) {
  return json{{"stable", r.stable()},
              {"char_poly", detail::rationals_to_json(r.char_poly)},
              {"minors", detail::rationals_to_json(r.minors)},
              {"failing_minor", r.failing_minor ? json(*r.failing_minor) : json(nullptr)}};
}

inline RouthHurwitzReport routh_hurwitz_from_json(const json& j, const std::string& where) {
  RouthHurwitzReport r;
  r.char_poly = detail::rationals_from_json(detail::field(j, "char_poly", where), where + ".char_poly");
  r.minors = detail::rationals_from_json(detail::field(j, "minors", where), where + ".minors");
  if (j.contains("failing_minor") && !j["failing_minor"].is_null())
    r.failing_minor = detail::size_from_json(j["failing_minor"], where + ".failing_minor");
  return r;
}

inline json evidence_to_json(const StabilityVerdict& v) {
  if (v.unstable_vertex) {
    const auto& report = v.vertices.at(*v.unstable_vertex).report;
    return json{{"kind", "unstable_vertex"},
                {"vertex", *v.unstable_vertex + 1},
                {"failing_minor", *report.failing_minor}};
  }
  if (v.witness) {
    return json{{"kind", "point_witness"},
                {"form", to_string(v.witness->form)},
                {"point", detail::rationals_to_json(v.witness->point)},
                {"form_value", to_string(v.witness->form_value)},
                {"routh_hurwitz", routh_hurwitz_to_json(v.witness->routh_hurwitz)}};
  }
  switch (v.status) {
    case StabilityStatus::RobustlyStable: {
      json digests = json::object();
      auto cert_digest = [](const PositivityVerdict& p) { return hex_digest(positivity_to_json(p, false)["certificate"].dump()); };
      if (v.a0) digests["a0"] = cert_digest(*v.a0);
      if (v.delta) digests["delta"] = cert_digest(*v.delta);
      return json{{"kind", "positivity_certificates"}, {"certificate_digests", std::move(digests)}};
    }
    case StabilityStatus::NotStable:
      return json{{"kind", "bound_refutation"}};
    case StabilityStatus::Unresolved: {
      json report{{"kind", "unresolved"}};
      for (auto [name, r] : {std::pair{"a0", &v.a0}, std::pair{"delta", &v.delta}}) {
        if (!*r) continue;
        report[name] = json{{"status", to_string((*r)->status)},
                            {"depth_limit", (*r)->depth_limit},
                            {"theoretical_bound", (*r)->theoretical_bound ? json(to_string(*(*r)->theoretical_bound))
                                                                         : json(nullptr)},
                            {"note", (*r)->note}};
      }
      return report;
    }
  }
  return json{{"kind", "none"}};
}

inline json verdict_to_json(const StabilityVerdict& v, const std::string& input_digest, bool include_timing = true) {
  json vertices = json::array();
  for (const auto& vc : v.vertices) {
    json e = routh_hurwitz_to_json(vc.report);
    e["vertex"] = vc.vertex + 1;
    vertices.push_back(std::move(e));
  }
  json out{{"format", kVerdictFormat},
           {"version", kDocumentVersion},
           {"tool_version", kToolVersion},
           {"input_digest", input_digest},
           {"status", to_string(v.status)},
           {"n", v.n},
           {"m", v.m},
           {"evidence", evidence_to_json(v)},
           {"vertices", std::move(vertices)},
           {"positivity",
            json{{"a0", v.a0 ? positivity_to_json(*v.a0, include_timing) : json(nullptr)},
                 {"delta", v.delta ? positivity_to_json(*v.delta, include_timing) : json(nullptr)}}}};
  if (include_timing)
    out["timings"] = json{{"vertices", v.timings.vertices},
                          {"symbolic", v.timings.symbolic},
                          {"a0", v.timings.a0},
                          {"delta", v.timings.delta},
                          {"total", v.timings.total}};
  return out;
}

inline StabilityVerdict verdict_from_json(const json& j) {
  if (!j.is_object() || j.value("format", "") != kVerdictFormat)
    throw InputError("format: not a " + std::string(kVerdictFormat) + " document");
  if (j.value("version", 0) != kDocumentVersion) throw InputError("version: unsupported verdict version");
  StabilityVerdict v;
  const std::string status = detail::field(j, "status", "verdict").get<std::string>();
  bool known = false;
  for (auto st : {StabilityStatus::RobustlyStable, StabilityStatus::NotStable, StabilityStatus::Unresolved})
    if (status == to_string(st)) {
      v.status = st;
      known = true;
    }
  if (!known) throw InputError("status: unknown stability status \"" + status + "\"");
  v.n = detail::size_from_json(detail::field(j, "n", "verdict"), "n");
  v.m = detail::size_from_json(detail::field(j, "m", "verdict"), "m");
  for (const auto& e : detail::field(j, "vertices", "verdict")) {
    std::size_t k = detail::size_from_json(detail::field(e, "vertex", "vertices"), "vertices.vertex");
    if (k == 0) throw InputError("vertices.vertex: vertices are 1-based");
    v.vertices.push_back({k - 1, routh_hurwitz_from_json(e, "vertices")});
  }
  const json& ev = detail::field(j, "evidence", "verdict");
  const std::string kind = detail::field(ev, "kind", "evidence").get<std::string>();
  if (kind == "unstable_vertex") {
    std::size_t k = detail::size_from_json(detail::field(ev, "vertex", "evidence"), "evidence.vertex");
    if (k == 0) throw InputError("evidence.vertex: vertices are 1-based");
    v.unstable_vertex = k - 1;
  } else if (kind == "point_witness") {
    PointWitness w;
    const std::string form = detail::field(ev, "form", "evidence").get<std::string>();
    if (form != "a0" && form != "delta") throw InputError("evidence.form: expected \"a0\" or \"delta\"");
    w.form = form == "a0" ? StabilityForm::A0 : StabilityForm::Delta;
    w.point = detail::rationals_from_json(detail::field(ev, "point", "evidence"), "evidence.point");
    w.form_value = detail::rational_from_json(detail::field(ev, "form_value", "evidence"), "evidence.form_value");
    w.routh_hurwitz = routh_hurwitz_from_json(detail::field(ev, "routh_hurwitz", "evidence"), "evidence.routh_hurwitz");
    v.witness = std::move(w);
  }
  const json& pos = detail::field(j, "positivity", "verdict");
  if (pos.contains("a0") && !pos["a0"].is_null()) v.a0 = positivity_from_json(pos["a0"]);
  if (pos.contains("delta") && !pos["delta"].is_null()) v.delta = positivity_from_json(pos["delta"]);
  if (j.contains("timings")) {
    const json& t = j["timings"];
    v.timings = {t.value("vertices", 0.0), t.value("symbolic", 0.0), t.value("a0", 0.0), t.value("delta", 0.0),
                 t.value("total", 0.0)};
  }
  return v;
}

}  // namespace polystab
