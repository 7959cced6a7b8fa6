// polystab: command-line front end.
//
// Exit codes
//   check:      0 ROBUSTLY_STABLE, 1 NOT_STABLE, 2 UNRESOLVED
//   positivity: 0 POSITIVE, 1 NOT_POSITIVE / NOT_POSITIVE_BY_BOUND, 2 UNRESOLVED
//   verify:     0 evidence verified, 1 verification failed
//   3 invalid input or usage, 4 I/O failure, 5 internal error

#include "polystab/polystab.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace fs = std::filesystem;
using namespace polystab;

namespace {

constexpr int kExitInput = 3;
constexpr int kExitIo = 4;
constexpr int kExitInternal = 5;

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path.string());
  out << text;
  if (!out) throw IoError("cannot write " + path.string());
}

json parse_json(const std::string& text, const std::string& what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(what + ": malformed JSON (" + e.what() + ")");
  }
}

struct SearchFlags {
  std::optional<std::size_t> max_depth;
  bool full_bound = false;
  std::size_t jobs = 1;
  bool deterministic = false;
  std::size_t max_nodes = PositivityOptions{}.node_limit;
  std::string format = "json";

  void add_to(CLI::App* cmd) {
    cmd->add_option("--max-depth", max_depth, "WDS depth cap (default 20, never above the theoretical bound)");
    cmd->add_flag("--full-bound", full_bound, "search up to the theoretical depth bound");
    cmd->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
    cmd->add_flag("--deterministic", deterministic,
                  "canonical witness order and byte-reproducible output (no timings)");
    cmd->add_option("--max-nodes", max_nodes, "node budget per form, 0 for unlimited");
    cmd->add_option("--format", format, "output format")->check(CLI::IsMember({"json", "text"}));
  }

  PositivityOptions options() const {
    PositivityOptions o;
    o.max_depth = max_depth;
    o.full_bound = full_bound;
    o.jobs = jobs;
    o.deterministic = deterministic || jobs == 1;
    o.node_limit = max_nodes;
    return o;
  }
};

std::string point_text(const std::vector<Rational>& q) {
  std::string s = "(";
  for (std::size_t i = 0; i < q.size(); ++i) s += (i ? ", " : "") + to_string(q[i]);
  return s + ")";
}

void print_positivity_text(const PositivityVerdict& v, std::ostream& out) {
  out << "status: " << to_string(v.status) << "\n"
      << "depth reached: " << v.depth_reached << " (limit " << v.depth_limit << ")\n"
      << "nodes: " << v.nodes_expanded << " expanded, " << v.nodes_generated << " generated\n"
      << "coefficient bound M: " << v.coeff_bound << "\n"
      << "theoretical bound: " << (v.theoretical_bound ? to_string(*v.theoretical_bound) : "n/a") << "\n";
  if (v.witness)
    out << "witness: " << point_text(v.witness->point) << " value " << to_string(v.witness->value) << "\n";
  if (v.status == PositivityStatus::Positive)
    out << "certificate: " << v.certificate.leaves.size() << " good leaves, " << v.certificate.aliases.size()
        << " aliases\n";
  if (!v.note.empty()) out << "note: " << v.note << "\n";
}

int positivity_exit(PositivityStatus s) {
  switch (s) {
    case PositivityStatus::Positive: return 0;
    case PositivityStatus::NotPositive:
    case PositivityStatus::NotPositiveByBound: return 1;
    case PositivityStatus::Unresolved: return 2;
  }
  return kExitInternal;
}

int stability_exit(StabilityStatus s) {
  switch (s) {
    case StabilityStatus::RobustlyStable: return 0;
    case StabilityStatus::NotStable: return 1;
    case StabilityStatus::Unresolved: return 2;
  }
  return kExitInternal;
}

int run_check(const std::string& input, const SearchFlags& flags) {
  const MatrixPolytope p = polytope_from_json(parse_json(read_file(input), input));
  CheckOptions opts;
  opts.positivity = flags.options();
  const StabilityVerdict v = check_polytope(p, opts);
  if (flags.format == "json") {
    std::cout << verdict_to_json(v, polytope_digest(p), !flags.deterministic).dump(2) << "\n";
  } else {
    std::cout << "status: " << to_string(v.status) << "\n"
              << "n = " << v.n << ", m = " << v.m << "\n";
    if (v.unstable_vertex) {
      std::cout << "vertex " << *v.unstable_vertex + 1 << " is not Hurwitz stable (Delta_"
                << *v.vertices[*v.unstable_vertex].report.failing_minor << " <= 0)\n";
    } else {
      std::cout << "all " << v.m << " vertices are Hurwitz stable\n";
    }
    for (auto [name, r] : {std::pair{"a0", &v.a0}, std::pair{"Delta_{n-1}", &v.delta}}) {
      if (!*r) continue;
      std::cout << "-- " << name << "\n";
      print_positivity_text(**r, std::cout);
    }
    if (v.witness)
      std::cout << "A(q*) is not Hurwitz stable at q* = " << point_text(v.witness->point) << " ("
                << to_string(v.witness->form) << "(q*) = " << to_string(v.witness->form_value) << ")\n";
  }
  return stability_exit(v.status);
}

int run_positivity(const std::string& text, const std::string& file, std::size_t vars, const SearchFlags& flags) {
  if (text.empty() == file.empty()) throw InputError("give exactly one of a polynomial or --file");
  const std::string source = file.empty() ? text : read_file(file);
  const Form f = parse_form(source, vars);
  const PositivityVerdict v = check_positivity(f, flags.options());
  if (flags.format == "json") {
    json out{{"format", kPositivityFormat},
             {"version", kDocumentVersion},
             {"tool_version", kToolVersion},
             {"form", to_string(f)},
             {"num_vars", f.num_vars()},
             {"degree", f.degree()},
             {"verdict", positivity_to_json(v, !flags.deterministic)}};
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "form: " << to_string(f) << "\n";
    print_positivity_text(v, std::cout);
  }
  return positivity_exit(v.status);
}

int run_gen(std::size_t n, std::size_t m, std::uint64_t seed, std::size_t count, unsigned digits,
            const std::string& out_dir) {
  std::error_code ec;
  fs::create_directories(out_dir, ec);
  if (ec) throw IoError("cannot create " + out_dir + ": " + ec.message());
  for (std::size_t i = 0; i < count; ++i) {
    GeneratorConfig cfg;
    cfg.n = n;
    cfg.m = m;
    cfg.sig_digits = digits;
    cfg.seed = instance_seed(seed, n, m, i);
    json doc = polytope_to_json(generate_polytope(cfg));
    doc["generator"] = json{{"seed", seed}, {"index", i}, {"instance_seed", cfg.seed}, {"sig_digits", digits},
                            {"shift_target", to_string(cfg.shift_target)}};
    char name[96];
    std::snprintf(name, sizeof name, "polytope_n%zu_m%zu_%03zu.json", n, m, i);
    write_file(fs::path(out_dir) / name, doc.dump(2) + "\n");
  }
  return 0;
}

int run_bound(const std::string& M, unsigned long m, unsigned long d) {
  Integer bound_m;
  try {
    bound_m = Integer(M);
  } catch (const std::invalid_argument&) {
    throw InputError("M: expected a positive integer");
  }
  if (m == 1) throw InputError("m = 1: the simplex S_1 is a single point, positivity is decided by the lone coefficient");
  if (m < 2 || d < 1 || bound_m < 1) throw InputError("bound requires M >= 1, m >= 2, d >= 1");
  try {
    std::cout << cp_bound(bound_m, m, d) << "\n";
  } catch (const std::overflow_error& e) {
    throw InputError(e.what());
  }
  return 0;
}

std::vector<std::pair<std::size_t, std::size_t>> parse_pairs(const std::string& text) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto x = item.find('x');
    if (x == std::string::npos) throw InputError("--pairs: expected items like 2x3, got \"" + item + "\"");
    try {
      out.emplace_back(std::stoul(item.substr(0, x)), std::stoul(item.substr(x + 1)));
    } catch (const std::exception&) {
      throw InputError("--pairs: expected items like 2x3, got \"" + item + "\"");
    }
    if (out.back().first < 1 || out.back().second < 1) throw InputError("--pairs: n and m must be >= 1");
  }
  if (out.empty()) throw InputError("--pairs: no (n,m) pairs given");
  return out;
}

int run_bench(const std::string& pairs, std::size_t count, std::uint64_t seed, const SearchFlags& flags,
              const std::string& csv_path, const std::string& json_path) {
  BenchmarkConfig cfg;
  cfg.pairs = parse_pairs(pairs);
  cfg.count = count;
  cfg.seed = seed;
  cfg.jobs = flags.jobs;
  cfg.positivity = flags.options();
  const auto rows = run_benchmark(cfg);

  std::ostringstream csv;
  csv << "n,m,stable,unstable,unresolved,total_seconds,max_seconds,nodes\n";
  json table = json::array();
  std::size_t failures = 0;
  for (const auto& r : rows) {
    char line[256];
    std::snprintf(line, sizeof line, "%zu,%zu,%zu,%zu,%zu,%.6f,%.6f,%zu\n", r.n, r.m, r.stable, r.unstable,
                  r.unresolved, r.total_seconds, r.max_seconds, r.nodes);
    csv << line;
    table.push_back(json{{"n", r.n},
                         {"m", r.m},
                         {"stable", r.stable},
                         {"unstable", r.unstable},
                         {"unresolved", r.unresolved},
                         {"total_seconds", r.total_seconds},
                         {"max_seconds", r.max_seconds},
                         {"nodes", r.nodes},
                         {"verification_failures", r.verification_failures},
                         {"consistency_failures", r.consistency_failures}});
    failures += r.verification_failures + r.consistency_failures;
  }
  if (!csv_path.empty()) write_file(csv_path, csv.str());
  if (!json_path.empty())
    write_file(json_path, json{{"seed", seed}, {"count", count}, {"rows", table}}.dump(2) + "\n");
  std::cout << csv.str();
  if (failures) std::cerr << "certificate or consistency failures: " << failures << "\n";
  return failures ? 1 : 0;
}

int run_verify(const std::string& polytope_path, const std::string& verdict_path) {
  const MatrixPolytope p = polytope_from_json(parse_json(read_file(polytope_path), polytope_path));
  const json doc = parse_json(read_file(verdict_path), verdict_path);
  const StabilityVerdict v = verdict_from_json(doc);
  if (doc.value("input_digest", "") != polytope_digest(p)) {
    std::cout << "FAILED: verdict was produced for a different polytope\n";
    return 1;
  }
  const CheckResult r = verify_certificate(p, v);
  std::cout << (r.ok ? "verified" : "FAILED: " + r.message) << "\n";
  return r.ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact robust Hurwitz stability checker for polytopes of rational matrices"};
  app.set_version_flag("--version", kToolVersion);
  app.require_subcommand(1);

  SearchFlags flags;

  std::string check_input;
  auto* check = app.add_subcommand("check", "decide robust Hurwitz stability of a polytope document");
  check->add_option("input", check_input, "polytope JSON file")->required();
  flags.add_to(check);

  std::string poly_text, poly_file;
  std::size_t poly_vars = 0;
  auto* positivity = app.add_subcommand("positivity", "decide strict positivity of a form on the simplex");
  positivity->add_option("polynomial", poly_text, "form such as \"x1^2 - x1*x2 + x2^2\"");
  positivity->add_option("--file", poly_file, "read the form from a file");
  positivity->add_option("--vars", poly_vars, "number of variables (default: highest index used)");
  flags.add_to(positivity);

  std::size_t gen_n = 2, gen_m = 2, gen_count = 1;
  std::uint64_t gen_seed = 0;
  unsigned gen_digits = 4;
  std::string gen_out;
  auto* gen = app.add_subcommand("gen", "generate random polytopes with stable vertices");
  gen->add_option("--n", gen_n, "matrix order")->check(CLI::PositiveNumber);
  gen->add_option("--m", gen_m, "vertex count")->check(CLI::PositiveNumber);
  gen->add_option("--seed", gen_seed, "RNG seed");
  gen->add_option("--count", gen_count, "number of polytopes");
  gen->add_option("--sig-digits", gen_digits, "decimal digits of the random entries")->check(CLI::PositiveNumber);
  gen->add_option("--out", gen_out, "output directory")->required();

  std::string bound_M;
  unsigned long bound_m = 0, bound_d = 0;
  auto* bound = app.add_subcommand("bound", "print the WDS depth bound C_p(M, m, d)");
  bound->add_option("M", bound_M, "coefficient magnitude bound")->required();
  bound->add_option("m", bound_m, "number of variables")->required();
  bound->add_option("d", bound_d, "degree")->required();

  std::string bench_pairs = "2x2,2x3,3x2,3x3", bench_csv, bench_json;
  std::size_t bench_count = 10;
  std::uint64_t bench_seed = 0;
  auto* bench = app.add_subcommand("bench", "benchmark random polytopes per (n,m)");
  bench->add_option("--pairs", bench_pairs, "comma separated n x m pairs, e.g. 2x2,3x3");
  bench->add_option("--count", bench_count, "polytopes per pair");
  bench->add_option("--seed", bench_seed, "RNG seed");
  bench->add_option("--csv", bench_csv, "write the CSV table here");
  bench->add_option("--json", bench_json, "write the JSON table here");
  flags.add_to(bench);

  std::string verify_polytope, verify_verdict;
  auto* verify = app.add_subcommand("verify", "re-check a verdict document against its polytope");
  verify->add_option("polytope", verify_polytope, "polytope JSON file")->required();
  verify->add_option("verdict", verify_verdict, "verdict JSON file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitInput;
  }

  try {
    if (*check) return run_check(check_input, flags);
    if (*positivity) return run_positivity(poly_text, poly_file, poly_vars, flags);
    if (*gen) return run_gen(gen_n, gen_m, gen_seed, gen_count, gen_digits, gen_out);
    if (*bound) return run_bound(bound_M, bound_m, bound_d);
    if (*bench) return run_bench(bench_pairs, bench_count, bench_seed, flags, bench_csv, bench_json);
    if (*verify) return run_verify(verify_polytope, verify_verdict);
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::invalid_argument& e) {
    // InputError, ParseError, DimensionError and malformed polytopes.
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitInternal;
}
