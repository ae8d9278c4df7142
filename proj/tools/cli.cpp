#include "cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <cmath>
#include <fstream>
#include <json.hpp>
#include <optional>
#include <ostream>
#include <thread>

#include "chg/bounds.hpp"
#include "chg/constructions.hpp"
#include "chg/error.hpp"
#include "chg/rng.hpp"
#include "chg/search.hpp"
#include "chg/set_io.hpp"
#include "chg/verify.hpp"

namespace chg::cli {

namespace {

using json = nlohmann::json;
using Clock = std::chrono::steady_clock;

struct Common {
  unsigned threads = std::max(1u, std::thread::hardware_concurrency());
  std::uint64_t subset_cap = ExecOptions{}.subset_cap;
  std::uint64_t node_cap = kDefaultNodeCap;

  ExecOptions exec() const { return {subset_cap, threads}; }
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--threads", c.threads, "Worker threads (results do not depend on it)")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--subset-cap", c.subset_cap, "Max h-subsets enumerated per verification");
  cmd->add_option("--node-cap", c.node_cap, "Max search nodes per n");
}

json bound(std::string formula, double value, json args) {
  return {{"formula", std::move(formula)}, {"value", value}, {"args", std::move(args)}};
}

json elem_json(const GroupDescriptor& g, const Elem& e) {
  if (g.kind() == GroupKind::kInterval) return e.coords[0] + 1;
  return e.coords;
}

json pattern_json(const GSet& s) {
  // Patterns are shapes, so interval patterns stay 0-based offsets.
  json out = json::array();
  for (const auto& e : s.elems()) {
    out.push_back(s.group().kind() == GroupKind::kInterval ? json(e.coords[0])
                                                           : json(e.coords));
  }
  return out;
}

json verdict_json(const GroupDescriptor& g, const Verdict& v, std::string property) {
  json out{{"property", std::move(property)}, {"holds", v.holds}};
  if (v.witness) {
    json bases = json::array();
    for (const auto& b : v.witness->bases) bases.push_back(elem_json(g, b));
    out["witness"] = {{"pattern", pattern_json(v.witness->pattern)}, {"bases", bases}};
  }
  return out;
}

std::string chg_name(int h, int g, bool weak) {
  return std::string(weak ? "weak " : "") + "C_" + std::to_string(h) + "[" +
         std::to_string(g) + "]";
}

class Report {
 public:
  explicit Report(std::string command) : start_(Clock::now()) {
    j_["schema"] = 1;
    j_["command"] = std::move(command);
    j_["versions"] = {{"artifact", CHG_VERSION_STRING}, {"rng", std::string(kRngName)}};
  }

  json& operator[](const char* key) { return j_[key]; }

  void set_group(const GroupDescriptor& g) {
    j_["group"] = g.to_string();
    if (g.kind() == GroupKind::kInterval) {
      j_["interval_convention"] = "elements reported 1-based in [n]";
    }
  }

  void add_bound(json b) { j_["bounds"].push_back(std::move(b)); }

  void emit(std::ostream& out) {
    j_["elapsed_ms"] = std::chrono::duration_cast<std::chrono::milliseconds>(
                           Clock::now() - start_)
                           .count();
    out << j_.dump(2) << '\n';
  }

 private:
  json j_;
  Clock::time_point start_;
};

// Auto-verification of constructed sets; skipped (not failed) above the cap.
int attach_verdict(Report& r, const GSet& s, int h, int g, const Common& c) {
  try {
    auto v = verify_chg(s.group(), s, h, g, c.exec());
    r["verdict"] = verdict_json(s.group(), v, chg_name(h, g, false));
    return v.holds ? kOk : kVerificationFailed;
  } catch (const ResourceError& e) {
    r["verdict"] = nullptr;
    r["verification_skipped"] = e.what();
    return kOk;
  }
}

void add_size_bounds(Report& r, const GSet& s, int h, int g) {
  const auto& group = s.group();
  const double size = static_cast<double>(s.size());
  if (group.is_group()) {
    const double n = static_cast<double>(group.order());
    const double b = eq3_group(n, h, g);
    auto entry = bound("eq3_group", b, {{"n", group.order()}, {"h", h}, {"g", g}});
    entry["slack"] = b - size;
    r.add_bound(entry);
  } else {
    const double n = static_cast<double>(group.modulus());
    const double b = eq3_group(2 * n, h, g);
    auto entry = bound("eq3_group", b, {{"n", 2 * group.modulus()}, {"h", h}, {"g", g},
                                        {"via", "interval_to_cyclic"}});
    entry["slack"] = b - size;
    r.add_bound(entry);
    auto main = bound("thm1_main", thm1_main(n, h, g), {{"n", group.modulus()}, {"h", h}, {"g", g}});
    main["error_term_order"] = thm1_error_order(h);
    r.add_bound(main);
  }
}

void maybe_write(const std::string& path, const GSet& s, Report& r) {
  if (path.empty()) return;
  write_set_file(path, s);
  r["out"] = path;
}

// ---------------------------------------------------------------------------

struct SphereArgs {
  std::optional<std::int64_t> p;
  std::optional<std::int64_t> embed;
  std::string out;
};

int cmd_sphere(const SphereArgs& a, const Common& c, std::ostream& out) {
  Report r("construct sphere");
  std::optional<GSet> set;
  std::int64_t p = 0;
  if (a.embed) {
    p = embedding_prime(*a.embed);
    if (a.p && *a.p != p) {
      throw PreconditionError("--p " + std::to_string(*a.p) +
                              " differs from the largest odd prime with 4p^3 <= n (" +
                              std::to_string(p) + ")");
    }
    set = embedded_c33(*a.embed);
    r["params"] = {{"p", p}, {"alpha", sphere_alpha(p)}, {"embed_n", *a.embed}, {"base", 2 * p}};
    const double scale = std::cbrt(static_cast<double>(*a.embed) / 4.0);
    r["ratio_to_quarter_n_pow_two_thirds"] = static_cast<double>(set->size()) / (scale * scale);
  } else {
    if (!a.p) throw PreconditionError("construct sphere needs --p or --embed");
    p = *a.p;
    set = sphere_set(p);
    r["params"] = {{"p", p}, {"alpha", sphere_alpha(p)}};
  }
  r.set_group(set->group());
  r["set_size"] = set->size();
  r["size_lower_bound"] = bound("sphere_min_size", static_cast<double>(p * p - p), {{"p", p}});
  add_size_bounds(r, *set, 3, 3);
  const int code = attach_verdict(r, *set, 3, 3, c);
  maybe_write(a.out, *set, r);
  r.emit(out);
  return code;
}

struct NormArgs {
  std::int64_t q = 0;
  int h = 0;
  bool embed = false;
  std::string out;
};

int cmd_norm(const NormArgs& a, const Common& c, std::ostream& out) {
  Report r("construct norm");
  auto ns = norm_set(a.q, a.h);
  json modulus = ns.modulus;
  r["params"] = {{"q", a.q}, {"h", a.h}, {"g", ns.g}, {"modulus_coeffs_low_to_high", modulus},
                 {"embed", a.embed}};
  GSet set = a.embed ? freiman_embed(2 * a.q, ns.set) : ns.set;
  r.set_group(set.group());
  r["set_size"] = set.size();
  r["expected_size"] = bound("norm_one_count", static_cast<double>((ns.set.group().order() - 1) / (a.q - 1)),
                             {{"q", a.q}, {"h", a.h}});
  add_size_bounds(r, set, a.h, ns.g);
  const int code = attach_verdict(r, set, a.h, ns.g, c);
  maybe_write(a.out, set, r);
  r.emit(out);
  return code;
}

struct WeakArgs {
  std::int64_t n = 0;
  int h = 0;
  int g = 0;
  std::uint64_t seed = 0;
  int max_attempts = 64;
  std::string out;
};

json attempts_json(const std::vector<AttemptStats>& attempts) {
  json arr = json::array();
  for (const auto& a : attempts) {
    arr.push_back({{"seed", a.seed}, {"sample_size", a.sample_size}, {"bad_size", a.bad_size}});
  }
  return arr;
}

int cmd_weak(const WeakArgs& a, const Common& c, std::ostream& out) {
  Report r("construct weak");
  r["params"] = {{"n", a.n}, {"h", a.h}, {"g", a.g}, {"max_attempts", a.max_attempts}};
  r["seed"] = a.seed;
  const auto d = np_density(static_cast<double>(a.n), a.h, a.g);
  r.add_bound(bound("np_density.p", d.p, {{"n", a.n}, {"h", a.h}, {"g", a.g}}));
  r.add_bound(bound("np_density.np", d.np, {{"n", a.n}, {"h", a.h}, {"g", a.g}}));
  r.add_bound(bound("thm5_lower", thm5_lower(static_cast<double>(a.n), a.h, a.g),
                    {{"n", a.n}, {"h", a.h}, {"g", a.g}}));
  r.set_group(GroupDescriptor::interval(a.n));
  try {
    auto res = weak_random_set(a.n, a.h, a.g, a.seed, a.max_attempts, c.exec());
    r["attempts"] = res.attempts_used;
    r["attempt_log"] = attempts_json(res.attempts);
    r["sizes"] = {{"sample", res.sample_size}, {"bad", res.bad_size}, {"result", res.set.size()}};
    r["set_size"] = res.set.size();
    r["verdict"] = verdict_json(res.set.group(), Verdict{true, std::nullopt}, chg_name(a.h, a.g, true));
    maybe_write(a.out, res.set, r);
    r.emit(out);
    return kOk;
  } catch (const ExhaustionError& e) {
    r["attempts"] = a.max_attempts;
    r["attempt_log"] = attempts_json(e.attempts());
    r["error"] = {{"kind", "retry_exhausted"}, {"message", e.what()}};
    r.emit(out);
    throw;
  }
}

struct VerifyArgs {
  std::string set_path;
  int h = 0;
  int g = 0;
  bool weak = false;
};

int cmd_verify(const VerifyArgs& a, const Common& c, std::ostream& out) {
  Report r("verify");
  auto set = read_set_file(a.set_path);
  r["params"] = {{"set", a.set_path}, {"h", a.h}, {"g", a.g}, {"weak", a.weak}};
  r.set_group(set.group());
  r["set_size"] = set.size();
  auto v = a.weak ? verify_weak_chg(set.group(), set, a.h, a.g, c.exec())
                  : verify_chg(set.group(), set, a.h, a.g, c.exec());
  r["verdict"] = verdict_json(set.group(), v, chg_name(a.h, a.g, a.weak));
  if (!a.weak) add_size_bounds(r, set, a.h, a.g);
  r.emit(out);
  return v.holds ? kOk : kVerificationFailed;
}

struct SearchArgs {
  std::int64_t n_max = 0;
  int h = 0;
  int g = 0;
  std::string csv;
};

int cmd_search(const SearchArgs& a, const Common& c, std::ostream& out) {
  Report r("search");
  r["params"] = {{"n_max", a.n_max}, {"h", a.h}, {"g", a.g}, {"node_cap", c.node_cap}};
  r.set_group(GroupDescriptor::interval(a.n_max));
  const auto rows = max_table(a.n_max, a.h, a.g, c.node_cap);
  json table = json::array();
  std::ofstream csv;
  if (!a.csv.empty()) {
    csv.open(a.csv);
    if (!csv) throw StructuralError("cannot write " + a.csv);
    csv << "n,best_size,optimal,greedy_size,bound_eq3,thm1_main\n";
    csv.precision(10);
  }
  bool all_optimal = true;
  for (const auto& row : rows) {
    const auto greedy = greedy_chg(row.n, a.h, a.g).size();
    const double eq3 = eq3_group(2.0 * static_cast<double>(row.n), a.h, a.g);
    const double t1 = thm1_main(static_cast<double>(row.n), a.h, a.g);
    all_optimal = all_optimal && row.optimal;
    table.push_back({{"n", row.n}, {"best_size", row.best_size}, {"optimal", row.optimal},
                     {"greedy_size", greedy}, {"bound_eq3", eq3}, {"thm1_main", t1},
                     {"nodes", row.nodes}});
    if (csv.is_open()) {
      csv << row.n << ',' << row.best_size << ',' << (row.optimal ? "true" : "false") << ','
          << greedy << ',' << eq3 << ',' << t1 << '\n';
    }
  }
  r["table"] = table;
  r["set_size"] = rows.empty() ? 0 : rows.back().best_size;
  if (!a.csv.empty()) r["csv"] = a.csv;
  r.emit(out);
  return all_optimal ? kOk : kResourceCap;
}

struct ZArgs {
  std::string set_path;
  int g = 0;
  int h = 0;
  std::string pbm;
};

int cmd_zmatrix(const ZArgs& a, const Common& c, std::ostream& out) {
  Report r("zmatrix");
  auto set = read_set_file(a.set_path);
  r["params"] = {{"set", a.set_path}, {"g", a.g}, {"h", a.h}};
  r.set_group(set.group());
  r["set_size"] = set.size();
  auto m = build_zmatrix(set.group(), set);
  auto v = check_kgh_free(m, a.g, a.h, c.subset_cap);
  r["zmatrix"] = {{"n", m.n()}, {"ones", m.ones()}, {"row_sums_uniform", m.row_sums_uniform()},
                  {"g", a.g}, {"h", a.h}, {"kgh_free", v.holds}};
  r["verdict"] = verdict_json(set.group(), v, "K_{" + std::to_string(a.g) + "," +
                                                  std::to_string(a.h) + "}-free");
  if (m.n() >= a.g && a.g >= a.h && a.h >= 1) {
    const double n = static_cast<double>(m.n());
    r.add_bound(bound("eq2_furedi", eq2_furedi(n, n, a.g, a.h),
                      {{"m", m.n()}, {"n", m.n()}, {"s", a.g}, {"t", a.h}}));
  }
  if (!a.pbm.empty()) {
    std::ofstream pbm(a.pbm);
    if (!pbm) throw StructuralError("cannot write " + a.pbm);
    write_pbm(pbm, m);
    r["pbm"] = a.pbm;
  }
  r.emit(out);
  return v.holds ? kOk : kVerificationFailed;
}

struct BoundsArgs {
  double n = 0;
  int h = 0;
  int g = 0;
  std::optional<double> m, s, t;
};

int cmd_bounds(const BoundsArgs& a, std::ostream& out) {
  Report r("bounds");
  r["params"] = {{"n", a.n}, {"h", a.h}, {"g", a.g}};
  const json args{{"n", a.n}, {"h", a.h}, {"g", a.g}};
  auto t1 = bound("thm1_main", thm1_main(a.n, a.h, a.g), args);
  t1["error_term_order"] = thm1_error_order(a.h);
  r.add_bound(t1);
  r.add_bound(bound("eq3_group", eq3_group(a.n, a.h, a.g), args));
  r.add_bound(bound("thm5_lower", thm5_lower(a.n, a.h, a.g), args));
  try {
    const auto d = np_density(a.n, a.h, a.g);
    auto entry = bound("np_density.np", d.np, args);
    entry["p"] = d.p;
    entry["residual"] = d.residual;
    r.add_bound(entry);
  } catch (const PreconditionError& e) {
    r["np_density_unavailable"] = e.what();
  }
  if (a.m || a.s || a.t) {
    if (!(a.m && a.s && a.t)) throw PreconditionError("--m, --s and --t go together");
    r.add_bound(bound("eq2_furedi", eq2_furedi(*a.m, a.n, *a.s, *a.t),
                      {{"m", *a.m}, {"n", a.n}, {"s", *a.s}, {"t", *a.t}}));
  }
  r.emit(out);
  return kOk;
}

void emit_error(std::ostream& out, const std::string& kind, const std::string& message) {
  json j{{"schema", 1}, {"error", {{"kind", kind}, {"message", message}}}};
  out << j.dump(2) << '\n';
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Construct and verify C_h[g]-sets (generalized Sidon sets)", "chgsets"};
  // "--h" is a parameter name here, so help is long-form only.
  app.set_help_flag("--help", "Print this help message and exit");
  app.require_subcommand(1);
  Common common;
  std::function<int()> action;

  auto* construct = app.add_subcommand("construct", "Build a set from an explicit construction");
  construct->require_subcommand(1);

  SphereArgs sphere;
  auto* c_sphere = construct->add_subcommand("sphere", "Sphere x1^2+x2^2+x3^2 = alpha in F_p^3");
  c_sphere->add_option("--p", sphere.p, "Odd prime");
  c_sphere->add_option("--embed", sphere.embed, "Embed into [N] with the largest fitting prime");
  c_sphere->add_option("--out", sphere.out, "Write the set file here");
  add_common(c_sphere, common);
  c_sphere->callback([&] { action = [&] { return cmd_sphere(sphere, common, out); }; });

  NormArgs normv;
  auto* c_norm = construct->add_subcommand("norm", "Norm-one elements of F_{q^h}");
  c_norm->add_option("--q", normv.q, "Prime base field order")->required();
  c_norm->add_option("--h", normv.h, "Extension degree")->required();
  c_norm->add_flag("--embed", normv.embed, "Map into Z with base 2q");
  c_norm->add_option("--out", normv.out, "Write the set file here");
  add_common(c_norm, common);
  c_norm->callback([&] { action = [&] { return cmd_norm(normv, common, out); }; });

  WeakArgs weak;
  auto* c_weak = construct->add_subcommand("weak", "Random weak C_h[g]-set in [n]");
  c_weak->add_option("--n", weak.n)->required();
  c_weak->add_option("--h", weak.h)->required();
  c_weak->add_option("--g", weak.g)->required();
  c_weak->add_option("--seed", weak.seed)->required();
  c_weak->add_option("--max-attempts", weak.max_attempts, "Retries before giving up")
      ->capture_default_str();
  c_weak->add_option("--out", weak.out, "Write the set file here");
  add_common(c_weak, common);
  c_weak->callback([&] { action = [&] { return cmd_weak(weak, common, out); }; });

  VerifyArgs ver;
  auto* c_verify = app.add_subcommand("verify", "Decide the C_h[g] property of a set file");
  c_verify->add_option("--set", ver.set_path)->required();
  c_verify->add_option("--h", ver.h)->required();
  c_verify->add_option("--g", ver.g)->required();
  c_verify->add_flag("--weak", ver.weak, "Check the weak property instead");
  add_common(c_verify, common);
  c_verify->callback([&] { action = [&] { return cmd_verify(ver, common, out); }; });

  SearchArgs search;
  auto* c_search = app.add_subcommand("search", "Exact maximum C_h[g]-sets in [n], n = 1..n_max");
  c_search->add_option("--n-max", search.n_max)->required();
  c_search->add_option("--h", search.h)->required();
  c_search->add_option("--g", search.g)->required();
  c_search->add_option("--csv", search.csv, "Write the table as CSV");
  add_common(c_search, common);
  c_search->callback([&] { action = [&] { return cmd_search(search, common, out); }; });

  ZArgs z;
  auto* c_z = app.add_subcommand("zmatrix", "Build M[i][j] = [b_i + b_j in A] and test K_{g,h}-freeness");
  c_z->add_option("--set", z.set_path)->required();
  c_z->add_option("--g", z.g)->required();
  c_z->add_option("--h", z.h)->required();
  c_z->add_option("--pbm", z.pbm, "Write the matrix as plain PBM");
  add_common(c_z, common);
  c_z->callback([&] { action = [&] { return cmd_zmatrix(z, common, out); }; });

  BoundsArgs bnd;
  auto* c_bounds = app.add_subcommand("bounds", "Evaluate the size bounds");
  c_bounds->add_option("--n", bnd.n)->required();
  c_bounds->add_option("--h", bnd.h)->required();
  c_bounds->add_option("--g", bnd.g)->required();
  c_bounds->add_option("--m", bnd.m);
  c_bounds->add_option("--s", bnd.s);
  c_bounds->add_option("--t", bnd.t);
  c_bounds->callback([&] { action = [&] { return cmd_bounds(bnd, out); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kParameterError;
  }

  try {
    return action();
  } catch (const ExhaustionError& e) {
    err << "error: " << e.what() << '\n';
    return kRetryExhausted;
  } catch (const ResourceError& e) {
    err << "error: " << e.what() << '\n';
    emit_error(out, "resource_cap", e.what());
    return kResourceCap;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << '\n';
    emit_error(out, "parameter", e.what());
    return kParameterError;
  } catch (const StructuralError& e) {
    err << "error: " << e.what() << '\n';
    emit_error(out, "parameter", e.what());
    return kParameterError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    emit_error(out, "internal", e.what());
    return kInternal;
  }
}

}  // namespace chg::cli
