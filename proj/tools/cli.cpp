// Copyright 2026 The qftmcu Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "cli.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iterator>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qftmcu/qftmcu.hpp"

namespace qftmcu::cli {
namespace {

using json = nlohmann::json;

constexpr double kVerifyTol = 1e-9;
constexpr double kBatteryTol = 1e-12;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct VerificationFailed : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string method = "mcu-mod";
  std::string n_text;
  std::string n_range;
  std::string arch = "fc";
  std::optional<int> aqft;
  std::string u_name;
  std::string angles;
  std::optional<std::uint64_t> seed;
  bool su2 = false;
  std::vector<std::string> passes;
  std::string out;
  std::string format;
  std::string in;
  std::vector<std::string> methods;
  std::string ladder = "plus-block";
  bool unoptimized = false;
  bool crz = false;
  bool native = false;
  int draws = 100;
};

int parse_int(const std::string& s, const char* what) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(s, &used);
  } catch (const std::exception&) {
    throw UsageError(std::string(what) + ": not an integer: '" + s + "'");
  }
  if (used != s.size()) throw UsageError(std::string(what) + ": not an integer: '" + s + "'");
  return v;
}

std::pair<int, int> parse_range(const std::string& s) {
  const auto dots = s.find("..");
  if (dots == std::string::npos) {
    const int v = parse_int(s, "--n");
    return {v, v};
  }
  const int a = parse_int(s.substr(0, dots), "--n-range");
  const int b = parse_int(s.substr(dots + 2), "--n-range");
  if (a > b) throw UsageError("empty range '" + s + "'");
  return {a, b};
}

/// Widths requested by --n or --n-range.
std::pair<int, int> widths(const Options& o) {
  if (!o.n_range.empty() && !o.n_text.empty())
    throw UsageError("give either --n or --n-range, not both");
  if (!o.n_range.empty()) return parse_range(o.n_range);
  if (!o.n_text.empty()) return parse_range(o.n_text);
  throw UsageError("--n is required");
}

int single_width(const Options& o) {
  auto [a, b] = widths(o);
  if (a != b) throw UsageError("this command takes a single width");
  return a;
}

Method parse_method(const std::string& s) {
  try {
    return method_from_name(s);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

ArchKind parse_arch(const std::string& s) {
  try {
    return arch_from_name(s);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

std::vector<double> split_reals(const std::string& s) {
  std::vector<double> v;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    double x = 0;
    try {
      x = std::stod(item, &used);
    } catch (const std::exception&) {
      throw UsageError("--angles: not a number: '" + item + "'");
    }
    if (used != item.size()) throw UsageError("--angles: not a number: '" + item + "'");
    v.push_back(x);
  }
  return v;
}

Unitary2 named_gate(std::string name) {
  std::transform(name.begin(), name.end(), name.begin(),
                 [](unsigned char ch) { return static_cast<char>(std::toupper(ch)); });
  if (name == "X") return gates::x();
  if (name == "Z") return gates::z();
  if (name == "H") return gates::h();
  if (name == "S") return gates::s();
  if (name == "T") return gates::t();
  throw UsageError("--u: unknown gate '" + name + "' (expected X, Z, H, S or T)");
}

struct TargetGate {
  Unitary2 u = gates::x();
  json spec = "X";
};

TargetGate resolve_u(const Options& o) {
  TargetGate t;
  if (!o.angles.empty()) {
    const auto v = split_reals(o.angles);
    if (v.size() != 4) throw UsageError("--angles expects d,a,t,b");
    t.u = reconstruct(ZyzAngles{v[0], v[1], v[2], v[3]});
    t.spec = json{{"delta", v[0]}, {"alpha", v[1]}, {"theta", v[2]}, {"beta", v[3]}};
  } else if (o.seed) {
    Rng rng(*o.seed);
    t.u = random_rational_unitary(rng, o.su2);
    t.spec = json{{"seed", *o.seed}, {"group", o.su2 ? "SU(2)" : "U(2)"}};
  } else if (!o.u_name.empty()) {
    t.u = named_gate(o.u_name);
    t.spec = o.u_name;
  }
  return t;
}

json entries_json(const Unitary2& u) {
  json a = json::array();
  for (const cplx& z : u.entries()) {
    a.push_back(z.real());
    a.push_back(z.imag());
  }
  return a;
}

Unitary2 entries_from_json(const json& a) {
  const auto v = a.get<std::vector<double>>();
  if (v.size() != 8) throw std::invalid_argument("meta.u must hold 8 reals");
  return Unitary2({cplx{v[0], v[1]}, cplx{v[2], v[3]}, cplx{v[4], v[5]}, cplx{v[6], v[7]}}, 1e-9);
}

SynthConfig make_config(const Options& o, Method m, int n, const Unitary2& u) {
  SynthConfig cfg;
  cfg.method = m;
  cfg.n = n;
  cfg.u = u;
  cfg.aqft_cutoff = o.aqft;
  cfg.optimize = !o.unoptimized;
  try {
    cfg.phase_ladder_side = ladder_side_from_name(o.ladder);
    cfg.validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  return cfg;
}

json report_json(const PassReport& r) {
  json j{{"pass", r.pass},
         {"gates_before", r.gates_before},
         {"gates_after", r.gates_after},
         {"slots_before", r.slots_before},
         {"slots_after", r.slots_after},
         {"phase_shift", r.phase_shift},
         {"refused", r.refused}};
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

void check_pass_names(const std::vector<std::string>& passes) {
  const auto known = pass_names();
  for (const auto& p : passes)
    if (std::find(known.begin(), known.end(), p) == known.end())
      throw UsageError("--optimize: unknown pass '" + p + "'");
}

Circuit apply_passes(Circuit c, const std::vector<std::string>& passes, json& reports) {
  for (const auto& p : passes) {
    PassResult r = run_pass(p, c);
    reports.push_back(report_json(r.report));
    c = std::move(r.circuit);
  }
  return c;
}

/// A circuit together with what is needed to check it.
struct Artifact {
  Circuit circuit;
  json meta = json::object();
};

std::vector<int> identity_layout(int n) {
  std::vector<int> v(n);
  for (int i = 0; i < n; ++i) v[i] = i + 1;
  return v;
}

Artifact synthesize_artifact(const Options& o, bool route_it) {
  const TargetGate t = resolve_u(o);
  const Method m = parse_method(o.method);
  const ArchKind arch = parse_arch(o.arch);
  check_pass_names(o.passes);
  const SynthConfig cfg = make_config(o, m, single_width(o), t.u);

  Artifact a;
  json reports = json::array();
  a.circuit = apply_passes(synthesize(cfg), o.passes, reports);
  a.meta["method"] = method_name(m);
  a.meta["n"] = cfg.n;
  a.meta["arch"] = arch_name(arch);
  if (cfg.aqft_cutoff) a.meta["aqft_cutoff"] = *cfg.aqft_cutoff;
  a.meta["optimize"] = cfg.optimize;
  a.meta["u_spec"] = t.spec;
  a.meta["u"] = entries_json(target_unitary(cfg));
  if (!reports.empty()) a.meta["passes"] = reports;
  std::vector<int> layout = identity_layout(cfg.n);
  if (route_it) {
    RouteResult r = route(a.circuit, arch);
    a.circuit = std::move(r.circuit);
    layout = r.final_layout;
    a.meta["swaps_inserted"] = r.swaps_inserted;
  }
  a.meta["final_layout"] = layout;
  return a;
}

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot read '" + path + "'");
  return std::string(std::istreambuf_iterator<char>(f), {});
}

Artifact load_artifact(const std::string& path) {
  const std::string text = read_file(path);
  Artifact a;
  a.circuit = circuit_from_json(text);
  const json j = json::parse(text);
  if (j.contains("meta")) a.meta = j["meta"];
  return a;
}

std::string artifact_text(const Artifact& a) {
  json j = json::parse(to_json(a.circuit));
  j["meta"] = a.meta;
  return j.dump(2) + "\n";
}

void emit(const Options& o, const std::string& text, std::ostream& out) {
  if (o.out.empty()) {
    out << text;
    return;
  }
  std::ofstream f(o.out, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write '" + o.out + "'");
  f << text;
  if (!f) throw std::runtime_error("write to '" + o.out + "' failed");
}

std::string format_or(const Options& o, const char* fallback) {
  const std::string f = o.format.empty() ? fallback : o.format;
  if (f != "json" && f != "csv") throw UsageError("--format must be json or csv");
  return f;
}

// ---------------------------------------------------------------- commands

int cmd_synth(const Options& o, std::ostream& out) {
  if (format_or(o, "json") != "json") throw UsageError("synth writes JSON only");
  emit(o, artifact_text(synthesize_artifact(o, true)), out);
  return kOk;
}

int cmd_optimize(const Options& o, std::ostream& out) {
  if (format_or(o, "json") != "json") throw UsageError("optimize writes JSON only");
  if (o.passes.empty()) throw UsageError("optimize needs --optimize PASS[,PASS...]");
  check_pass_names(o.passes);
  Artifact a;
  if (!o.in.empty()) {
    a = load_artifact(o.in);
  } else {
    Options plain = o;
    plain.passes.clear();
    a = synthesize_artifact(plain, false);
  }
  json reports = a.meta.contains("passes") ? a.meta["passes"] : json::array();
  a.circuit = apply_passes(a.circuit, o.passes, reports);
  a.meta["passes"] = reports;
  emit(o, artifact_text(a), out);
  return kOk;
}

/// Position of logical basis state `logical` after the final layout.
std::size_t physical_index(std::size_t logical, const std::vector<int>& layout) {
  std::size_t p = 0;
  for (std::size_t l = 0; l < layout.size(); ++l)
    if ((logical >> l) & 1u) p |= std::size_t{1} << (layout[l] - 1);
  return p;
}

/// Column-by-column comparison on chosen basis inputs, for widths beyond the
/// dense-unitary cap.
Verdict verify_sampled(const Circuit& c, const Unitary2& u, const std::vector<int>& layout,
                       std::uint64_t seed, int samples) {
  const int n = c.n;
  const std::size_t dim = std::size_t{1} << n;
  const std::size_t top = std::size_t{1} << (n - 1);
  const std::size_t ones = top - 1;
  std::vector<std::size_t> inputs{ones, ones | top, 0, top, ones & ~std::size_t{1},
                                  (ones & ~std::size_t{1}) | top};
  Rng rng(seed);
  for (int k = 0; k < samples; ++k)
    inputs.push_back(static_cast<std::size_t>(rng.uniform_int(0, static_cast<std::int64_t>(dim - 1))));

  Verdict v;
  std::optional<cplx> phase;
  double dev = 0.0;
  for (std::size_t in : inputs) {
    // Routing starts from the identity layout; only outputs are permuted.
    StateVector s = apply_statevector(c, StateVector::basis(n, in));
    // Expected column of the oracle.
    std::vector<std::pair<std::size_t, cplx>> expect;
    if ((in & ones) == ones) {
      const int col = (in & top) ? 1 : 0;
      expect = {{ones, u(0, col)}, {ones | top, u(1, col)}};
    } else {
      expect = {{in, cplx{1.0}}};
    }
    if (!phase) {
      const auto& [idx, amp] = *std::max_element(
          expect.begin(), expect.end(),
          [](const auto& a, const auto& b) { return std::abs(a.second) < std::abs(b.second); });
      const cplx got = s.amplitudes[physical_index(idx, layout)];
      phase = std::abs(got) > 0 ? got / amp / std::abs(got / amp) : cplx{1.0};
    }
    double err2 = 0.0;
    double covered = 0.0;
    for (const auto& [idx, amp] : expect) {
      const cplx got = s.amplitudes[physical_index(idx, layout)];
      dev = std::max(dev, std::abs(got - *phase * amp));
      covered += std::norm(got);
    }
    // Leakage outside the expected support.
    err2 = std::max(0.0, s.norm() * s.norm() - covered);
    dev = std::max(dev, std::sqrt(err2));
  }
  v.deviation = dev;
  v.phase = std::arg(*phase);
  v.pass = dev <= kVerifyTol;
  return v;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const std::string fmt = format_or(o, "json");
  Artifact a;
  Unitary2 u;
  if (!o.in.empty()) {
    a = load_artifact(o.in);
    if (a.meta.contains("u")) {
      u = entries_from_json(a.meta["u"]);
    } else if (!o.u_name.empty() || !o.angles.empty() || o.seed) {
      u = resolve_u(o).u;
    } else {
      throw UsageError("circuit carries no meta.u; give --u, --angles or --seed");
    }
  } else {
    a = synthesize_artifact(o, true);
    u = entries_from_json(a.meta["u"]);
  }
  std::vector<int> layout = a.meta.contains("final_layout")
                                ? a.meta["final_layout"].get<std::vector<int>>()
                                : identity_layout(a.circuit.n);
  if (static_cast<int>(layout.size()) != a.circuit.n)
    throw std::invalid_argument("final_layout does not match the circuit width");
  Circuit c = a.circuit;
  if (o.native) c = lower_to_ngs(c);

  Verdict v;
  std::string mode;
  if (c.n <= kUnitaryWidthCap) {
    v = verify_against_oracle(c, u, layout, kVerifyTol);
    mode = "unitary";
  } else {
    v = verify_sampled(c, u, layout, o.seed.value_or(1), 32);
    mode = "statevector";
  }

  if (fmt == "json") {
    json j{{"pass", v.pass},     {"deviation", v.deviation}, {"phase", v.phase},
           {"n", c.n},           {"mode", mode},             {"tolerance", kVerifyTol},
           {"native", o.native}, {"gates", c.size()}};
    if (a.meta.contains("method")) j["method"] = a.meta["method"];
    emit(o, j.dump(2) + "\n", out);
  } else {
    char buf[256];
    std::snprintf(buf, sizeof buf, "n,mode,pass,deviation\n%d,%s,%d,%.3e\n", c.n, mode.c_str(),
                  v.pass ? 1 : 0, v.deviation);
    emit(o, buf, out);
  }
  return v.pass ? kOk : kVerificationFailed;
}

json metrics_json(const SynthConfig& cfg, ArchKind arch, const MetricsReport& r) {
  json j{{"n", cfg.n},
         {"method", method_name(cfg.method)},
         {"arch", arch_name(arch)},
         {"abstract_slots", r.abstract_slots},
         {"unrouted_slots", r.unrouted_slots},
         {"native_depth", r.native_depth},
         {"native_total", r.native_total},
         {"cx", r.cx},
         {"rz", r.rz},
         {"sx", r.sx},
         {"x", r.x},
         {"swap_inserted", r.swaps_inserted}};
  if (cfg.aqft_cutoff) j["aqft_cutoff"] = *cfg.aqft_cutoff;
  if (r.reference) {
    json p{{"depth", r.reference->depth}, {"cx", r.reference->cx}, {"rz", r.reference->rz}, {"sx", r.reference->sx}};
    if (r.reference->swaps) p["swaps"] = *r.reference->swaps;
    j["reference"] = p;
  }
  if (r.depth_deviation) j["depth_deviation"] = *r.depth_deviation;
  if (r.cx_deviation) j["cx_deviation"] = *r.cx_deviation;
  if (arch == ArchKind::LNN && cfg.method != Method::McxQft && cfg.n >= 3) {
    // The reference LNN slot figure 8n-20 can be read as extra slots on top
    // of the FC schedule or as the whole schedule. Both are reported.
    const int ref = 8 * cfg.n - 20;
    j["lnn_slots"] = json{{"reference_value", ref},
                          {"routing_extra", r.abstract_slots - r.unrouted_slots},
                          {"measured_total", r.abstract_slots},
                          {"reference_total_if_extra", r.unrouted_slots + ref},
                          {"reference_total_if_total", ref}};
  }
  return j;
}

std::vector<Method> sweep_methods(const Options& o) {
  std::vector<std::string> names = o.methods;
  if (names.empty()) names = {"mcu-mod", "mcu-zyz", "ldd"};
  std::vector<Method> ms;
  for (const auto& s : names) ms.push_back(parse_method(s));
  std::sort(ms.begin(), ms.end());
  ms.erase(std::unique(ms.begin(), ms.end()), ms.end());
  return ms;
}

int min_width(Method m) { return m == Method::Ldd ? 3 : 2; }

int cmd_metrics(const Options& o, std::ostream& out) {
  const std::string fmt = format_or(o, "csv");
  const TargetGate t = resolve_u(o);
  const ArchKind arch = parse_arch(o.arch);
  const SynthConfig cfg = make_config(o, parse_method(o.method), single_width(o), t.u);
  const MetricsReport r = measure(cfg, arch, o.crz);
  if (fmt == "csv")
    emit(o, metrics_csv_header() + "\n" + metrics_csv_row(cfg, arch, r) + "\n", out);
  else
    emit(o, metrics_json(cfg, arch, r).dump(2) + "\n", out);
  return kOk;
}

int cmd_sweep(const Options& o, std::ostream& out) {
  const std::string fmt = format_or(o, "csv");
  const TargetGate t = resolve_u(o);
  const ArchKind arch = parse_arch(o.arch);
  const auto [lo, hi] = widths(o);
  const auto methods = sweep_methods(o);
  std::string csv = metrics_csv_header() + "\n";
  json rows = json::array();
  for (int n = lo; n <= hi; ++n)
    for (Method m : methods) {
      if (n < min_width(m)) continue;
      const SynthConfig cfg = make_config(o, m, n, t.u);
      const MetricsReport r = measure(cfg, arch, o.crz);
      csv += metrics_csv_row(cfg, arch, r) + "\n";
      rows.push_back(metrics_json(cfg, arch, r));
    }
  emit(o, fmt == "csv" ? csv : rows.dump(2) + "\n", out);
  return kOk;
}

int cmd_identities(const Options& o, std::ostream& out) {
  const std::string fmt = format_or(o, "json");
  if (o.draws < 1) throw UsageError("--draws must be positive");
  const auto results = identity_battery(o.seed.value_or(1), o.draws);
  bool ok = true;
  for (const auto& r : results) ok = ok && r.max_deviation <= kBatteryTol;
  if (fmt == "json") {
    json list = json::array();
    for (const auto& r : results)
      list.push_back({{"name", r.name}, {"draws", r.draws}, {"max_deviation", r.max_deviation}});
    emit(o, json{{"identities", list}, {"tolerance", kBatteryTol}, {"pass", ok}}.dump(2) + "\n",
         out);
  } else {
    std::string csv = "name,draws,max_deviation\n";
    char buf[64];
    for (const auto& r : results) {
      std::snprintf(buf, sizeof buf, ",%d,%.3e\n", r.draws, r.max_deviation);
      csv += "\"" + r.name + "\"" + buf;
    }
    emit(o, csv, out);
  }
  return ok ? kOk : kVerificationFailed;
}

// ------------------------------------------------------------------ parser

void add_common(CLI::App* sub, Options& o) {
  sub->add_option("--method", o.method, "mcx-qft, mcu-mod, mcu-zyz or ldd");
  sub->add_option("--n", o.n_text, "Width, or a range A..B for sweep");
  sub->add_option("--n-range", o.n_range, "Width range A..B");
  sub->add_option("--arch", o.arch, "fc or lnn");
  sub->add_option("--aqft", o.aqft, "Largest root index kept")->check(CLI::PositiveNumber);
  auto* u = sub->add_option("--u", o.u_name, "Named target gate: X, Z, H, S or T");
  auto* angles = sub->add_option("--angles", o.angles, "delta,alpha,theta,beta in radians");
  auto* seed = sub->add_option("--seed", o.seed, "Seed for a random rational-angle gate");
  u->excludes(angles)->excludes(seed);
  angles->excludes(seed);
  sub->add_flag("--su2", o.su2, "Draw the random gate from SU(2)");
  sub->add_option("--optimize", o.passes, "Passes to run, comma separated")->delimiter(',');
  sub->add_option("--out", o.out, "Output path (default stdout)");
  sub->add_option("--format", o.format, "json or csv");
  sub->add_option("--ladder", o.ladder, "Phase ladder side: plus-block, minus-block, split");
  sub->add_flag("--unoptimized", o.unoptimized, "Skip phase-column merging");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"qftmcu: QFT-based multi-controlled gate synthesis"};
  app.name(args.empty() ? "qftmcu" : args[0]);
  app.require_subcommand(1);
  Options o;

  auto* synth = app.add_subcommand("synth", "Synthesize a circuit and write it as JSON");
  auto* optimize = app.add_subcommand("optimize", "Run optimizer passes on a circuit");
  auto* verify = app.add_subcommand("verify", "Check a circuit against the direct oracle");
  auto* metrics = app.add_subcommand("metrics", "Native-gate metrics for one configuration");
  auto* sweep = app.add_subcommand("sweep", "Native-gate metrics over a width range");
  auto* identities = app.add_subcommand("identities", "Evaluate the gate identity battery");
  for (auto* sub : {synth, optimize, verify, metrics, sweep}) add_common(sub, o);
  for (auto* sub : {optimize, verify}) sub->add_option("--in", o.in, "Circuit JSON to read");
  verify->add_flag("--native", o.native, "Lower to the native gate set before checking");
  for (auto* sub : {metrics, sweep}) sub->add_flag("--crz", o.crz, "Apply cp_to_crz before lowering");
  sweep->add_option("--methods", o.methods, "Methods, comma separated")->delimiter(',');
  identities->add_option("--seed", o.seed, "Seed for the parameter draws");
  identities->add_option("--draws", o.draws, "Draws per identity");
  identities->add_option("--format", o.format, "json or csv");
  identities->add_option("--out", o.out, "Output path (default stdout)");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  if (!rev.empty()) rev.pop_back();
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*synth) return cmd_synth(o, out);
    if (*optimize) return cmd_optimize(o, out);
    if (*verify) return cmd_verify(o, out);
    if (*metrics) return cmd_metrics(o, out);
    if (*sweep) return cmd_sweep(o, out);
    if (*identities) return cmd_identities(o, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kRuntime;
  }
  return kUsage;
}

}  // namespace qftmcu::cli
