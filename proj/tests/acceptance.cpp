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


// Acceptance suite. Prints one PASS/FAIL line per criterion, with indented
// detail lines underneath.
//
//   acceptance [--criterion K]... [--strict] [--quiet]
//
// Exit status is 0 once every selected criterion has been evaluated; with
// --strict it is 1 when any of them failed.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdarg>
#include <cstdlib>
#include <cstring>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "qftmcu/qftmcu.hpp"

namespace {

using namespace qftmcu;

bool g_quiet = false;

void detail(const char* fmt, ...) __attribute__((format(printf, 1, 2)));
void detail(const char* fmt, ...) {
  if (g_quiet) return;
  std::va_list ap;
  va_start(ap, fmt);
  std::fputs("    ", stdout);
  std::vprintf(fmt, ap);
  std::fputc('\n', stdout);
  va_end(ap);
}

SynthConfig config(Method m, int n, const Unitary2& u) {
  SynthConfig c;
  c.method = m;
  c.n = n;
  c.u = u;
  return c;
}

std::vector<Unitary2> random_unitaries(std::uint64_t seed, int count) {
  Rng rng(seed);
  std::vector<Unitary2> v;
  for (int i = 0; i < count; ++i) v.push_back(random_rational_unitary(rng, false));
  return v;
}

const char* mname(Method m) { return method_name(m).data(); }

// ------------------------------------------------------------------ 1

bool oracle_equivalence() {
  const auto us = random_unitaries(2026, 50);
  bool ok = true;
  int checked = 0;
  double worst = 0.0;
  for (Method m : {Method::McxQft, Method::McuMod, Method::McuZyz, Method::Ldd})
    for (ArchKind arch : {ArchKind::FC, ArchKind::LNN}) {
      double worst_here = 0.0;
      for (int n = m == Method::Ldd ? 3 : 2; n <= 9; ++n) {
        // Every draw is X for mcx-qft, so one check covers all 50.
        const int draws = m == Method::McxQft ? 1 : static_cast<int>(us.size());
        for (int i = 0; i < draws; ++i) {
          const SynthConfig cfg = config(m, n, us[i]);
          const RouteResult r = route(synthesize(cfg), arch);
          const Verdict v = verify_against_oracle(r.circuit, target_unitary(cfg), r.final_layout, 1e-9);
          ++checked;
          worst_here = std::max(worst_here, v.deviation);
          if (!v.pass) {
            ok = false;
            detail("%s %s n=%d draw %d: deviation %.3e", mname(m), arch_name(arch).data(), n, i,
                   v.deviation);
          }
        }
      }
      detail("%-8s %-3s worst deviation %.2e", mname(m), arch_name(arch).data(), worst_here);
      worst = std::max(worst, worst_here);
    }
  detail("%d circuits checked, worst deviation %.2e (tolerance 1e-9)", checked, worst);
  return ok;
}

// ------------------------------------------------------------------ 2

bool slot_formulas() {
  const Unitary2 u = random_unitaries(7, 1)[0];
  bool ok = true;
  for (int n = 4; n <= 20; ++n) {
    const int mod = schedule_slots(synthesize(config(Method::McuMod, n, u))).total;
    const int zyz = schedule_slots(synthesize(config(Method::McuZyz, n, u))).total;
    SynthConfig plain = config(Method::McxQft, n, u);
    plain.optimize = false;
    const int mcx0 = schedule_slots(synthesize(plain)).total;
    const int mcx1 = schedule_slots(synthesize(config(Method::McxQft, n, u))).total;
    const bool row = mod == 8 * n - 18 && zyz >= 8 * n - 12 && zyz <= 8 * n - 12 + 3 && mcx0 - mcx1 == 8;
    if (!row || n == 4 || n == 20)
      detail("n=%2d mcu-mod %d (8n-18=%d)  mcu-zyz %d (8n-12=%d, +<=3)  mcx-qft %d -> %d", n, mod,
             8 * n - 18, zyz, 8 * n - 12, mcx0, mcx1);
    ok = ok && row;
  }
  return ok;
}

// ------------------------------------------------------------------ 3

bool count_formulas() {
  const Unitary2 u = random_unitaries(8, 1)[0];
  bool ok = true;
  for (int n = 4; n <= 20; ++n) {
    const GateCounts mod = count_gates(synthesize(config(Method::McuMod, n, u)));
    const GateCounts zyz = count_gates(synthesize(config(Method::McuZyz, n, u)));
    SynthConfig a = config(Method::McuMod, n, u);
    const int m = ceil_log2(n);
    a.aqft_cutoff = m;
    const GateCounts aq = count_gates(synthesize(a));
    const bool mod_ok = mod.h() == 4 * (n - 3) && mod.cphase() == 2 * (n - 1) * (n - 3) &&
                        mod.cu2() == 2 * n - 3 && mod.cx() == 2;
    const bool zyz_ok = zyz.h() == 4 * (n - 2) && zyz.cphase() == 2 * n * (n - 2) && zyz.cx() == 2;
    const bool aq_ok = aq.cphase() == 2 * (m - 1) * (2 * n - 3 - m) && aq.cu2() == 2 * (m - 1);
    if (!(mod_ok && zyz_ok && aq_ok) || n == 4 || n == 20) {
      detail("n=%2d mcu-mod H %d CP %d CU2 %d CX %d | mcu-zyz H %d CP %d CX %d | AQFT(m=%d) CP %d CU2 %d",
             n, mod.h(), mod.cphase(), mod.cu2(), mod.cx(), zyz.h(), zyz.cphase(), zyz.cx(), m,
             aq.cphase(), aq.cu2());
    }
    ok = ok && mod_ok && zyz_ok && aq_ok;
  }
  return ok;
}

// ------------------------------------------------------------------ 4

bool within(double measured, double target, double tol) {
  return std::abs(measured - target) <= tol * target;
}

bool native_metrics_vs_reference() {
  const Unitary2 u = random_unitaries(9, 1)[0];
  bool ok = true;
  for (Method m : {Method::McuMod, Method::McuZyz}) {
    int depth_miss = 0, cx_miss = 0;
    for (int n = 5; n <= 14; ++n) {
      const MetricsReport r = measure(config(m, n, u), ArchKind::FC);
      const bool d_ok = within(r.native_depth, r.reference->depth, 0.10);
      const bool c_ok = within(r.cx, r.reference->cx, 0.10);
      depth_miss += !d_ok;
      cx_miss += !c_ok;
      detail("%s n=%2d depth %3d vs %3.0f (%+6.1f%%)%s  cx %3d vs %3.0f (%+6.1f%%)%s", mname(m), n,
             r.native_depth, r.reference->depth, 100 * *r.depth_deviation, d_ok ? "" : " !", r.cx,
             r.reference->cx, 100 * *r.cx_deviation, c_ok ? "" : " !");
      ok = ok && d_ok && c_ok;
    }
    detail("%s: depth outside 10%% at %d of 10 widths, CX outside 10%% at %d of 10", mname(m),
           depth_miss, cx_miss);
  }
  return ok;
}

// ------------------------------------------------------------------ 5

bool identity_battery_holds() {
  bool ok = true;
  for (const IdentityResult& r : identity_battery(1, 100)) {
    detail("%-58s %.2e", r.name.c_str(), r.max_deviation);
    ok = ok && r.draws == 100 && r.max_deviation <= 1e-12;
  }
  return ok;
}

// ------------------------------------------------------------------ 6

bool zyz_abc_roots() {
  Rng rng(6);
  double abc_i = 0.0, abc_u = 0.0, roots = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const Unitary2 u = haar_unitary(rng);
    const AbcDecomposition d = abc_decompose(u);
    const auto& [a, b, c] = d.abc;
    abc_i = std::max(abc_i, max_abs_diff(a * b * c, gates::identity()));
    const Unitary2 back = (a * gates::x() * b * gates::x() * c).scaled(std::polar(1.0, d.delta));
    abc_u = std::max(abc_u, max_abs_diff(back, u));
    for (int m = 1; m <= 8; ++m) {
      Unitary2 p = root(u, m);
      for (int k = 1; k < m; ++k) p = p * p;
      roots = std::max(roots, max_abs_diff(p, u));
    }
  }
  detail("max |ABC - I| %.2e, max |e^{i delta} AXBXC - U| %.2e, max root power error (m<=8) %.2e",
         abc_i, abc_u, roots);
  return abc_i <= 1e-12 && abc_u <= 1e-12 && roots <= 1e-11;
}

// ------------------------------------------------------------------ 7

bool ldd_simplification() {
  const Unitary2 u = random_unitaries(10, 1)[0];
  bool ok = true;
  for (int n = 3; n <= 12; ++n) {
    const Circuit ldd = build_ldd(config(Method::Ldd, n, u));
    const PassResult r = ldd_to_qft(ldd);
    const Circuit mod = cp_to_crz(build_mcu_mod(config(Method::McuMod, n, u))).circuit;
    const bool same = !r.report.refused && structurally_equal(r.circuit, mod);
    bool unitary_ok = true;
    if (n <= 8) {
      unitary_ok = equal_up_to_global_phase(circuit_unitary(ldd), circuit_unitary(r.circuit), 1e-9).equivalent;
    }
    bool ratio_ok = true;
    double ratio = 0.0;
    if (n >= 5) {
      const int before = count_gates(lower_to_ngs(ldd)).total();
      const int after = count_gates(lower_to_ngs(r.circuit)).total();
      ratio = double(before) / after;
      ratio_ok = ratio >= 1.5;
    }
    detail("n=%2d round trip %s%s%s", n, same ? "equal" : "DIFFERENT",
           n <= 8 ? (unitary_ok ? ", unitary kept" : ", UNITARY CHANGED") : "",
           n >= 5 ? (std::string(", native total ratio ") + std::to_string(ratio).substr(0, 5) +
                     (ratio_ok ? "" : " (< 1.5)")).c_str()
                  : "");
    ok = ok && same && unitary_ok && ratio_ok;
  }
  return ok;
}

// ------------------------------------------------------------------ 8

bool aqft_monotonic() {
  bool ok = true;
  for (int n : {6, 8})
    for (const Unitary2& u : random_unitaries(11 + n, 5)) {
      const CMatrix full = circuit_unitary(synthesize(config(Method::McuMod, n, u)));
      double prev = INFINITY;
      std::string trace;
      bool mono = true;
      for (int m = 1; m <= n; ++m) {
        SynthConfig cfg = config(Method::McuMod, n, u);
        cfg.aqft_cutoff = m;
        const double d = max_abs_diff(circuit_unitary(synthesize(cfg)), full);
        mono = mono && d <= prev + 1e-12;
        prev = d;
        char buf[32];
        std::snprintf(buf, sizeof buf, " %.2e", d);
        trace += buf;
      }
      const bool row = mono && prev <= 1e-10;
      if (!row || u.entries() == random_unitaries(11 + n, 1)[0].entries())
        detail("n=%d distance by m_max:%s%s", n, trace.c_str(), row ? "" : "  (not monotone)");
      ok = ok && row;
    }
  return ok;
}

// ------------------------------------------------------------------ 9

double r_squared(const std::vector<double>& x, const std::vector<double>& y) {
  const double n = double(x.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0, syy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
    sxx += x[i] * x[i];
    sxy += x[i] * y[i];
    syy += y[i] * y[i];
  }
  const double cov = n * sxy - sx * sy;
  return cov * cov / ((n * sxx - sx * sx) * (n * syy - sy * sy));
}

double slope(const std::vector<double>& x, const std::vector<double>& y) {
  const double n = double(x.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
    sxx += x[i] * x[i];
    sxy += x[i] * y[i];
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

bool depth_shape() {
  const Unitary2 u = random_unitaries(12, 1)[0];
  std::vector<double> ns;
  std::vector<double> depth[3];
  const Method ms[3] = {Method::McuMod, Method::McuZyz, Method::Ldd};
  bool order_ok = true;
  for (int n = 4; n <= 14; ++n) {
    ns.push_back(n);
    int d[3];
    for (int k = 0; k < 3; ++k) {
      d[k] = measure(config(ms[k], n, u), ArchKind::FC).native_depth;
      depth[k].push_back(d[k]);
    }
    const bool row = n < 7 || (d[1] <= d[0] && d[0] < d[2]);
    detail("n=%2d depth mcu-mod %3d  mcu-zyz %3d  ldd %3d%s", n, d[0], d[1], d[2], row ? "" : "  (order broken)");
    order_ok = order_ok && row;
  }
  bool linear = true;
  for (int k = 0; k < 3; ++k) {
    const double r2 = r_squared(ns, depth[k]);
    detail("%-8s linear fit R^2 %.5f, slope %.2f", mname(ms[k]), r2, slope(ns, depth[k]));
    linear = linear && r2 >= 0.99;
  }
  return linear && order_ok;
}

// ------------------------------------------------------------------ 10

bool pass_soundness() {
  const Unitary2 u = random_unitaries(13, 1)[0];
  bool ok = true;
  int checked = 0;
  double worst = 0.0;
  for (int n = 2; n <= 8; ++n) {
    std::vector<Circuit> inputs;
    for (bool opt : {false, true})
      for (Method m : {Method::McxQft, Method::McuMod, Method::McuZyz, Method::Ldd}) {
        if (m == Method::Ldd && (n < 3 || !opt)) continue;
        SynthConfig cfg = config(m, n, u);
        cfg.optimize = opt;
        inputs.push_back(synthesize(cfg));
      }
    inputs.push_back(lower_to_ngs(synthesize(config(Method::McuZyz, n, u))));
    inputs.push_back(route(synthesize(config(Method::McuMod, n, u)), ArchKind::LNN).circuit);
    for (const Circuit& c : inputs) {
      const CMatrix before = circuit_unitary(c);
      for (const std::string& name : pass_names()) {
        const PassResult r = run_pass(name, c);
        const CMatrix after = circuit_unitary(r.circuit) * std::polar(1.0, r.report.phase_shift);
        const double dev = max_abs_diff(before, after);
        const bool idem = structurally_equal(run_pass(name, r.circuit).circuit, r.circuit);
        worst = std::max(worst, dev);
        ++checked;
        if (dev > 1e-9 || !idem) {
          ok = false;
          detail("%s n=%d: deviation %.2e%s", name.c_str(), n, dev, idem ? "" : ", not idempotent");
        }
      }
    }
  }
  detail("%d pass applications, worst deviation %.2e", checked, worst);
  return ok;
}

struct Criterion {
  int id;
  const char* title;
  std::function<bool()> run;
};

}  // namespace

int main(int argc, char** argv) {
  std::set<int> only;
  bool strict = false;
  for (int i = 1; i < argc; ++i) {
    if (!std::strcmp(argv[i], "--strict")) {
      strict = true;
    } else if (!std::strcmp(argv[i], "--quiet")) {
      g_quiet = true;
    } else if (!std::strcmp(argv[i], "--criterion") && i + 1 < argc) {
      only.insert(std::atoi(argv[++i]));
    } else {
      std::fprintf(stderr, "usage: %s [--criterion K]... [--strict] [--quiet]\n", argv[0]);
      return 2;
    }
  }

  const std::vector<Criterion> all = {
      {1, "oracle equivalence, all methods, FC and LNN, n in [2, 9]", oracle_equivalence},
      {2, "abstract slot formulas", slot_formulas},
      {3, "gate count formulas incl. AQFT", count_formulas},
      {4, "native depth and CX within 10% of reference formulas", native_metrics_vs_reference},
      {5, "identity battery <= 1e-12", identity_battery_holds},
      {6, "ZYZ/ABC decomposition and roots", zyz_abc_roots},
      {7, "LDD round trip and native ratio >= 1.5", ldd_simplification},
      {8, "AQFT error non-increasing in cutoff", aqft_monotonic},
      {9, "native depth linear in n, ordering mcu-zyz <= mcu-mod < ldd", depth_shape},
      {10, "pass soundness and idempotence", pass_soundness},
  };

  int failed = 0, evaluated = 0;
  for (const Criterion& c : all) {
    if (!only.empty() && !only.count(c.id)) continue;
    const auto t0 = std::chrono::steady_clock::now();
    bool pass = false;
    try {
      pass = c.run();
    } catch (const std::exception& e) {
      detail("exception: %s", e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("%s criterion %d: %s (%.1fs)\n", pass ? "PASS" : "FAIL", c.id, c.title, secs);
    std::fflush(stdout);
    failed += !pass;
    ++evaluated;
  }
  std::printf("%d of %d criteria passed\n", evaluated - failed, evaluated);
  return strict && failed ? 1 : 0;
}
