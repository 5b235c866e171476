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

#include "qftmcu/layout.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "qftmcu/gate_algebra.hpp"
#include "qftmcu/optimizer.hpp"

namespace qftmcu {

namespace {

constexpr std::array<std::string_view, 2> kArchNames = {"fc", "lnn"};

bool ends_with_cx(GateKind k) {
  return k == GateKind::CX || k == GateKind::CP || k == GateKind::CRz;
}

bool same_pair(const Gate& a, const Gate& b) {
  if (!is_two_qubit(a.kind) || !is_two_qubit(b.kind)) return false;
  return (a.target == b.target && a.control == b.control) ||
         (a.target == *b.control && *a.control == b.target);
}

// Emits native gates in time order and accumulates the dropped scalar.
class Emitter {
 public:
  explicit Emitter(int n) : out_(n) {}

  void rz(int w, double a) { out_.append(Gate::single(GateKind::Rz, w, a)); }
  void sx(int w) { out_.append(Gate::single(GateKind::SX, w)); }
  void sxdg(int w) { out_.append(Gate::single(GateKind::SXdg, w)); }
  void x(int w) { out_.append(Gate::single(GateKind::X, w)); }
  void cx(int c, int t) { out_.append(Gate::controlled(GateKind::CX, c, t)); }
  void phase(double a) { out_.global_phase += a; }

  // H = e^{iπ/4}·Rz(π/2)·SX·Rz(π/2)
  void h(int w) {
    rz(w, kPi / 2);
    sx(w);
    rz(w, kPi / 2);
    phase(kPi / 4);
  }
  // Ry(θ) = SX†·Rz(θ)·SX
  void ry(int w, double theta) {
    sx(w);
    rz(w, theta);
    sxdg(w);
  }
  // P(γ) = e^{iγ/2}·Rz(γ)
  void p(int w, double gamma) {
    rz(w, gamma);
    phase(gamma / 2);
  }
  void u2(int w, const Unitary2& u) {
    const ZyzAngles a = zyz_decompose(u);
    phase(a.delta);
    rz(w, a.beta);
    if (a.theta != 0.0) ry(w, a.theta);
    rz(w, a.alpha);
  }
  void crz(int c, int t, double gamma, bool cx_first) {
    if (cx_first) {
      cx(c, t);
      rz(t, -gamma / 2);
      cx(c, t);
      rz(t, gamma / 2);
    } else {
      rz(t, gamma / 2);
      cx(c, t);
      rz(t, -gamma / 2);
      cx(c, t);
    }
  }
  // C-U = P_c(δ)·A·CX·B·CX·C with U = e^{iδ}·A·X·B·X·C.
  void cu2(int c, int t, const Unitary2& u) {
    const AbcDecomposition d = abc_decompose(u);
    const double al = d.angles.alpha, th = d.angles.theta, be = d.angles.beta;
    if (d.delta != 0.0) p(c, d.delta);
    rz(t, (be - al) / 2);
    cx(c, t);
    rz(t, -(al + be) / 2);
    ry(t, -th / 2);
    cx(c, t);
    ry(t, th / 2);
    rz(t, al);
  }
  void swap(int a, int b) {
    cx(a, b);
    cx(b, a);
    cx(a, b);
  }

  Circuit take() { return std::move(out_); }

 private:
  Circuit out_;
};

}  // namespace

std::string_view arch_name(ArchKind a) { return kArchNames[static_cast<std::size_t>(a)]; }

ArchKind arch_from_name(std::string_view name) {
  if (name == "fc" || name == "FC") return ArchKind::FC;
  if (name == "lnn" || name == "LNN") return ArchKind::LNN;
  throw std::invalid_argument("unknown architecture: " + std::string(name));
}

bool Architecture::admits(const Circuit& c) const {
  if (kind == ArchKind::FC) return true;
  for (const Gate& g : c.gates)
    if (g.control && std::abs(g.target - *g.control) != 1) return false;
  return true;
}

// ---------------------------------------------------------------- routing

namespace {

// Carried-permutation router state. pos maps logical to physical wirelines,
// at is its inverse.
struct Router {
  std::vector<int> pos, at;
  std::vector<Gate> out;
  int swaps = 0;

  explicit Router(int n) : pos(static_cast<std::size_t>(n) + 1), at(static_cast<std::size_t>(n) + 1) {
    for (int w = 1; w <= n; ++w) pos[w] = at[w] = w;
  }

  void swap_phys(int p, int q) {
    out.push_back(Gate::swap(p, q));
    ++swaps;
    std::swap(at[p], at[q]);
    pos[at[p]] = p;
    pos[at[q]] = q;
  }

  // Walks logical wireline w one step toward physical position goal.
  static void step(std::vector<int>& ps, std::vector<int>& as, int w, int goal) {
    const int p = ps[w];
    const int q = goal > p ? p + 1 : p - 1;
    std::swap(as[p], as[q]);
    ps[as[p]] = p;
    ps[as[q]] = q;
  }

  // SWAPs that plain target walking spends on the next 2n two-qubit gates,
  // starting from layout ps.
  long future(const std::vector<Gate>& gates, std::size_t from, std::vector<int> ps, std::vector<int> as) const {
    const std::size_t window = 2 * (pos.size() - 1);
    long cost = 0;
    std::size_t seen = 0;
    for (std::size_t j = from; j < gates.size() && seen < window; ++j) {
      const Gate& h = gates[j];
      if (!h.control) continue;
      ++seen;
      while (std::abs(ps[h.target] - ps[*h.control]) > 1) {
        step(ps, as, h.target, ps[*h.control]);
        ++cost;
      }
    }
    return cost;
  }

  // Routes gates[begin, end); the lookahead window may run past end.
  void route(const std::vector<Gate>& gates, std::size_t begin, std::size_t end, RouteMove move) {
    for (std::size_t i = begin; i < end; ++i) {
      const Gate& src = gates[i];
      Gate g = src;
      g.block = -1;
      g.section = Section::None;
      if (g.control) {
        const int t = src.target, u = *src.control;
        const int gap = std::abs(pos[t] - pos[u]) - 1;
        // k steps for the target, gap - k for the control, then optionally
        // exchange the pair once the gate has run.
        int k = move == RouteMove::Control ? 0 : gap;
        bool pass = false;
        if (move == RouteMove::Lookahead) {
          long best = -1;
          for (int cross = 0; cross <= 1; ++cross)
            for (int cand = gap; cand >= 0; --cand) {
              std::vector<int> ps = pos, as = at;
              for (int s = 0; s < cand; ++s) step(ps, as, t, ps[u]);
              for (int s = 0; s < gap - cand; ++s) step(ps, as, u, ps[t]);
              if (cross) step(ps, as, t, ps[u]);
              const long cost = cross + future(gates, i + 1, ps, as);
              if (best < 0 || cost < best) {
                best = cost;
                k = cand;
                pass = cross;
              }
            }
        }
        for (int s = 0; s < k; ++s) swap_phys(pos[t], pos[t] + (pos[u] > pos[t] ? 1 : -1));
        for (int s = 0; s < gap - k; ++s) swap_phys(pos[u], pos[u] + (pos[t] > pos[u] ? 1 : -1));
        g.control = pos[u];
        if (pass) {
          g.target = pos[t];
          out.push_back(std::move(g));
          swap_phys(pos[t], pos[u]);
          continue;
        }
      }
      g.target = pos[src.target];
      out.push_back(std::move(g));
    }
  }
};

}  // namespace

RouteResult route_lnn(const Circuit& c, RouteMove move) {
  Router r(c.n);
  r.route(c.gates, 0, c.gates.size(), move);
  RouteResult res;
  res.circuit = Circuit(c.n);
  res.circuit.global_phase = c.global_phase;
  res.circuit.gates = std::move(r.out);
  res.swaps_inserted = r.swaps;
  res.final_layout.assign(r.pos.begin() + 1, r.pos.end());
  return res;
}

RouteResult route(const Circuit& c, ArchKind arch) {
  if (arch == ArchKind::LNN) return route_lnn(c);
  RouteResult r;
  r.circuit = c;
  for (int w = 1; w <= c.n; ++w) r.final_layout.push_back(w);
  return r;
}

// --------------------------------------------------------------- lowering

Circuit merge_rz(const Circuit& c) {
  Circuit out(c.n);
  out.global_phase = c.global_phase;
  std::vector<long> open(static_cast<std::size_t>(c.n) + 1, -1);
  for (const Gate& g : c.gates) {
    if (g.kind == GateKind::Rz && open[g.target] >= 0) {
      out.gates[static_cast<std::size_t>(open[g.target])].angle += g.angle;
      continue;
    }
    open[g.target] = -1;
    if (g.control) open[*g.control] = -1;
    out.gates.push_back(g);
    if (g.kind == GateKind::Rz) open[g.target] = static_cast<long>(out.gates.size()) - 1;
  }
  Circuit clean(c.n);
  clean.global_phase = out.global_phase;
  for (Gate& g : out.gates) {
    if (g.kind == GateKind::Rz) {
      // Rz(γ + 2πk) = (−1)^k Rz(γ).
      const double w = wrap_angle(g.angle);
      const double k = std::round((g.angle - w) / (2 * kPi));
      if (std::fmod(std::abs(k), 2.0) == 1.0) clean.global_phase += kPi;
      g.angle = w;
      if (std::abs(w) < 1e-12) continue;
    }
    clean.gates.push_back(std::move(g));
  }
  clean.global_phase = wrap_angle(clean.global_phase);
  return clean;
}

Circuit lower_to_ngs(const Circuit& c) {
  Emitter e(c.n);
  e.phase(c.global_phase);
  std::vector<char> cx_first(c.gates.size(), 0);
  for (std::size_t i = 0; i < c.gates.size(); ++i) {
    const Gate& g = c.gates[i];
    const int t = g.target;
    switch (g.kind) {
      case GateKind::H: e.h(t); break;
      case GateKind::X: e.x(t); break;
      case GateKind::SX: e.sx(t); break;
      case GateKind::SXdg: e.sxdg(t); break;
      case GateKind::Rz: e.rz(t, g.angle); break;
      case GateKind::Ry: e.ry(t, g.angle); break;
      case GateKind::P: e.p(t, g.angle); break;
      case GateKind::Rx:
        e.h(t);
        e.rz(t, g.angle);
        e.h(t);
        break;
      case GateKind::U2: e.u2(t, g.matrix); break;
      case GateKind::CX: e.cx(*g.control, t); break;
      case GateKind::CP:
        e.p(*g.control, g.angle / 2);
        e.crz(*g.control, t, g.angle, cx_first[i]);
        break;
      case GateKind::CRz: e.crz(*g.control, t, g.angle, cx_first[i]); break;
      case GateKind::CRx:
        e.h(t);
        e.crz(*g.control, t, g.angle, false);
        e.h(t);
        break;
      case GateKind::CU2: e.cu2(*g.control, t, g.matrix); break;
      case GateKind::SWAP: {
        // Orient the three CX so that one of them meets an identical CX of
        // the neighbouring gate on the same pair.
        int a = t, b = *g.control;
        std::optional<std::size_t> prev, next;
        for (std::size_t j = i; j-- > 0;)
          if (c.gates[j].touches(a) || c.gates[j].touches(b)) {
            prev = j;
            break;
          }
        for (std::size_t j = i + 1; j < c.gates.size(); ++j)
          if (c.gates[j].touches(a) || c.gates[j].touches(b)) {
            next = j;
            break;
          }
        if (prev && same_pair(c.gates[*prev], g) && ends_with_cx(c.gates[*prev].kind)) {
          a = *c.gates[*prev].control;
          b = c.gates[*prev].target;
        } else if (next && same_pair(c.gates[*next], g) && ends_with_cx(c.gates[*next].kind)) {
          a = *c.gates[*next].control;
          b = c.gates[*next].target;
          cx_first[*next] = 1;
        }
        e.swap(a, b);
        break;
      }
    }
  }
  Circuit out = e.take();
  for (int round = 0; round < 64; ++round) {
    const std::size_t before = out.gates.size();
    out = merge_rz(out);
    out = cancel_cx_pairs(out).circuit;
    if (out.gates.size() == before) break;
  }
  return out;
}

bool is_native(const Circuit& c) {
  for (const Gate& g : c.gates)
    switch (g.kind) {
      case GateKind::CX:
      case GateKind::Rz:
      case GateKind::SX:
      case GateKind::SXdg:
      case GateKind::X:
        break;
      default:
        return false;
    }
  return true;
}

// ---------------------------------------------------------------- metrics

std::optional<ReferenceTargets> reference_targets(Method m, ArchKind arch, int n) {
  if (n < 4) return std::nullopt;
  const double x = n;
  ReferenceTargets t;
  if (m == Method::McuMod) {
    t.depth = 34 * x - 56;
    t.rz = 6 * x * x - 8 * x - 13;
    t.sx = 12 * (x - 2);
    t.cx = 4 * (x * x - 3 * x + 4);
    if (arch == ArchKind::LNN) {
      t.depth += 24 * x - 64;
      t.cx += 6 * x * x - 18 * x + 14;
      t.swaps = 2 * x * x - 6 * x + 6;
    }
    return t;
  }
  if (m == Method::McuZyz) {
    t.depth = 32 * x - 44;
    t.rz = 6 * x * x - 8 * x - 4;
    t.sx = 4 * (x - 1);
    t.cx = 4 * x * x - 6;
    if (arch == ArchKind::LNN) {
      t.depth += 24 * x - 52;
      t.cx += 6 * x * x - 12 * x + 2;
      t.swaps = 2 * (x - 1) * (x - 1);
    }
    return t;
  }
  return std::nullopt;
}

MetricsReport native_metrics(const Circuit& native, std::optional<Provenance> provenance) {
  if (!is_native(native)) throw std::invalid_argument("native_metrics: circuit is not native");
  MetricsReport r;
  const GateCounts k = count_gates(native);
  r.native_depth = circuit_depth(native);
  r.native_total = k.total();
  r.cx = k.cx();
  r.rz = k.of(GateKind::Rz);
  r.sx = k.sx();
  r.x = k.x();
  if (provenance) {
    r.reference = reference_targets(provenance->method, provenance->arch, provenance->n);
    if (r.reference) {
      r.depth_deviation = (r.native_depth - r.reference->depth) / r.reference->depth;
      r.cx_deviation = (r.cx - r.reference->cx) / r.reference->cx;
    }
  }
  return r;
}

MetricsReport measure(const SynthConfig& cfg, ArchKind arch, bool use_crz) {
  Circuit abstract = synthesize(cfg);
  if (use_crz && cfg.method != Method::Ldd) abstract = cp_to_crz(abstract).circuit;
  const RouteResult routed = route(abstract, arch);
  MetricsReport r = native_metrics(lower_to_ngs(routed.circuit), Provenance{cfg.method, arch, cfg.n});
  r.abstract_slots = schedule_slots(routed.circuit).total;
  r.unrouted_slots = schedule_slots(abstract).total;
  r.counts = count_gates(routed.circuit);
  r.swaps_inserted = routed.swaps_inserted;
  return r;
}

std::string metrics_csv_header() {
  return "n,method,arch,aqft_cutoff,abstract_slots,native_depth,cx,rz,sx,x,swap_inserted,"
         "paper_depth_formula,deviation";
}

std::string metrics_csv_row(const SynthConfig& cfg, ArchKind arch, const MetricsReport& r) {
  char buf[512];
  std::string ref, dev;
  if (r.reference) {
    std::snprintf(buf, sizeof buf, "%.0f", r.reference->depth);
    ref = buf;
  }
  if (r.depth_deviation) {
    std::snprintf(buf, sizeof buf, "%.6f", *r.depth_deviation);
    dev = buf;
  }
  std::snprintf(buf, sizeof buf, "%d,%s,%s,%s,%d,%d,%d,%d,%d,%d,%d,%s,%s", cfg.n,
                std::string(method_name(cfg.method)).c_str(), std::string(arch_name(arch)).c_str(),
                cfg.aqft_cutoff ? std::to_string(*cfg.aqft_cutoff).c_str() : "",
                r.abstract_slots, r.native_depth, r.cx, r.rz, r.sx, r.x, r.swaps_inserted,
                ref.c_str(), dev.c_str());
  return buf;
}

}  // namespace qftmcu
