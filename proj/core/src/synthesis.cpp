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

#include "qftmcu/synthesis.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

#include "qftmcu/gate_algebra.hpp"
#include "qftmcu/optimizer.hpp"

namespace qftmcu {

namespace {

constexpr std::array<std::string_view, 4> kMethodNames = {"mcx-qft", "mcu-mod", "mcu-zyz",
                                                          "ldd"};
constexpr std::array<std::string_view, 3> kSideNames = {"plus-block", "minus-block", "split"};

// Replacement of the Z-root ladder on one wireline by roots of a U(2) gate.
// roots[m] is the 2^{m-1}-th root, roots[1] the gate itself.
struct TargetRoots {
  int wire = 0;
  std::vector<Unitary2> roots;
};

double r_angle(int m) { return kPi / std::ldexp(1.0, m - 1); }

std::vector<int> wires_upto(int k) {
  std::vector<int> w(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) w[i] = i + 1;
  return w;
}

std::vector<Gate> qft_gates(const std::vector<int>& w, const TargetRoots* sub) {
  std::vector<Gate> out;
  const int k = static_cast<int>(w.size());
  for (int jj = k - 1; jj >= 0; --jj) {
    const int j = w[jj];
    const bool substituted = sub && sub->wire == j;
    if (!substituted) out.push_back(Gate::single(GateKind::H, j));
    for (int ii = jj - 1; ii >= 0; --ii) {
      const int m = jj - ii + 1;
      Gate g = substituted ? Gate::cu2(sub->roots[m], w[ii], j)
                           : Gate::controlled(GateKind::CP, w[ii], j, r_angle(m));
      g.root_index = m;
      out.push_back(std::move(g));
    }
  }
  return out;
}

// QFT, phase column P_{±1}, QFT† on wirelines w, tagged as one block.
void emit_block(Circuit& c, const std::vector<int>& w, int sign,
                const TargetRoots* sub = nullptr) {
  const int id = static_cast<int>(c.blocks.size());
  c.blocks.push_back({sign > 0 ? "+1" : "-1", w});
  const std::vector<Gate> q = qft_gates(w, sub);
  auto tagged = [&](Gate g, Section s) {
    g.block = id;
    g.section = s;
    c.append(std::move(g));
  };
  for (const Gate& g : q) tagged(g, Section::Qft);
  const int k = static_cast<int>(w.size());
  for (int jj = 0; jj < k; ++jj) {
    Gate g;
    if (sub && sub->wire == w[jj]) {
      const Unitary2& r = sub->roots[k];
      g = Gate::u2(sign > 0 ? r : r.adjoint(), w[jj]);
    } else {
      g = Gate::single(GateKind::P, w[jj], sign * r_angle(jj + 1));
    }
    g.root_index = jj + 1;
    tagged(std::move(g), Section::Column);
  }
  for (auto it = q.rbegin(); it != q.rend(); ++it) tagged(it->adjoint(), Section::Iqft);
}

Circuit merged(const Circuit& c, bool fold) {
  Circuit out = merge_phase_columns(c).circuit;
  if (fold) out = fold_cz(out).circuit;
  return out;
}

void require_width(const SynthConfig& cfg, int minimum) {
  if (cfg.n < minimum)
    throw std::invalid_argument(std::string(method_name(cfg.method)) + " needs n >= " +
                                std::to_string(minimum));
}

}  // namespace

std::string_view method_name(Method m) { return kMethodNames[static_cast<std::size_t>(m)]; }

Method method_from_name(std::string_view name) {
  for (std::size_t i = 0; i < kMethodNames.size(); ++i)
    if (kMethodNames[i] == name) return static_cast<Method>(i);
  throw std::invalid_argument("unknown method: " + std::string(name));
}

std::string_view ladder_side_name(PhaseLadderSide s) {
  return kSideNames[static_cast<std::size_t>(s)];
}

PhaseLadderSide ladder_side_from_name(std::string_view name) {
  for (std::size_t i = 0; i < kSideNames.size(); ++i)
    if (kSideNames[i] == name) return static_cast<PhaseLadderSide>(i);
  throw std::invalid_argument("unknown phase ladder side: " + std::string(name));
}

int ceil_log2(int n) {
  int k = 1;
  while ((1 << k) < n) ++k;
  return k;
}

void SynthConfig::validate() const {
  const int minimum = method == Method::Ldd ? 3 : 2;
  if (n < minimum)
    throw std::invalid_argument(std::string(method_name(method)) + " needs n >= " +
                                std::to_string(minimum));
  if (aqft_cutoff && (*aqft_cutoff < 1 || *aqft_cutoff > n))
    throw std::invalid_argument("aqft cutoff must satisfy 1 <= m_max <= n");
}

Unitary2 target_unitary(const SynthConfig& cfg) {
  return cfg.method == Method::McxQft ? gates::x() : cfg.u;
}

Circuit build_qft(int k) {
  if (k < 1) throw std::invalid_argument("build_qft: k must be positive");
  Circuit c(k);
  for (Gate g : qft_gates(wires_upto(k), nullptr)) c.append(std::move(g));
  return c;
}

Circuit build_increment(int k) {
  if (k < 1) throw std::invalid_argument("build_increment: k must be positive");
  Circuit c(k);
  emit_block(c, wires_upto(k), +1);
  return c;
}

Circuit build_decrement(int k) {
  if (k < 1) throw std::invalid_argument("build_decrement: k must be positive");
  Circuit c(k);
  emit_block(c, wires_upto(k), -1);
  return c;
}

Circuit build_mcx_qft(const SynthConfig& cfg) {
  require_width(cfg, 2);
  Circuit c(cfg.n);
  emit_block(c, wires_upto(cfg.n), +1);
  emit_block(c, wires_upto(cfg.n - 1), -1);
  return cfg.optimize ? merged(c, false) : c;
}

Circuit build_mcu_mod(const SynthConfig& cfg) {
  require_width(cfg, 2);
  const int n = cfg.n;
  Circuit c(n);
  if (n == 2) {
    c.append(Gate::cu2(cfg.u, 1, 2));
    return fold_controlled_phases(c);
  }
  double delta = 0.0;
  const Unitary2 v = special_part(cfg.u, &delta);
  TargetRoots sub{n, std::vector<Unitary2>(static_cast<std::size_t>(n) + 1)};
  for (int m = 1; m <= n; ++m)
    sub.roots[m] = root(v, m).scaled(std::polar(1.0, delta / std::ldexp(1.0, m - 1)));
  emit_block(c, wires_upto(n), +1, &sub);
  emit_block(c, wires_upto(n - 1), -1);
  if (cfg.optimize) c = merged(c, true);
  return fold_controlled_phases(c);
}

Circuit build_mcu_zyz(const SynthConfig& cfg) {
  require_width(cfg, 2);
  const int n = cfg.n;
  const AbcDecomposition d = abc_decompose(cfg.u);
  Circuit c(n);
  c.append(Gate::u2(d.abc.c, n));
  emit_block(c, wires_upto(n), +1);
  c.append(Gate::u2(d.abc.b, n));
  emit_block(c, wires_upto(n), -1);
  c.append(Gate::u2(d.abc.a, n));
  if (cfg.optimize) c = merged(c, true);
  if (d.delta != 0.0) c = insert_phase_ladder(c, d.delta, cfg.phase_ladder_side);
  return c;
}

Circuit build_ldd(const SynthConfig& cfg) {
  require_width(cfg, 3);
  SynthConfig base = cfg;
  base.method = Method::McuMod;
  base.optimize = true;
  base.aqft_cutoff.reset();
  const Circuit src = cp_to_crz(build_mcu_mod(base)).circuit;

  // Each H…H run on a wireline whose interior gates on that wireline are
  // all CRz targeting it becomes a run of CRx with the H pair removed.
  std::vector<char> drop(src.gates.size(), 0), to_rx(src.gates.size(), 0);
  for (int w = 1; w <= src.n; ++w) {
    std::vector<std::size_t> on;
    for (std::size_t i = 0; i < src.gates.size(); ++i)
      if (src.gates[i].touches(w)) on.push_back(i);
    std::size_t i = 0;
    while (i < on.size()) {
      if (src.gates[on[i]].kind != GateKind::H) {
        ++i;
        continue;
      }
      std::size_t j = i + 1;
      while (j < on.size() && src.gates[on[j]].kind == GateKind::CRz &&
             src.gates[on[j]].target == w)
        ++j;
      if (j < on.size() && j > i + 1 && src.gates[on[j]].kind == GateKind::H) {
        drop[on[i]] = drop[on[j]] = 1;
        for (std::size_t k = i + 1; k < j; ++k) to_rx[on[k]] = 1;
        i = j + 1;
      } else {
        ++i;
      }
    }
  }
  Circuit out = src;
  out.gates.clear();
  for (std::size_t i = 0; i < src.gates.size(); ++i) {
    if (drop[i]) continue;
    Gate g = src.gates[i];
    if (to_rx[i]) {
      g.kind = GateKind::CRx;
    } else if (g.kind == GateKind::CX) {
      if (g.block < 0) throw std::logic_error("build_ldd: CX outside a block");
      // CX = CRx(±π)·P(±π/2) on the control; the two P's cancel between
      // the "+1" and "-1" blocks.
      g.kind = GateKind::CRx;
      g.angle = src.blocks[g.block].label == "+1" ? kPi : -kPi;
    }
    out.gates.push_back(std::move(g));
  }
  return out;
}

Circuit apply_aqft(const Circuit& c, int m_max) {
  if (m_max < 1) throw std::invalid_argument("apply_aqft: m_max must be at least 1");
  std::vector<char> drop(c.gates.size(), 0);
  for (std::size_t i = 0; i < c.gates.size(); ++i) {
    const Gate& g = c.gates[i];
    const bool root_gate = g.kind == GateKind::CP || g.kind == GateKind::CRz ||
                           g.kind == GateKind::CRx || g.kind == GateKind::CU2;
    if (!root_gate || g.root_index <= m_max) continue;
    drop[i] = 1;
    if (g.kind != GateKind::CU2) continue;
    for (std::size_t j = i; j-- > 0;) {
      const Gate& p = c.gates[j];
      if (!p.touches(*g.control)) continue;
      if (p.kind == GateKind::P && p.paired) drop[j] = 1;
      break;
    }
  }
  Circuit out = c;
  out.gates.clear();
  for (std::size_t i = 0; i < c.gates.size(); ++i)
    if (!drop[i]) out.gates.push_back(c.gates[i]);
  return out;
}

Circuit synthesize(const SynthConfig& cfg) {
  cfg.validate();
  Circuit c;
  switch (cfg.method) {
    case Method::McxQft: c = build_mcx_qft(cfg); break;
    case Method::McuMod: c = build_mcu_mod(cfg); break;
    case Method::McuZyz: c = build_mcu_zyz(cfg); break;
    case Method::Ldd: c = build_ldd(cfg); break;
  }
  if (cfg.aqft_cutoff) c = apply_aqft(c, *cfg.aqft_cutoff);
  return c;
}

}  // namespace qftmcu
