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

#include "qftmcu/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>

namespace qftmcu {

namespace {

constexpr double kMatchTol = 1e-9;

PassReport start_report(std::string name, const Circuit& c) {
  PassReport r;
  r.pass = std::move(name);
  r.gates_before = static_cast<int>(c.gates.size());
  r.slots_before = schedule_slots(c).total;
  return r;
}

PassResult finish(PassReport r, Circuit c) {
  r.gates_after = static_cast<int>(c.gates.size());
  r.slots_after = schedule_slots(c).total;
  return {std::move(c), std::move(r)};
}

PassResult refuse(PassReport r, const Circuit& c, std::string why) {
  r.refused = true;
  r.note = std::move(why);
  return finish(std::move(r), c);
}

// Edits collected against the input's indices and applied in one sweep.
struct EditPlan {
  std::map<std::size_t, Gate> replace;
  std::vector<char> erase;
  std::map<std::size_t, std::vector<Gate>> before;
  std::map<std::size_t, std::vector<Gate>> after;

  explicit EditPlan(std::size_t size) : erase(size, 0) {}

  Circuit apply(const Circuit& c) const {
    Circuit out = c;
    out.gates.clear();
    out.gates.reserve(c.gates.size());
    for (std::size_t i = 0; i < c.gates.size(); ++i) {
      if (auto it = before.find(i); it != before.end())
        out.gates.insert(out.gates.end(), it->second.begin(), it->second.end());
      if (!erase[i]) {
        auto r = replace.find(i);
        out.gates.push_back(r != replace.end() ? r->second : c.gates[i]);
      }
      if (auto it = after.find(i); it != after.end())
        out.gates.insert(out.gates.end(), it->second.begin(), it->second.end());
    }
    return out;
  }
};

// Index of the nearest gate touching `wire` strictly before / after i.
std::optional<std::size_t> prev_on(const Circuit& c, std::size_t i, int wire) {
  for (std::size_t j = i; j-- > 0;)
    if (c.gates[j].touches(wire)) return j;
  return std::nullopt;
}

std::optional<std::size_t> next_on(const Circuit& c, std::size_t i, int wire) {
  for (std::size_t j = i + 1; j < c.gates.size(); ++j)
    if (c.gates[j].touches(wire)) return j;
  return std::nullopt;
}

bool is_pi(double a) { return std::abs(std::abs(wrap_angle(a)) - kPi) < 1e-12; }

Gate squared(const Gate& g) {
  Gate out = g;
  if (g.kind == GateKind::CP)
    out.angle = 2.0 * g.angle;
  else
    out.matrix = g.matrix * g.matrix;
  out.root_index = std::max(g.root_index - 1, 1);
  return out;
}

// Gate range [first, last] of block b, if it has any gates.
std::optional<std::pair<std::size_t, std::size_t>> block_range(const Circuit& c, int b) {
  std::optional<std::pair<std::size_t, std::size_t>> r;
  for (std::size_t i = 0; i < c.gates.size(); ++i) {
    if (c.gates[i].block != b) continue;
    if (!r) r = std::make_pair(i, i);
    r->second = i;
  }
  return r;
}

// Each "+1" block with the first "-1" block after it.
std::vector<std::pair<int, int>> block_pairs(const Circuit& c) {
  std::vector<std::pair<int, int>> out;
  const int nb = static_cast<int>(c.blocks.size());
  for (int b = 0; b < nb; ++b) {
    if (c.blocks[b].label != "+1") continue;
    for (int d = b + 1; d < nb; ++d)
      if (c.blocks[d].label == "-1") {
        out.emplace_back(b, d);
        break;
      }
  }
  return out;
}

}  // namespace

// ------------------------------------------------------ controlled phases

Circuit fold_controlled_phases(const Circuit& c) {
  Circuit out = c;
  out.gates.clear();
  for (const Gate& g : c.gates) {
    if (g.kind == GateKind::CU2) {
      const double delta = std::arg(g.matrix.det()) / 2.0;
      if (std::abs(delta) > 1e-15) {
        Gate p = Gate::single(GateKind::P, *g.control, delta);
        p.paired = true;
        p.block = g.block;
        p.section = g.section;
        out.gates.push_back(p);
        Gate v = g;
        v.matrix = g.matrix.scaled(std::polar(1.0, -delta));
        out.gates.push_back(std::move(v));
        continue;
      }
    }
    out.gates.push_back(g);
  }
  return out;
}

Circuit unfold_controlled_phases(const Circuit& c, int* merged) {
  EditPlan plan(c.gates.size());
  int count = 0;
  for (std::size_t i = 0; i < c.gates.size(); ++i) {
    const Gate& p = c.gates[i];
    if (p.kind != GateKind::P || !p.paired) continue;
    const auto j = next_on(c, i, p.target);
    if (!j) continue;
    const Gate& g = c.gates[*j];
    if (g.kind != GateKind::CU2 || g.control != p.target) continue;
    Gate v = plan.replace.count(*j) ? plan.replace[*j] : g;
    v.matrix = v.matrix.scaled(std::polar(1.0, p.angle));
    plan.replace[*j] = std::move(v);
    plan.erase[i] = 1;
    ++count;
  }
  if (merged) *merged = count;
  return plan.apply(c);
}

// ---------------------------------------------------------- phase merging

PassResult merge_phase_columns(const Circuit& input) {
  PassReport report = start_report("merge_phase_columns", input);
  if (input.blocks.empty()) return refuse(std::move(report), input, "no block annotations");
  int unfolded = 0;
  const Circuit c = unfold_controlled_phases(input, &unfolded);
  EditPlan plan(c.gates.size());
  bool changed = false;

  for (int b = 0; b < static_cast<int>(c.blocks.size()); ++b) {
    const std::vector<int>& wires = c.blocks[b].wires;
    if (wires.empty()) return refuse(std::move(report), input, "empty block");
    std::map<int, std::size_t> last_qft, column, first_iqft;
    for (std::size_t i = 0; i < c.gates.size(); ++i) {
      const Gate& g = c.gates[i];
      if (g.block != b) continue;
      for (int w : wires) {
        if (!g.touches(w)) continue;
        if (g.section == Section::Qft) last_qft[w] = i;
        if (g.section == Section::Column && g.target == w) column[w] = i;
        if (g.section == Section::Iqft && !first_iqft.count(w)) first_iqft[w] = i;
      }
    }
    if (column.empty()) continue;  // already merged
    const int w0 = wires.front();
    for (int w : wires)
      if (!last_qft.count(w) || !column.count(w) || !first_iqft.count(w))
        return refuse(std::move(report), input, "block is missing QFT, column or QFT† gates");

    // H·Z·H on the lowest wireline.
    {
      const Gate& h1 = c.gates[last_qft[w0]];
      const Gate& z = c.gates[column[w0]];
      const Gate& h2 = c.gates[first_iqft[w0]];
      if (h1.kind != GateKind::H || h2.kind != GateKind::H || z.kind != GateKind::P ||
          !is_pi(z.angle))
        return refuse(std::move(report), input, "lowest wireline is not H·Z·H");
      Gate x = h1;
      x.kind = GateKind::X;
      x.root_index = 0;
      plan.replace[last_qft[w0]] = x;
      plan.erase[column[w0]] = plan.erase[first_iqft[w0]] = 1;
    }
    // C-A · B · C-A† around the flip of w0 becomes C-A² (B = A) before the
    // flip or C-(A†)² (B = A†) after it.
    for (int w : wires) {
      if (w == w0) continue;
      const Gate& q = c.gates[last_qft[w]];
      const Gate& col = c.gates[column[w]];
      const Gate& qi = c.gates[first_iqft[w]];
      const bool shape = (q.kind == GateKind::CP || q.kind == GateKind::CU2) &&
                         q.kind == qi.kind && q.control == w0 && q.target == w &&
                         qi.control == w0 && qi.target == w &&
                         same_action(qi, q.adjoint(), kMatchTol);
      if (!shape) return refuse(std::move(report), input, "unexpected gates around the column");
      const Unitary2 a = q.base(), bm = col.base();
      if (max_abs_diff(bm, a) <= kMatchTol) {
        plan.replace[last_qft[w]] = squared(q);
        plan.erase[column[w]] = plan.erase[first_iqft[w]] = 1;
      } else if (max_abs_diff(bm, a.adjoint()) <= kMatchTol) {
        plan.replace[first_iqft[w]] = squared(qi);
        plan.erase[column[w]] = plan.erase[last_qft[w]] = 1;
      } else {
        return refuse(std::move(report), input, "column gate does not match its neighbours");
      }
    }
    changed = true;
  }
  if (!changed) return finish(std::move(report), input);
  Circuit out = plan.apply(c);
  if (unfolded > 0) out = fold_controlled_phases(out);
  return finish(std::move(report), std::move(out));
}

// ------------------------------------------------------------------ fold

PassResult fold_cz(const Circuit& c) {
  PassReport report = start_report("fold_cz", c);
  EditPlan plan(c.gates.size());
  for (std::size_t i = 0; i < c.gates.size(); ++i) {
    const Gate& g = c.gates[i];
    if (g.kind != GateKind::CP || !is_pi(g.angle)) continue;
    const auto j = prev_on(c, i, g.target), k = next_on(c, i, g.target);
    if (!j || !k || c.gates[*j].kind != GateKind::H || c.gates[*k].kind != GateKind::H) continue;
    if (plan.erase[*j] || plan.erase[*k]) continue;
    Gate cx = g;
    cx.kind = GateKind::CX;
    cx.angle = 0.0;
    cx.root_index = 0;
    plan.replace[i] = cx;
    plan.erase[*j] = plan.erase[*k] = 1;
  }
  return finish(std::move(report), plan.apply(c));
}

// ------------------------------------------------------------- CP → CRz

PassResult cp_to_crz(const Circuit& c) {
  PassReport report = start_report("cp_to_crz", c);
  std::vector<char> mirrored(c.gates.size(), 0);
  for (const auto& [b1, b2] : block_pairs(c)) {
    std::map<std::pair<int, int>, std::vector<std::size_t>> l1, l2;
    for (std::size_t i = 0; i < c.gates.size(); ++i) {
      const Gate& g = c.gates[i];
      if (g.kind != GateKind::CP) continue;
      if (g.block == b1) l1[{*g.control, g.target}].push_back(i);
      if (g.block == b2) l2[{*g.control, g.target}].push_back(i);
    }
    for (const auto& [key, first] : l1) {
      auto it = l2.find(key);
      if (it == l2.end() || it->second.size() != first.size()) continue;
      const auto& second = it->second;
      bool ok = true;
      for (std::size_t k = 0; k < first.size() && ok; ++k)
        ok = std::abs(c.gates[second[k]].angle + c.gates[first[first.size() - 1 - k]].angle) <
             1e-12;
      if (!ok) continue;
      for (std::size_t i : first) mirrored[i] = 1;
      for (std::size_t i : second) mirrored[i] = 1;
    }
  }
  EditPlan plan(c.gates.size());
  for (std::size_t i = 0; i < c.gates.size(); ++i) {
    const Gate& g = c.gates[i];
    if (g.kind != GateKind::CP) continue;
    if (!mirrored[i] && g.block >= 0) continue;  // target-wireline gate, stays folded
    Gate rz = g;
    rz.kind = GateKind::CRz;
    plan.replace[i] = rz;
    if (!mirrored[i]) {
      Gate p = Gate::single(GateKind::P, *g.control, g.angle / 2.0);
      p.paired = true;
      plan.before[i].push_back(p);
    }
  }
  return finish(std::move(report), plan.apply(c));
}

// ----------------------------------------------------------- phase ladder

Circuit insert_phase_ladder(const Circuit& c, double delta, PhaseLadderSide side) {
  if (delta == 0.0) return c;
  const auto pairs = block_pairs(c);
  int plus = -1, minus = -1;
  if (!pairs.empty()) {
    plus = pairs.front().first;
    minus = pairs.front().second;
  } else {
    for (int b = 0; b < static_cast<int>(c.blocks.size()) && plus < 0; ++b)
      if (c.blocks[b].label == "+1") plus = b;
  }
  if (plus < 0) throw std::invalid_argument("insert_phase_ladder: no \"+1\" block");
  const auto r1 = block_range(c, plus);
  if (!r1) throw std::invalid_argument("insert_phase_ladder: empty \"+1\" block");
  const std::vector<int>& w = c.blocks[plus].wires;
  const int k = static_cast<int>(w.size());
  if (k < 2) return c;

  std::optional<std::pair<std::size_t, std::size_t>> r2;
  if (minus >= 0) r2 = block_range(c, minus);
  auto covers_minus = [&](int wire) {
    if (!r2) return false;
    const auto& mw = c.blocks[minus].wires;
    return std::find(mw.begin(), mw.end(), wire) != mw.end();
  };

  EditPlan plan(c.gates.size());
  auto phase = [](int wire, double a) {
    Gate p = Gate::single(GateKind::P, wire, a);
    p.paired = true;
    return p;
  };
  for (int i = 0; i <= k - 2; ++i) {
    const double phi = delta / std::ldexp(1.0, k - 2 - i);
    bool on_plus = side == PhaseLadderSide::PlusBlock ||
                   (side == PhaseLadderSide::Split && i % 2 == 0);
    if (!on_plus && !covers_minus(w[i])) {
      if (side == PhaseLadderSide::Split)
        on_plus = true;
      else
        throw std::invalid_argument("insert_phase_ladder: no \"-1\" block covering the controls");
    }
    if (on_plus) {
      plan.before[r1->first].push_back(phase(w[i], phi / 2.0));
      plan.after[r1->second].push_back(phase(w[i], -phi / 2.0));
    } else {
      plan.before[r2->first].push_back(phase(w[i], -phi / 2.0));
      plan.after[r2->second].push_back(phase(w[i], phi / 2.0));
    }
  }
  Circuit out = plan.apply(c);
  // The ladder alone leaves e^{-iφ_1/2} on every basis state.
  out.global_phase += delta / std::ldexp(1.0, k - 1);
  return out;
}

// -------------------------------------------------------------- LDD → QFT

PassResult ldd_to_qft(const Circuit& c) {
  PassReport report = start_report("ldd_to_qft", c);
  int plus_pi = 0, minus_pi = 0, crx = 0;
  for (const Gate& g : c.gates) {
    if (g.kind == GateKind::H) return refuse(std::move(report), c, "H gate in an LDD circuit");
    if (g.kind != GateKind::CRx) continue;
    ++crx;
    if (is_pi(g.angle)) (g.angle > 0 ? plus_pi : minus_pi)++;
  }
  if (crx == 0) return refuse(std::move(report), c, "no CRx gates");
  if (plus_pi != minus_pi)
    return refuse(std::move(report), c, "CRx(+π) and CRx(−π) do not pair up");

  // CRx(±π) = C-(∓iX). The ∓i factors cancel pairwise, so they become CX
  // with no phase left over.
  Circuit work = c;
  for (Gate& g : work.gates)
    if (g.kind == GateKind::CRx && is_pi(g.angle)) {
      g.kind = GateKind::CX;
      g.angle = 0.0;
    }
  EditPlan plan(work.gates.size());
  for (int w = 1; w <= work.n; ++w) {
    std::optional<std::size_t> run_first, run_last;
    auto close = [&] {
      if (!run_first) return;
      Gate h1 = Gate::single(GateKind::H, w), h2 = h1;
      h1.block = work.gates[*run_first].block;
      h1.section = work.gates[*run_first].section;
      h2.block = work.gates[*run_last].block;
      h2.section = work.gates[*run_last].section;
      plan.before[*run_first].push_back(h1);
      plan.after[*run_last].insert(plan.after[*run_last].begin(), h2);
      run_first.reset();
      run_last.reset();
    };
    for (std::size_t i = 0; i < work.gates.size(); ++i) {
      const Gate& g = work.gates[i];
      if (!g.touches(w)) continue;
      if (g.kind == GateKind::CRx && g.target == w) {
        if (!run_first) run_first = i;
        run_last = i;
        Gate z = g;
        z.kind = GateKind::CRz;
        plan.replace[i] = z;
      } else {
        close();
      }
    }
    close();
  }
  return finish(std::move(report), plan.apply(work));
}

// ------------------------------------------------------- CX cancellation

PassResult cancel_cx_pairs(const Circuit& c) {
  PassReport report = start_report("cancel_cx_pairs", c);
  Circuit cur = c;
  for (bool again = true; again;) {
    again = false;
    std::vector<char> erase(cur.gates.size(), 0);
    for (std::size_t i = 0; i < cur.gates.size(); ++i) {
      const Gate& g = cur.gates[i];
      if (erase[i] || g.kind != GateKind::CX) continue;
      for (std::size_t j = i + 1; j < cur.gates.size(); ++j) {
        const Gate& h = cur.gates[j];
        if (erase[j] || !(h.touches(g.target) || h.touches(*g.control))) continue;
        if (h.kind == GateKind::CX && h.target == g.target && h.control == g.control) {
          erase[i] = erase[j] = 1;
          again = true;
        }
        break;
      }
    }
    if (!again) break;
    Circuit next = cur;
    next.gates.clear();
    for (std::size_t i = 0; i < cur.gates.size(); ++i)
      if (!erase[i]) next.gates.push_back(cur.gates[i]);
    cur = std::move(next);
  }
  return finish(std::move(report), std::move(cur));
}

// ---------------------------------------------------------------- lookup

std::vector<std::string> pass_names() {
  return {"merge_phase_columns", "fold_cz", "cp_to_crz", "ldd_to_qft", "cancel_cx_pairs"};
}

PassResult run_pass(std::string_view name, const Circuit& c) {
  if (name == "merge_phase_columns") return merge_phase_columns(c);
  if (name == "fold_cz") return fold_cz(c);
  if (name == "cp_to_crz") return cp_to_crz(c);
  if (name == "ldd_to_qft") return ldd_to_qft(c);
  if (name == "cancel_cx_pairs") return cancel_cx_pairs(c);
  throw std::invalid_argument("unknown pass: " + std::string(name));
}

}  // namespace qftmcu
