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

#include "qftmcu/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "json.hpp"

namespace qftmcu {

namespace {

constexpr std::array<std::string_view, kGateKindCount> kNames = {
    "H", "X", "SX", "SXdg", "Rz", "Ry", "P", "Rx",
    "U2", "CX", "CP", "CRz", "CRx", "CU2", "SWAP"};

std::size_t idx(GateKind k) { return static_cast<std::size_t>(k); }

bool angles_match(double a, double b, double tol) {
  return std::abs(wrap_angle(a - b)) <= tol;
}

}  // namespace

std::string_view kind_name(GateKind k) { return kNames[idx(k)]; }

GateKind kind_from_name(std::string_view name) {
  for (std::size_t i = 0; i < kNames.size(); ++i)
    if (kNames[i] == name) return static_cast<GateKind>(i);
  throw std::invalid_argument("unknown gate kind: " + std::string(name));
}

bool is_two_qubit(GateKind k) {
  switch (k) {
    case GateKind::CX:
    case GateKind::CP:
    case GateKind::CRz:
    case GateKind::CRx:
    case GateKind::CU2:
    case GateKind::SWAP:
      return true;
    default:
      return false;
  }
}

bool has_angle(GateKind k) {
  switch (k) {
    case GateKind::Rz:
    case GateKind::Ry:
    case GateKind::P:
    case GateKind::Rx:
    case GateKind::CP:
    case GateKind::CRz:
    case GateKind::CRx:
      return true;
    default:
      return false;
  }
}

bool has_matrix(GateKind k) { return k == GateKind::U2 || k == GateKind::CU2; }

bool is_diagonal(GateKind k) {
  return k == GateKind::Rz || k == GateKind::P || k == GateKind::CP || k == GateKind::CRz;
}

// ------------------------------------------------------------------ Gate

Gate Gate::single(GateKind k, int target, double angle) {
  Gate g;
  g.kind = k;
  g.target = target;
  g.angle = angle;
  return g;
}

Gate Gate::controlled(GateKind k, int control, int target, double angle) {
  Gate g = single(k, target, angle);
  g.control = control;
  return g;
}

Gate Gate::u2(const Unitary2& u, int target) {
  Gate g = single(GateKind::U2, target);
  g.matrix = u;
  return g;
}

Gate Gate::cu2(const Unitary2& u, int control, int target) {
  Gate g = controlled(GateKind::CU2, control, target);
  g.matrix = u;
  return g;
}

Gate Gate::swap(int a, int b) { return controlled(GateKind::SWAP, b, a); }

Unitary2 Gate::base() const {
  switch (kind) {
    case GateKind::H: return gates::h();
    case GateKind::X:
    case GateKind::CX: return gates::x();
    case GateKind::SX: return gates::sx();
    case GateKind::SXdg: return gates::sx().adjoint();
    case GateKind::Rz:
    case GateKind::CRz: return gates::rz(angle);
    case GateKind::Ry: return gates::ry(angle);
    case GateKind::Rx:
    case GateKind::CRx: return gates::rx(angle);
    case GateKind::P:
    case GateKind::CP: return gates::p(angle);
    case GateKind::U2:
    case GateKind::CU2: return matrix;
    case GateKind::SWAP: break;
  }
  throw std::logic_error("SWAP has no single-qubit payload");
}

Gate Gate::adjoint() const {
  Gate g = *this;
  if (has_angle(kind)) g.angle = -angle;
  if (has_matrix(kind)) g.matrix = matrix.adjoint();
  if (kind == GateKind::SX) g.kind = GateKind::SXdg;
  if (kind == GateKind::SXdg) g.kind = GateKind::SX;
  return g;
}

bool same_action(const Gate& a, const Gate& b, double tol) {
  if (a.kind != b.kind || a.target != b.target || a.control != b.control) return false;
  if (has_angle(a.kind) && !angles_match(a.angle, b.angle, tol)) return false;
  if (has_matrix(a.kind) && max_abs_diff(a.matrix, b.matrix) > tol) return false;
  return true;
}

// --------------------------------------------------------------- Circuit

Circuit::Circuit(int width) : n(width) {
  if (width < 1) throw std::invalid_argument("circuit width must be positive");
}

void validate_gate(const Gate& g, int width) {
  auto in_range = [&](int w) { return w >= 1 && w <= width; };
  const std::string name(kind_name(g.kind));
  if (!in_range(g.target))
    throw std::invalid_argument(name + ": target " + std::to_string(g.target) + " out of range");
  if (is_two_qubit(g.kind)) {
    if (!g.control) throw std::invalid_argument(name + ": missing control");
    if (!in_range(*g.control))
      throw std::invalid_argument(name + ": control " + std::to_string(*g.control) +
                                  " out of range");
    if (*g.control == g.target) throw std::invalid_argument(name + ": control equals target");
  } else if (g.control) {
    throw std::invalid_argument(name + ": single-qubit gate with a control");
  }
  if (has_angle(g.kind) && !std::isfinite(g.angle))
    throw std::invalid_argument(name + ": non-finite angle");
}

void Circuit::append(Gate g) {
  validate_gate(g, n);
  gates.push_back(std::move(g));
}

void Circuit::validate() const {
  if (n < 1) throw std::invalid_argument("circuit width must be positive");
  for (const Gate& g : gates) validate_gate(g, n);
}

// ------------------------------------------------------------ scheduling

Schedule schedule_slots(const Circuit& c) {
  Schedule s;
  s.slot.assign(c.gates.size(), 0);
  std::vector<int> last(static_cast<std::size_t>(c.n) + 1, 0);
  // Paired gates waiting for the next gate on their wireline.
  std::vector<std::vector<std::size_t>> pending(static_cast<std::size_t>(c.n) + 1);
  for (std::size_t i = 0; i < c.gates.size(); ++i) {
    const Gate& g = c.gates[i];
    if (g.paired && !is_two_qubit(g.kind)) {
      pending[g.target].push_back(i);
      continue;
    }
    int slot = last[g.target] + 1;
    if (g.control) slot = std::max(slot, last[*g.control] + 1);
    s.slot[i] = slot;
    for (int w : {g.target, g.control.value_or(0)}) {
      if (w == 0) continue;
      last[w] = slot;
      for (std::size_t p : pending[w]) s.slot[p] = slot;
      pending[w].clear();
    }
    s.total = std::max(s.total, slot);
  }
  for (int w = 1; w <= c.n; ++w) {
    for (std::size_t p : pending[w]) {
      s.slot[p] = ++last[w];
      s.total = std::max(s.total, last[w]);
    }
  }
  return s;
}

int circuit_depth(const Circuit& c) {
  std::vector<int> last(static_cast<std::size_t>(c.n) + 1, 0);
  int depth = 0;
  for (const Gate& g : c.gates) {
    int slot = last[g.target] + 1;
    if (g.control) slot = std::max(slot, last[*g.control] + 1);
    last[g.target] = slot;
    if (g.control) last[*g.control] = slot;
    depth = std::max(depth, slot);
  }
  return depth;
}

// --------------------------------------------------------------- counting

int GateCounts::rotations() const {
  return of(GateKind::Rz) + of(GateKind::Ry) + of(GateKind::Rx) + of(GateKind::P) +
         of(GateKind::U2);
}

int GateCounts::total() const {
  int t = 0;
  for (int v : by_kind) t += v;
  return t;
}

GateCounts count_gates(const Circuit& c) {
  GateCounts out;
  for (const Gate& g : c.gates) ++out.by_kind[idx(g.kind)];
  return out;
}

// ------------------------------------------------------------- transforms

Circuit inverse(const Circuit& c) {
  Circuit out = c;
  out.gates.clear();
  out.gates.reserve(c.gates.size());
  for (auto it = c.gates.rbegin(); it != c.gates.rend(); ++it) {
    Gate g = it->adjoint();
    if (g.section == Section::Qft)
      g.section = Section::Iqft;
    else if (g.section == Section::Iqft)
      g.section = Section::Qft;
    out.gates.push_back(std::move(g));
  }
  // A paired gate now trails its partner. Put it back in front when the two
  // commute so the slot sharing survives.
  const auto diagonal = [](GateKind k) {
    return k == GateKind::P || k == GateKind::Rz || k == GateKind::CP || k == GateKind::CRz;
  };
  for (std::size_t k = 0; k < out.gates.size(); ++k) {
    const Gate& g = out.gates[k];
    if (!g.paired || !diagonal(g.kind) || g.control) continue;
    std::size_t j = k;
    while (j-- > 0 && !out.gates[j].touches(g.target)) {
    }
    if (j >= k) continue;
    const Gate& partner = out.gates[j];
    if (partner.kind == GateKind::SWAP) continue;
    if (!diagonal(partner.kind) && partner.control != g.target) continue;
    Gate moved = out.gates[k];
    out.gates.erase(out.gates.begin() + static_cast<long>(k));
    out.gates.insert(out.gates.begin() + static_cast<long>(j), std::move(moved));
  }
  for (BlockInfo& b : out.blocks) b.label = b.label == "+1" ? "-1" : "+1";
  std::reverse(out.blocks.begin(), out.blocks.end());
  const int nb = static_cast<int>(c.blocks.size());
  for (Gate& g : out.gates)
    if (g.block >= 0) g.block = nb - 1 - g.block;
  out.global_phase = -c.global_phase;
  return out;
}

Circuit concat(const Circuit& a, const Circuit& b) {
  if (a.n != b.n) throw std::invalid_argument("concat: width mismatch");
  Circuit out = a;
  const int offset = static_cast<int>(a.blocks.size());
  out.blocks.insert(out.blocks.end(), b.blocks.begin(), b.blocks.end());
  for (Gate g : b.gates) {
    if (g.block >= 0) g.block += offset;
    out.gates.push_back(std::move(g));
  }
  out.global_phase = a.global_phase + b.global_phase;
  return out;
}

bool structurally_equal(const Circuit& a, const Circuit& b, double tol) {
  if (a.n != b.n || a.gates.size() != b.gates.size()) return false;
  for (std::size_t i = 0; i < a.gates.size(); ++i)
    if (!same_action(a.gates[i], b.gates[i], tol)) return false;
  return true;
}

// ------------------------------------------------------------------ JSON

namespace {

using nlohmann::json;

constexpr std::array<std::string_view, 4> kSectionNames = {"none", "qft", "column", "iqft"};

json params_of(const Gate& g) {
  json p = json::array();
  if (has_angle(g.kind)) p.push_back(g.angle);
  if (has_matrix(g.kind))
    for (const cplx& z : g.matrix.entries()) {
      p.push_back(z.real());
      p.push_back(z.imag());
    }
  return p;
}

}  // namespace

std::string to_json(const Circuit& c, bool annotations) {
  json j;
  j["n"] = c.n;
  json gs = json::array();
  for (const Gate& g : c.gates) {
    json o;
    o["kind"] = std::string(kind_name(g.kind));
    o["params"] = params_of(g);
    o["target"] = g.target;
    o["control"] = g.control ? json(*g.control) : json(nullptr);
    if (annotations) {
      if (g.root_index) o["root_index"] = g.root_index;
      if (g.paired) o["paired"] = true;
      if (g.block >= 0) {
        o["block"] = g.block;
        o["section"] = std::string(kSectionNames[static_cast<std::size_t>(g.section)]);
      }
    }
    gs.push_back(std::move(o));
  }
  j["gates"] = std::move(gs);
  if (annotations && !c.blocks.empty()) {
    json bs = json::array();
    for (const BlockInfo& b : c.blocks) bs.push_back({{"label", b.label}, {"wires", b.wires}});
    j["blocks"] = std::move(bs);
  }
  if (c.global_phase != 0.0) j["global_phase"] = c.global_phase;
  return j.dump(2);
}

Circuit circuit_from_json(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("circuit JSON: ") + e.what());
  }
  try {
    Circuit c(j.at("n").get<int>());
    if (j.contains("blocks"))
      for (const json& b : j["blocks"])
        c.blocks.push_back({b.at("label").get<std::string>(), b.at("wires").get<std::vector<int>>()});
    c.global_phase = j.value("global_phase", 0.0);
    for (const json& o : j.at("gates")) {
      Gate g;
      g.kind = kind_from_name(o.at("kind").get<std::string>());
      g.target = o.at("target").get<int>();
      if (o.contains("control") && !o["control"].is_null()) g.control = o["control"].get<int>();
      const auto params = o.value("params", std::vector<double>{});
      const std::size_t want = has_angle(g.kind) ? 1 : has_matrix(g.kind) ? 8 : 0;
      if (params.size() != want)
        throw std::invalid_argument(std::string(kind_name(g.kind)) + ": expected " +
                                    std::to_string(want) + " params");
      if (want == 1) g.angle = params[0];
      if (want == 8)
        g.matrix = Unitary2({cplx{params[0], params[1]}, cplx{params[2], params[3]},
                             cplx{params[4], params[5]}, cplx{params[6], params[7]}},
                            1e-9);
      g.root_index = o.value("root_index", 0);
      g.paired = o.value("paired", false);
      g.block = o.value("block", -1);
      if (g.block >= static_cast<int>(c.blocks.size()))
        throw std::invalid_argument("gate references unknown block");
      const std::string sec = o.value("section", std::string("none"));
      auto it = std::find(kSectionNames.begin(), kSectionNames.end(), sec);
      if (it == kSectionNames.end()) throw std::invalid_argument("unknown section: " + sec);
      g.section = static_cast<Section>(it - kSectionNames.begin());
      c.append(std::move(g));
    }
    return c;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("circuit JSON: ") + e.what());
  }
}

}  // namespace qftmcu
