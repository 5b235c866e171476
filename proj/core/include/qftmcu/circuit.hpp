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

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qftmcu/linalg.hpp"

namespace qftmcu {

enum class GateKind : std::uint8_t {
  H,
  X,
  SX,
  SXdg,
  Rz,
  Ry,
  P,
  Rx,
  U2,
  CX,
  CP,
  CRz,
  CRx,
  CU2,
  SWAP,
};

inline constexpr std::size_t kGateKindCount = 15;

std::string_view kind_name(GateKind k);
/// Inverse of kind_name. Throws std::invalid_argument on unknown names.
GateKind kind_from_name(std::string_view name);

bool is_two_qubit(GateKind k);
bool has_angle(GateKind k);
bool has_matrix(GateKind k);
/// Diagonal in the computational basis for every parameter value.
bool is_diagonal(GateKind k);

/// Position of a gate inside an increment/decrement block.
enum class Section : std::uint8_t { None, Qft, Column, Iqft };

struct Gate {
  GateKind kind = GateKind::H;
  /// Wirelines are 1-based; wireline 1 is the least significant bit.
  int target = 1;
  /// Control wireline for controlled kinds, second operand for SWAP.
  std::optional<int> control;
  double angle = 0.0;
  /// Payload of U2 and CU2 gates.
  Unitary2 matrix;

  // Annotations. They never change the gate's action.
  /// m of a controlled root gate R_m or U^{1/2^{m-1}}; 0 when not a root.
  int root_index = 0;
  /// Shares the time slot of the next gate on its wireline.
  bool paired = false;
  /// Index into Circuit::blocks, or -1.
  int block = -1;
  Section section = Section::None;

  static Gate single(GateKind k, int target, double angle = 0.0);
  static Gate controlled(GateKind k, int control, int target, double angle = 0.0);
  static Gate u2(const Unitary2& u, int target);
  static Gate cu2(const Unitary2& u, int control, int target);
  static Gate swap(int a, int b);

  /// The 2×2 operator on the target (the controlled payload for controlled
  /// kinds). Throws for SWAP.
  Unitary2 base() const;
  Gate adjoint() const;
  bool touches(int wire) const { return target == wire || control == wire; }
};

/// Equality of kind, operands and parameters. Angles are compared after
/// wrapping into (−π, π].
bool same_action(const Gate& a, const Gate& b, double tol = 1e-9);

struct BlockInfo {
  /// "+1" or "-1".
  std::string label;
  /// Ascending wirelines; wires.front() is the block's least significant bit.
  std::vector<int> wires;
};

struct Circuit {
  int n = 0;
  std::vector<Gate> gates;
  std::vector<BlockInfo> blocks;
  /// Scalar e^{i·global_phase} multiplying the gate product.
  double global_phase = 0.0;

  Circuit() = default;
  explicit Circuit(int width);

  /// Validates operands against the width and the kind's arity.
  void append(Gate g);
  void validate() const;
  std::size_t size() const { return gates.size(); }
};

/// Throws std::invalid_argument describing the first malformed gate.
void validate_gate(const Gate& g, int width);

struct Schedule {
  /// 1-based slot per gate.
  std::vector<int> slot;
  int total = 0;
};

/// As-soon-as-possible slot assignment. A gate flagged `paired` occupies the
/// slot of the next gate on its wireline and adds no slot of its own.
Schedule schedule_slots(const Circuit& c);

/// Plain ASAP depth, ignoring pairing annotations.
int circuit_depth(const Circuit& c);

struct GateCounts {
  std::array<int, kGateKindCount> by_kind{};

  int of(GateKind k) const { return by_kind[static_cast<std::size_t>(k)]; }
  int h() const { return of(GateKind::H); }
  int x() const { return of(GateKind::X); }
  int sx() const { return of(GateKind::SX) + of(GateKind::SXdg); }
  int cx() const { return of(GateKind::CX); }
  /// CP and CRz.
  int cphase() const { return of(GateKind::CP) + of(GateKind::CRz); }
  int crx() const { return of(GateKind::CRx); }
  int cu2() const { return of(GateKind::CU2); }
  int swap() const { return of(GateKind::SWAP); }
  /// Rz, Ry, Rx, P and U2.
  int rotations() const;
  int total() const;
};

GateCounts count_gates(const Circuit& c);

Circuit inverse(const Circuit& c);

/// Gates of a followed by gates of b. Blocks of b are re-indexed.
Circuit concat(const Circuit& a, const Circuit& b);

/// Gate-by-gate same_action over equal widths.
bool structurally_equal(const Circuit& a, const Circuit& b, double tol = 1e-9);

// JSON form: {"n": int, "gates": [{"kind", "params", "target", "control"}]}.
// Annotations and blocks are written as extra optional fields so that
// passes can be run on a reloaded circuit.
std::string to_json(const Circuit& c, bool annotations = true);
Circuit circuit_from_json(std::string_view text);

}  // namespace qftmcu
