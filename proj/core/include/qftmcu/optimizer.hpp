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

#include <string>
#include <string_view>
#include <vector>

#include "qftmcu/circuit.hpp"
#include "qftmcu/synthesis.hpp"

namespace qftmcu {

struct PassReport {
  std::string pass;
  int gates_before = 0;
  int gates_after = 0;
  int slots_before = 0;
  int slots_after = 0;
  /// U_before = e^{i·phase_shift}·U_after.
  double phase_shift = 0.0;
  /// Set when the input did not have the shape the pass needs; the circuit
  /// is then returned unchanged.
  bool refused = false;
  std::string note;
};

struct PassResult {
  Circuit circuit;
  PassReport report;
};

/// Absorbs each block's phase column into the neighbouring controlled
/// gates and collapses H·Z·H on the block's lowest wireline to X.
PassResult merge_phase_columns(const Circuit& c);

/// H(t)·CP(±π; c→t)·H(t) with nothing else on t in between → CX(c→t).
PassResult fold_cz(const Circuit& c);

/// CP → CRz. The P(γ/2) correction on the control is dropped for gates
/// that are mirrored between a "+1" block and the following "-1" block,
/// emitted explicitly for gates outside blocks, and unmatched block gates
/// stay CP.
PassResult cp_to_crz(const Circuit& c);

/// Places the P(±φ_k/2) ladder around the first "+1" block (or after it,
/// around the following "-1" block) so that the circuit picks up e^{iδ}
/// exactly when all controls of that block are |1⟩.
Circuit insert_phase_ladder(const Circuit& c, double delta, PhaseLadderSide side);

/// Rewrites an LDD-shaped circuit into the QFT form: CRx runs become
/// H·CRz…·H and CRx(±π) become CX.
PassResult ldd_to_qft(const Circuit& c);

/// Deletes adjacent identical CX pairs with nothing on either wireline in
/// between.
PassResult cancel_cx_pairs(const Circuit& c);

/// Splits every CU2 whose payload is not special unitary into a paired
/// P(δ) on the control followed by CU2(e^{-iδ}U).
Circuit fold_controlled_phases(const Circuit& c);
/// Inverse of fold_controlled_phases; returns the number of merged pairs.
Circuit unfold_controlled_phases(const Circuit& c, int* merged = nullptr);

/// Pass names accepted by run_pass: merge_phase_columns, fold_cz,
/// cp_to_crz, ldd_to_qft, cancel_cx_pairs.
std::vector<std::string> pass_names();
PassResult run_pass(std::string_view name, const Circuit& c);

}  // namespace qftmcu
