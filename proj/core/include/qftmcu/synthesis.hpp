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

#include <optional>
#include <string_view>
#include <vector>

#include "qftmcu/circuit.hpp"
#include "qftmcu/linalg.hpp"

namespace qftmcu {

enum class Method { McxQft, McuMod, McuZyz, Ldd };
enum class PhaseLadderSide { PlusBlock, MinusBlock, Split };

std::string_view method_name(Method m);
Method method_from_name(std::string_view name);
std::string_view ladder_side_name(PhaseLadderSide s);
PhaseLadderSide ladder_side_from_name(std::string_view name);

struct SynthConfig {
  Method method = Method::McxQft;
  int n = 2;
  /// Ignored for mcx-qft.
  Unitary2 u;
  /// Largest root index kept, 1 ≤ m_max ≤ n.
  std::optional<int> aqft_cutoff;
  /// Phase-column merging. The mcu families additionally fold the
  /// H·CP(π)·H pair into a CX.
  bool optimize = true;
  PhaseLadderSide phase_ladder_side = PhaseLadderSide::PlusBlock;

  /// Throws std::invalid_argument on inconsistent settings.
  void validate() const;
};

/// H + controlled-R_m ladder on wirelines 1..k, no bit reversal.
Circuit build_qft(int k);
/// |a⟩ → |a+1 mod 2^k⟩ as QFT, phase column, QFT†.
Circuit build_increment(int k);
/// |a⟩ → |a−1 mod 2^k⟩.
Circuit build_decrement(int k);

Circuit build_mcx_qft(const SynthConfig& cfg);
Circuit build_mcu_mod(const SynthConfig& cfg);
Circuit build_mcu_zyz(const SynthConfig& cfg);
Circuit build_ldd(const SynthConfig& cfg);

/// Drops CP, CRz, CRx and CU2 gates whose root index exceeds m_max, along
/// with the phase gate paired to each dropped CU2.
Circuit apply_aqft(const Circuit& c, int m_max);

/// Dispatches on cfg.method and applies the AQFT cutoff when set.
Circuit synthesize(const SynthConfig& cfg);

/// The operator the method realizes: X for mcx-qft, cfg.u otherwise.
Unitary2 target_unitary(const SynthConfig& cfg);

/// ⌈log₂ n⌉, at least 1.
int ceil_log2(int n);

}  // namespace qftmcu
