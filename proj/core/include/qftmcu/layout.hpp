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
#include <string>
#include <string_view>
#include <vector>

#include "qftmcu/circuit.hpp"
#include "qftmcu/synthesis.hpp"

namespace qftmcu {

enum class ArchKind { FC, LNN };

std::string_view arch_name(ArchKind a);
ArchKind arch_from_name(std::string_view name);

struct Architecture {
  ArchKind kind = ArchKind::FC;

  /// True when every two-qubit gate of c acts on coupled wirelines.
  bool admits(const Circuit& c) const;
};

/// Which operand of an uncoupled two-qubit gate is walked along the chain.
/// Lookahead splits the walk between both and may exchange the pair after
/// the gate, picking whatever a short rollout of later gates favours.
enum class RouteMove { Target, Control, Lookahead };

struct RouteResult {
  /// Gates on physical wirelines; block annotations are dropped.
  Circuit circuit;
  /// layout[l-1] is the physical wireline holding logical wireline l at the end.
  std::vector<int> final_layout;
  int swaps_inserted = 0;
};

/// Nearest-neighbour SWAP insertion with a carried permutation: later gates
/// are remapped instead of undoing the SWAPs.
RouteResult route_lnn(const Circuit& c, RouteMove move = RouteMove::Lookahead);

/// Identity layout for FC, route_lnn for LNN.
RouteResult route(const Circuit& c, ArchKind arch);

/// Lowers to {CX, Rz, SX, SXdg, X}. The result's global_phase absorbs the
/// scalars dropped by the decompositions, so its unitary equals the source's.
Circuit lower_to_ngs(const Circuit& c);

bool is_native(const Circuit& c);

/// Merges consecutive Rz per wireline, wraps angles into (−π, π] with the
/// sign tracked in global_phase, and drops Rz(0).
Circuit merge_rz(const Circuit& c);

struct ReferenceTargets {
  double depth = 0.0;
  double cx = 0.0;
  double rz = 0.0;
  double sx = 0.0;
  /// SWAP count for LNN.
  std::optional<double> swaps;
};

/// Closed-form native targets for mcu-mod and mcu-zyz, n ≥ 4.
std::optional<ReferenceTargets> reference_targets(Method m, ArchKind arch, int n);

struct Provenance {
  Method method = Method::McuMod;
  ArchKind arch = ArchKind::FC;
  int n = 0;
};

struct MetricsReport {
  /// Slot count of the routed abstract circuit.
  int abstract_slots = 0;
  /// Slot count before routing.
  int unrouted_slots = 0;
  GateCounts counts;
  int native_depth = 0;
  int native_total = 0;
  int cx = 0;
  int rz = 0;
  /// SX and SXdg.
  int sx = 0;
  int x = 0;
  int swaps_inserted = 0;
  std::optional<ReferenceTargets> reference;
  /// (measured − target) / target.
  std::optional<double> depth_deviation;
  std::optional<double> cx_deviation;
};

MetricsReport native_metrics(const Circuit& native,
                             std::optional<Provenance> provenance = std::nullopt);

/// synthesize → (cp_to_crz when use_crz) → route → lower_to_ngs → native_metrics.
MetricsReport measure(const SynthConfig& cfg, ArchKind arch, bool use_crz = false);

/// n,method,arch,aqft_cutoff,abstract_slots,native_depth,cx,rz,sx,x,
/// swap_inserted,paper_depth_formula,deviation
std::string metrics_csv_header();
std::string metrics_csv_row(const SynthConfig& cfg, ArchKind arch, const MetricsReport& r);

}  // namespace qftmcu
