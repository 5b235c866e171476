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


// Convenience header pulling in the whole public API.

#pragma once

#include "qftmcu/circuit.hpp"
#include "qftmcu/gate_algebra.hpp"
#include "qftmcu/layout.hpp"
#include "qftmcu/linalg.hpp"
#include "qftmcu/optimizer.hpp"
#include "qftmcu/random.hpp"
#include "qftmcu/synthesis.hpp"
#include "qftmcu/verifier.hpp"
