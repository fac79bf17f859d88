// Copyright 2026 The fockforge authors
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

#include "fockforge/circuit.hpp"
#include "fockforge/fock.hpp"

namespace fockforge {

// Transition amplitude <out| U |in> for photon-number states:
//   per(M) / sqrt(prod_i in_i! * prod_j out_j!)
// where M repeats column k of U in_k times and row j out_j times. Both
// patterns must share the photon total and match U's dimension.
Complex fock_amplitude(const ModeUnitary& u, const Occupation& in, const Occupation& out);

// Lifts the mode unitary to the n-photon Fock space and applies it.
FockState evolve(const FockState& s, const ModeUnitary& u);

}  // namespace fockforge
