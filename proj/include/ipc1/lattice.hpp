/* Copyright 2026 The ipc1 Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/


#pragma once

#include <cstdint>
#include <vector>

#include "ipc1/formula.hpp"
#include "ipc1/rn_index.hpp"

namespace ipc1 {

// Operations of the Rieger-Nishimura lattice, i.e. the free Heyting algebra
// on one generator, computed directly on class indices.
//
// Every operation is total. Ranks move by at most two, so a formula of
// length L never produces a rank above ~1.44 log2(L) + 2.
RNIndex meet(RNIndex x, RNIndex y);
RNIndex join(RNIndex x, RNIndex y);
// Relative pseudo-complement: the largest d with meet(x, d) <= y.
RNIndex rpc(RNIndex x, RNIndex y);
// x <= y iff meet(x, y) == x.
bool leq(RNIndex x, RNIndex y);

inline std::uint32_t rank(RNIndex x) { return x.rank; }

// bot, top, then phi_1, psi_1, ..., phi_max, psi_max.
std::vector<RNIndex> indices_up_to(std::uint32_t max_rank);

// Index of the class of f: a -> psi1, bot -> bot, and each connective
// folded through meet / join / rpc. Physically shared subtrees are folded
// once. If visited is given, it is incremented per folded node.
RNIndex rn_index(const Formula& f, std::uint64_t* visited = nullptr);

// Same fold over a shared-subterm graph, one evaluation per node.
RNIndex rn_index_dag(const FormulaDag& g);

// Intuitionistic validity: the class of f is top.
bool is_valid(const Formula& f);

}  // namespace ipc1
