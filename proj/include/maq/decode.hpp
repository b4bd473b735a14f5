// Copyright 2026 The MAQ Authors.
//
//    Licensed under the Apache License, Version 2.0 (the "License");
//    you may not use this file except in compliance with the License.
//    You may obtain a copy of the License at
//
//        http://www.apache.org/licenses/LICENSE-2.0
//
//    Unless required by applicable law or agreed to in writing, software
//    distributed under the License is distributed on an "AS IS" BASIS,
//    WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//    See the License for the specific language governing permissions and
//    limitations under the License.

#pragma once

#include "maq/alignment.hpp"
#include "maq/qubo.hpp"

#include <span>
#include <string>

namespace maq {

/// Reads x(s, n, c) = 1 as "residue n of sequence s in column c"; every other
/// cell becomes a gap. Throws Infeasible on a constraint violation.
AlignmentBlock decode_assignment(const Assignment& x, const CafProblem& problem,
                                 std::span<const std::string> ids,
                                 std::span<const std::string> residues);

/// Inverse of decode_assignment for a block of width C.
Assignment encode_alignment(const AlignmentBlock& block, const CafProblem& problem);

} // namespace maq
