// Copyright 2026 The greenberg Authors
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

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "greenberg/arith/finite_algebra.hpp"
#include "greenberg/error.hpp"
#include "greenberg/poly/evaluate.hpp"
#include "greenberg/schemes/presentation.hpp"
#include "greenberg/witt/coordinate_ring.hpp"

namespace greenberg::schemes {

/// A finite ring in which points are taken (A over k, R_N(A) over R_N),
/// with the image of every constant of the coefficient ring.
struct PointCarrier {
    std::string name;
    arith::FiniteRingPtr ring;
    /// Constant code -> element of `ring`.
    std::vector<std::uint32_t> lift;
    /// Coordinates of R_N(A) (null over k): decodes elements into A-tuples.
    std::shared_ptr<const witt::CoordinateRing> coords;
};

/// Throws BaseMismatch if A is not a k-algebra, SizeGuard if R_N(A) is too large.
PointCarrier point_carrier(const CoeffRing& ring, const arith::FiniteAlgebra& algebra, const Guards& guards);

struct SolveOptions {
    bool keep_solutions = false;
    /// Optional preassigned value per variable (presentation order).
    std::vector<std::optional<std::uint32_t>> fixed;
};

struct SolveResult {
    std::uint64_t count = 0;
    /// Size of the searched candidate space.
    std::uint64_t candidates = 0;
    /// Sorted solutions, one carrier element per variable.
    std::vector<std::vector<std::uint32_t>> solutions;
};

/// Exhaustive search with early exit: each generator is tested as soon as
/// its last variable is assigned. Throws SizeGuard when the candidate space
/// exceeds the guard.
SolveResult solve(const AffinePresentation& z, const PointCarrier& carrier, const Guards& guards,
                  const SolveOptions& options = {});

/// Z(A) for Z over k.
SolveResult solve_over_k(const AffinePresentation& z, const arith::FiniteAlgebra& algebra, const Guards& guards,
                         bool keep_solutions = false);
/// Z(R_N(A)) for Z over R_N.
SolveResult solve_over_ga(const AffinePresentation& z, const arith::FiniteAlgebra& algebra, const Guards& guards,
                          bool keep_solutions = false);

/// f on carrier points: the images of the target variables, compiled once.
class MorphismEvaluator {
   public:
    MorphismEvaluator(const MorphismPresentation& f, const PointCarrier& carrier);
    std::vector<std::uint32_t> operator()(const std::vector<std::uint32_t>& point) const;

   private:
    poly::CompiledSystem system_;
};

}  // namespace greenberg::schemes
