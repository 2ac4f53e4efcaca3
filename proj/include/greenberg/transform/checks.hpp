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
#include <string>
#include <vector>

#include "greenberg/arith/finite_algebra.hpp"
#include "greenberg/error.hpp"
#include "greenberg/schemes/presentation.hpp"

namespace greenberg::transform {

/// Gr_N(Z)(A) against Z(R_N(A)) through the coordinate bijection
/// A^{(N+1)v} <-> R_N(A)^v, checked in both directions.
struct RatPtsReport {
    std::uint64_t transform_count = 0;
    std::uint64_t direct_count = 0;
    bool bijection = false;
    std::string failure;
};

RatPtsReport check_rat_pts(const schemes::AffinePresentation& z, const arith::FiniteAlgebra& algebra,
                           const Guards& guards);

/// Gr_{m+i}(Z)(A) -> Gr_m(Z_m)(A): images must be points (well-defined) and,
/// for smooth Z, every point must lift.
struct LiftReport {
    std::uint64_t upper_points = 0;
    std::uint64_t lower_points = 0;
    std::uint64_t lifted = 0;
    bool well_defined = true;
    bool surjective = false;
    /// Up to five non-lifting points in level-m coordinates.
    std::vector<std::vector<std::uint32_t>> witnesses;
    std::vector<std::string> lower_vars;
};

LiftReport check_surjective_lift(const schemes::AffinePresentation& z, unsigned m, unsigned i,
                                 const arith::FiniteAlgebra& algebra, const Guards& guards);

/// Gr_{m+i}(Z)(A) -> Gr_m(Z_m)(A) x_{Gr_m(Z'_m)(A)} Gr_{m+i}(Z')(A) for f: Z -> Z'.
struct CartesianReport {
    std::uint64_t source_points = 0;
    std::uint64_t fiber_points = 0;
    bool bijective = false;
    std::string failure;
};

CartesianReport check_cartesian_etale(const schemes::MorphismPresentation& f, unsigned m, unsigned i,
                                      const arith::FiniteAlgebra& algebra, const Guards& guards);

/// Points of Gr_{m+i}(G)(A) over the identity of Gr_m(G_m)(A), counted on
/// the identity fiber; expected |A|^{i*d} for smooth G.
struct KernelReport {
    std::uint64_t count = 0;
    std::uint64_t expected = 0;
    unsigned lie_dim = 0;
};

KernelReport ker_change_level_count(const schemes::GroupSchemeSpec& group, unsigned m, unsigned i,
                                    const arith::FiniteAlgebra& algebra, const Guards& guards);

/// Closure, identity and inverses of the group law on Z(R_N(A)) (or Z(A)
/// over k). Returns a description of the first failure or "".
std::string check_group_law(const schemes::GroupSchemeSpec& group, const arith::FiniteAlgebra& algebra,
                            const Guards& guards);

}  // namespace greenberg::transform
