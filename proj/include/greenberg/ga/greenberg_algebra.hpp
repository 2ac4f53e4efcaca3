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
#include <string>
#include <utility>
#include <vector>

#include "greenberg/arith/finite_algebra.hpp"
#include "greenberg/arith/finite_field.hpp"
#include "greenberg/poly/domain.hpp"
#include "greenberg/witt/coordinate_ring.hpp"

namespace greenberg::ga {

enum class CharCase { Equal, Mixed };

/// A complete discrete valuation ring with residue field k:
///   equal: R = k[[t]], pi = t;
///   mixed: R = W(k)[t]/(f), f = t^rho + a_1 t^{rho-1} + ... + a_rho Eisenstein,
///          pi = class of t. An empty coefficient list means R = W(k), pi = p.
struct BaseRingSpec {
    CharCase char_case = CharCase::Equal;
    arith::FieldPtr k;
    std::vector<std::int64_t> eisenstein;

    std::uint32_t p() const { return k->characteristic(); }
    /// Degree of f (1 for W(k) and for the equal case).
    unsigned rho() const;
    /// Coefficients (a_1, ..., a_rho) actually used; {-p} for W(k).
    std::vector<std::int64_t> effective_eisenstein() const;
    /// Stable text key, e.g. "mixed_p2_k1_f0,-2".
    std::string key() const;
    /// Human-readable label, e.g. "W(F2)[t]/(t^2 - 2)".
    std::string label() const;
    bool operator==(const BaseRingSpec& o) const;
};

/// Throws NotEisenstein unless the mixed-case polynomial is Eisenstein.
void validate(const BaseRingSpec& spec);

/// Level data: m is the characteristic exponent (R_N has characteristic
/// p^m in the mixed case), r = min(rho-1, N) the top pi-power index and
/// lengths[i] = n_i = ceil((N+1-i)/rho) the Witt length of component i.
struct RamificationData {
    unsigned level = 0;
    unsigned m = 1;
    unsigned r = 0;
    std::vector<unsigned> lengths;

    static RamificationData compute(const BaseRingSpec& spec, unsigned level);
};

/// The Greenberg algebra of R at level N: a ring scheme structure on
/// affine (N+1)-space over F_p whose A-points are R_N(A).
///
/// Coordinate j (0 <= j <= N) is the flat valuation index: in the mixed
/// case it is slot s of the Witt vector attached to pi^i, with j = rho*s + i;
/// in the equal case it is the coefficient of t^j. Truncation to level M
/// keeps coordinates 0..M.
class GreenbergAlgebra {
   public:
    using Coords = witt::CoordinateRing::Coords;

    /// Builds (or fetches from the in-process memo / disk cache) the algebra.
    /// Throws NotEisenstein, GradingViolation, SizeGuard.
    static std::shared_ptr<const GreenbergAlgebra> build(const BaseRingSpec& base, unsigned level);

    const BaseRingSpec& base() const noexcept { return base_; }
    unsigned level() const noexcept { return ram_.level; }
    const RamificationData& ram() const noexcept { return ram_; }
    /// m*rho - 1 in the mixed case, N in the equal case.
    unsigned master_level() const noexcept { return master_level_; }
    unsigned width() const noexcept { return ram_.level + 1; }
    const arith::FieldPtr& k() const noexcept { return base_.k; }
    std::uint32_t p() const { return base_.p(); }

    /// Structure polynomials over F_p in x0..xN, y0..yN.
    const witt::CoordinateLawsPtr& laws() const noexcept { return laws_; }
    /// F_p-coordinates of pi (all zero at level 0).
    const std::vector<std::uint32_t>& pi_coords() const noexcept { return pi_; }

    /// (component i, Witt slot s) of coordinate j.
    std::pair<unsigned, unsigned> component_slot(unsigned j) const;

    /// R_N(A) for a finite k-algebra A. Throws BaseMismatch if A is not a
    /// k-algebra.
    witt::CoordinateRing points(const arith::FiniteAlgebra& algebra) const;
    /// R_N(k).
    const witt::CoordinateRing& k_points() const { return *k_points_; }
    /// R_N(k) tabulated, with constant labels "[c0;c1;...]": the coefficient
    /// domain of presentations over this algebra. Throws SizeGuard above
    /// 4096 constants.
    const poly::RingDomainPtr& constants() const;

    /// Image in R_N(A) of a constant given by its k-coordinates.
    Coords lift_constant(const Coords& k_coords, const std::vector<std::uint32_t>& structure_map) const;

    /// Horner evaluation of c_0 + c_1 pi + ... + c_d pi^d in R_N(k).
    /// Throws DegreeTooHigh if d > N.
    Coords constant(const std::vector<std::int64_t>& pi_poly) const;

    /// Keeps coordinates 0..M. Throws LevelMismatch if M > N.
    Coords truncate(const Coords& a, unsigned target_level) const;

    /// Canonical dump of the structure polynomials.
    std::string dump() const;

   private:
    GreenbergAlgebra() = default;

    BaseRingSpec base_;
    RamificationData ram_;
    unsigned master_level_ = 0;
    witt::CoordinateLawsPtr laws_;
    std::vector<std::uint32_t> pi_;
    std::shared_ptr<const witt::CoordinateRing> k_points_;
    poly::RingDomainPtr constants_;
};

using GreenbergAlgebraPtr = std::shared_ptr<const GreenbergAlgebra>;

/// Master-level laws before truncation, exposed for the grading check.
/// Returns laws in x0..x{N*}, y0..y{N*}.
witt::CoordinateLaws master_laws(const BaseRingSpec& base, unsigned master_level);

/// Truncates master laws to coordinates 0..N. Throws GradingViolation if a
/// retained output mentions a dropped input.
witt::CoordinateLaws truncate_laws(const witt::CoordinateLaws& master, unsigned level);

}  // namespace greenberg::ga
