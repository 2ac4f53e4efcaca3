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
#include <map>
#include <memory>
#include <vector>

#include "greenberg/arith/finite_algebra.hpp"
#include "greenberg/ga/greenberg_algebra.hpp"

namespace greenberg::ga {

/// Brute-force ideal arithmetic in R_N(A): M_N(A) is the additive closure of
/// pi * R_N(A), and M^j is the additive closure of products M^{j-1} * M.
/// Element codes are the tuple codes of R_N(A).
class IdealPowers {
   public:
    /// Throws SizeGuard if |A|^{N+1} exceeds `size_guard`.
    IdealPowers(GreenbergAlgebraPtr algebra, const arith::FiniteAlgebra& points, std::uint64_t size_guard = 4096);

    const witt::CoordinateRing& coords() const noexcept { return *coords_; }
    const arith::FiniteRing& ring() const noexcept { return *table_; }
    /// Code of pi in R_N(A).
    std::uint32_t pi() const noexcept { return pi_; }

    /// M^j as a sorted code list; M^0 is the whole ring.
    const std::vector<std::uint32_t>& power(unsigned j);
    /// Kernel of truncation R_N(A) -> R_M(A), sorted.
    std::vector<std::uint32_t> truncation_kernel(unsigned target_level) const;

   private:
    GreenbergAlgebraPtr algebra_;
    std::shared_ptr<const witt::CoordinateRing> coords_;
    arith::FiniteRingPtr table_;
    std::uint32_t pi_ = 0;
    std::map<unsigned, std::vector<std::uint32_t>> powers_;
};

/// The subgroup generated by `gens`, sorted.
std::vector<std::uint32_t> additive_closure(const arith::FiniteRing& ring, const std::vector<std::uint32_t>& gens);

/// M_N(A)^j computed by closure.
std::vector<std::uint32_t> ga_ideal_power_members(const GreenbergAlgebraPtr& algebra,
                                                  const arith::FiniteAlgebra& points, unsigned j,
                                                  std::uint64_t size_guard = 4096);

}  // namespace greenberg::ga
