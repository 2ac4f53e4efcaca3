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


#include "greenberg/ga/ideals.hpp"

#include <algorithm>

#include "greenberg/error.hpp"

namespace greenberg::ga {

std::vector<std::uint32_t> additive_closure(const arith::FiniteRing& ring, const std::vector<std::uint32_t>& gens) {
    std::vector<bool> member(ring.size(), false);
    std::vector<std::uint32_t> elements{ring.zero()};
    member[ring.zero()] = true;
    for (const std::uint32_t g : gens) {
        if (member[g]) continue;
        // Adjoin g: the subgroup becomes the union of the cosets S + k*g.
        const std::vector<std::uint32_t> base = elements;
        std::uint32_t step = g;
        while (!member[step]) {
            for (const std::uint32_t s : base) {
                const std::uint32_t t = ring.add(s, step);
                if (!member[t]) {
                    member[t] = true;
                    elements.push_back(t);
                }
            }
            step = ring.add(step, g);
        }
    }
    std::sort(elements.begin(), elements.end());
    return elements;
}

IdealPowers::IdealPowers(GreenbergAlgebraPtr algebra, const arith::FiniteAlgebra& points, std::uint64_t size_guard)
    : algebra_(std::move(algebra)) {
    coords_ = std::make_shared<const witt::CoordinateRing>(algebra_->points(points));
    table_ = coords_->tabulate(size_guard);
    const auto phi = points.structure_map(algebra_->k());
    pi_ = static_cast<std::uint32_t>(coords_->encode(algebra_->lift_constant(algebra_->pi_coords(), phi)));
}

const std::vector<std::uint32_t>& IdealPowers::power(unsigned j) {
    const auto it = powers_.find(j);
    if (it != powers_.end()) return it->second;
    std::vector<std::uint32_t> gens;
    if (j == 0) {
        gens = table_->elements();
    } else if (j == 1) {
        for (std::uint32_t x = 0; x < table_->size(); ++x) gens.push_back(table_->mul(pi_, x));
    } else {
        const std::vector<std::uint32_t> prev = power(j - 1);
        const std::vector<std::uint32_t> first = power(1);
        std::vector<bool> seen(table_->size(), false);
        for (const std::uint32_t a : prev)
            for (const std::uint32_t b : first) {
                const std::uint32_t c = table_->mul(a, b);
                if (!seen[c]) {
                    seen[c] = true;
                    gens.push_back(c);
                }
            }
    }
    return powers_.emplace(j, additive_closure(*table_, gens)).first->second;
}

std::vector<std::uint32_t> IdealPowers::truncation_kernel(unsigned target_level) const {
    if (target_level > algebra_->level())
        throw Error(ErrorCode::LevelMismatch, "target level above the algebra level");
    std::vector<std::uint32_t> kernel;
    for (std::uint32_t x = 0; x < table_->size(); ++x) {
        const auto c = coords_->decode(x);
        if (std::all_of(c.begin(), c.begin() + target_level + 1, [](std::uint32_t v) { return v == 0; }))
            kernel.push_back(x);
    }
    return kernel;
}

std::vector<std::uint32_t> ga_ideal_power_members(const GreenbergAlgebraPtr& algebra,
                                                  const arith::FiniteAlgebra& points, unsigned j,
                                                  std::uint64_t size_guard) {
    IdealPowers powers(algebra, points, size_guard);
    return powers.power(j);
}

}  // namespace greenberg::ga
