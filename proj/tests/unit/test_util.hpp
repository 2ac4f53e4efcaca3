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

#include <string>
#include <vector>

#include "greenberg/arith/finite_field.hpp"
#include "greenberg/ga/greenberg_algebra.hpp"
#include "greenberg/schemes/presentation.hpp"

namespace greenberg::testing_util {

inline ga::BaseRingSpec equal_base(std::int64_t p) {
    return {ga::CharCase::Equal, arith::FiniteField::prime(p), {}};
}

inline ga::BaseRingSpec mixed_base(std::int64_t p, std::vector<std::int64_t> f = {}) {
    return {ga::CharCase::Mixed, arith::FiniteField::prime(p), std::move(f)};
}

inline schemes::CoeffRing over(const ga::BaseRingSpec& base, unsigned level) {
    return schemes::CoeffRing::algebra(ga::GreenbergAlgebra::build(base, level));
}

/// Presentation from generator text in the ring's coefficient labels.
inline schemes::AffinePresentation pres(const schemes::CoeffRing& ring, std::vector<std::string> vars,
                                        const std::vector<std::string>& gens) {
    schemes::AffinePresentation z{ring, std::move(vars), {}};
    for (const auto& g : gens) z.gens.push_back(poly::parse_polynomial(ring.domain(), g));
    z.validate();
    return z;
}

inline poly::RingPoly rpoly(const schemes::CoeffRing& ring, const std::string& text) {
    return poly::parse_polynomial(ring.domain(), text);
}

}  // namespace greenberg::testing_util
