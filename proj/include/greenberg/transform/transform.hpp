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

#include <map>
#include <string>
#include <vector>

#include "greenberg/poly/evaluate.hpp"
#include "greenberg/schemes/presentation.hpp"
#include "greenberg/witt/coordinate_ring.hpp"

namespace greenberg::transform {

/// R_N(k[vars]) as a carrier: values are coordinate tuples of polynomials
/// over k, combined through the structure polynomials.
class SymbolicPoints {
   public:
    using Value = std::vector<poly::RingPoly>;

    SymbolicPoints(witt::CoordinateLawsPtr laws, poly::RingDomainPtr k_domain);

    Value zero() const { return zero_; }
    Value one() const { return one_; }
    Value add(const Value& a, const Value& b) const;
    Value mul(const Value& a, const Value& b) const;
    Value neg(const Value& a) const;

    /// Constant tuple from k-coordinates.
    Value constant(const std::vector<std::uint32_t>& coords) const;
    /// (v_0, ..., v_N) for the given variable names.
    Value variables(const std::vector<std::string>& names) const;

   private:
    bool is_zero(const Value& a) const;

    witt::CoordinateLawsPtr laws_;
    poly::RingDomainPtr k_;
    poly::PolyCarrier<poly::RingDomain> base_;
    Value zero_, one_;
};

/// Name of coordinate j of source variable v: "v_j".
std::string coordinate_var(const std::string& v, unsigned j);

struct TransformResult {
    schemes::AffinePresentation source;
    /// Presentation over k in the variables v_j.
    schemes::AffinePresentation result;
    /// Source variable -> its coordinate variables v_0..v_N.
    std::map<std::string, std::vector<std::string>> var_map;
    unsigned level = 0;
};

/// Gr_N(Z): every generator is evaluated in R_N(k[v_j]) and contributes its
/// N+1 coordinate polynomials. A presentation over k is treated as level 0.
TransformResult gr_transform(const schemes::AffinePresentation& z);

/// Gr_N(f): target coordinate v_j maps to coordinate j of the image of v.
schemes::MorphismPresentation gr_transform_morphism(const schemes::MorphismPresentation& f);

/// Gr_N(Z) -> Gr_M(Z_M): level-M coordinate variables map to the same-named
/// level-N variables. Throws LevelMismatch.
schemes::MorphismPresentation change_level(const schemes::AffinePresentation& z, unsigned target_level);

}  // namespace greenberg::transform
