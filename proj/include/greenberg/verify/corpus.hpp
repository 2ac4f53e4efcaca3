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
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "greenberg/arith/finite_algebra.hpp"
#include "greenberg/ga/greenberg_algebra.hpp"
#include "greenberg/schemes/presentation.hpp"

namespace greenberg::verify {

/// Equal p in {2,3}; W(F_p) p in {2,3}; t^2-2, t^2-3, t^3-2.
std::vector<ga::BaseRingSpec> base_corpus();

/// F2, F3, F4, F2[e]/(e^2).
std::vector<arith::AlgebraPtr> test_algebras();
/// F2 and F2[e]/(e^2).
std::vector<arith::AlgebraPtr> weil_algebras();

arith::FieldPtr f4();

schemes::TermSpec term(std::int64_t c, std::vector<std::uint32_t> exps);
schemes::TermSpec pi_term(std::int64_t c, std::vector<std::uint32_t> exps);

struct SchemeEntry {
    schemes::SchemeSpec spec;
    /// Smoothness of the generic scheme over a base of residue characteristic p.
    std::function<bool(std::uint32_t)> smooth;
};

/// A1, A2, Gm, x^2-1, y^2-pi*x, x*y-pi, x^2+x+1.
std::vector<SchemeEntry> scheme_corpus();
const SchemeEntry& corpus_scheme(const std::string& name);

/// y^2 - pi*x over the square-zero level.
schemes::SchemeSpec square_zero_scheme();
/// x^2 - pi*x.
schemes::SchemeSpec weil_quadric();

struct GroupEntry {
    std::string name;
    schemes::SchemeSpec spec;
    std::vector<schemes::CoefficientSpec> identity;
    /// Images of the variables on the product, whose variables are l_v, r_v.
    std::function<std::map<std::string, poly::RingPoly>(const schemes::AffinePresentation&)> law;
    unsigned dim = 0;

    schemes::GroupSchemeSpec over(const schemes::CoeffRing& ring) const;
};

/// Ga, Gm, Gm^2.
std::vector<GroupEntry> group_corpus();

struct EtaleEntry {
    std::string name;
    schemes::SchemeSpec source;
    schemes::SchemeSpec target;
    std::function<std::map<std::string, poly::RingPoly>(const schemes::AffinePresentation&)> images;
    std::function<bool(std::uint32_t)> applies;

    schemes::MorphismPresentation over(const schemes::CoeffRing& ring) const;
};

/// (y^2-x, 2yt-1) -> A1 for odd p, (xt-1) -> A1, the identity of A1.
std::vector<EtaleEntry> etale_corpus();

}  // namespace greenberg::verify
