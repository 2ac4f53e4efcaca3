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

#include "greenberg/arith/finite_ring.hpp"
#include "greenberg/ga/greenberg_algebra.hpp"

namespace greenberg::ga {

/// Independent integer model of R_N for k = F_p: Z[pi]/(f, pi^{N+1}, p^m) in
/// the mixed case, F_p[t]/(t^{N+1}) in the equal case. Elements are cosets of
/// the lattice of relations in (Z/p^m)^rho, each represented by its smallest
/// coefficient vector.
struct OracleRing {
    std::uint32_t p = 0;
    unsigned rho = 1;
    std::uint64_t modulus = 0;  // p^m (p in the equal case)
    /// Coefficient vector of each element code, pi-powers from 0 to rho-1.
    std::vector<std::vector<std::uint64_t>> reps;
    arith::FiniteRingPtr ring;

    /// Element code of every vector of (Z/p^m)^rho, indexed by its tuple code.
    std::vector<std::uint32_t> classes;

    /// Code of the class of an arbitrary coefficient vector.
    std::uint32_t code_of(const std::vector<std::uint64_t>& v) const;
};

/// Throws NotPrimeField unless k = F_p.
OracleRing ga_oracle(const BaseRingSpec& base, unsigned level);

struct OracleComparison {
    bool bijective = false;
    bool isomorphic = false;
    std::uint64_t elements = 0;
    std::string failure;
};

/// Checks that (coordinates) -> sum_i int(w_i) pi^i, with int the inverse of
/// Z/p^m -> W_m(F_p), is a ring isomorphism R_N(F_p) -> oracle, exhaustively.
OracleComparison compare_with_oracle(const GreenbergAlgebra& algebra, const OracleRing& oracle);

}  // namespace greenberg::ga
