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
#include <vector>

#include "greenberg/poly/polynomial.hpp"

namespace greenberg::witt {

/// Universal p-typical Witt laws of length n over Z, in the variables
/// x0..x{n-1} (first argument) and y0..y{n-1} (second argument).
struct WittLaws {
    std::uint32_t p = 0;
    unsigned n = 0;
    std::vector<poly::IntPoly> sum;
    std::vector<poly::IntPoly> prod;
    std::vector<poly::IntPoly> neg;
};

using WittLawsPtr = std::shared_ptr<const WittLaws>;

/// Witt laws reduced into F_p.
struct ReducedWittLaws {
    std::uint32_t p = 0;
    unsigned n = 0;
    poly::RingDomainPtr fp;
    std::vector<poly::RingPoly> sum;
    std::vector<poly::RingPoly> prod;
    std::vector<poly::RingPoly> neg;
};

using ReducedWittLawsPtr = std::shared_ptr<const ReducedWittLaws>;

/// Name of the i-th coordinate variable of the first / second argument.
std::string xvar(unsigned i);
std::string yvar(unsigned i);

/// Ghost component w_j(v0..vj) = sum_{i<=j} p^i v_i^{p^{j-i}} of the given
/// coordinate polynomials.
poly::IntPoly ghost(std::uint32_t p, unsigned j, const std::vector<poly::IntPoly>& coords);

/// Builds the laws by ghost recursion with exact division, then re-checks
/// the ghost identities. Results are memoized in-process and, when a cache
/// directory is configured, stored on disk as canonical text.
WittLawsPtr build_laws(std::uint32_t p, unsigned n);

/// Laws reduced mod p, memoized.
ReducedWittLawsPtr reduced_laws(std::uint32_t p, unsigned n);

/// Description of the first ghost identity that fails, or "" if all hold.
/// Also checks that the j-th laws only involve coordinates of index <= j.
std::string check_ghost_identities(const WittLaws& laws);

/// Cache directory: the override set here, else $GREENBERG_CACHE, else ./.cache.
/// An empty string disables the disk cache.
std::string cache_dir();
void set_cache_dir(const std::string& dir);
/// Drops the in-process memo (for tests of the disk cache).
void clear_memory_cache();

/// Serializes laws in canonical text; `parse_laws` inverts it.
std::string serialize_laws(const WittLaws& laws);
WittLaws parse_laws(const std::string& text);

}  // namespace greenberg::witt
