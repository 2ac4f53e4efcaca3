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
#include <vector>

#include "greenberg/witt/coordinate_ring.hpp"
#include "greenberg/witt/laws.hpp"

namespace greenberg::witt {

/// The mod-p Witt laws of length n as coordinate laws.
CoordinateLawsPtr witt_coordinate_laws(std::uint32_t p, unsigned n);

/// W_n(A) for a finite F_p-algebra A given by its tabulated ring.
class WittRing {
   public:
    using Vec = CoordinateRing::Coords;

    /// Throws InvalidArgument if p is not zero in A.
    WittRing(std::uint32_t p, unsigned n, arith::FiniteRingPtr algebra);

    std::uint32_t p() const noexcept { return p_; }
    unsigned length() const noexcept { return n_; }
    const CoordinateRing& ring() const noexcept { return ring_; }
    const arith::FiniteRingPtr& algebra() const noexcept { return ring_.carrier(); }

    Vec zero() const { return ring_.zero(); }
    Vec one() const { return ring_.one(); }
    Vec add(const Vec& a, const Vec& b) const { return ring_.add(a, b); }
    Vec mul(const Vec& a, const Vec& b) const { return ring_.mul(a, b); }
    Vec neg(const Vec& a) const { return ring_.neg(a); }

    /// (a_0, ..., a_{n-1}) -> (0, a_0, ..., a_{n-2}).
    Vec verschiebung(const Vec& a) const;
    /// Coordinatewise p-th power.
    Vec frobenius(const Vec& a) const;
    /// [x] = (x, 0, ..., 0).
    Vec teichmueller(std::uint32_t x) const;
    /// Image of m under Z -> W_n(A).
    Vec from_integer(std::int64_t m) const { return ring_.from_integer(m); }
    /// p * a computed as V(F(a)).
    Vec times_p(const Vec& a) const { return verschiebung(frobenius(a)); }

    /// Coordinatewise image under an algebra map A -> B given as a table.
    static Vec map(const Vec& a, const std::vector<std::uint32_t>& phi);

   private:
    std::uint32_t p_;
    unsigned n_;
    CoordinateRing ring_;
};

}  // namespace greenberg::witt
