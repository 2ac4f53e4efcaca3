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
#include <string>
#include <vector>

#include "greenberg/arith/finite_ring.hpp"
#include "greenberg/poly/evaluate.hpp"
#include "greenberg/poly/polynomial.hpp"

namespace greenberg::witt {

/// A ring scheme structure on affine w-space over F_p: addition,
/// multiplication and negation given by polynomials over F_p in
/// x0..x{w-1}, y0..y{w-1}, plus the coordinates of 0 and 1.
/// Both W_n and the Greenberg algebras are instances.
struct CoordinateLaws {
    unsigned width = 0;
    poly::RingDomainPtr fp;
    std::vector<poly::RingPoly> add;
    std::vector<poly::RingPoly> mul;
    std::vector<poly::RingPoly> neg;
    std::vector<std::uint32_t> zero;
    std::vector<std::uint32_t> one;
};

using CoordinateLawsPtr = std::shared_ptr<const CoordinateLaws>;

/// Input slot names x0..x{w-1}, y0..y{w-1}.
std::vector<std::string> law_slots(unsigned width);

/// Applies one law family to coordinate tuples in any carrier. `lift` maps
/// F_p codes into the carrier.
template <class Carrier, class Lift>
std::vector<typename Carrier::Value> apply_law(const std::vector<poly::RingPoly>& law,
                                               const std::vector<typename Carrier::Value>& x,
                                               const std::vector<typename Carrier::Value>& y, const Carrier& ring,
                                               const Lift& lift) {
    std::map<std::string, typename Carrier::Value> assignment;
    for (std::size_t i = 0; i < x.size(); ++i) assignment.emplace("x" + std::to_string(i), x[i]);
    for (std::size_t i = 0; i < y.size(); ++i) assignment.emplace("y" + std::to_string(i), y[i]);
    std::vector<typename Carrier::Value> out;
    out.reserve(law.size());
    for (const auto& p : law) out.push_back(poly::evaluate(p, assignment, ring, lift));
    return out;
}

/// The laws evaluated on tuples over a finite ring A, i.e. the ring of
/// A-points. Tuples have codes sum_j a_j |A|^j.
class CoordinateRing {
   public:
    using Coords = std::vector<std::uint32_t>;

    CoordinateRing(CoordinateLawsPtr laws, arith::FiniteRingPtr carrier, std::string name);

    const CoordinateLawsPtr& laws() const noexcept { return laws_; }
    const arith::FiniteRingPtr& carrier() const noexcept { return carrier_; }
    unsigned width() const noexcept { return laws_->width; }
    const std::string& name() const noexcept { return name_; }
    /// |A|^width.
    std::uint64_t count() const noexcept { return codec_.count(); }

    Coords zero() const { return zero_; }
    Coords one() const { return one_; }
    Coords add(const Coords& a, const Coords& b) const;
    Coords mul(const Coords& a, const Coords& b) const;
    Coords neg(const Coords& a) const;
    Coords sub(const Coords& a, const Coords& b) const { return add(a, neg(b)); }
    /// Image of m under Z -> this ring, by double-and-add.
    Coords from_integer(std::int64_t m) const;

    std::uint64_t encode(const Coords& a) const { return codec_.encode(a); }
    Coords decode(std::uint64_t code) const { return codec_.decode(code); }

    /// The ring of points as a Cayley-table ring on the tuple codes.
    /// Throws SizeGuard if count() exceeds `size_guard`.
    arith::FiniteRingPtr tabulate(std::uint64_t size_guard = 4096) const;

   private:
    Coords lift_coords(const std::vector<std::uint32_t>& fp_coords) const;

    CoordinateLawsPtr laws_;
    arith::FiniteRingPtr carrier_;
    std::string name_;
    arith::TupleCodec codec_;
    poly::CompiledSystem add_, mul_, neg_;
    Coords zero_, one_;
};

}  // namespace greenberg::witt
