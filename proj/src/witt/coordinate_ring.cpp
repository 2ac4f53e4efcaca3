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

#include "greenberg/witt/coordinate_ring.hpp"

#include "greenberg/error.hpp"

namespace greenberg::witt {

std::vector<std::string> law_slots(unsigned width) {
    std::vector<std::string> slots;
    for (unsigned i = 0; i < width; ++i) slots.push_back("x" + std::to_string(i));
    for (unsigned i = 0; i < width; ++i) slots.push_back("y" + std::to_string(i));
    return slots;
}

CoordinateRing::CoordinateRing(CoordinateLawsPtr laws, arith::FiniteRingPtr carrier, std::string name)
    : laws_(std::move(laws)), carrier_(std::move(carrier)), name_(std::move(name)), codec_(carrier_->size(), laws_->width) {
    const arith::FiniteRing* a = carrier_.get();
    auto lift = [a](std::uint32_t c) { return a->from_integer(c); };
    const auto slots = law_slots(laws_->width);
    add_ = poly::CompiledSystem(laws_->add, slots, carrier_, lift);
    mul_ = poly::CompiledSystem(laws_->mul, slots, carrier_, lift);
    neg_ = poly::CompiledSystem(laws_->neg, slots, carrier_, lift);
    zero_ = lift_coords(laws_->zero);
    one_ = lift_coords(laws_->one);
}

CoordinateRing::Coords CoordinateRing::lift_coords(const std::vector<std::uint32_t>& fp_coords) const {
    Coords c;
    for (auto v : fp_coords) c.push_back(carrier_->from_integer(v));
    return c;
}

namespace {

CoordinateRing::Coords run(const poly::CompiledSystem& sys, const CoordinateRing::Coords& a,
                           const CoordinateRing::Coords& b, unsigned w) {
    if (a.size() != w || b.size() != w) throw Error(ErrorCode::LengthMismatch, "coordinate tuple has wrong length");
    std::vector<std::uint32_t> in(2 * w);
    std::copy(a.begin(), a.end(), in.begin());
    std::copy(b.begin(), b.end(), in.begin() + w);
    CoordinateRing::Coords out(w);
    sys.evaluate(in.data(), out.data());
    return out;
}

}  // namespace

CoordinateRing::Coords CoordinateRing::add(const Coords& a, const Coords& b) const { return run(add_, a, b, width()); }
CoordinateRing::Coords CoordinateRing::mul(const Coords& a, const Coords& b) const { return run(mul_, a, b, width()); }
CoordinateRing::Coords CoordinateRing::neg(const Coords& a) const { return run(neg_, a, zero_, width()); }

CoordinateRing::Coords CoordinateRing::from_integer(std::int64_t m) const {
    const bool negative = m < 0;
    std::uint64_t k = negative ? static_cast<std::uint64_t>(-(m + 1)) + 1 : static_cast<std::uint64_t>(m);
    Coords result = zero_, base = one_;
    while (k > 0) {
        if (k & 1) result = add(result, base);
        base = add(base, base);
        k >>= 1;
    }
    return negative ? neg(result) : result;
}

arith::FiniteRingPtr CoordinateRing::tabulate(std::uint64_t size_guard) const {
    if (count() > size_guard)
        throw Error(ErrorCode::SizeGuard, name_ + " has " + std::to_string(count()) + " elements, above the guard " +
                                              std::to_string(size_guard));
    const auto n = static_cast<std::uint32_t>(count());
    std::vector<Coords> decoded(n);
    for (std::uint32_t c = 0; c < n; ++c) decoded[c] = decode(c);
    auto add = [&](std::uint32_t a, std::uint32_t b) {
        return static_cast<std::uint32_t>(encode(this->add(decoded[a], decoded[b])));
    };
    auto mul = [&](std::uint32_t a, std::uint32_t b) {
        return static_cast<std::uint32_t>(encode(this->mul(decoded[a], decoded[b])));
    };
    return arith::FiniteRing::tabulate(name_, n, static_cast<std::uint32_t>(encode(zero_)),
                                       static_cast<std::uint32_t>(encode(one_)), add, mul, size_guard);
}

}  // namespace greenberg::witt
