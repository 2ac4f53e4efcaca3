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
#include <memory>
#include <string>
#include <vector>

namespace greenberg::arith {

/// A finite commutative ring whose elements are the codes 0..size-1, with
/// addition and multiplication held in Cayley tables. This is the carrier
/// used for every brute-force enumeration: finite algebras, W_n(A), R_N(A),
/// oracle rings and Z/p^n all tabulate into it.
class FiniteRing {
   public:
    using Element = std::uint32_t;
    using BinaryOp = std::function<Element(Element, Element)>;

    /// Tabulates `add` and `mul` over all pairs. Throws SizeGuard when `size`
    /// exceeds `size_guard`.
    static std::shared_ptr<const FiniteRing> tabulate(std::string name, std::uint32_t size, Element zero,
                                                      Element one, const BinaryOp& add, const BinaryOp& mul,
                                                      std::uint64_t size_guard = 4096);

    const std::string& name() const noexcept { return name_; }
    std::uint32_t size() const noexcept { return size_; }
    Element zero() const noexcept { return zero_; }
    Element one() const noexcept { return one_; }

    Element add(Element a, Element b) const { return add_[index(a, b)]; }
    Element mul(Element a, Element b) const { return mul_[index(a, b)]; }
    Element neg(Element a) const { return neg_[a]; }
    Element sub(Element a, Element b) const { return add(a, neg(b)); }
    Element pow(Element a, std::uint64_t e) const;
    /// Image of m under the unique ring map Z -> this ring.
    Element from_integer(std::int64_t m) const;
    bool is_unit(Element a) const;

    std::vector<Element> elements() const;

    /// Ring axioms checked exhaustively over all triples: both operations
    /// associative and commutative, distributivity, neutral elements and
    /// additive inverses. Returns a description of the first violation or an
    /// empty string.
    std::string check_axioms() const;

   private:
    FiniteRing() = default;
    std::size_t index(Element a, Element b) const { return static_cast<std::size_t>(a) * size_ + b; }

    std::string name_;
    std::uint32_t size_ = 0;
    Element zero_ = 0;
    Element one_ = 0;
    std::vector<std::uint16_t> add_;
    std::vector<std::uint16_t> mul_;
    std::vector<Element> neg_;
};

using FiniteRingPtr = std::shared_ptr<const FiniteRing>;

/// Codes for tuples of carrier elements: (a_0, ..., a_{w-1}) <-> sum a_j b^j
/// with b the carrier size. Coordinate 0 varies fastest, which makes the
/// enumeration order lexicographic on coordinates.
class TupleCodec {
   public:
    TupleCodec(std::uint32_t base, std::size_t width);

    std::uint64_t count() const noexcept { return count_; }
    std::size_t width() const noexcept { return width_; }
    std::uint32_t base() const noexcept { return base_; }

    std::vector<std::uint32_t> decode(std::uint64_t code) const;
    std::uint64_t encode(const std::vector<std::uint32_t>& coords) const;

   private:
    std::uint32_t base_;
    std::size_t width_;
    std::uint64_t count_;
};

}  // namespace greenberg::arith
