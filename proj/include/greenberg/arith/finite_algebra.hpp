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
#include <optional>
#include <string>
#include <vector>

#include "greenberg/arith/finite_field.hpp"
#include "greenberg/arith/finite_ring.hpp"

namespace greenberg::arith {

/// A finite commutative F_q-algebra with basis e_0..e_{t-1} and
/// multiplication e_i * e_j = sum_k table[i][j][k] e_k.
///
/// Elements are codes sum_i c_i q^i over the coordinates c_i in F_q, so the
/// enumeration order is lexicographic on coordinates (e_0 varying fastest):
/// F_2[e]/(e^2) enumerates as 0, 1, e, 1+e.
class FiniteAlgebra {
   public:
    using Element = std::uint32_t;
    using Table = std::vector<std::vector<std::vector<FqElem>>>;

    /// Validates commutativity, associativity and the unit on basis triples
    /// and tabulates the ring. Throws SizeGuard if q^t exceeds `size_guard`.
    static std::shared_ptr<const FiniteAlgebra> from_structure_constants(std::string name, FieldPtr base,
                                                                         Table table, std::vector<FqElem> unit,
                                                                         std::uint64_t size_guard = 4096);

    static std::shared_ptr<const FiniteAlgebra> field(FieldPtr base, std::uint64_t size_guard = 4096);
    /// F_q[e]/(e^m), m >= 2.
    static std::shared_ptr<const FiniteAlgebra> dual_numbers(FieldPtr base, unsigned m,
                                                             std::uint64_t size_guard = 4096);
    /// Componentwise product; both factors over the same base field.
    static std::shared_ptr<const FiniteAlgebra> product(const FiniteAlgebra& left, const FiniteAlgebra& right,
                                                        std::uint64_t size_guard = 4096);
    /// A (x)_{F_q} F_{q'} for a field extension base -> larger; the structure
    /// constants are reinterpreted through an embedding.
    static std::shared_ptr<const FiniteAlgebra> base_change(const FiniteAlgebra& algebra, FieldPtr larger,
                                                            std::uint64_t size_guard = 4096);

    const std::string& name() const noexcept { return name_; }
    const FieldPtr& base() const noexcept { return base_; }
    unsigned dim() const noexcept { return dim_; }
    std::uint32_t size() const noexcept { return ring_->size(); }
    const Table& table() const noexcept { return table_; }
    const std::vector<FqElem>& unit_coords() const noexcept { return unit_; }

    /// The tabulated ring of this algebra.
    const FiniteRingPtr& ring() const noexcept { return ring_; }

    Element zero() const noexcept { return 0; }
    Element one() const noexcept { return ring_->one(); }
    Element add(Element a, Element b) const { return ring_->add(a, b); }
    Element mul(Element a, Element b) const { return ring_->mul(a, b); }
    Element neg(Element a) const { return ring_->neg(a); }
    Element frobenius(Element a) const { return ring_->pow(a, base_->characteristic()); }

    std::vector<FqElem> coords(Element a) const;
    Element from_coords(const std::vector<FqElem>& c) const;
    /// Scalar c * 1 for c in the base field.
    Element from_base(FqElem c) const;

    /// All q^t elements in code order. Throws SizeGuard above `size_guard`.
    std::vector<Element> enumerate(std::uint64_t size_guard = 4096) const;

    /// Whether this algebra is a k-algebra, i.e. k embeds into the base field.
    bool is_algebra_over(const FieldPtr& k) const;
    /// Structure map k -> A as a table indexed by k-codes.
    std::vector<Element> structure_map(const FieldPtr& k) const;

    std::string to_string(Element a) const;

   private:
    FiniteAlgebra() = default;

    Element mul_coords(Element a, Element b) const;

    std::string name_;
    FieldPtr base_;
    unsigned dim_ = 0;
    Table table_;
    std::vector<FqElem> unit_;
    FiniteRingPtr ring_;
};

using AlgebraPtr = std::shared_ptr<const FiniteAlgebra>;

}  // namespace greenberg::arith
