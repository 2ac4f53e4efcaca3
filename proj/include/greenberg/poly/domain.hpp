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

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "greenberg/arith/finite_field.hpp"
#include "greenberg/arith/finite_ring.hpp"

namespace greenberg::poly {

/// Coefficient domain Z with GMP integers.
class IntegerDomain {
   public:
    using Value = mpz_class;

    static std::shared_ptr<const IntegerDomain> instance();

    Value zero() const { return 0; }
    Value one() const { return 1; }
    bool is_zero(const Value& a) const { return a == 0; }
    bool is_one(const Value& a) const { return a == 1; }
    Value add(const Value& a, const Value& b) const { return a + b; }
    Value sub(const Value& a, const Value& b) const { return a - b; }
    Value neg(const Value& a) const { return -a; }
    Value mul(const Value& a, const Value& b) const { return a * b; }
    Value from_integer(std::int64_t m) const { return Value(static_cast<long>(m)); }

    bool signed_output() const noexcept { return true; }
    bool is_negative(const Value& a) const { return a < 0; }
    std::string format(const Value& a) const { return a.get_str(); }
    /// Parses a non-negative decimal integer.
    Value parse(const std::string& text) const;
    std::string name() const { return "ZZ"; }

    bool operator==(const IntegerDomain&) const noexcept { return true; }
};

/// Coefficient domain given by a tabulated finite commutative ring. Values are
/// element codes. `labels[c]` is the canonical text of code c: plain integers
/// for prime fields and Z/n, "[c0,c1]" for non-prime fields, "[c0;c1;...]"
/// for truncated-ring constants.
class RingDomain {
   public:
    using Value = std::uint32_t;

    RingDomain(arith::FiniteRingPtr ring, std::vector<std::string> labels);

    /// F_q as a coefficient domain.
    static std::shared_ptr<const RingDomain> of_field(const arith::FieldPtr& field);

    const arith::FiniteRingPtr& ring() const noexcept { return ring_; }
    /// Additive order of 1.
    std::uint64_t characteristic() const noexcept { return characteristic_; }
    /// The field this domain was built from, if any.
    const arith::FieldPtr& field() const noexcept { return field_; }

    Value zero() const { return ring_->zero(); }
    Value one() const { return ring_->one(); }
    bool is_zero(Value a) const { return a == ring_->zero(); }
    bool is_one(Value a) const { return a == ring_->one(); }
    Value add(Value a, Value b) const { return ring_->add(a, b); }
    Value sub(Value a, Value b) const { return ring_->sub(a, b); }
    Value neg(Value a) const { return ring_->neg(a); }
    Value mul(Value a, Value b) const { return ring_->mul(a, b); }
    Value from_integer(std::int64_t m) const { return ring_->from_integer(m); }
    Value from_mpz(const mpz_class& m) const;

    bool signed_output() const noexcept { return false; }
    bool is_negative(Value) const { return false; }
    std::string format(Value a) const { return labels_.at(a); }
    Value parse(const std::string& text) const;
    std::string name() const { return ring_->name(); }

    bool operator==(const RingDomain& other) const noexcept {
        return ring_ == other.ring_ || labels_ == other.labels_;
    }

   private:
    arith::FiniteRingPtr ring_;
    arith::FieldPtr field_;
    std::vector<std::string> labels_;
    std::unordered_map<std::string, Value> by_label_;
    std::uint64_t characteristic_ = 0;
};

using IntegerDomainPtr = std::shared_ptr<const IntegerDomain>;
using RingDomainPtr = std::shared_ptr<const RingDomain>;

/// Tabulates F_q as a FiniteRing with the field's codes.
arith::FiniteRingPtr field_ring(const arith::FieldPtr& field);

}  // namespace greenberg::poly
