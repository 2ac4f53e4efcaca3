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

#include "greenberg/arith/finite_ring.hpp"

#include <algorithm>
#include <sstream>

#include "greenberg/error.hpp"

namespace greenberg::arith {

std::shared_ptr<const FiniteRing> FiniteRing::tabulate(std::string name, std::uint32_t size, Element zero,
                                                       Element one, const BinaryOp& add, const BinaryOp& mul,
                                                       std::uint64_t size_guard) {
    if (size == 0) throw Error(ErrorCode::InvalidArgument, "empty ring");
    if (size > size_guard || size > 65535)
        throw Error(ErrorCode::SizeGuard, "ring " + name + " has " + std::to_string(size) +
                                              " elements, above the guard " + std::to_string(size_guard));
    std::shared_ptr<FiniteRing> ring(new FiniteRing());
    ring->name_ = std::move(name);
    ring->size_ = size;
    ring->zero_ = zero;
    ring->one_ = one;
    const std::size_t n = static_cast<std::size_t>(size) * size;
    ring->add_.resize(n);
    ring->mul_.resize(n);
    ring->neg_.assign(size, size);
    for (Element a = 0; a < size; ++a) {
        for (Element b = 0; b < size; ++b) {
            const Element s = add(a, b), m = mul(a, b);
            if (s >= size || m >= size) throw Error(ErrorCode::InvalidArgument, "operation left the ring");
            ring->add_[ring->index(a, b)] = static_cast<std::uint16_t>(s);
            ring->mul_[ring->index(a, b)] = static_cast<std::uint16_t>(m);
        }
    }
    for (Element a = 0; a < size; ++a)
        for (Element b = 0; b < size; ++b)
            if (ring->add(a, b) == zero) {
                ring->neg_[a] = b;
                break;
            }
    for (Element a = 0; a < size; ++a)
        if (ring->neg_[a] == size) throw Error(ErrorCode::InvalidArgument, "missing additive inverse");
    return ring;
}

FiniteRing::Element FiniteRing::pow(Element a, std::uint64_t e) const {
    Element result = one_;
    while (e > 0) {
        if (e & 1) result = mul(result, a);
        a = mul(a, a);
        e >>= 1;
    }
    return result;
}

FiniteRing::Element FiniteRing::from_integer(std::int64_t m) const {
    const bool negative = m < 0;
    std::uint64_t k = negative ? static_cast<std::uint64_t>(-(m + 1)) + 1 : static_cast<std::uint64_t>(m);
    Element result = zero_, base = one_;
    while (k > 0) {
        if (k & 1) result = add(result, base);
        base = add(base, base);
        k >>= 1;
    }
    return negative ? neg(result) : result;
}

bool FiniteRing::is_unit(Element a) const {
    for (Element b = 0; b < size_; ++b)
        if (mul(a, b) == one_) return true;
    return false;
}

std::vector<FiniteRing::Element> FiniteRing::elements() const {
    std::vector<Element> out(size_);
    for (Element a = 0; a < size_; ++a) out[a] = a;
    return out;
}

std::string FiniteRing::check_axioms() const {
    std::ostringstream os;
    for (Element a = 0; a < size_; ++a) {
        if (add(a, zero_) != a) return (os << "zero is not neutral for " << a, os.str());
        if (mul(a, one_) != a) return (os << "one is not neutral for " << a, os.str());
        if (add(a, neg(a)) != zero_) return (os << "no additive inverse for " << a, os.str());
        for (Element b = 0; b < size_; ++b) {
            if (add(a, b) != add(b, a)) return (os << "addition not commutative at " << a << "," << b, os.str());
            if (mul(a, b) != mul(b, a)) return (os << "multiplication not commutative at " << a << "," << b, os.str());
            const Element ab = add(a, b), mab = mul(a, b);
            for (Element c = 0; c < size_; ++c) {
                if (add(ab, c) != add(a, add(b, c)))
                    return (os << "addition not associative at " << a << "," << b << "," << c, os.str());
                if (mul(mab, c) != mul(a, mul(b, c)))
                    return (os << "multiplication not associative at " << a << "," << b << "," << c, os.str());
                if (mul(a, add(b, c)) != add(mab, mul(a, c)))
                    return (os << "distributivity fails at " << a << "," << b << "," << c, os.str());
            }
        }
    }
    return {};
}

TupleCodec::TupleCodec(std::uint32_t base, std::size_t width) : base_(base), width_(width), count_(1) {
    for (std::size_t i = 0; i < width; ++i) {
        if (count_ > (std::uint64_t{1} << 40) / std::max<std::uint32_t>(base, 1))
            throw Error(ErrorCode::SizeGuard, "tuple space too large");
        count_ *= base;
    }
}

std::vector<std::uint32_t> TupleCodec::decode(std::uint64_t code) const {
    std::vector<std::uint32_t> c(width_);
    for (std::size_t i = 0; i < width_; ++i) {
        c[i] = static_cast<std::uint32_t>(code % base_);
        code /= base_;
    }
    return c;
}

std::uint64_t TupleCodec::encode(const std::vector<std::uint32_t>& coords) const {
    std::uint64_t code = 0, scale = 1;
    for (std::size_t i = 0; i < width_; ++i) {
        code += static_cast<std::uint64_t>(coords.at(i)) * scale;
        scale *= base_;
    }
    return code;
}

}  // namespace greenberg::arith
