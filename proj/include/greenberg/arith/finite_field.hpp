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

namespace greenberg::arith {

/// An element of F_q, encoded as sum_i c_i p^i where (c_0, ..., c_{d-1}) are
/// its coordinates in the power basis 1, u, ..., u^{d-1}. The elements of the
/// prime field keep their natural codes 0..p-1.
using FqElem = std::uint32_t;

bool is_prime(std::uint64_t n);

/// Finite field F_q = F_p[u]/(modulus). Immutable; share through
/// `std::shared_ptr<const FiniteField>`.
class FiniteField {
   public:
    /// Builds F_p[u]/(modulus). `modulus` lists coefficients from the
    /// constant term upwards and must be monic. The constant polynomial [1]
    /// (and any monic of degree 1) denotes the prime field.
    static std::shared_ptr<const FiniteField> build(std::int64_t p, const std::vector<std::int64_t>& modulus,
                                                    unsigned max_degree = 4);
    static std::shared_ptr<const FiniteField> prime(std::int64_t p);

    std::uint32_t characteristic() const noexcept { return p_; }
    unsigned degree() const noexcept { return d_; }
    std::uint32_t order() const noexcept { return q_; }
    bool is_prime_field() const noexcept { return d_ == 1; }
    /// Canonical modulus, low to high; [1] for prime fields.
    const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }

    FqElem zero() const noexcept { return 0; }
    FqElem one() const noexcept { return 1; }
    /// The class of u; equals 0 in a prime field.
    FqElem generator() const noexcept { return d_ == 1 ? 0 : p_; }

    FqElem add(FqElem a, FqElem b) const;
    FqElem sub(FqElem a, FqElem b) const { return add(a, neg(b)); }
    FqElem neg(FqElem a) const;
    FqElem mul(FqElem a, FqElem b) const;
    FqElem pow(FqElem a, std::uint64_t e) const;
    FqElem inv(FqElem a) const;
    FqElem frobenius(FqElem a) const { return pow(a, p_); }
    FqElem from_integer(std::int64_t m) const;

    std::vector<std::uint32_t> coords(FqElem a) const;
    FqElem from_coords(const std::vector<std::uint32_t>& c) const;

    /// All q elements in code order, i.e. lexicographic on coordinates with
    /// the constant coordinate varying fastest.
    std::vector<FqElem> enumerate() const;

    /// "c" for prime fields, "[c0,c1,...]" otherwise.
    std::string to_string(FqElem a) const;
    /// Short label such as "F4".
    std::string name() const;

    bool operator==(const FiniteField& other) const noexcept {
        return p_ == other.p_ && modulus_ == other.modulus_;
    }

   private:
    FiniteField(std::uint32_t p, std::vector<std::uint32_t> modulus);

    FqElem mul_slow(FqElem a, FqElem b) const;

    std::uint32_t p_;
    unsigned d_;
    std::uint32_t q_;
    std::vector<std::uint32_t> modulus_;
    std::vector<FqElem> mul_table_;  // filled when q <= kTableLimit
    std::vector<FqElem> inv_table_;

    static constexpr std::uint32_t kTableLimit = 256;
};

using FieldPtr = std::shared_ptr<const FiniteField>;

bool same_field(const FieldPtr& a, const FieldPtr& b);

/// A field embedding small -> big, found by searching big for a root of the
/// modulus of small. `image[c]` is the image of the element with code c.
struct FieldEmbedding {
    FieldPtr source;
    FieldPtr target;
    std::vector<FqElem> image;

    FqElem operator()(FqElem a) const { return image.at(a); }
};

/// Smallest-code embedding of `small` into `big`, if one exists.
std::optional<FieldEmbedding> find_embedding(const FieldPtr& small, const FieldPtr& big);

}  // namespace greenberg::arith
