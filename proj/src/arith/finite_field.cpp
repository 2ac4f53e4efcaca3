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

#include "greenberg/arith/finite_field.hpp"

#include <sstream>

#include "greenberg/error.hpp"

namespace greenberg::arith {

namespace {

std::uint32_t reduce_mod(std::int64_t a, std::uint32_t p) {
    std::int64_t r = a % static_cast<std::int64_t>(p);
    return static_cast<std::uint32_t>(r < 0 ? r + p : r);
}

// Remainder of a modulo the monic polynomial g over F_p (both low to high).
std::vector<std::uint32_t> poly_rem(std::vector<std::uint32_t> a, const std::vector<std::uint32_t>& g,
                                    std::uint32_t p) {
    const std::size_t dg = g.size() - 1;
    while (a.size() > dg) {
        const std::uint32_t lead = a.back();
        if (lead != 0) {
            const std::size_t shift = a.size() - 1 - dg;
            for (std::size_t i = 0; i <= dg; ++i) {
                const std::uint64_t sub = static_cast<std::uint64_t>(lead) * g[i] % p;
                a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - sub) % p);
            }
        }
        a.pop_back();
    }
    return a;
}

bool is_zero_poly(const std::vector<std::uint32_t>& a) {
    for (auto c : a)
        if (c != 0) return false;
    return true;
}

}  // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

FiniteField::FiniteField(std::uint32_t p, std::vector<std::uint32_t> modulus)
    : p_(p), d_(modulus.size() <= 2 ? 1 : static_cast<unsigned>(modulus.size() - 1)), q_(1) {
    modulus_ = d_ == 1 ? std::vector<std::uint32_t>{1} : std::move(modulus);
    for (unsigned i = 0; i < d_; ++i) q_ *= p_;
    if (q_ <= kTableLimit) {
        mul_table_.resize(static_cast<std::size_t>(q_) * q_);
        for (FqElem a = 0; a < q_; ++a)
            for (FqElem b = 0; b < q_; ++b) mul_table_[a * q_ + b] = mul_slow(a, b);
    }
    inv_table_.assign(q_, 0);
    if (q_ <= 65536) {
        for (FqElem a = 1; a < q_; ++a) inv_table_[a] = pow(a, q_ - 2);
    }
}

std::shared_ptr<const FiniteField> FiniteField::build(std::int64_t p, const std::vector<std::int64_t>& modulus,
                                                      unsigned max_degree) {
    if (p < 2 || p > 65521 || !is_prime(static_cast<std::uint64_t>(p)))
        throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not a supported prime");
    const auto up = static_cast<std::uint32_t>(p);
    if (modulus.empty()) throw Error(ErrorCode::InvalidArgument, "empty modulus");
    std::vector<std::uint32_t> m;
    m.reserve(modulus.size());
    for (auto c : modulus) m.push_back(reduce_mod(c, up));
    if (m.back() != 1) throw Error(ErrorCode::InvalidArgument, "modulus must be monic");
    const std::size_t d = m.size() <= 2 ? 1 : m.size() - 1;
    if (d > max_degree)
        throw Error(ErrorCode::DegreeTooLarge,
                    "degree " + std::to_string(d) + " exceeds bound " + std::to_string(max_degree));
    if (d > 1) {
        std::uint64_t q = 1;
        for (std::size_t i = 0; i < d; ++i) q *= up;
        if (q > (std::uint64_t{1} << 24)) throw Error(ErrorCode::SizeGuard, "field order too large");
        // Exhaustive search for a monic factor of degree 1 .. d/2.
        for (std::size_t fd = 1; fd <= d / 2; ++fd) {
            std::uint64_t count = 1;
            for (std::size_t i = 0; i < fd; ++i) count *= up;
            for (std::uint64_t code = 0; code < count; ++code) {
                std::vector<std::uint32_t> g(fd + 1, 0);
                std::uint64_t c = code;
                for (std::size_t i = 0; i < fd; ++i) {
                    g[i] = static_cast<std::uint32_t>(c % up);
                    c /= up;
                }
                g[fd] = 1;
                if (is_zero_poly(poly_rem(m, g, up))) {
                    std::ostringstream os;
                    os << "modulus has a factor of degree " << fd;
                    throw Error(ErrorCode::Reducible, os.str());
                }
            }
        }
    }
    return std::shared_ptr<const FiniteField>(new FiniteField(up, std::move(m)));
}

std::shared_ptr<const FiniteField> FiniteField::prime(std::int64_t p) { return build(p, {1}); }

FqElem FiniteField::add(FqElem a, FqElem b) const {
    if (d_ == 1) {
        const FqElem s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    FqElem result = 0, scale = 1;
    for (unsigned i = 0; i < d_; ++i) {
        const std::uint32_t s = (a % p_ + b % p_) % p_;
        result += s * scale;
        scale *= p_;
        a /= p_;
        b /= p_;
    }
    return result;
}

FqElem FiniteField::neg(FqElem a) const {
    if (d_ == 1) return a == 0 ? 0 : p_ - a;
    FqElem result = 0, scale = 1;
    for (unsigned i = 0; i < d_; ++i) {
        const std::uint32_t c = a % p_;
        result += (c == 0 ? 0 : p_ - c) * scale;
        scale *= p_;
        a /= p_;
    }
    return result;
}

FqElem FiniteField::mul_slow(FqElem a, FqElem b) const {
    if (d_ == 1) return static_cast<FqElem>(static_cast<std::uint64_t>(a) * b % p_);
    const auto ca = coords(a), cb = coords(b);
    std::vector<std::uint32_t> prod(2 * d_ - 1, 0);
    for (unsigned i = 0; i < d_; ++i)
        for (unsigned j = 0; j < d_; ++j)
            prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + static_cast<std::uint64_t>(ca[i]) * cb[j]) % p_);
    return from_coords(poly_rem(std::move(prod), modulus_, p_));
}

FqElem FiniteField::mul(FqElem a, FqElem b) const {
    if (!mul_table_.empty()) return mul_table_[a * q_ + b];
    return mul_slow(a, b);
}

FqElem FiniteField::pow(FqElem a, std::uint64_t e) const {
    FqElem result = 1;
    while (e > 0) {
        if (e & 1) result = mul(result, a);
        a = mul(a, a);
        e >>= 1;
    }
    return result;
}

FqElem FiniteField::inv(FqElem a) const {
    if (a == 0) throw Error(ErrorCode::InvalidArgument, "inverse of zero");
    if (!inv_table_.empty() && inv_table_[a] != 0) return inv_table_[a];
    return pow(a, q_ - 2);
}

FqElem FiniteField::from_integer(std::int64_t m) const { return reduce_mod(m, p_); }

std::vector<std::uint32_t> FiniteField::coords(FqElem a) const {
    std::vector<std::uint32_t> c(d_);
    for (unsigned i = 0; i < d_; ++i) {
        c[i] = a % p_;
        a /= p_;
    }
    return c;
}

FqElem FiniteField::from_coords(const std::vector<std::uint32_t>& c) const {
    FqElem result = 0, scale = 1;
    for (unsigned i = 0; i < d_; ++i) {
        const std::uint32_t ci = i < c.size() ? c[i] % p_ : 0;
        result += ci * scale;
        scale *= p_;
    }
    return result;
}

std::vector<FqElem> FiniteField::enumerate() const {
    std::vector<FqElem> out(q_);
    for (FqElem a = 0; a < q_; ++a) out[a] = a;
    return out;
}

std::string FiniteField::to_string(FqElem a) const {
    if (d_ == 1) return std::to_string(a);
    std::string s = "[";
    const auto c = coords(a);
    for (unsigned i = 0; i < d_; ++i) {
        if (i) s += ",";
        s += std::to_string(c[i]);
    }
    return s + "]";
}

std::string FiniteField::name() const { return "F" + std::to_string(q_); }

bool same_field(const FieldPtr& a, const FieldPtr& b) { return a == b || (a && b && *a == *b); }

std::optional<FieldEmbedding> find_embedding(const FieldPtr& small, const FieldPtr& big) {
    if (small->characteristic() != big->characteristic()) return std::nullopt;
    if (big->degree() % small->degree() != 0) return std::nullopt;
    FieldEmbedding emb{small, big, {}};
    emb.image.resize(small->order());
    if (small->is_prime_field()) {
        for (FqElem a = 0; a < small->order(); ++a) emb.image[a] = a;
        return emb;
    }
    const auto& m = small->modulus();
    for (FqElem r = 0; r < big->order(); ++r) {
        // Horner evaluation of the modulus of `small` at r.
        FqElem v = 0;
        for (std::size_t i = m.size(); i-- > 0;) v = big->add(big->mul(v, r), big->from_integer(m[i]));
        if (v != 0) continue;
        for (FqElem a = 0; a < small->order(); ++a) {
            const auto c = small->coords(a);
            FqElem img = 0;
            for (std::size_t i = c.size(); i-- > 0;) img = big->add(big->mul(img, r), big->from_integer(c[i]));
            emb.image[a] = img;
        }
        return emb;
    }
    return std::nullopt;
}

}  // namespace greenberg::arith
