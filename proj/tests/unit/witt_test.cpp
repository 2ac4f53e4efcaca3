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


#include <gtest/gtest.h>

#include <filesystem>
#include <random>

#include "greenberg/arith/finite_algebra.hpp"
#include "greenberg/poly/domain.hpp"
#include "greenberg/witt/laws.hpp"
#include "greenberg/witt/witt_ring.hpp"

namespace greenberg::witt {
namespace {

using poly::IntegerDomain;
using poly::parse_polynomial;

// Z/p^n model of W_n(F_p): (a_0, ..., a_{n-1}) -> sum p^i tau(a_i), where
// tau(a) = a^{p^{n-1}} mod p^n is the Teichmueller lift.
std::uint64_t teich_value(std::uint32_t p, unsigned n, const std::vector<std::uint32_t>& a) {
    std::uint64_t mod = 1;
    for (unsigned i = 0; i < n; ++i) mod *= p;
    auto powmod = [&](std::uint64_t b, std::uint64_t e) {
        std::uint64_t r = 1 % mod;
        for (; e; e >>= 1, b = b * b % mod)
            if (e & 1) r = r * b % mod;
        return r;
    };
    std::uint64_t e = 1;
    for (unsigned i = 1; i < n; ++i) e *= p;
    std::uint64_t v = 0, pi = 1;
    for (unsigned i = 0; i < n; ++i) {
        v = (v + pi * powmod(a[i], e)) % mod;
        pi *= p;
    }
    return v;
}

TEST(WittLaws, LengthTwoOverTwo) {
    const auto laws = build_laws(2, 2);
    const auto z = IntegerDomain::instance();
    EXPECT_EQ(laws->sum[0], parse_polynomial(z, "x0 + y0"));
    EXPECT_EQ(laws->sum[1], parse_polynomial(z, "x1 + y1 - x0*y0"));
    EXPECT_EQ(laws->prod[0], parse_polynomial(z, "x0*y0"));
    EXPECT_EQ(laws->prod[1], parse_polynomial(z, "x0^2*y1 + x1*y0^2 + 2*x1*y1"));
}

TEST(WittLaws, LengthTwoOverThree) {
    const auto laws = build_laws(3, 2);
    const auto z = IntegerDomain::instance();
    EXPECT_EQ(laws->sum[1], parse_polynomial(z, "x1 + y1 - x0^2*y0 - x0*y0^2"));
}

TEST(WittLaws, GhostIdentities) {
    for (auto [p, n] : {std::pair<std::uint32_t, unsigned>{2, 4}, {3, 3}, {5, 2}, {7, 2}})
        EXPECT_EQ(check_ghost_identities(*build_laws(p, n)), "") << p << " " << n;
}

TEST(WittLaws, SerializeRoundTrip) {
    const auto laws = build_laws(3, 3);
    const WittLaws back = parse_laws(serialize_laws(*laws));
    EXPECT_EQ(back.p, 3u);
    EXPECT_EQ(back.n, 3u);
    EXPECT_EQ(back.sum, laws->sum);
    EXPECT_EQ(back.prod, laws->prod);
    EXPECT_EQ(back.neg, laws->neg);
    EXPECT_THROW(parse_laws("not a law file"), Error);
}

TEST(WittLaws, DiskCache) {
    const std::string saved = cache_dir();
    const auto dir = std::filesystem::path(testing::TempDir()) / "witt_cache_test";
    std::filesystem::remove_all(dir);
    set_cache_dir(dir.string());
    clear_memory_cache();
    const std::string first = serialize_laws(*build_laws(2, 3));
    EXPECT_FALSE(std::filesystem::is_empty(dir));
    clear_memory_cache();
    EXPECT_EQ(serialize_laws(*build_laws(2, 3)), first);
    set_cache_dir(saved);
    std::filesystem::remove_all(dir);
}

arith::FiniteRingPtr field_ring(std::int64_t p, std::vector<std::int64_t> modulus = {1}) {
    return arith::FiniteAlgebra::field(arith::FiniteField::build(p, modulus))->ring();
}

TEST(WittRing, SmallValues) {
    const WittRing w(2, 2, field_ring(2));
    EXPECT_EQ(w.add({1, 0}, {1, 0}), (WittRing::Vec{0, 1}));
    EXPECT_EQ(w.verschiebung({1, 1}), (WittRing::Vec{0, 1}));
    EXPECT_EQ(w.from_integer(3), (WittRing::Vec{1, 1}));
    EXPECT_EQ(w.from_integer(4), w.zero());
    EXPECT_EQ(w.neg({1, 0}), (WittRing::Vec{1, 1}));
    EXPECT_THROW(WittRing(3, 2, field_ring(2)), Error);
}

// W_n(F_p) against Z/p^n through Teichmueller expansions, for every pair.
TEST(WittRing, MatchesIntegersModPowers) {
    for (auto [p, n] : {std::pair<std::uint32_t, unsigned>{2, 3}, {3, 2}, {5, 2}, {2, 4}}) {
        const WittRing w(p, n, field_ring(p));
        const auto& r = w.ring();
        std::uint64_t mod = 1;
        for (unsigned i = 0; i < n; ++i) mod *= p;
        std::vector<bool> seen(mod, false);
        for (std::uint64_t a = 0; a < r.count(); ++a) seen[teich_value(p, n, r.decode(a))] = true;
        for (std::uint64_t v = 0; v < mod; ++v) EXPECT_TRUE(seen[v]);
        for (std::uint64_t a = 0; a < r.count(); ++a)
            for (std::uint64_t b = 0; b < r.count(); ++b) {
                const auto x = r.decode(a), y = r.decode(b);
                const auto tx = teich_value(p, n, x), ty = teich_value(p, n, y);
                ASSERT_EQ(teich_value(p, n, w.add(x, y)), (tx + ty) % mod);
                ASSERT_EQ(teich_value(p, n, w.mul(x, y)), tx * ty % mod);
            }
    }
}

TEST(WittRing, FrobeniusAndVerschiebung) {
    const auto f2 = arith::FiniteField::prime(2);
    const auto d = arith::FiniteAlgebra::dual_numbers(f2, 2);
    const WittRing wd(2, 2, d->ring());
    const auto eps = d->from_coords({0, 1});
    EXPECT_EQ(wd.frobenius({eps, 0}), wd.zero());

    // V(F(a)) = p*a over F_3.
    const WittRing w3(3, 3, field_ring(3));
    for (std::uint64_t c = 0; c < w3.ring().count(); ++c) {
        const auto a = w3.ring().decode(c);
        EXPECT_EQ(w3.times_p(a), w3.add(a, w3.add(a, a)));
    }
}

TEST(WittRing, FunctorialInTheAlgebra) {
    const auto f2 = arith::FiniteField::prime(2), f4 = arith::FiniteField::build(2, {1, 1, 1});
    const auto a4 = arith::FiniteAlgebra::field(f4);
    const auto phi = a4->structure_map(f2);
    const WittRing w2(2, 2, field_ring(2)), w4(2, 2, a4->ring());
    for (std::uint64_t a = 0; a < w2.ring().count(); ++a)
        for (std::uint64_t b = 0; b < w2.ring().count(); ++b) {
            const auto x = w2.ring().decode(a), y = w2.ring().decode(b);
            EXPECT_EQ(WittRing::map(w2.add(x, y), phi), w4.add(WittRing::map(x, phi), WittRing::map(y, phi)));
            EXPECT_EQ(WittRing::map(w2.mul(x, y), phi), w4.mul(WittRing::map(x, phi), WittRing::map(y, phi)));
        }
}

TEST(WittRing, RingAxiomsOverNonReducedAlgebras) {
    const auto f2 = arith::FiniteField::prime(2), f3 = arith::FiniteField::prime(3);
    EXPECT_EQ(WittRing(2, 3, arith::FiniteAlgebra::dual_numbers(f2, 2)->ring()).ring().tabulate()->check_axioms(), "");
    EXPECT_EQ(WittRing(3, 2, arith::FiniteAlgebra::dual_numbers(f3, 2)->ring()).ring().tabulate()->check_axioms(), "");
    EXPECT_EQ(WittRing(2, 2, field_ring(2, {1, 1, 1})).ring().tabulate()->check_axioms(), "");
}

// Teichmueller representatives are multiplicative: [xy] = [x][y].
TEST(WittRing, SeededTeichmuellerMultiplicative) {
    const auto f8 = field_ring(2, {1, 1, 0, 1});
    const WittRing w(2, 3, f8);
    std::mt19937_64 rng(99);
    for (int s = 0; s < 64; ++s) {
        const std::uint32_t x = rng() % 8, y = rng() % 8;
        EXPECT_EQ(w.teichmueller(f8->mul(x, y)), w.mul(w.teichmueller(x), w.teichmueller(y)));
    }
}

}  // namespace
}  // namespace greenberg::witt
