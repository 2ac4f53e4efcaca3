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

#include <random>
#include <set>

#include "greenberg/arith/finite_algebra.hpp"
#include "greenberg/arith/finite_field.hpp"
#include "greenberg/arith/finite_ring.hpp"
#include "greenberg/error.hpp"

namespace greenberg::arith {
namespace {

TEST(FiniteField, PrimeField) {
    const auto f2 = FiniteField::build(2, {1});
    EXPECT_EQ(f2->order(), 2u);
    EXPECT_TRUE(f2->is_prime_field());
    EXPECT_EQ(f2->enumerate(), (std::vector<FqElem>{0, 1}));
}

TEST(FiniteField, F4) {
    const auto f4 = FiniteField::build(2, {1, 1, 1});
    EXPECT_EQ(f4->order(), 4u);
    const FqElem u = f4->generator();
    // u^2 = u + 1
    EXPECT_EQ(f4->mul(u, u), f4->add(u, 1));
    EXPECT_EQ(f4->enumerate().size(), 4u);
}

TEST(FiniteField, Errors) {
    try {
        FiniteField::build(2, {1, 0, 1});
        FAIL() << "t^2+1 is reducible over F2";
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::Reducible);
    }
    try {
        FiniteField::prime(4);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::NotPrime);
    }
    EXPECT_THROW(FiniteField::build(2, {1, 1, 1, 1, 1, 1, 1}), Error);
}

TEST(FiniteField, SeededFieldAxioms) {
    std::mt19937_64 rng(17);
    for (const auto& f : {FiniteField::build(3, {1, 0, 1}), FiniteField::build(2, {1, 1, 0, 1}),
                          FiniteField::build(2, {1, 1, 0, 0, 1}), FiniteField::build(5, {2, 0, 1})}) {
        std::uniform_int_distribution<FqElem> pick(0, f->order() - 1);
        for (int s = 0; s < 500; ++s) {
            const FqElem a = pick(rng), b = pick(rng), c = pick(rng);
            EXPECT_EQ(f->mul(a, f->add(b, c)), f->add(f->mul(a, b), f->mul(a, c)));
            EXPECT_EQ(f->mul(f->mul(a, b), c), f->mul(a, f->mul(b, c)));
            if (a != 0) EXPECT_EQ(f->mul(a, f->inv(a)), 1u);
        }
        // The multiplicative group is cyclic of order q-1: a^(q-1) = 1.
        for (FqElem a = 1; a < f->order(); ++a) EXPECT_EQ(f->pow(a, f->order() - 1), 1u);
    }
}

TEST(FiniteField, Embeddings) {
    const auto f2 = FiniteField::prime(2), f4 = FiniteField::build(2, {1, 1, 1});
    const auto f8 = FiniteField::build(2, {1, 1, 0, 1}), f16 = FiniteField::build(2, {1, 1, 0, 0, 1});
    ASSERT_TRUE(find_embedding(f2, f4));
    EXPECT_FALSE(find_embedding(f4, f8));
    const auto e = find_embedding(f4, f16);
    ASSERT_TRUE(e);
    for (FqElem a = 0; a < 4; ++a)
        for (FqElem b = 0; b < 4; ++b) {
            EXPECT_EQ((*e)(f4->add(a, b)), f16->add((*e)(a), (*e)(b)));
            EXPECT_EQ((*e)(f4->mul(a, b)), f16->mul((*e)(a), (*e)(b)));
        }
}

TEST(FiniteAlgebra, Kinds) {
    const auto f2 = FiniteField::prime(2), f3 = FiniteField::prime(3);
    const auto a = FiniteAlgebra::field(f3);
    EXPECT_EQ(a->size(), 3u);
    EXPECT_EQ(a->coords(a->one()), (std::vector<FqElem>{1}));

    const auto d = FiniteAlgebra::dual_numbers(f2, 2);
    EXPECT_EQ(d->size(), 4u);
    const auto eps = d->from_coords({0, 1});
    EXPECT_EQ(d->mul(eps, eps), d->zero());

    const auto p = FiniteAlgebra::product(*FiniteAlgebra::field(f2), *FiniteAlgebra::field(f2));
    EXPECT_EQ(p->size(), 4u);
    EXPECT_EQ(p->coords(p->one()), (std::vector<FqElem>{1, 1}));
    const auto e1 = p->from_coords({1, 0}), e2 = p->from_coords({0, 1});
    EXPECT_EQ(p->mul(e1, e2), p->zero());
    EXPECT_EQ(p->mul(e1, e1), e1);
}

TEST(FiniteAlgebra, EnumerationOrder) {
    const auto f2 = FiniteField::prime(2);
    EXPECT_EQ(FiniteAlgebra::field(f2)->enumerate(), (std::vector<std::uint32_t>{0, 1}));
    const auto d = FiniteAlgebra::dual_numbers(f2, 2);
    const auto all = d->enumerate();
    ASSERT_EQ(all.size(), 4u);
    EXPECT_EQ(d->coords(all[0]), (std::vector<FqElem>{0, 0}));
    EXPECT_EQ(d->coords(all[1]), (std::vector<FqElem>{1, 0}));
    EXPECT_EQ(d->coords(all[2]), (std::vector<FqElem>{0, 1}));
    EXPECT_EQ(d->coords(all[3]), (std::vector<FqElem>{1, 1}));
}

TEST(FiniteAlgebra, RingAxiomsAndBaseChange) {
    const auto f2 = FiniteField::prime(2), f4 = FiniteField::build(2, {1, 1, 1});
    const auto d3 = FiniteAlgebra::dual_numbers(f2, 3);
    EXPECT_EQ(d3->ring()->check_axioms(), "");
    const auto bc = FiniteAlgebra::base_change(*FiniteAlgebra::dual_numbers(f2, 2), f4);
    EXPECT_EQ(bc->size(), 16u);
    EXPECT_EQ(bc->ring()->check_axioms(), "");
    EXPECT_TRUE(bc->is_algebra_over(f2));
    EXPECT_FALSE(FiniteAlgebra::field(f2)->is_algebra_over(f4));
}

TEST(FiniteAlgebra, SizeGuard) {
    const auto f3 = FiniteField::prime(3);
    try {
        FiniteAlgebra::dual_numbers(f3, 9, 4096);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::SizeGuard);
    }
}

TEST(FiniteRing, TupleCodecRoundTrip) {
    const TupleCodec codec(5, 3);
    EXPECT_EQ(codec.count(), 125u);
    for (std::uint64_t c = 0; c < codec.count(); ++c) EXPECT_EQ(codec.encode(codec.decode(c)), c);
    EXPECT_EQ(codec.decode(1), (std::vector<std::uint32_t>{1, 0, 0}));
}

TEST(FiniteRing, IntegersModN) {
    const auto z6 = FiniteRing::tabulate(
        "Z/6", 6, 0, 1, [](auto a, auto b) { return (a + b) % 6; }, [](auto a, auto b) { return (a * b) % 6; });
    EXPECT_EQ(z6->check_axioms(), "");
    EXPECT_EQ(z6->from_integer(-1), 5u);
    EXPECT_TRUE(z6->is_unit(5));
    EXPECT_FALSE(z6->is_unit(3));
}

}  // namespace
}  // namespace greenberg::arith
