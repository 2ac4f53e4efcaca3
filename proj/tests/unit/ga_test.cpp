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

#include "greenberg/arith/finite_algebra.hpp"
#include "greenberg/error.hpp"
#include "greenberg/ga/greenberg_algebra.hpp"
#include "greenberg/ga/ideals.hpp"
#include "greenberg/ga/oracle.hpp"

namespace greenberg::ga {
namespace {

BaseRingSpec equal(std::int64_t p) { return {CharCase::Equal, arith::FiniteField::prime(p), {}}; }
BaseRingSpec mixed(std::int64_t p, std::vector<std::int64_t> f = {}) {
    return {CharCase::Mixed, arith::FiniteField::prime(p), std::move(f)};
}

TEST(GreenbergAlgebra, Labels) {
    EXPECT_EQ(mixed(2).label(), "W(F2)");
    EXPECT_EQ(mixed(2, {0, -2}).label(), "W(F2)[t]/(t^2 - 2)");
    EXPECT_EQ(equal(3).label(), "F3[[t]]");
    EXPECT_EQ(mixed(2).rho(), 1u);
    EXPECT_EQ(mixed(3, {0, 0, -3}).rho(), 3u);
}

TEST(GreenbergAlgebra, Validation) {
    EXPECT_NO_THROW(validate(mixed(2, {0, -2})));
    EXPECT_NO_THROW(validate(mixed(3, {3, -3})));
    for (const auto& f : {std::vector<std::int64_t>{0, -4}, {1, -2}, {0, 0}}) {
        try {
            validate(mixed(2, f));
            FAIL();
        } catch (const Error& e) {
            EXPECT_EQ(e.code(), ErrorCode::NotEisenstein);
        }
    }
}

TEST(GreenbergAlgebra, RamificationData) {
    const auto d = RamificationData::compute(mixed(2, {0, -2}), 3);
    EXPECT_EQ(d.m, 2u);
    EXPECT_EQ(d.r, 1u);
    EXPECT_EQ(d.lengths, (std::vector<unsigned>{2, 2}));
    const auto d3 = RamificationData::compute(mixed(2, {0, 0, -2}), 3);
    EXPECT_EQ(d3.lengths, (std::vector<unsigned>{2, 1, 1}));
    unsigned total = 0;
    for (auto n : d3.lengths) total += n;
    EXPECT_EQ(total, 4u);
    EXPECT_EQ(RamificationData::compute(mixed(3), 2).lengths, (std::vector<unsigned>{3}));
    EXPECT_EQ(RamificationData::compute(equal(3), 2).lengths, (std::vector<unsigned>{1, 1, 1}));
}

TEST(GreenbergAlgebra, EqualCharacteristicLaws) {
    const auto ga = GreenbergAlgebra::build(equal(3), 1);
    const auto& l = *ga->laws();
    EXPECT_EQ(l.add[1].to_string(), "x1 + y1");
    EXPECT_EQ(l.mul[1].to_string(), "x0*y1 + x1*y0");
    EXPECT_EQ(ga->k_points().count(), 9u);
    EXPECT_EQ(GreenbergAlgebra::build(equal(3), 2)->k_points().count(), 27u);
}

TEST(GreenbergAlgebra, UnramifiedIsWitt) {
    // R_1 for W(F2) is Z/4: 1 + 1 = 2 = (0,1) and 2 * 2 = 0.
    const auto ga = GreenbergAlgebra::build(mixed(2), 1);
    const auto& r = ga->k_points();
    EXPECT_EQ(r.add({1, 0}, {1, 0}), (std::vector<std::uint32_t>{0, 1}));
    EXPECT_EQ(ga->pi_coords(), (std::vector<std::uint32_t>{0, 1}));
    EXPECT_EQ(r.mul(ga->pi_coords(), ga->pi_coords()), r.zero());
    EXPECT_EQ(r.from_integer(3), (std::vector<std::uint32_t>{1, 1}));
}

TEST(GreenbergAlgebra, RamifiedSquareZero) {
    const auto ga = GreenbergAlgebra::build(mixed(2, {0, -2}), 1);
    const auto& r = ga->k_points();
    EXPECT_EQ(ga->pi_coords(), (std::vector<std::uint32_t>{0, 1}));
    EXPECT_EQ(r.mul(ga->pi_coords(), ga->pi_coords()), r.zero());
    EXPECT_EQ(r.from_integer(2), r.zero());
}

TEST(GreenbergAlgebra, Constants) {
    const auto ga = GreenbergAlgebra::build(mixed(2), 1);
    EXPECT_EQ(ga->constant({1, 1}), (std::vector<std::uint32_t>{1, 1}));
    try {
        ga->constant({0, 0, 1});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::DegreeTooHigh);
    }
    const auto r2 = GreenbergAlgebra::build(mixed(2, {0, -2}), 3);
    // pi^2 = 2 in R_3.
    EXPECT_EQ(r2->constant({0, 0, 1}), r2->constant({2}));
    EXPECT_EQ(ga->constants()->ring()->size(), 4u);
}

TEST(GreenbergAlgebra, Truncation) {
    const auto ga = GreenbergAlgebra::build(mixed(2, {0, -2}), 3);
    EXPECT_EQ(ga->truncate({1, 0, 1, 1}, 1), (std::vector<std::uint32_t>{1, 0}));
    EXPECT_THROW(ga->truncate({1, 0, 1, 1}, 4), Error);
    // Truncation is a ring map R_3 -> R_1.
    const auto low = GreenbergAlgebra::build(mixed(2, {0, -2}), 1);
    const auto& r = ga->k_points();
    for (std::uint64_t a = 0; a < r.count(); ++a)
        for (std::uint64_t b = 0; b < r.count(); ++b) {
            const auto x = r.decode(a), y = r.decode(b);
            ASSERT_EQ(ga->truncate(r.mul(x, y), 1), low->k_points().mul(ga->truncate(x, 1), ga->truncate(y, 1)));
            ASSERT_EQ(ga->truncate(r.add(x, y), 1), low->k_points().add(ga->truncate(x, 1), ga->truncate(y, 1)));
        }
}

TEST(GreenbergAlgebra, PointsOverAlgebras) {
    const auto f2 = arith::FiniteField::prime(2), f3 = arith::FiniteField::prime(3);
    const auto ga = GreenbergAlgebra::build(mixed(2), 1);
    const auto pts = ga->points(*arith::FiniteAlgebra::dual_numbers(f2, 2));
    EXPECT_EQ(pts.count(), 16u);
    EXPECT_EQ(pts.tabulate()->check_axioms(), "");
    try {
        ga->points(*arith::FiniteAlgebra::field(f3));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::BaseMismatch);
    }
}

TEST(GreenbergAlgebra, OracleComparison) {
    struct Case {
        BaseRingSpec base;
        unsigned level;
        std::uint64_t size;
    };
    for (const auto& c : {Case{mixed(2), 2, 8}, Case{mixed(2, {0, -2}), 3, 16}, Case{mixed(2, {0, 0, -2}), 2, 8},
                          Case{mixed(3, {0, -3}), 2, 27}, Case{equal(2), 3, 16}}) {
        const auto ga = GreenbergAlgebra::build(c.base, c.level);
        const auto oracle = ga_oracle(c.base, c.level);
        EXPECT_EQ(oracle.ring->size(), c.size);
        const auto cmp = compare_with_oracle(*ga, oracle);
        EXPECT_TRUE(cmp.bijective) << cmp.failure;
        EXPECT_TRUE(cmp.isomorphic) << cmp.failure;
        EXPECT_EQ(cmp.elements, c.size);
    }
    const BaseRingSpec f4{CharCase::Mixed, arith::FiniteField::build(2, {1, 1, 1}), {}};
    try {
        ga_oracle(f4, 1);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::NotPrimeField);
    }
}

TEST(GreenbergAlgebra, MasterTruncation) {
    const auto master = master_laws(mixed(2, {0, -2}), 3);
    EXPECT_EQ(truncate_laws(master, 1).width, 2u);
    EXPECT_THROW(truncate_laws(master, 4), Error);

    witt::CoordinateLaws bad = truncate_laws(master, 1);
    bad.add[0] = bad.add[0] + bad.add[1];
    try {
        truncate_laws(bad, 0);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::GradingViolation);
    }
}

TEST(IdealPowers, SmallCases) {
    const auto f2 = arith::FiniteField::prime(2);
    const auto a = arith::FiniteAlgebra::field(f2);
    IdealPowers m1(GreenbergAlgebra::build(mixed(2), 1), *a);
    EXPECT_EQ(m1.power(0).size(), 4u);
    EXPECT_EQ(m1.power(1).size(), 2u);
    EXPECT_EQ(m1.power(2).size(), 1u);
    EXPECT_EQ(m1.power(1), m1.truncation_kernel(0));

    IdealPowers m0(GreenbergAlgebra::build(mixed(2), 0), *a);
    EXPECT_EQ(m0.power(1), (std::vector<std::uint32_t>{0}));

    IdealPowers eq(GreenbergAlgebra::build(equal(2), 3), *arith::FiniteAlgebra::dual_numbers(f2, 2));
    EXPECT_EQ(eq.power(0).size(), 256u);
    for (unsigned j = 1; j <= 4; ++j) EXPECT_EQ(eq.power(j), eq.truncation_kernel(j - 1)) << j;
}

}  // namespace
}  // namespace greenberg::ga
