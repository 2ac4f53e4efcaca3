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
#include "greenberg/schemes/presentation.hpp"
#include "greenberg/schemes/solve.hpp"
#include "test_util.hpp"

namespace greenberg::schemes {
namespace {

using testing_util::equal_base;
using testing_util::mixed_base;
using testing_util::over;
using testing_util::pres;
using testing_util::rpoly;

const Guards kGuards{};

arith::AlgebraPtr field_alg(std::int64_t p, std::vector<std::int64_t> modulus = {1}) {
    return arith::FiniteAlgebra::field(arith::FiniteField::build(p, modulus));
}

TEST(Presentation, Validation) {
    const auto k = CoeffRing::field(arith::FiniteField::prime(2));
    EXPECT_THROW(pres(k, {"x"}, {"x*y"}), Error);
    EXPECT_THROW(pres(k, {"x", "x"}, {}), Error);
    const auto k3 = CoeffRing::field(arith::FiniteField::prime(3));
    AffinePresentation mixed{k, {"x"}, {rpoly(k3, "x")}};
    try {
        mixed.validate();
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::RingMismatch);
    }
}

TEST(Presentation, CoeffRingConstants) {
    const auto r = over(mixed_base(2, {0, -2}), 3);
    EXPECT_EQ(r.level(), 3u);
    EXPECT_EQ(r.width(), 4u);
    EXPECT_EQ(r.coords(r.pi_polynomial({0, 1})), (std::vector<std::uint32_t>{0, 1, 0, 0}));
    EXPECT_EQ(r.pi_polynomial({0, 0, 1}), r.pi_polynomial({2}));
    EXPECT_EQ(r.pi_polynomial({0, 0, 0, 0, 1}), 0u);
    EXPECT_EQ(r.from_coords(r.coords(5)), 5u);
    EXPECT_NE(r, over(mixed_base(2, {0, -2}), 2));
}

TEST(Presentation, Product) {
    const auto k = CoeffRing::field(arith::FiniteField::prime(2));
    const auto a = pres(k, {"x"}, {"x^2 + x"});
    const auto b = pres(k, {"y"}, {"y + 1"});
    const auto ab = scheme_product(a, b);
    EXPECT_EQ(ab.vars, (std::vector<std::string>{"x", "y"}));
    EXPECT_EQ(ab.gens.size(), 2u);
    const auto aa = scheme_product(a, a);
    EXPECT_EQ(aa.vars, (std::vector<std::string>{"l_x", "r_x"}));
    EXPECT_EQ(aa.gens[1], rpoly(k, "r_x^2 + r_x"));
    EXPECT_EQ(solve_over_k(aa, *field_alg(2), kGuards).count, 4u);
    const auto k3 = CoeffRing::field(arith::FiniteField::prime(3));
    EXPECT_THROW(scheme_product(a, pres(k3, {"y"}, {})), Error);
}

TEST(Presentation, ReduceLevel) {
    const auto r1 = over(equal_base(3), 1);
    const auto z = pres(r1, {"x", "y"}, {"y^2 - [0;1]*x"});
    const auto z0 = scheme_reduce_level(z, 0);
    EXPECT_EQ(z0.ring.level(), 0u);
    EXPECT_EQ(z0.gens[0].to_string(), "y^2");
    try {
        scheme_reduce_level(z, 2);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::LevelMismatch);
    }
}

TEST(Presentation, LieDimension) {
    const auto k2 = CoeffRing::field(arith::FiniteField::prime(2));
    const auto k3 = CoeffRing::field(arith::FiniteField::prime(3));
    GroupSchemeSpec gm{pres(k2, {"x", "u"}, {"x*u - 1"}), {1, 1}, std::nullopt};
    EXPECT_EQ(group_lie_dim(gm), 1u);
    GroupSchemeSpec ga{pres(k2, {"x"}, {}), {0}, std::nullopt};
    EXPECT_EQ(group_lie_dim(ga), 1u);
    // mu_3 in characteristic 3 has a one-dimensional Lie algebra.
    GroupSchemeSpec mu3{pres(k3, {"x"}, {"x^3 - 1"}), {1}, std::nullopt};
    EXPECT_EQ(group_lie_dim(mu3), 1u);
    GroupSchemeSpec mu2{pres(k3, {"x"}, {"x^2 - 1"}), {1}, std::nullopt};
    EXPECT_EQ(group_lie_dim(mu2), 0u);
    GroupSchemeSpec off{pres(k2, {"x", "u"}, {"x*u - 1"}), {0, 1}, std::nullopt};
    try {
        group_lie_dim(off);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::IdentityNotOnScheme);
    }
}

TEST(Solve, SquareRootsOfOneModNine) {
    const auto r = over(mixed_base(3), 1);
    const auto z = pres(r, {"x"}, {"x^2 - 1"});
    const auto res = solve_over_ga(z, *field_alg(3), kGuards, true);
    EXPECT_EQ(res.count, 2u);
    const auto carrier = point_carrier(r, *field_alg(3), kGuards);
    std::vector<std::vector<std::uint32_t>> expected{{carrier.ring->one()}, {carrier.ring->neg(carrier.ring->one())}};
    std::sort(expected.begin(), expected.end());
    EXPECT_EQ(res.solutions, expected);
}

TEST(Solve, UnitsModNine) {
    const auto r = over(mixed_base(3), 1);
    EXPECT_EQ(solve_over_ga(pres(r, {"x", "u"}, {"x*u - 1"}), *field_alg(3), kGuards).count, 6u);
}

TEST(Solve, OverResidueField) {
    const auto k2 = CoeffRing::field(arith::FiniteField::prime(2));
    EXPECT_EQ(solve_over_k(pres(k2, {"x"}, {"x^2 + x"}), *field_alg(2), kGuards).count, 2u);
    EXPECT_EQ(solve_over_k(pres(k2, {"x"}, {"x^2 + x"}), *field_alg(2, {1, 1, 1}), kGuards).count, 2u);
    EXPECT_EQ(solve_over_k(pres(k2, {"x"}, {"x^2 + x + 1"}), *field_alg(2, {1, 1, 1}), kGuards).count, 2u);
    EXPECT_EQ(solve_over_k(pres(k2, {"x", "y"}, {}), *field_alg(2), kGuards).count, 4u);
    // x is free and u = x^2 is determined: 4 points over F2[e]/(e^2).
    const auto dual = arith::FiniteAlgebra::dual_numbers(arith::FiniteField::prime(2), 2);
    const auto res = solve_over_k(pres(k2, {"x", "u"}, {"x^2 - u"}), *dual, kGuards, true);
    EXPECT_EQ(res.count, 4u);
    for (const auto& s : res.solutions) EXPECT_EQ(dual->mul(s[0], s[0]), s[1]);
}

TEST(Solve, FixedCoordinates) {
    const auto k2 = CoeffRing::field(arith::FiniteField::prime(2));
    const auto carrier = point_carrier(k2, *field_alg(2), kGuards);
    SolveOptions opts;
    opts.fixed = {std::nullopt, 1u};
    EXPECT_EQ(solve(pres(k2, {"x", "y"}, {"x*y + 1"}), carrier, kGuards, opts).count, 1u);
}

TEST(Solve, Guards) {
    const auto k2 = CoeffRing::field(arith::FiniteField::prime(2));
    Guards tight;
    tight.candidate_guard = 3;
    try {
        solve_over_k(pres(k2, {"x", "y"}, {}), *field_alg(2), tight);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::SizeGuard);
    }
    try {
        solve_over_k(pres(k2, {"x"}, {}), *field_alg(3), kGuards);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::BaseMismatch);
    }
}

}  // namespace
}  // namespace greenberg::schemes
