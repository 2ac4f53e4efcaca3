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
#include "greenberg/schemes/solve.hpp"
#include "greenberg/transform/checks.hpp"
#include "greenberg/transform/transform.hpp"
#include "greenberg/witt/witt_ring.hpp"
#include "test_util.hpp"

namespace greenberg::transform {
namespace {

using schemes::CoeffRing;
using testing_util::equal_base;
using testing_util::mixed_base;
using testing_util::over;
using testing_util::pres;
using testing_util::rpoly;

const Guards kGuards{};

std::vector<std::string> texts(const std::vector<poly::RingPoly>& polys) {
    std::vector<std::string> out;
    for (const auto& p : polys) out.push_back(p.to_string());
    return out;
}

TEST(Transform, SquareZeroExample) {
    // y^2 - t*x over F3[t]/(t^2).
    const auto r = over(equal_base(3), 1);
    const auto t = gr_transform(pres(r, {"x", "y"}, {"y^2 - [0;1]*x"}));
    EXPECT_EQ(t.result.vars, (std::vector<std::string>{"x_0", "x_1", "y_0", "y_1"}));
    EXPECT_EQ(texts(t.result.gens), (std::vector<std::string>{"y_0^2", "2*y_0*y_1 + 2*x_0"}));
    EXPECT_EQ(t.var_map.at("y"), (std::vector<std::string>{"y_0", "y_1"}));
    EXPECT_FALSE(t.result.ring.over_ga());
}

TEST(Transform, Shapes) {
    const auto r = over(mixed_base(2, {0, -2}), 3);
    const auto a1 = gr_transform(pres(r, {"x"}, {}));
    EXPECT_EQ(a1.result.vars, (std::vector<std::string>{"x_0", "x_1", "x_2", "x_3"}));
    EXPECT_TRUE(a1.result.gens.empty());
    const auto gm = gr_transform(pres(r, {"x", "u"}, {"x*u - 1"}));
    EXPECT_EQ(gm.result.vars.size(), 8u);
    EXPECT_EQ(gm.result.gens.size(), 4u);
    EXPECT_EQ(gm.level, 3u);
    const auto k = CoeffRing::field(arith::FiniteField::prime(2));
    const auto same = gr_transform(pres(k, {"x"}, {"x^2 + 1"}));
    EXPECT_EQ(same.result.vars, (std::vector<std::string>{"x_0"}));
    EXPECT_EQ(texts(same.result.gens), (std::vector<std::string>{"x_0^2 + 1"}));
}

TEST(Transform, CountsMatchDirectSolve) {
    const auto f2 = arith::FiniteAlgebra::field(arith::FiniteField::prime(2));
    const auto r = over(mixed_base(2), 1);
    const auto z = pres(r, {"x"}, {"x^2 - 1"});
    // x^2 = 1 in Z/4 has the roots 1 and 3.
    EXPECT_EQ(schemes::solve_over_k(gr_transform(z).result, *f2, kGuards).count, 2u);
    const auto rep = check_rat_pts(z, *f2, kGuards);
    EXPECT_TRUE(rep.bijection) << rep.failure;
    EXPECT_EQ(rep.direct_count, 2u);
}

// Gr_2 of the squaring map over W(F2) is Witt squaring in W_3.
TEST(Transform, MorphismIsWittMultiplication) {
    const auto r = over(mixed_base(2), 2);
    const auto a1 = pres(r, {"x"}, {});
    const auto sq = gr_transform_morphism({a1, a1, {{"x", rpoly(r, "x^2")}}});
    const auto f2 = arith::FiniteField::prime(2), f4 = arith::FiniteField::build(2, {1, 1, 1});
    const auto a4 = arith::FiniteAlgebra::field(f4);
    const witt::WittRing w(2, 3, a4->ring());
    const auto lift = a4->structure_map(f2);
    const poly::FiniteCarrier carrier{a4->ring()};
    for (std::uint64_t c = 0; c < w.ring().count(); ++c) {
        const auto a = w.ring().decode(c);
        const std::map<std::string, std::uint32_t> pt{{"x_0", a[0]}, {"x_1", a[1]}, {"x_2", a[2]}};
        const auto expected = w.mul(a, a);
        for (unsigned j = 0; j < 3; ++j) {
            const auto& img = sq.images.at(coordinate_var("x", j));
            std::map<std::string, std::uint32_t> sub;
            for (const auto& v : img.vars()) sub.emplace(v, pt.at(v));
            EXPECT_EQ(poly::evaluate(img, sub, carrier, [&](std::uint32_t k) { return lift[k]; }), expected[j]);
        }
    }
}

TEST(Transform, ChangeLevelFibers) {
    const auto f3 = arith::FiniteAlgebra::field(arith::FiniteField::prime(3));
    const auto r = over(mixed_base(3), 1);
    const auto gm = pres(r, {"x", "u"}, {"x*u - 1"});
    const auto f = change_level(gm, 0);
    const auto upper = schemes::solve_over_k(f.source, *f3, kGuards, true);
    EXPECT_EQ(upper.count, 6u);
    EXPECT_EQ(schemes::solve_over_k(f.target, *f3, kGuards).count, 2u);
    const auto carrier = schemes::point_carrier(f.source.ring, *f3, kGuards);
    const schemes::MorphismEvaluator eval(f, carrier);
    std::map<std::vector<std::uint32_t>, int> fibers;
    for (const auto& s : upper.solutions) ++fibers[eval(s)];
    EXPECT_EQ(fibers.size(), 2u);
    for (const auto& [pt, n] : fibers) EXPECT_EQ(n, 3);
    try {
        change_level(gm, 2);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::LevelMismatch);
    }
}

TEST(Checks, NonSmoothLiftFails) {
    const auto f2 = arith::FiniteAlgebra::field(arith::FiniteField::prime(2));
    const auto z = pres(over(mixed_base(2), 1), {"x", "y"}, {"x*y - 2"});
    const auto rep = check_surjective_lift(z, 0, 1, *f2, kGuards);
    EXPECT_TRUE(rep.well_defined);
    EXPECT_FALSE(rep.surjective);
    EXPECT_EQ(rep.lower_points, 3u);
    EXPECT_EQ(rep.upper_points, 4u);
    ASSERT_FALSE(rep.witnesses.empty());
    EXPECT_EQ(rep.witnesses[0], (std::vector<std::uint32_t>{0, 0}));
}

TEST(Checks, SmoothLiftSucceeds) {
    const auto dual = arith::FiniteAlgebra::dual_numbers(arith::FiniteField::prime(2), 2);
    const auto z = pres(over(mixed_base(2, {0, -2}), 2), {"x", "u"}, {"x*u - 1"});
    const auto rep = check_surjective_lift(z, 0, 2, *dual, kGuards);
    EXPECT_TRUE(rep.well_defined);
    EXPECT_TRUE(rep.surjective);
    EXPECT_EQ(rep.lifted, rep.lower_points);
}

TEST(Checks, OpenImmersionIsCartesian) {
    const auto f4 = arith::FiniteAlgebra::field(arith::FiniteField::build(2, {1, 1, 1}));
    const auto r = over(mixed_base(2), 1);
    const auto src = pres(r, {"x", "t"}, {"x*t - 1"});
    const auto tgt = pres(r, {"s"}, {});
    const auto rep = check_cartesian_etale({src, tgt, {{"s", rpoly(r, "x")}}}, 0, 1, *f4, kGuards);
    EXPECT_TRUE(rep.bijective) << rep.failure;
    // Units of W_2(F4).
    EXPECT_EQ(rep.source_points, 12u);
}

schemes::GroupSchemeSpec gm_group(const CoeffRing& r) {
    schemes::GroupSchemeSpec g;
    g.presentation = pres(r, {"x", "u"}, {"x*u - 1"});
    g.identity = {r.domain()->one(), r.domain()->one()};
    const auto prod = schemes::scheme_product(g.presentation, g.presentation);
    g.law = schemes::MorphismPresentation{
        prod, g.presentation, {{"x", rpoly(r, "l_x*r_x")}, {"u", rpoly(r, "l_u*r_u")}}};
    return g;
}

TEST(Checks, KernelOfChangeLevel) {
    const auto dual = arith::FiniteAlgebra::dual_numbers(arith::FiniteField::prime(2), 2);
    const auto r = over(mixed_base(2, {0, -2}), 2);
    const auto rep = ker_change_level_count(gm_group(r), 0, 2, *dual, kGuards);
    EXPECT_EQ(rep.lie_dim, 1u);
    EXPECT_EQ(rep.expected, 16u);
    EXPECT_EQ(rep.count, 16u);
}

TEST(Checks, GroupLaw) {
    const auto dual = arith::FiniteAlgebra::dual_numbers(arith::FiniteField::prime(2), 2);
    EXPECT_EQ(check_group_law(gm_group(over(mixed_base(2), 1)), *dual, kGuards), "");
    auto broken = gm_group(over(mixed_base(2), 1));
    broken.law->images.at("x") = rpoly(broken.presentation.ring, "l_x");
    EXPECT_NE(check_group_law(broken, *dual, kGuards), "");
}

}  // namespace
}  // namespace greenberg::transform
